#pragma once

// Extension extraction at the root: complete, grounded, semi-grounded and
// preferred semantics. Grounded is the intersection of the complete sets and
// may fail to be complete itself; semi-grounded keeps the minimal complete
// sets so a set-theoretically minimal semantics stays inside complete.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "blockarg/config.hpp"
#include "blockarg/flatrep.hpp"
#include "blockarg/labels.hpp"
#include "blockarg/solver.hpp"

namespace blockarg {

using Extension = std::vector<std::string>;        // sorted names
using ExtensionFamily = std::vector<Extension>;    // sorted, deduplicated

// Depth-1 children labelled + in each labelling. With collapse_eq, eq-equal
// members are merged under the lexicographically smallest name.
inline ExtensionFamily extensions_at_root(const FlatRep& flat,
                                          const std::vector<Labelling>& labellings,
                                          bool collapse_eq = false) {
  const Framework& fw = *flat.fw;
  const auto& root_children = flat.entries[0].children;
  std::vector<std::string> rep(root_children.size());
  for (size_t i = 0; i < root_children.size(); ++i) {
    int di = flat.entries[static_cast<size_t>(root_children[i])].def;
    std::string best = fw.name(di);
    if (collapse_eq)
      for (int other : root_children) {
        int dj = flat.entries[static_cast<size_t>(other)].def;
        if (fw.eq(di, dj) && fw.name(dj) < best) best = fw.name(dj);
      }
    rep[i] = best;
  }
  std::set<Extension> family;
  for (const auto& lab : labellings) {
    std::set<std::string> names;
    for (size_t i = 0; i < root_children.size(); ++i)
      if (lab.v[static_cast<size_t>(root_children[i])] == Label::Plus) names.insert(rep[i]);
    family.insert(Extension(names.begin(), names.end()));
  }
  return ExtensionFamily(family.begin(), family.end());
}

struct SemanticsResult {
  ExtensionFamily complete;
  Extension grounded;
  bool grounded_is_complete = false;
  ExtensionFamily semi_grounded;
  ExtensionFamily preferred;
  SolverConfig config;
};

namespace detail {
inline bool subset_of(const Extension& a, const Extension& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
}  // namespace detail

inline SemanticsResult aggregate_semantics(const ExtensionFamily& complete) {
  SemanticsResult r;
  r.complete = complete;
  if (!complete.empty()) {
    std::set<std::string> inter(complete[0].begin(), complete[0].end());
    for (const auto& ext : complete) {
      std::set<std::string> next;
      for (const auto& n : ext)
        if (inter.count(n)) next.insert(n);
      inter = std::move(next);
    }
    r.grounded.assign(inter.begin(), inter.end());
  }
  r.grounded_is_complete =
      std::find(complete.begin(), complete.end(), r.grounded) != complete.end();
  for (const auto& ext : complete) {
    bool minimal = true, maximal = true;
    for (const auto& other : complete) {
      if (other == ext) continue;
      if (detail::subset_of(other, ext)) minimal = false;
      if (detail::subset_of(ext, other)) maximal = false;
    }
    if (minimal) r.semi_grounded.push_back(ext);
    if (maximal) r.preferred.push_back(ext);
  }
  // Structural facts: semi-grounded sets are complete, and a unique
  // semi-grounded set is the grounded set.
  for (const auto& ext : r.semi_grounded)
    if (std::find(complete.begin(), complete.end(), ext) == complete.end())
      throw Error(ErrorCode::BadInput, "semi-grounded set escaped the complete family");
  if (r.semi_grounded.size() == 1 && r.semi_grounded[0] != r.grounded)
    throw Error(ErrorCode::BadInput, "unique semi-grounded set differs from grounded");
  return r;
}

inline SemanticsResult semantics_report(const FlatRep& flat, const SolverConfig& cfg) {
  auto labellings = solve_labellings(flat, cfg);
  auto r = aggregate_semantics(extensions_at_root(flat, labellings, cfg.collapse_eq));
  r.config = cfg;
  return r;
}

}  // namespace blockarg
