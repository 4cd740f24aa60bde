#pragma once

// Graphical constraint G, the label order, and the semantic constraints S
// and star.
//
// G: a non-root block occurrence must be a sub-argumentation of the value of
// some occurrence strictly above it, and all its descendants must satisfy G
// as well; violation propagates upward.
//
// S: an eq-equal occurrence from a strictly enclosing argumentation context
// constrains the deeper one: the constrainer's label must dominate the
// constrained's. The default (depth) dominance pairs occurrences whose parent
// positions are strictly prefix-related; prefix mode demands the occurrences
// themselves be prefix-related (which eq-equality makes vacuous, kept for
// completeness).
//
// star: eq-equal occurrences sharing a parent must carry identical labels.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "blockarg/config.hpp"
#include "blockarg/flatrep.hpp"
#include "blockarg/labels.hpp"

namespace blockarg {

enum class ConstraintKind { G, S, Star };

inline const char* constraint_kind_name(ConstraintKind k) {
  switch (k) {
    case ConstraintKind::G: return "G";
    case ConstraintKind::S: return "S";
    case ConstraintKind::Star: return "STAR";
  }
  return "?";
}

struct ConstraintInstance {
  ConstraintKind kind;
  int constrained;  // entry index
  int constrainer;  // entry index
  friend bool operator==(const ConstraintInstance&, const ConstraintInstance&) = default;
};

// Precomputed tables shared by the checker and the solver.
struct ConstraintContext {
  const FlatRep* flat = nullptr;
  SDominance dominance = SDominance::Depth;
  std::vector<uint8_t> g_sat;                       // per entry
  std::vector<std::vector<int>> s_constrainers;     // per entry
  std::vector<std::vector<int>> star_siblings;      // per entry
};

inline ConstraintContext make_constraint_context(const FlatRep& flat,
                                                 SDominance dom = SDominance::Depth) {
  ConstraintContext ctx;
  ctx.flat = &flat;
  ctx.dominance = dom;
  const Framework& fw = *flat.fw;
  const size_t n = flat.size();

  // G, bottom-up; entries are in DFS pre-order so children come after parents.
  ctx.g_sat.assign(n, 1);
  for (size_t i = n; i-- > 0;) {
    const auto& e = flat.entries[i];
    bool clause1 = true;
    if (e.parent >= 0 && !fw.is_atom(e.def)) {
      clause1 = false;
      for (int anc = e.parent; anc >= 0 && !clause1;
           anc = flat.entries[static_cast<size_t>(anc)].parent)
        clause1 = fw.sub_argumentation(flat.entries[static_cast<size_t>(anc)].def, e.def);
    }
    bool kids = true;
    for (int c : e.children) kids = kids && ctx.g_sat[static_cast<size_t>(c)];
    ctx.g_sat[i] = clause1 && kids;
  }

  ctx.s_constrainers.assign(n, {});
  ctx.star_siblings.assign(n, {});
  for (size_t q = 0; q < n; ++q) {
    const auto& eq_entry = flat.entries[q];
    for (size_t p = 0; p < n; ++p) {
      if (p == q) continue;
      const auto& ep = flat.entries[p];
      if (!fw.eq(ep.def, eq_entry.def)) continue;
      if (ep.parent == eq_entry.parent && ep.parent >= 0)
        ctx.star_siblings[q].push_back(static_cast<int>(p));
      bool dominates = false;
      if (dom == SDominance::Depth)
        dominates = is_strict_prefix(parent_of(ep.pos), parent_of(eq_entry.pos));
      else
        dominates = is_strict_prefix(ep.pos, eq_entry.pos);
      if (dominates) ctx.s_constrainers[q].push_back(static_cast<int>(p));
    }
  }
  return ctx;
}

inline bool satisfies_g(const ConstraintContext& ctx, const Position& p) {
  return ctx.g_sat[static_cast<size_t>(ctx.flat->entry_at(p))] != 0;
}

inline bool satisfies_g(const FlatRep& flat, const Position& p) {
  return satisfies_g(make_constraint_context(flat), p);
}

inline std::vector<ConstraintInstance> constraint_instances(const ConstraintContext& ctx,
                                                            ConstraintKind kind) {
  std::vector<ConstraintInstance> out;
  const size_t n = ctx.flat->size();
  for (size_t q = 0; q < n; ++q) {
    const auto& ps =
        kind == ConstraintKind::S ? ctx.s_constrainers[q] : ctx.star_siblings[q];
    for (int p : ps) out.push_back({kind, static_cast<int>(q), p});
  }
  std::sort(out.begin(), out.end(), [](const ConstraintInstance& a, const ConstraintInstance& b) {
    return std::tie(a.constrained, a.constrainer) < std::tie(b.constrained, b.constrainer);
  });
  return out;
}

inline std::vector<ConstraintInstance> constraint_instances(const FlatRep& flat,
                                                            ConstraintKind kind,
                                                            const SolverConfig& cfg = {}) {
  return constraint_instances(make_constraint_context(flat, cfg.s_dominance), kind);
}

// Literal per-occurrence satisfaction: every constrainer's label dominates
// (S) or equals (star) the label at q, whatever the label at q is.
inline bool satisfies_s(const ConstraintContext& ctx, const Labelling& lab, int q) {
  for (int p : ctx.s_constrainers[static_cast<size_t>(q)])
    if (!label_dominates(lab.v[static_cast<size_t>(p)], lab.v[static_cast<size_t>(q)]))
      return false;
  return true;
}

inline bool satisfies_star(const ConstraintContext& ctx, const Labelling& lab, int q) {
  for (int p : ctx.star_siblings[static_cast<size_t>(q)])
    if (lab.v[static_cast<size_t>(p)] != lab.v[static_cast<size_t>(q)]) return false;
  return true;
}

inline bool satisfies_s(const FlatRep& flat, const Labelling& lab, const Position& q,
                        const SolverConfig& cfg = {}) {
  auto ctx = make_constraint_context(flat, cfg.s_dominance);
  return satisfies_s(ctx, lab, flat.entry_at(q));
}

inline bool satisfies_star(const FlatRep& flat, const Labelling& lab, const Position& q) {
  auto ctx = make_constraint_context(flat);
  return satisfies_star(ctx, lab, flat.entry_at(q));
}

struct ConstraintViolation {
  ConstraintKind kind;
  int entry;    // the offending (constrained) occurrence
  int witness;  // constrainer entry, -1 for G
  friend bool operator==(const ConstraintViolation&, const ConstraintViolation&) = default;
};

// Violation report for a full labelling. A semantic instance counts as
// violated only when the constrained occurrence carries a committed label:
// the label conditions only govern + and - assignments, and ? is never
// forced. G is violated by a + on a G-failing occurrence.
inline std::vector<ConstraintViolation> constraint_report(const ConstraintContext& ctx,
                                                          const Labelling& lab,
                                                          const ConstraintSet& c) {
  std::vector<ConstraintViolation> out;
  const size_t n = ctx.flat->size();
  if (lab.v.size() != n)
    throw Error(ErrorCode::DomainMismatch, "labelling domain differs from flat representation");
  for (size_t q = 0; q < n; ++q) {
    Label lq = lab.v[q];
    if (c.g && lq == Label::Plus && !ctx.g_sat[q])
      out.push_back({ConstraintKind::G, static_cast<int>(q), -1});
    if (lq == Label::Undec) continue;
    if (c.s)
      for (int p : ctx.s_constrainers[q])
        if (!label_dominates(lab.v[static_cast<size_t>(p)], lq))
          out.push_back({ConstraintKind::S, static_cast<int>(q), p});
    if (c.star)
      for (int p : ctx.star_siblings[q])
        if (lab.v[static_cast<size_t>(p)] != lq)
          out.push_back({ConstraintKind::Star, static_cast<int>(q), p});
  }
  return out;
}

inline std::vector<ConstraintViolation> constraint_report(const FlatRep& flat,
                                                          const Labelling& lab,
                                                          const ConstraintSet& c,
                                                          const SolverConfig& cfg = {}) {
  return constraint_report(make_constraint_context(flat, cfg.s_dominance), lab, c);
}

}  // namespace blockarg
