#pragma once

// Standard complete sets and labellings (no constraints).
//
// A set at a block position is standard complete iff it is conflict-free,
// every member is defended by it, and it includes every argument it defends;
// defense is support-aware: an attacker supported by the set cannot be
// defended against. A labelling is standard complete iff at every block each
// child is + exactly when all local attackers are -, and - exactly when some
// local attacker is + and no local supporter is +. The root occurrence is not
// a child of anything and carries the fixed label ?.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "blockarg/config.hpp"
#include "blockarg/errors.hpp"
#include "blockarg/flatrep.hpp"
#include "blockarg/labels.hpp"

namespace blockarg {

// Per-block adjacency over child-list indices.
struct LocalGame {
  int block_entry;
  std::vector<int> child_entries;
  std::vector<std::vector<int>> attackers;
  std::vector<std::vector<int>> supporters;

  size_t arity() const { return child_entries.size(); }
};

inline LocalGame local_game(const FlatRep& flat, int block_entry) {
  const auto& e = flat.entries[static_cast<size_t>(block_entry)];
  const auto& blk = flat.fw->block(e.def);
  LocalGame g;
  g.block_entry = block_entry;
  g.child_entries = e.children;
  g.attackers.resize(blk.children.size());
  g.supporters.resize(blk.children.size());
  for (const auto& [u, v] : blk.attacks) g.attackers[static_cast<size_t>(v)].push_back(u);
  for (const auto& [u, v] : blk.supports) g.supporters[static_cast<size_t>(v)].push_back(u);
  return g;
}

namespace detail {

// Standard + condition for child i: every local attacker labelled -.
inline bool std_plus_cond(const LocalGame& g, const std::vector<Label>& v, size_t i) {
  for (int a : g.attackers[i])
    if (v[static_cast<size_t>(a)] != Label::Minus) return false;
  return true;
}

// Standard - condition: some attacker + and no supporter +.
inline bool std_minus_cond(const LocalGame& g, const std::vector<Label>& v, size_t i) {
  bool plus_attacker = false;
  for (int a : g.attackers[i])
    if (v[static_cast<size_t>(a)] == Label::Plus) {
      plus_attacker = true;
      break;
    }
  if (!plus_attacker) return false;
  for (int s : g.supporters[i])
    if (v[static_cast<size_t>(s)] == Label::Plus) return false;
  return true;
}

inline bool local_vector_valid(const LocalGame& g, const std::vector<Label>& v, size_t i) {
  bool p = std_plus_cond(g, v, i);
  bool m = std_minus_cond(g, v, i);
  switch (v[i]) {
    case Label::Plus: return p;
    case Label::Minus: return m;
    case Label::Undec: return !p && !m;
  }
  return false;
}

}  // namespace detail

// S defends a in p: every attacker of a is attacked by some member of S and
// supported by no member of S. S and a are child occurrence entries of p.
inline bool defends_in(const FlatRep& flat, const Position& p, const std::vector<int>& s,
                       int a) {
  int be = flat.entry_at(p);
  if (!flat.is_block(be))
    throw Error(ErrorCode::UnitaryPosition, "occurrence at " + position_str(p) + " is unitary");
  LocalGame g = local_game(flat, be);
  auto child_idx = [&](int entry) {
    for (size_t i = 0; i < g.child_entries.size(); ++i)
      if (g.child_entries[i] == entry) return static_cast<int>(i);
    throw Error(ErrorCode::BadInput, "occurrence is not a child of " + position_str(p));
  };
  std::vector<bool> in_set(g.arity(), false);
  for (int m : s) in_set[static_cast<size_t>(child_idx(m))] = true;
  size_t ai = static_cast<size_t>(child_idx(a));
  for (int att : g.attackers[ai]) {
    bool countered = false;
    for (int x : g.attackers[static_cast<size_t>(att)])
      if (in_set[static_cast<size_t>(x)]) {
        countered = true;
        break;
      }
    if (!countered) return false;
    for (int x : g.supporters[static_cast<size_t>(att)])
      if (in_set[static_cast<size_t>(x)]) return false;
  }
  return true;
}

namespace detail {

inline bool conflict_free_mask(const LocalGame& g, uint32_t mask) {
  for (size_t i = 0; i < g.arity(); ++i) {
    if (!(mask >> i & 1u)) continue;
    for (int a : g.attackers[i])
      if (mask >> a & 1u) return false;
  }
  return true;
}

inline bool defends_mask(const LocalGame& g, uint32_t mask, size_t i) {
  for (int att : g.attackers[i]) {
    bool countered = false;
    for (int x : g.attackers[static_cast<size_t>(att)])
      if (mask >> x & 1u) {
        countered = true;
        break;
      }
    if (!countered) return false;
    for (int x : g.supporters[static_cast<size_t>(att)])
      if (mask >> x & 1u) return false;
  }
  return true;
}

inline bool standard_complete_mask(const LocalGame& g, uint32_t mask) {
  if (!conflict_free_mask(g, mask)) return false;
  for (size_t i = 0; i < g.arity(); ++i) {
    bool def = defends_mask(g, mask, i);
    bool in = (mask >> i & 1u) != 0;
    if (in && !def) return false;  // every member defended
    if (!in && def) return false;  // includes all it defends
  }
  return true;
}

}  // namespace detail

inline bool is_standard_complete_set_in(const FlatRep& flat, const Position& p,
                                        const std::vector<int>& s) {
  int be = flat.entry_at(p);
  if (!flat.is_block(be))
    throw Error(ErrorCode::UnitaryPosition, "occurrence at " + position_str(p) + " is unitary");
  LocalGame g = local_game(flat, be);
  uint32_t mask = 0;
  for (int m : s) {
    bool found = false;
    for (size_t i = 0; i < g.child_entries.size(); ++i)
      if (g.child_entries[i] == m) {
        mask |= 1u << i;
        found = true;
        break;
      }
    if (!found) throw Error(ErrorCode::BadInput, "occurrence is not a child of " + position_str(p));
  }
  return detail::standard_complete_mask(g, mask);
}

// All standard complete sets at p, each a sorted vector of child occurrence
// entries, family ordered by mask value (subset-size-agnostic, deterministic).
inline std::vector<std::vector<int>> standard_complete_sets_in(const FlatRep& flat,
                                                               const Position& p,
                                                               const Caps& caps = {}) {
  int be = flat.entry_at(p);
  if (!flat.is_block(be))
    throw Error(ErrorCode::UnitaryPosition, "occurrence at " + position_str(p) + " is unitary");
  LocalGame g = local_game(flat, be);
  if (g.arity() > caps.max_block_children)
    throw Error(ErrorCode::SizeCapExceeded,
                "block at " + position_str(p) + " has " + std::to_string(g.arity()) +
                    " children");
  std::vector<std::vector<int>> out;
  for (uint32_t mask = 0; mask < (1u << g.arity()); ++mask) {
    if (!detail::standard_complete_mask(g, mask)) continue;
    std::vector<int> set;
    for (size_t i = 0; i < g.arity(); ++i)
      if (mask >> i & 1u) set.push_back(g.child_entries[i]);
    out.push_back(std::move(set));
  }
  return out;
}

struct LabellingViolation {
  int entry;
  std::string reason;
};

struct LabellingVerdict {
  bool ok = true;
  std::vector<LabellingViolation> violations;
};

inline LabellingVerdict is_standard_complete(const FlatRep& flat, const Labelling& lab) {
  LabellingVerdict v;
  if (lab.v.size() != flat.size())
    throw Error(ErrorCode::DomainMismatch, "labelling domain differs from flat representation");
  if (lab.v[0] != Label::Undec) {
    v.ok = false;
    v.violations.push_back({0, "root occurrence must be labelled ?"});
  }
  for (int be : flat.block_entries) {
    LocalGame g = local_game(flat, be);
    std::vector<Label> loc(g.arity());
    for (size_t i = 0; i < g.arity(); ++i) loc[i] = lab.v[static_cast<size_t>(g.child_entries[i])];
    for (size_t i = 0; i < g.arity(); ++i) {
      if (detail::local_vector_valid(g, loc, i)) continue;
      v.ok = false;
      bool p = detail::std_plus_cond(g, loc, i);
      bool m = detail::std_minus_cond(g, loc, i);
      std::string why;
      if (lab.v[static_cast<size_t>(g.child_entries[i])] == Label::Plus)
        why = "+ without all attackers -";
      else if (lab.v[static_cast<size_t>(g.child_entries[i])] == Label::Minus)
        why = "- without a + attacker, or with a + supporter";
      else
        why = p ? "? where + condition holds" : (m ? "? where - condition holds" : "?");
      v.violations.push_back({g.child_entries[i], why});
    }
  }
  return v;
}

// All local label vectors satisfying the standard conditions at one block.
inline std::vector<std::vector<Label>> local_complete_vectors(const FlatRep& flat,
                                                              int block_entry,
                                                              const Caps& caps = {}) {
  LocalGame g = local_game(flat, block_entry);
  const size_t k = g.arity();
  if (k > caps.max_block_children)
    throw Error(ErrorCode::SizeCapExceeded,
                "block at " + position_str(flat.entries[static_cast<size_t>(block_entry)].pos) +
                    " has " + std::to_string(k) + " children");
  // A child can be verified as soon as itself and its whole neighborhood are
  // assigned; checking at that point prunes the DFS early.
  std::vector<std::vector<size_t>> check_at(k);
  for (size_t i = 0; i < k; ++i) {
    size_t last = i;
    for (int a : g.attackers[i]) last = std::max(last, static_cast<size_t>(a));
    for (int s : g.supporters[i]) last = std::max(last, static_cast<size_t>(s));
    check_at[last].push_back(i);
  }
  std::vector<std::vector<Label>> out;
  std::vector<Label> v(k, Label::Undec);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == k) {
      out.push_back(v);
      return;
    }
    for (Label l : {Label::Plus, Label::Minus, Label::Undec}) {
      v[i] = l;
      bool ok = true;
      for (size_t j : check_at[i])
        if (!detail::local_vector_valid(g, v, j)) {
          ok = false;
          break;
        }
      if (ok) rec(i + 1);
    }
    v[i] = Label::Undec;
  };
  rec(0);
  return out;
}

// All standard complete labellings; blocks are independent so the result is
// the product of the per-block local solutions. Deterministic order: sorted
// by the label vector over entries (entry order is position order, + < - < ?).
inline std::vector<Labelling> enumerate_standard_labellings(const FlatRep& flat,
                                                            const Caps& caps = {}) {
  std::vector<std::vector<std::vector<Label>>> locals;
  locals.reserve(flat.block_entries.size());
  size_t total = 1;
  for (int be : flat.block_entries) {
    locals.push_back(local_complete_vectors(flat, be, caps));
    if (locals.back().empty()) total = 0;
    if (total > 0 && locals.back().size() > caps.max_labellings / total)
      throw Error(ErrorCode::SizeCapExceeded, "too many standard complete labellings");
    total *= locals.back().size();
  }
  if (total > caps.max_labellings)
    throw Error(ErrorCode::SizeCapExceeded, "too many standard complete labellings");
  std::vector<Labelling> out;
  if (total == 0) return out;
  Labelling lab = all_undec(flat);
  std::function<void(size_t)> rec = [&](size_t bi) {
    if (bi == flat.block_entries.size()) {
      out.push_back(lab);
      return;
    }
    const LocalGame g = local_game(flat, flat.block_entries[bi]);
    for (const auto& v : locals[bi]) {
      for (size_t i = 0; i < g.arity(); ++i) lab.v[static_cast<size_t>(g.child_entries[i])] = v[i];
      rec(bi + 1);
    }
    for (size_t i = 0; i < g.arity(); ++i) lab.v[static_cast<size_t>(g.child_entries[i])] = Label::Undec;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// The + children at p.
inline std::vector<int> extension_of(const FlatRep& flat, const Labelling& lab,
                                     const Position& p) {
  const auto& kids = args_in(flat, p);
  std::vector<int> out;
  for (int c : kids)
    if (lab.v[static_cast<size_t>(c)] == Label::Plus) out.push_back(c);
  return out;
}

namespace detail {

// Deterministic least-committed local solution: fewest committed labels,
// then lexicographically smallest.
inline std::vector<Label> canonical_local_vector(const FlatRep& flat, int block_entry,
                                                 const Caps& caps) {
  auto all = local_complete_vectors(flat, block_entry, caps);
  if (all.empty())
    throw Error(ErrorCode::NotComplete,
                "block at " +
                    position_str(flat.entries[static_cast<size_t>(block_entry)].pos) +
                    " admits no standard complete labelling");
  auto committed = [](const std::vector<Label>& v) {
    size_t n = 0;
    for (Label l : v) n += l != Label::Undec;
    return n;
  };
  const std::vector<Label>* best = &all[0];
  for (const auto& v : all) {
    size_t cb = committed(*best), cv = committed(v);
    if (cv < cb || (cv == cb && v < *best)) best = &v;
  }
  return *best;
}

}  // namespace detail

// Builds a standard complete labelling whose + children at p are exactly s:
// + on s, - on children attacked and not supported by s, ? elsewhere at p;
// other blocks get their least-committed local solution.
inline Labelling labelling_from_set(const FlatRep& flat, const Position& p,
                                    const std::vector<int>& s, const Caps& caps = {}) {
  if (!is_standard_complete_set_in(flat, p, s))
    throw Error(ErrorCode::NotComplete, "set is not standard complete in " + position_str(p));
  int target = flat.entry_at(p);
  Labelling lab = all_undec(flat);
  for (int be : flat.block_entries) {
    LocalGame g = local_game(flat, be);
    if (be == target) {
      std::vector<bool> in_set(g.arity(), false);
      for (int m : s)
        for (size_t i = 0; i < g.arity(); ++i)
          if (g.child_entries[i] == m) in_set[i] = true;
      for (size_t i = 0; i < g.arity(); ++i) {
        if (in_set[i]) {
          lab.v[static_cast<size_t>(g.child_entries[i])] = Label::Plus;
          continue;
        }
        bool attacked = false, supported = false;
        for (int a : g.attackers[i])
          if (in_set[static_cast<size_t>(a)]) attacked = true;
        for (int x : g.supporters[i])
          if (in_set[static_cast<size_t>(x)]) supported = true;
        lab.v[static_cast<size_t>(g.child_entries[i])] =
            (attacked && !supported) ? Label::Minus : Label::Undec;
      }
    } else {
      auto v = detail::canonical_local_vector(flat, be, caps);
      for (size_t i = 0; i < g.arity(); ++i)
        lab.v[static_cast<size_t>(g.child_entries[i])] = v[i];
    }
  }
  return lab;
}

}  // namespace blockarg
