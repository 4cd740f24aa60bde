#pragma once

// Complete labellings under a constraint set, two strategies.
//
// Fixpoint: the label conditions become biconditionals with vetoes folded in.
// A child is + exactly when all local attackers are -, it satisfies G when G
// is active, and committing + breaks no semantic constraint; it is - exactly
// when the standard - condition holds and committing - breaks no semantic
// constraint. Veto scope is either local (only instances where the position
// is the constrained party) or enclosing (a block additionally cannot be +
// while its strict subtree hosts a violated instance). The enumeration may be
// empty; that is a result, not an error.
//
// Repair: from each standard complete labelling, iterate the down step
// (demote a violating committed label to ?, then demote whatever loses its
// justification) to a fixed point, then restore as many of the original
// commitments as possible without reintroducing violations; the maximal
// restorations are the results. Never empty.

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "blockarg/config.hpp"
#include "blockarg/constraints.hpp"
#include "blockarg/labels.hpp"
#include "blockarg/standard.hpp"

namespace blockarg {

namespace detail {

class Deadline {
 public:
  explicit Deadline(long long ms)
      : enabled_(ms > 0),
        end_(std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)) {}
  void check() const {
    if (enabled_ && std::chrono::steady_clock::now() > end_)
      throw Error(ErrorCode::Timeout, "time limit exceeded");
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point end_;
};

inline bool s_ok(const ConstraintContext& ctx, const Labelling& lab, int q, Label l) {
  for (int p : ctx.s_constrainers[static_cast<size_t>(q)])
    if (!label_dominates(lab.v[static_cast<size_t>(p)], l)) return false;
  return true;
}

inline bool star_ok(const ConstraintContext& ctx, const Labelling& lab, int q, Label l) {
  for (int p : ctx.star_siblings[static_cast<size_t>(q)])
    if (lab.v[static_cast<size_t>(p)] != l) return false;
  return true;
}

inline bool subtree_has_violation(const ConstraintContext& ctx, const Labelling& lab,
                                  const ConstraintSet& c, int e) {
  const FlatRep& flat = *ctx.flat;
  std::vector<int> stack(flat.entries[static_cast<size_t>(e)].children);
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    if (c.s && !satisfies_s(ctx, lab, r)) return true;
    if (c.star && !satisfies_star(ctx, lab, r)) return true;
    for (int k : flat.entries[static_cast<size_t>(r)].children) stack.push_back(k);
  }
  return false;
}

}  // namespace detail

// Would assigning l to p break a semantic constraint? Only instances where p
// is the constrained party are consulted in local scope; enclosing scope also
// vetoes + on a block whose strict subtree hosts a violated instance.
inline bool sem_veto(const ConstraintContext& ctx, const Labelling& lab, int p, Label l,
                     const SolverConfig& cfg) {
  const ConstraintSet& c = cfg.constraints;
  if (c.s && !detail::s_ok(ctx, lab, p, l)) return true;
  if (c.star && !detail::star_ok(ctx, lab, p, l)) return true;
  if (cfg.scope == Scope::Enclosing && l == Label::Plus && ctx.flat->is_block(p) &&
      detail::subtree_has_violation(ctx, lab, c, p))
    return true;
  return false;
}

inline bool sem_veto(const FlatRep& flat, const Labelling& lab, const Position& p, Label l,
                     const SolverConfig& cfg) {
  auto ctx = make_constraint_context(flat, cfg.s_dominance);
  return sem_veto(ctx, lab, flat.entry_at(p), l, cfg);
}

struct CompletenessIssue {
  int entry;
  std::string reason;
};

struct CompletenessVerdict {
  bool ok = true;
  std::vector<CompletenessIssue> issues;
};

inline CompletenessVerdict is_complete_under(const ConstraintContext& ctx,
                                             const Labelling& lab,
                                             const SolverConfig& cfg) {
  const FlatRep& flat = *ctx.flat;
  if (lab.v.size() != flat.size())
    throw Error(ErrorCode::DomainMismatch, "labelling domain differs from flat representation");
  CompletenessVerdict out;
  if (lab.v[0] != Label::Undec) {
    out.ok = false;
    out.issues.push_back({0, "root occurrence must be labelled ?"});
  }
  const ConstraintSet& c = cfg.constraints;
  for (int be : flat.block_entries) {
    LocalGame g = local_game(flat, be);
    std::vector<Label> loc(g.arity());
    for (size_t i = 0; i < g.arity(); ++i) loc[i] = lab.v[static_cast<size_t>(g.child_entries[i])];
    for (size_t i = 0; i < g.arity(); ++i) {
      int q = g.child_entries[i];
      bool plus_cond = detail::std_plus_cond(g, loc, i) &&
                       (!c.g || ctx.g_sat[static_cast<size_t>(q)]) &&
                       !sem_veto(ctx, lab, q, Label::Plus, cfg);
      bool minus_cond =
          detail::std_minus_cond(g, loc, i) && !sem_veto(ctx, lab, q, Label::Minus, cfg);
      Label l = lab.v[static_cast<size_t>(q)];
      bool fine = (l == Label::Plus) == plus_cond && (l == Label::Minus) == minus_cond;
      if (fine) continue;
      out.ok = false;
      std::string why;
      if (l == Label::Plus && !plus_cond) why = "+ assigned but + condition fails";
      else if (l == Label::Minus && !minus_cond) why = "- assigned but - condition fails";
      else if (plus_cond) why = "+ condition holds but label is " + std::string(1, label_char(l));
      else why = "- condition holds but label is " + std::string(1, label_char(l));
      out.issues.push_back({q, why});
    }
  }
  return out;
}

inline CompletenessVerdict is_complete_under(const FlatRep& flat, const Labelling& lab,
                                             const SolverConfig& cfg) {
  auto ctx = make_constraint_context(flat, cfg.s_dominance);
  return is_complete_under(ctx, lab, cfg);
}

// Exhaustive-but-pruned enumeration of the fixpoint reading.
inline std::vector<Labelling> enumerate_complete_under(const FlatRep& flat,
                                                       const SolverConfig& cfg) {
  auto ctx = make_constraint_context(flat, cfg.s_dominance);
  const ConstraintSet& c = cfg.constraints;
  detail::Deadline deadline(cfg.caps.time_limit_ms);

  struct BlockPlan {
    LocalGame game;
    std::vector<std::vector<size_t>> check_at;  // children verifiable after index i
  };
  std::vector<BlockPlan> plan;
  plan.reserve(flat.block_entries.size());
  for (int be : flat.block_entries) {
    BlockPlan bp{local_game(flat, be), {}};
    const size_t k = bp.game.arity();
    if (k > cfg.caps.max_block_children)
      throw Error(ErrorCode::SizeCapExceeded,
                  "block with " + std::to_string(k) + " children exceeds enumeration cap");
    bp.check_at.resize(k);
    for (size_t i = 0; i < k; ++i) {
      size_t last = i;
      for (int a : bp.game.attackers[i]) last = std::max(last, static_cast<size_t>(a));
      for (int s : bp.game.supporters[i]) last = std::max(last, static_cast<size_t>(s));
      // star siblings share the parent block; their labels live in this vector
      for (int sib : ctx.star_siblings[static_cast<size_t>(bp.game.child_entries[i])])
        for (size_t j = 0; j < k; ++j)
          if (bp.game.child_entries[j] == sib) last = std::max(last, j);
      bp.check_at[last].push_back(i);
    }
    plan.push_back(std::move(bp));
  }

  Labelling lab = all_undec(flat);
  std::vector<Labelling> out;

  // Biconditional check for one child once its neighborhood is assigned.
  auto child_ok = [&](const BlockPlan& bp, const std::vector<Label>& loc, size_t i) {
    int q = bp.game.child_entries[i];
    Label l = loc[i];
    bool std_p = detail::std_plus_cond(bp.game, loc, i);
    bool std_m = detail::std_minus_cond(bp.game, loc, i);
    bool g_ok = !c.g || ctx.g_sat[static_cast<size_t>(q)];
    bool s_p = !c.s || detail::s_ok(ctx, lab, q, Label::Plus);
    bool s_m = !c.s || detail::s_ok(ctx, lab, q, Label::Minus);
    bool star_p = !c.star || detail::star_ok(ctx, lab, q, Label::Plus);
    bool star_m = !c.star || detail::star_ok(ctx, lab, q, Label::Minus);
    bool plus_cond = std_p && g_ok && s_p && star_p;
    bool minus_cond = std_m && s_m && star_m;
    bool defer_plus =
        cfg.scope == Scope::Enclosing && flat.is_block(q);  // subtree veto unknown yet
    switch (l) {
      case Label::Plus: return plus_cond;
      case Label::Minus: return minus_cond;
      case Label::Undec: return (!plus_cond || defer_plus) && !minus_cond;
    }
    return false;
  };

  std::function<void(size_t)> rec_block = [&](size_t bi) {
    deadline.check();
    if (bi == plan.size()) {
      if (is_complete_under(ctx, lab, cfg).ok) {
        if (out.size() >= cfg.caps.max_labellings)
          throw Error(ErrorCode::SizeCapExceeded, "too many labellings");
        out.push_back(lab);
      }
      return;
    }
    const BlockPlan& bp = plan[bi];
    const size_t k = bp.game.arity();
    std::vector<Label> loc(k, Label::Undec);
    std::function<void(size_t)> rec_child = [&](size_t i) {
      if (i == k) {
        rec_block(bi + 1);
        return;
      }
      for (Label l : {Label::Plus, Label::Minus, Label::Undec}) {
        loc[i] = l;
        lab.v[static_cast<size_t>(bp.game.child_entries[i])] = l;
        bool ok = true;
        for (size_t j : bp.check_at[i])
          if (!child_ok(bp, loc, j)) {
            ok = false;
            break;
          }
        if (ok) rec_child(i + 1);
      }
      loc[i] = Label::Undec;
      lab.v[static_cast<size_t>(bp.game.child_entries[i])] = Label::Undec;
    };
    rec_child(0);
  };
  rec_block(0);
  std::sort(out.begin(), out.end());
  return out;
}

// One repair step: find the first committed occurrence violating an active
// constraint (star, then S, then a + on a G-failing position, in position
// order), demote it (and, for star, its whole eq-sibling group) to ?, then
// demote every committed label whose standard justification that breaks.
// Returns nothing when no trigger exists.
inline std::optional<Labelling> down_step(const ConstraintContext& ctx, const Labelling& lab,
                                          const SolverConfig& cfg) {
  const FlatRep& flat = *ctx.flat;
  const ConstraintSet& c = cfg.constraints;
  std::vector<int> forced;
  for (size_t e = 0; e < flat.size() && forced.empty(); ++e) {
    Label l = lab.v[e];
    if (c.star && l != Label::Undec && !satisfies_star(ctx, lab, static_cast<int>(e))) {
      forced.push_back(static_cast<int>(e));
      for (int p : ctx.star_siblings[e]) forced.push_back(p);
      break;
    }
    if (c.s && l != Label::Undec && !satisfies_s(ctx, lab, static_cast<int>(e))) {
      forced.push_back(static_cast<int>(e));
      break;
    }
    if (c.g && l == Label::Plus && !ctx.g_sat[e]) {
      forced.push_back(static_cast<int>(e));
      break;
    }
  }
  if (forced.empty()) return std::nullopt;
  Labelling next = lab;
  for (int e : forced) next.v[static_cast<size_t>(e)] = Label::Undec;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int be : flat.block_entries) {
      LocalGame g = local_game(flat, be);
      std::vector<Label> loc(g.arity());
      for (size_t i = 0; i < g.arity(); ++i)
        loc[i] = next.v[static_cast<size_t>(g.child_entries[i])];
      for (size_t i = 0; i < g.arity(); ++i) {
        Label l = loc[i];
        if (l == Label::Undec) continue;
        bool justified = l == Label::Plus ? detail::std_plus_cond(g, loc, i)
                                          : detail::std_minus_cond(g, loc, i);
        if (!justified) {
          next.v[static_cast<size_t>(g.child_entries[i])] = Label::Undec;
          loc[i] = Label::Undec;
          changed = true;
        }
      }
    }
  }
  return next;
}

inline std::optional<Labelling> down_step(const FlatRep& flat, const Labelling& lab,
                                          const SolverConfig& cfg) {
  auto ctx = make_constraint_context(flat, cfg.s_dominance);
  return down_step(ctx, lab, cfg);
}

// Repair strategy. For each standard complete labelling lam: run down to a
// fixed point lam1, then search the restorations lam2 (lam1 refined towards
// lam) whose committed labels stay standard-justified and which report no
// violation; keep the maximal ones. The fixed point itself always qualifies.
inline std::vector<Labelling> repair_complete(const FlatRep& flat, const SolverConfig& cfg) {
  auto ctx = make_constraint_context(flat, cfg.s_dominance);
  detail::Deadline deadline(cfg.caps.time_limit_ms);
  std::vector<Labelling> out;
  auto standard = enumerate_standard_labellings(flat, cfg.caps);

  std::vector<LocalGame> games;
  games.reserve(flat.block_entries.size());
  for (int be : flat.block_entries) games.push_back(local_game(flat, be));

  auto committed_justified = [&](const Labelling& lab) {
    for (const auto& g : games) {
      std::vector<Label> loc(g.arity());
      for (size_t i = 0; i < g.arity(); ++i)
        loc[i] = lab.v[static_cast<size_t>(g.child_entries[i])];
      for (size_t i = 0; i < g.arity(); ++i) {
        if (loc[i] == Label::Plus && !detail::std_plus_cond(g, loc, i)) return false;
        if (loc[i] == Label::Minus && !detail::std_minus_cond(g, loc, i)) return false;
      }
    }
    return true;
  };

  for (const auto& source : standard) {
    deadline.check();
    Labelling fixed = source;
    while (auto next = down_step(ctx, fixed, cfg)) fixed = *next;

    std::vector<int> free;
    for (size_t e = 0; e < flat.size(); ++e)
      if (fixed.v[e] == Label::Undec && source.v[e] != Label::Undec)
        free.push_back(static_cast<int>(e));
    if (free.size() > cfg.caps.max_repair_free)
      throw Error(ErrorCode::SizeCapExceeded, "too many repairable positions");

    std::vector<Labelling> survivors;
    for (uint64_t mask = 0; mask < (1ull << free.size()); ++mask) {
      deadline.check();
      Labelling cand = fixed;
      for (size_t i = 0; i < free.size(); ++i)
        if (mask >> i & 1ull)
          cand.v[static_cast<size_t>(free[i])] = source.v[static_cast<size_t>(free[i])];
      if (!committed_justified(cand)) continue;
      if (!constraint_report(ctx, cand, cfg.constraints).empty()) continue;
      survivors.push_back(std::move(cand));
    }
    for (const auto& cand : survivors) {
      bool maximal = true;
      for (const auto& other : survivors)
        if (&other != &cand && strictly_more_informative(other, cand)) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Labelling set for the configured mode.
inline std::vector<Labelling> solve_labellings(const FlatRep& flat, const SolverConfig& cfg) {
  return cfg.mode == Mode::Fixpoint ? enumerate_complete_under(flat, cfg)
                                    : repair_complete(flat, cfg);
}

}  // namespace blockarg
