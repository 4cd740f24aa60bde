#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace blockarg;
using testsupport::DocBuilder;
using testsupport::load_fixture;
using testsupport::make_labelling;

namespace {

struct Fixture {
  Framework fw;
  FlatRep flat;
  explicit Fixture(const std::string& file)
      : fw(validate(load_fixture(file).doc)), flat(flatten(fw)) {}
};

Labelling fig_a_labelling(const FlatRep& flat) {
  return make_labelling(flat, {
      {{0, 1}, '+'}, {{0, 2}, '?'}, {{0, 3}, '?'}, {{0, 4}, '+'}, {{0, 5}, '+'},
      {{0, 6}, '-'}, {{0, 7}, '+'}, {{0, 8}, '+'},
      {{0, 6, 1}, '+'}, {{0, 6, 2}, '+'},
      {{0, 7, 1}, '-'}, {{0, 7, 2}, '+'},
      {{0, 8, 1}, '-'}, {{0, 8, 2}, '+'},
      {{0, 8, 1, 1}, '+'}, {{0, 8, 1, 2}, '+'},
      {{0, 8, 2, 1}, '-'}, {{0, 8, 2, 2}, '+'},
  });
}

}  // namespace

TEST_CASE("label dominance table") {
  REQUIRE(label_dominates(Label::Undec, Label::Plus));
  REQUIRE(label_dominates(Label::Undec, Label::Minus));
  REQUIRE(label_dominates(Label::Undec, Label::Undec));
  REQUIRE(label_dominates(Label::Plus, Label::Plus));
  REQUIRE(label_dominates(Label::Minus, Label::Minus));
  REQUIRE_FALSE(label_dominates(Label::Minus, Label::Plus));
  REQUIRE_FALSE(label_dominates(Label::Plus, Label::Minus));
  REQUIRE_FALSE(label_dominates(Label::Plus, Label::Undec));
  REQUIRE_FALSE(label_dominates(Label::Minus, Label::Undec));
}

TEST_CASE("every position of the court case satisfies G") {
  Fixture a("fig_a.json");
  auto ctx = make_constraint_context(a.flat);
  for (const auto& e : a.flat.entries) REQUIRE(satisfies_g(ctx, e.pos));
}

TEST_CASE("the detached detail box fails G") {
  Fixture b("fig_b.json");
  auto ctx = make_constraint_context(b.flat);
  REQUIRE_FALSE(satisfies_g(ctx, {0, 1}));  // a_6: no enclosing occurrence embeds it
  REQUIRE_FALSE(satisfies_g(ctx, {0, 2}));  // a_7
  REQUIRE_FALSE(satisfies_g(ctx, {0}));     // violation propagates upward
  REQUIRE(satisfies_g(ctx, {0, 1, 1}));     // atoms are fine
  REQUIRE(satisfies_g(ctx, {0, 2, 1}));
}

TEST_CASE("property: G violation propagates upward") {
  std::mt19937_64 rng(808);
  for (int round = 0; round < 80; ++round) {
    Framework fw = validate(testsupport::random_doc(rng));
    FlatRep flat = flatten(fw);
    auto ctx = make_constraint_context(flat);
    for (const auto& e : flat.entries)
      if (e.parent >= 0 && !ctx.g_sat[static_cast<size_t>(flat.by_pos.at(e.pos))])
        REQUIRE_FALSE(ctx.g_sat[static_cast<size_t>(e.parent)]);
  }
}

TEST_CASE("S instances of the reconstruction D under depth dominance") {
  Fixture d("fig_d.json");
  auto inst = constraint_instances(d.flat, ConstraintKind::S);
  REQUIRE(inst.size() == 2);
  auto pos = [&](int e) { return d.flat.entries[static_cast<size_t>(e)].pos; };
  REQUIRE(pos(inst[0].constrained) == Position{0, 1, 1});
  REQUIRE(pos(inst[0].constrainer) == Position{0, 4});
  REQUIRE(pos(inst[1].constrained) == Position{0, 1, 2});
  REQUIRE(pos(inst[1].constrainer) == Position{0, 5});
}

TEST_CASE("S instances under prefix dominance are empty") {
  Fixture d("fig_d.json");
  SolverConfig cfg;
  cfg.s_dominance = SDominance::Prefix;
  REQUIRE(constraint_instances(d.flat, ConstraintKind::S, cfg).empty());
  Fixture a("fig_a.json");
  REQUIRE(constraint_instances(a.flat, ConstraintKind::S, cfg).empty());
}

TEST_CASE("star instances pair duplicated siblings in both directions") {
  Fixture f("fig_f.json");
  auto inst = constraint_instances(f.flat, ConstraintKind::Star);
  std::set<std::pair<Position, Position>> got;
  for (const auto& i : inst)
    got.insert({f.flat.entries[static_cast<size_t>(i.constrained)].pos,
                f.flat.entries[static_cast<size_t>(i.constrainer)].pos});
  std::set<std::pair<Position, Position>> expected{
      {{0, 1}, {0, 3}}, {{0, 3}, {0, 1}}, {{0, 4}, {0, 5}}, {{0, 5}, {0, 4}}};
  REQUIRE(got == expected);
}

TEST_CASE("property: instance relations are symmetric for star, antisymmetric for S") {
  std::mt19937_64 rng(4242);
  for (int round = 0; round < 60; ++round) {
    Framework fw = validate(testsupport::random_doc(rng));
    FlatRep flat = flatten(fw);
    auto ctx = make_constraint_context(flat);
    auto star = constraint_instances(ctx, ConstraintKind::Star);
    for (const auto& i : star)
      REQUIRE(std::find(star.begin(), star.end(),
                        ConstraintInstance{ConstraintKind::Star, i.constrainer,
                                           i.constrained}) != star.end());
    auto s = constraint_instances(ctx, ConstraintKind::S);
    for (const auto& i : s)
      REQUIRE(std::find(s.begin(), s.end(),
                        ConstraintInstance{ConstraintKind::S, i.constrainer,
                                           i.constrained}) == s.end());
  }
}

TEST_CASE("S satisfaction on the documented labellings of D") {
  Fixture d("fig_d.json");
  Labelling l1 = make_labelling(d.flat, {{{0, 1}, '+'}, {{0, 2}, '-'}, {{0, 3}, '+'},
                                         {{0, 4}, '-'}, {{0, 5}, '+'},
                                         {{0, 1, 1}, '+'}, {{0, 1, 2}, '-'}});
  Labelling l3 = make_labelling(d.flat, {{{0, 1}, '+'}, {{0, 2}, '-'}, {{0, 3}, '?'},
                                         {{0, 4}, '?'}, {{0, 5}, '?'},
                                         {{0, 1, 1}, '+'}, {{0, 1, 2}, '-'}});
  REQUIRE_FALSE(satisfies_s(d.flat, l1, {0, 1, 1}));  // - constrains +
  REQUIRE(satisfies_s(d.flat, l3, {0, 1, 1}));        // ? dominates +
  REQUIRE(satisfies_s(d.flat, l3, {0, 1, 2}));
}

TEST_CASE("star satisfaction on the duplication chain") {
  Fixture f("fig_f.json");
  Labelling std_lab = make_labelling(f.flat, {{{0, 1}, '+'}, {{0, 2}, '-'}, {{0, 3}, '+'},
                                              {{0, 4}, '-'}, {{0, 5}, '+'}, {{0, 6}, '-'}});
  REQUIRE_FALSE(satisfies_star(f.flat, std_lab, {0, 4}));  // a_8 and a_9 disagree
  REQUIRE_FALSE(satisfies_star(f.flat, std_lab, {0, 5}));
  REQUIRE(satisfies_star(f.flat, std_lab, {0, 1}));  // a_5 and a_7 agree
}

TEST_CASE("violation report: clean court case, dirty detail box") {
  Fixture a("fig_a.json");
  ConstraintSet all = constraint_set_from_names({"G", "S", "STAR"});
  REQUIRE(constraint_report(a.flat, fig_a_labelling(a.flat), all).empty());

  Fixture b("fig_b.json");
  Labelling std_lab = make_labelling(b.flat, {{{0, 1}, '-'}, {{0, 2}, '+'},
                                              {{0, 1, 1}, '+'}, {{0, 1, 2}, '+'},
                                              {{0, 2, 1}, '-'}, {{0, 2, 2}, '+'}});
  auto report = constraint_report(b.flat, std_lab, constraint_set_from_names({"G"}));
  REQUIRE(report.size() == 1);
  REQUIRE(report[0].kind == ConstraintKind::G);
  REQUIRE(b.flat.entries[static_cast<size_t>(report[0].entry)].pos == Position{0, 2});

  REQUIRE(constraint_report(b.flat, std_lab, ConstraintSet{}).empty());
}
