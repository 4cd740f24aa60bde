#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace blockarg;
using testsupport::DocBuilder;
using testsupport::load_fixture;

namespace {
Framework fig_a() { return validate(load_fixture("fig_a.json").doc); }
}  // namespace

TEST_CASE("validate accepts the court-case document") {
  Framework fw = fig_a();
  REQUIRE(fw.size() == 9);
  REQUIRE(fw.name(fw.root()) == "f");
  REQUIRE(fw.block(fw.index_of("f")).children.size() == 8);
}

TEST_CASE("validate accepts a single atom as root") {
  auto doc = DocBuilder{}.atom("a", "x").root("a").doc;
  Framework fw = validate(doc);
  REQUIRE(fw.is_atom(fw.root()));
}

TEST_CASE("validate rejects self-containment") {
  auto doc = DocBuilder{}.block("b", {"b"}).root("b").doc;
  REQUIRE_THROWS_MATCHES(validate(doc), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::CyclicDefinition;
                         }));
}

TEST_CASE("validate rejects longer reference cycles") {
  auto doc = DocBuilder{}.block("a", {"b"}).block("b", {"a"}).root("a").doc;
  REQUIRE_THROWS_MATCHES(validate(doc), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::CyclicDefinition;
                         }));
}

TEST_CASE("validate rejects dangling names, duplicate children and empty blocks") {
  auto dangling = DocBuilder{}.block("b", {"missing"}).root("b").doc;
  REQUIRE_THROWS_MATCHES(validate(dangling), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::DanglingName;
                         }));
  auto dup = DocBuilder{}.atom("a", "x").block("b", {"a", "a"}).root("b").doc;
  REQUIRE_THROWS_MATCHES(validate(dup), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::DuplicateChild;
                         }));
  auto empty = DocBuilder{}.block("b", {}).root("b").doc;
  REQUIRE_THROWS_MATCHES(validate(empty), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::EmptyBlock;
                         }));
  auto bad_edge =
      DocBuilder{}.atom("a", "x").atom("c", "y").block("b", {"a"}, {{"a", "c"}}).root("b").doc;
  REQUIRE_THROWS_MATCHES(validate(bad_edge), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::InvalidEdge;
                         }));
  auto no_root = DocBuilder{}.atom("a", "x").root("zz").doc;
  REQUIRE_THROWS_MATCHES(validate(no_root), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                           return e.code() == ErrorCode::DanglingName;
                         }));
}

TEST_CASE("eq: reflexive on a block, distinct atoms differ") {
  Framework fw = fig_a();
  int a6 = fw.index_of("a_6"), a7 = fw.index_of("a_7");
  REQUIRE(fw.eq(a6, a6));
  REQUIRE_FALSE(fw.eq(fw.index_of("a_1"), fw.index_of("a_2")));
  // support block vs attack block over overlapping children
  REQUIRE_FALSE(fw.eq(a6, a7));
}

TEST_CASE("eq: bijection may permute children") {
  auto doc = DocBuilder{}
                 .atom("x", "i")
                 .atom("y", "j")
                 .block("p", {"x", "y"}, {{"x", "y"}})
                 .block("q", {"y", "x"}, {{"x", "y"}})
                 .block("r", {"x", "y"}, {{"y", "x"}})
                 .block("top", {"p", "q", "r"})
                 .root("top")
                 .doc;
  Framework fw = validate(doc);
  REQUIRE(fw.eq(fw.index_of("p"), fw.index_of("q")));
  REQUIRE_FALSE(fw.eq(fw.index_of("p"), fw.index_of("r")));
}

TEST_CASE("eq detects duplicate content across names") {
  Framework fw = validate(load_fixture("fig_f.json").doc);
  REQUIRE(fw.eq(fw.index_of("a_5"), fw.index_of("a_7")));
  REQUIRE(fw.eq(fw.index_of("a_8"), fw.index_of("a_9")));
  REQUIRE_FALSE(fw.eq(fw.index_of("a_5"), fw.index_of("a_8")));
}

TEST_CASE("sub-argumentation embeds the detail blocks of the court case") {
  Framework fw = fig_a();
  int f = fw.index_of("f");
  REQUIRE(fw.sub_argumentation(f, fw.index_of("a_6")));
  REQUIRE(fw.sub_argumentation(f, fw.index_of("a_7")));
  REQUIRE(fw.sub_argumentation(f, fw.index_of("a_8")));
  REQUIRE(fw.sub_argumentation(f, f));
  // a_8's members are a_6 and a_7, no match for a_7's atomic children
  REQUIRE_FALSE(fw.sub_argumentation(fw.index_of("a_8"), fw.index_of("a_7")));
}

TEST_CASE("sub-argumentation fails on a reversed edge") {
  auto loaded = load_fixture("fig_a.json");
  loaded.doc.definitions["rev"] =
      BlockDoc{{"a_2", "a_4"}, {{"a_2", "a_4"}}, {}};
  Framework fw = validate(loaded.doc);
  REQUIRE_FALSE(fw.sub_argumentation(fw.index_of("f"), fw.index_of("rev")));
}

TEST_CASE("properties: eq is an equivalence, eq implies mutual embedding") {
  std::mt19937_64 rng(20260809);
  for (int round = 0; round < 60; ++round) {
    Framework fw = validate(testsupport::random_doc(rng));
    const int n = fw.size();
    for (int a = 0; a < n; ++a) {
      REQUIRE(fw.eq(a, a));
      REQUIRE(fw.sub_argumentation(a, a));
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        REQUIRE(fw.eq(a, b) == fw.eq(b, a));
        if (fw.eq(a, b)) {
          REQUIRE(fw.sub_argumentation(a, b));
          REQUIRE(fw.sub_argumentation(b, a));
        }
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (fw.eq(a, b) && fw.eq(b, c)) REQUIRE(fw.eq(a, c));
  }
}

TEST_CASE("properties: sub-argumentation is transitive on the corpus") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 40; ++round) {
    Framework fw = validate(testsupport::random_doc(rng));
    const int n = fw.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (fw.sub_argumentation(a, b) && fw.sub_argumentation(b, c))
            REQUIRE(fw.sub_argumentation(a, c));
  }
}
