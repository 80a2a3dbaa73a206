#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "fixtures.hpp"
#include "gproj/oracle.hpp"
#include "gproj/perfect.hpp"

using namespace gproj;

namespace {

  std::vector<std::string> names(MonomialAlgebra const& alg, std::vector<Path> const& ps) {
    std::vector<std::string> out;
    for (auto const& p : ps) {
      out.push_back(alg.format(p));
    }
    return out;
  }

  std::string compact(MonomialAlgebra const& alg, Path const& p) {
    std::string s = alg.format(p), out;
    for (char ch : s) {
      if (ch != '.') {
        out += ch;
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("annihilators") {
  auto alg = fixtures::lambda_star();
  CHECK(names(alg, right_annihilators(alg, alg.parse_path("a1.a2")))
        == std::vector<std::string>{"a3.a1.a2.a3.a1.a2"});
  CHECK(right_annihilators(alg, alg.parse_path("b2")).empty());
  CHECK(names(alg, left_annihilators(alg, alg.parse_path("a3")))
        == std::vector<std::string>{"a3.a1.a2.a3.a1.a2"});
  CHECK_THROWS_AS(right_annihilators(alg, Path::trivial(0)), std::invalid_argument);
  for (auto const& p : alg.basis()) {
    if (p.is_trivial()) {
      continue;
    }
    CHECK(right_annihilators(alg, p) == oracle::bf_right_annihilators(alg, p));
    CHECK(left_annihilators(alg, p) == oracle::bf_left_annihilators(alg, p));
  }
}

TEST_CASE("perfect paths of the running example") {
  auto alg = fixtures::lambda_star();
  auto P   = enumerate_perfect_paths(alg);
  CHECK(P.size() == 11);
  CHECK(P.paths() == oracle::bf_perfect_paths(alg));

  std::set<std::vector<std::string>> seqs;
  for (auto const& s : P.sequences()) {
    std::vector<std::string> v;
    for (auto const& p : s.members) {
      v.push_back(compact(alg, p));
    }
    seqs.insert(v);
  }
  std::set<std::vector<std::string>> expected{
      {"a3", "a1a2a3a1a2a3", "a1a2", "a3a1a2a3a1a2"},
      {"a4a5", "a4a5a4a5a4a5"},
      {"a1a2a3", "a1a2a3a1a2", "a3a1a2", "a3a1a2a3"},
      {"a4a5a4a5"}};
  CHECK(seqs == expected);

  REQUIRE(P.classes().size() == 2);
  CHECK(alg.format(P.classes()[0].cycle) == "a4.a5");
  CHECK(alg.format(P.classes()[1].cycle) == "a1.a2.a3");
  CHECK(P.classes()[0].members.size() == 3);
  CHECK(P.classes()[1].members.size() == 8);

  auto const* rec = P.find(alg.parse_path("a1.a2.a3"));
  REQUIRE(rec != nullptr);
  CHECK(alg.format(rec->successor) == "a1.a2.a3.a1.a2");
  CHECK(alg.format(rec->predecessor) == "a3.a1.a2.a3");
  CHECK(is_perfect_pair(alg, alg.parse_path("a4.a5.a4.a5"), alg.parse_path("a4.a5.a4.a5")));
  CHECK_FALSE(is_perfect_pair(alg, alg.parse_path("a1"), alg.parse_path("a2")));
}

TEST_CASE("perfect pairs agree with the literal conditions") {
  for (auto const& alg : fixtures::named()) {
    auto P = enumerate_perfect_paths(alg);
    for (auto const& r : P.records()) {
      CHECK(oracle::bf_verify_perfect(alg, r.path, r.successor));
      CHECK(alg.is_relation(concat(r.path, r.successor)));
    }
  }
}

TEST_CASE("cm-free fixtures") {
  CHECK(enumerate_perfect_paths(fixtures::a2()).empty());
  auto alg = fixtures::build({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}, {"a.b"});
  CHECK(enumerate_perfect_paths(alg).empty());
}

TEST_CASE("loop algebras") {
  for (int m = 1; m <= 4; ++m) {
    auto alg = fixtures::loop(m);
    auto P   = enumerate_perfect_paths(alg);
    CHECK(P.size() == static_cast<std::size_t>(m));
    CHECK(P.classes().size() == 1);
  }
  auto alg = fixtures::loop(2);
  auto P   = enumerate_perfect_paths(alg);
  CHECK(alg.format(P.find(alg.parse_path("x"))->successor) == "x.x");
}

TEST_CASE("rotations") {
  std::vector<ArrowIndex> w{2, 0, 1, 0, 1};
  CHECK(least_rotation(w) == oracle::bf_least_rotation(w));
  CHECK(least_rotation(w) == 1);
  std::vector<ArrowIndex> same{3, 3, 3};
  CHECK(least_rotation(same) == 0);

  auto alg = fixtures::lambda_star();
  CHECK(alg.format(primitive_root(alg.quiver(), alg.parse_path("a4.a5.a4.a5.a4.a5"))) == "a4.a5");
  CHECK(alg.format(canonical_rotation(alg.quiver(), alg.parse_path("a3.a1.a2"))) == "a1.a2.a3");
}

TEST_CASE("overlaps") {
  auto alg = fixtures::lambda_star();
  auto ov  = detect_overlap(alg, alg.parse_path("a1.a2.a3.a1.a2"), alg.parse_path("a3.a1.a2"));
  CHECK(ov.kind == OverlapKind::O2);
  CHECK(alg.format(*ov.left_rest) == "a1.a2");
  CHECK(alg.format(*ov.shared) == "a3.a1.a2");
  CHECK(ov.right_rest->is_trivial());

  auto loop = fixtures::loop(3);
  auto x2   = loop.parse_path("x.x");
  auto o1   = detect_overlap(loop, x2, x2);
  CHECK(o1.kind == OverlapKind::O1);
  CHECK(loop.format(*o1.shared) == "x");
  CHECK(detect_overlap(loop, loop.parse_path("x"), loop.parse_path("x")).kind == OverlapKind::None);

  CHECK(detect_overlap(alg, alg.parse_path("a4.a5"), alg.parse_path("a1.a2")).kind
        == OverlapKind::None);
  CHECK(std::string(to_string(OverlapKind::O2)) == "O2");
}
