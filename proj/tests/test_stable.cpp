#include <string>
#include <vector>

#include "doctest.h"

#include "fixtures.hpp"
#include "gproj/errors.hpp"
#include "gproj/oracle.hpp"
#include "gproj/stable.hpp"

using namespace gproj;

namespace {

  GradedObject obj(Analysis const& an, char const* p, int shift = 0) {
    return {an.algebra().parse_path(p), shift};
  }

}  // namespace

TEST_CASE("graded hom on the running example") {
  Analysis an(fixtures::lambda_star());
  auto     h = graded_stable_hom(an, obj(an, "a1.a2.a3"), obj(an, "a1.a2.a3.a1.a2", 3));
  CHECK(h.dimension == 1);
  CHECK(an.format(*h.witness) == "a1.a2.a3.a1.a2.a3");

  auto g = graded_stable_hom(an, obj(an, "a1.a2.a3.a1.a2"), obj(an, "a1.a2.a3"));
  CHECK(g.dimension == 1);
  CHECK(an.format(*g.witness) == "a1.a2.a3.a1.a2");

  CHECK(graded_stable_hom(an, obj(an, "a1.a2.a3"), obj(an, "a1.a2.a3.a1.a2", 2)).dimension == 0);
  CHECK(graded_stable_hom(an, obj(an, "a4.a5"), obj(an, "a1.a2.a3")).dimension == 0);
  CHECK_THROWS_AS(graded_stable_hom(an, obj(an, "a1"), obj(an, "a3")), std::invalid_argument);
}

TEST_CASE("graded hom agrees with the brute-force quotient") {
  for (auto const& alg : fixtures::named()) {
    Analysis an(alg);
    auto     P = an.perfect().paths();
    for (auto const& p : P) {
      for (auto const& q : P) {
        for (int k = -static_cast<int>(alg.nilpotency_bound());
             k <= static_cast<int>(alg.nilpotency_bound()); ++k) {
          auto fast = graded_stable_hom(an, {p, 0}, {q, k});
          auto slow = oracle::bf_stable_hom(alg, p, q, k);
          CHECK(fast.dimension == slow.dimension);
        }
      }
    }
  }
}

TEST_CASE("ungraded hom") {
  Analysis an(fixtures::lambda_star());
  auto     a123 = an.algebra().parse_path("a1.a2.a3");
  auto     h    = ungraded_stable_hom(an, a123, a123);
  CHECK(h.dimension == 1);
  CHECK(ungraded_stable_hom(an, an.algebra().parse_path("a4.a5"), a123).dimension == 0);

  auto a3 = an.algebra().parse_path("a3"), a312 = an.algebra().parse_path("a3.a1.a2");
  CHECK(detect_overlap(an.algebra(), a3, a312).kind == OverlapKind::O2);
  CHECK(ungraded_stable_hom(an, a3, a312).dimension == 0);
  CHECK(ungraded_stable_hom(an, a312, a3).dimension == 1);
  CHECK(oracle::bf_stable_hom(an.algebra(), a312, a3).size() == 1);
}

TEST_CASE("suspension") {
  Analysis an(fixtures::lambda_star());
  CHECK(suspend(an, obj(an, "a3.a1.a2.a3.a1.a2"), 1) == obj(an, "a1.a2", 2));
  CHECK(suspend(an, obj(an, "a1.a2", 2), -1) == obj(an, "a3.a1.a2.a3.a1.a2"));
  for (auto const& p : an.perfect().paths()) {
    for (long k = -6; k <= 6; ++k) {
      CHECK(suspend_closed_form(an, {p, 1}, k) == suspend(an, {p, 1}, k));
    }
  }
  CHECK_THROWS_AS(suspend(an, obj(an, "a1"), 1), std::invalid_argument);

  Analysis sq(fixtures::loop(1));
  CHECK(suspend(sq, obj(sq, "x"), 1) == obj(sq, "x", 1));
}

TEST_CASE("AR translation") {
  Analysis an(fixtures::lambda_star());
  CHECK(ar_translate(an, obj(an, "a1.a2.a3")) == obj(an, "a3.a1.a2", -2));
  CHECK(ar_translate(an, ar_translate(an, obj(an, "a1.a2.a3"))) == obj(an, "a1.a2.a3", -3));
  CHECK(ar_translate_inverse(an, obj(an, "a3.a1.a2", -2)) == obj(an, "a1.a2.a3"));
  CHECK(ar_translate(an, obj(an, "a4.a5")) == obj(an, "a4.a5", -2));
  for (std::size_t c = 0; c < 2; ++c) {
    std::vector<GradedObject> sample;
    for (auto const& p : an.perfect().classes()[c].members) {
      sample.push_back({p, 5});
    }
    CHECK(tau_periodicity_check(an, c, sample));
  }
}

TEST_CASE("AR triangles") {
  Analysis an(fixtures::lambda_star());
  auto     t = ar_triangle(an, obj(an, "a1.a2.a3"));
  CHECK(t.left == obj(an, "a3.a1.a2", -2));
  REQUIRE(t.middle.size() == 2);
  CHECK(t.middle[0] == obj(an, "a3", -2));
  CHECK(t.middle[1] == obj(an, "a1.a2.a3.a1.a2"));
  CHECK(an.format(t.connecting) == "a1.a2.a3.a1.a2.a3");

  auto top = ar_triangle(an, obj(an, "a1.a2.a3.a1.a2.a3"));
  CHECK(top.middle.size() == 1);
  auto bottom = ar_triangle(an, obj(an, "a1.a2"));
  CHECK(bottom.middle.size() == 1);
  CHECK(bottom.raw_middle[0].path.is_trivial());

  Analysis sq(fixtures::loop(1));
  CHECK(ar_triangle(sq, obj(sq, "x")).middle.empty());
}

TEST_CASE("tilting object and endomorphisms") {
  Analysis an(fixtures::lambda_star());
  auto     T = tilting_object(an, Grading::Standard);
  CHECK(T.size() == 18);
  auto blocks = end_algebra(an, Grading::Standard);
  REQUIRE(blocks.size() == 2);
  auto const& b = blocks[1];
  CHECK(b.size == 4);
  CHECK(b.multiplicity == 3);
  CHECK(b.upper_triangular);
  CHECK(b.copies_orthogonal);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      CHECK(b.entries[r][c] == (r <= c ? 1 : 0));
    }
  }
  for (std::size_t c = 0; c < 2; ++c) {
    CHECK(tilting_violations(an, c, static_cast<long>(an.decomposition(c).m) + 1) == 0);
    CHECK(tilting_violations(an, c, 4) == 0);
  }
}

TEST_CASE("classification") {
  Analysis an(fixtures::lambda_star());
  auto     rep = classify(an, Grading::Standard);
  CHECK_FALSE(rep.cm_free);
  REQUIRE(rep.classes.size() == 2);
  CHECK(rep.classes[0].type_a == 3);
  CHECK(rep.classes[0].multiplicity == 2);
  CHECK(rep.classes[0].nakayama_vertices == 1);
  CHECK(rep.classes[0].radical_exponent == 4);
  CHECK(rep.classes[1].type_a == 4);
  CHECK(rep.classes[1].multiplicity == 3);
  CHECK(rep.classes[1].nakayama_vertices == 2);
  CHECK(rep.classes[1].radical_exponent == 5);

  CHECK(classify(Analysis(fixtures::a2()), Grading::Standard).cm_free);
}

TEST_CASE("weighted classification") {
  Analysis an(load_algebra(GPROJ_FIXTURE_DIR "/weighted.json"));
  auto     rep = classify(an, Grading::Weighted);
  REQUIRE(rep.classes.size() == 2);
  CHECK(rep.classes[0].multiplicity == 4);
  CHECK(rep.classes[1].multiplicity == 3);
  CHECK(rep.notes.size() == 1);
  CHECK(tilting_object(an, Grading::Weighted).size() == 4 * 3 + 3 * 4);

  auto flat = fixtures::lambda_star();
  Analysis zero(MonomialAlgebra(flat.quiver(), flat.relations(), {1, 1, 1, 1, 0, 0}));
  CHECK_THROWS_AS(classify(zero, Grading::Weighted), InputError);
}

TEST_CASE("module dimensions") {
  Analysis an(fixtures::lambda_star());
  CHECK(module_dimension(an.algebra(), an.bracket(1, 1, 5)) == 0);
  for (auto const& r : an.perfect().records()) {
    std::size_t sum = an.algebra().right_module_dimension(r.path)
                      + an.algebra().right_module_dimension(r.successor);
    CHECK(sum == an.algebra().right_module_dimension(Path::trivial(r.path.target())));
  }
}
