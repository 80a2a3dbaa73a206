#include <set>
#include <string>
#include <utility>

#include "doctest.h"

#include "fixtures.hpp"
#include "gproj/ar_quiver.hpp"
#include "json.hpp"

using namespace gproj;

TEST_CASE("ungraded AR quiver of the running example") {
  Analysis an(fixtures::lambda_star());
  auto     q = ungraded_ar_quiver(an);
  CHECK(q.vertices.size() == 11);
  CHECK(q.arrows.size() == 12 + 4);
  std::set<std::pair<std::size_t, std::size_t>> periods(q.periods.begin(), q.periods.end());
  CHECK(periods == std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});

  auto one = ungraded_ar_quiver(an, 1);
  CHECK(one.vertices.size() == 8);
  auto a123 = one.index_of(an.algebra().parse_path("a1.a2.a3"));
  auto a312 = one.index_of(an.algebra().parse_path("a3.a1.a2"));
  REQUIRE(a123);
  REQUIRE(a312);
  CHECK(one.tau[*a123] == a312);
}

TEST_CASE("graded window") {
  Analysis an(fixtures::lambda_star());
  auto     w = graded_ar_window(an, 0, -2, 2);
  CHECK(w.graded);
  CHECK(w.vertices.size() == 15);
  bool some_complete = false, some_incomplete = false;
  for (auto const& v : w.vertices) {
    (v.incomplete ? some_incomplete : some_complete) = true;
  }
  CHECK(some_complete);
  CHECK(some_incomplete);
  CHECK_THROWS_AS(graded_ar_window(an, 0, 1, 0), std::invalid_argument);

  Analysis sq(fixtures::loop(1));
  auto     single = graded_ar_window(sq, 0, 0, 0);
  REQUIRE(single.vertices.size() == 1);
  CHECK(single.vertices[0].incomplete);
}

TEST_CASE("emitters") {
  Analysis an(fixtures::lambda_star());
  auto     q   = ungraded_ar_quiver(an, 0);
  auto     dot = emit_dot(an, q);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("dashed") == std::string::npos);
  CHECK(emit_dot(an, ungraded_ar_quiver(an, 1)).find("dashed") != std::string::npos);

  auto js = nlohmann::json::parse(emit_json(an, q));
  CHECK(js.contains("vertices"));
  CHECK(js["vertices"].size() == 3);

  auto hs = nlohmann::json::parse(emit_json(an, an.prec()));
  CHECK(hs["vertices"].size() == 11);
  CHECK(emit_dot(an, an.leq()).find("->") != std::string::npos);
}
