#ifndef GPROJ_TESTS_FIXTURES_HPP_
#define GPROJ_TESTS_FIXTURES_HPP_

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gproj/algebra.hpp"
#include "gproj/analysis.hpp"

namespace fixtures {

  using ArrowDef = std::tuple<std::string, std::string, std::string>;

  inline gproj::MonomialAlgebra build(std::vector<std::string> const& vertices,
                                      std::vector<ArrowDef> const&   arrows,
                                      std::vector<std::string> const& relations,
                                      std::vector<int>                degrees = {}) {
    std::vector<gproj::Arrow> as;
    auto                      vid = [&](std::string const& v) {
      return static_cast<gproj::VertexIndex>(
          std::find(vertices.begin(), vertices.end(), v) - vertices.begin());
    };
    for (auto const& [id, s, t] : arrows) {
      as.push_back({id, vid(s), vid(t)});
    }
    gproj::Quiver           q(vertices, as);
    std::vector<gproj::Path> rels;
    for (auto const& r : relations) {
      rels.push_back(q.parse_path(r));
    }
    return gproj::MonomialAlgebra(q, rels, degrees);
  }

  inline gproj::MonomialAlgebra lambda_star() {
    return build({"1", "2", "3", "4", "5"},
                 {{"a1", "1", "2"},
                  {"a2", "2", "3"},
                  {"a3", "3", "1"},
                  {"b2", "2", "4"},
                  {"a4", "4", "5"},
                  {"a5", "5", "4"}},
                 {"a1.a2.a3.a1.a2.a3.a1.a2", "a3.a1.a2.a3.a1.a2.a3", "a4.a5.a4.a5.a4.a5.a4.a5"});
  }

  //! One loop x with x^{m+1} = 0.
  inline gproj::MonomialAlgebra loop(int m) {
    std::string rel = "x";
    for (int i = 0; i < m; ++i) {
      rel += ".x";
    }
    return build({"1"}, {{"x", "1", "1"}}, {rel});
  }

  //! Cyclic quiver on n vertices, every path of length m+1 is zero.
  inline gproj::MonomialAlgebra nakayama(int n, int m) {
    std::vector<std::string> vs;
    std::vector<ArrowDef>   as;
    for (int i = 1; i <= n; ++i) {
      vs.push_back(std::to_string(i));
    }
    for (int i = 1; i <= n; ++i) {
      as.emplace_back("c" + std::to_string(i), std::to_string(i), std::to_string(i % n + 1));
    }
    std::vector<std::string> rels;
    for (int s = 0; s < n; ++s) {
      std::string r;
      for (int k = 0; k <= m; ++k) {
        r += (k ? "." : "") + std::string("c") + std::to_string((s + k) % n + 1);
      }
      rels.push_back(r);
    }
    return build(vs, as, rels);
  }

  inline gproj::MonomialAlgebra a2() {
    return build({"1", "2"}, {{"a", "1", "2"}}, {});
  }

  //! Quadratic monomial algebra with classes {ab} and {y}.
  inline gproj::MonomialAlgebra quadratic() {
    return build({"1", "2", "3"},
                 {{"a", "1", "2"}, {"b", "2", "1"}, {"c", "1", "3"}, {"y", "3", "3"}},
                 {"a.b", "b.a", "y.y"});
  }

  //! Single cycle of length k cut into random factors r_1..r_n with the
  //! relations r_i ... r_{i+m}.
  inline gproj::MonomialAlgebra planted_cycle(std::mt19937_64& rng, int k, int m) {
    std::vector<std::string> vs;
    std::vector<ArrowDef>   as;
    for (int i = 1; i <= k; ++i) {
      vs.push_back(std::to_string(i));
      as.emplace_back("c" + std::to_string(i), std::to_string(i), std::to_string(i % k + 1));
    }
    std::vector<int> cuts{0};
    for (int i = 1; i < k; ++i) {
      if (rng() % 2) {
        cuts.push_back(i);
      }
    }
    int                      n = static_cast<int>(cuts.size());
    std::vector<std::string> rels;
    for (int f = 0; f < n; ++f) {
      int         end = cuts[(f + m + 1) % n] + ((f + m + 1) / n) * k;
      std::string r;
      for (int pos = cuts[f]; pos < end; ++pos) {
        r += (r.empty() ? "" : ".") + std::string("c") + std::to_string(pos % k + 1);
      }
      rels.push_back(r);
    }
    return build(vs, as, rels);
  }

  inline std::vector<gproj::MonomialAlgebra> named() {
    std::vector<gproj::MonomialAlgebra> out{lambda_star(), a2(), quadratic()};
    for (int m = 1; m <= 4; ++m) {
      out.push_back(loop(m));
    }
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 4; ++m) {
        out.push_back(nakayama(n, m));
      }
    }
    return out;
  }

  inline gproj::Path P(gproj::MonomialAlgebra const& alg, std::string const& s) {
    return alg.parse_path(s);
  }

  inline gproj::Path P(gproj::Analysis const& an, std::string const& s) {
    return an.algebra().parse_path(s);
  }

}  // namespace fixtures

#endif  // GPROJ_TESTS_FIXTURES_HPP_
