// Acceptance criteria, one PASS/FAIL line each.

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fixtures.hpp"
#include "gproj/ar_quiver.hpp"
#include "gproj/oracle.hpp"
#include "gproj/stable.hpp"

using namespace gproj;

namespace {

  using Edge  = std::pair<std::string, std::string>;
  using Edges = std::set<Edge>;

  struct Outcome {
    bool        ok = true;
    std::string detail;
    void        expect(bool cond, std::string const& what) {
      if (!cond && ok) {
        ok     = false;
        detail = what;
      }
    }
  };

  //! "a123123" style label to "a1.a2.a3.a1.a2.a3".
  std::string dotted(std::string const& compact) {
    std::string out;
    for (std::size_t k = 1; k < compact.size(); ++k) {
      out += (k > 1 ? "." : "") + std::string("a") + compact[k];
    }
    return out;
  }

  Edges hasse_edges(Analysis const& an, HasseQuiver const& h) {
    Edges out;
    for (auto [q, p] : h.arrows) {
      out.emplace(an.format(h.vertices[q]), an.format(h.vertices[p]));
    }
    return out;
  }

  Outcome criterion_sequences(Analysis const& an) {
    Outcome o;
    o.expect(an.perfect().size() == 11, "perfect path count " + std::to_string(an.perfect().size()));
    std::vector<std::vector<std::string>> figure{
        {"a12", "a312312", "a3", "a123123"},
        {"a12312", "a312", "a3123", "a123"},
        {"a45", "a454545"},
        {"a4545"}};
    std::set<std::vector<std::string>> want, got;
    auto canon = [](std::vector<std::string> v) {
      auto best = v;
      for (std::size_t k = 0; k < v.size(); ++k) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        best = std::min(best, v);
      }
      return best;
    };
    for (auto& s : figure) {
      for (auto& p : s) {
        p = dotted(p);
      }
      want.insert(canon(s));
    }
    for (auto const& s : an.perfect().sequences()) {
      std::vector<std::string> v;
      for (auto const& p : s.members) {
        v.push_back(an.format(p));
      }
      got.insert(canon(v));
    }
    o.expect(got == want, "minimal perfect sequences differ");
    return o;
  }

  Outcome criterion_hasse(Analysis const& an) {
    Outcome o;
    auto    chain_edges = [](std::vector<std::vector<std::string>> const& chains) {
      Edges e;
      for (auto const& c : chains) {
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
          e.emplace(dotted(c[k]), dotted(c[k + 1]));
        }
      }
      return e;
    };
    Edges prec = chain_edges({{"a123123", "a12312", "a123", "a12"},
                              {"a312312", "a3123", "a312", "a3"},
                              {"a454545", "a4545", "a45"}});
    Edges leq  = chain_edges({{"a12", "a312", "a12312", "a312312"},
                              {"a3", "a123", "a3123", "a123123"},
                              {"a45", "a4545", "a454545"}});
    o.expect(hasse_edges(an, an.prec()) == prec, "prec Hasse arrows differ");
    o.expect(hasse_edges(an, an.leq()) == leq, "leq Hasse arrows differ");
    o.expect(an.prec().chains.size() == 3 && an.leq().chains.size() == 3,
             "component count is not 3");
    o.expect(an.prec().vertices.size() == 11 && an.leq().vertices.size() == 11,
             "vertex count is not 11");
    return o;
  }

  Outcome criterion_elementary(Analysis const& an) {
    Outcome o;
    auto    names = [&](std::vector<Path> const& ps) {
      std::set<std::string> s;
      for (auto const& p : ps) {
        s.insert(an.format(p));
      }
      return s;
    };
    o.expect(names(an.elementary().elementary)
                 == std::set<std::string>{dotted("a123123"), dotted("a312312"), dotted("a454545")},
             "elementary set differs");
    o.expect(names(an.elementary().coelementary)
                 == std::set<std::string>{dotted("a12"), dotted("a3"), dotted("a45")},
             "co-elementary set differs");
    std::multiset<std::tuple<std::size_t, std::size_t, std::size_t>> params;
    for (auto const& d : an.decompositions()) {
      params.emplace(d.size, d.length, d.m);
    }
    o.expect(params
                 == std::multiset<std::tuple<std::size_t, std::size_t, std::size_t>>{
                     {2, 3, 4}, {1, 2, 3}},
             "(|c|, l(c), m_c) differ");
    return o;
  }

  Outcome criterion_classify(Analysis const& an) {
    Outcome o;
    auto    rep = classify(an, Grading::Standard);
    std::multiset<std::pair<std::size_t, long>>        graded;
    std::multiset<std::pair<std::size_t, std::size_t>> ungraded;
    for (auto const& c : rep.classes) {
      graded.emplace(c.type_a, c.multiplicity);
      ungraded.emplace(c.nakayama_vertices, c.radical_exponent);
    }
    o.expect(!rep.cm_free, "reported CM-free");
    o.expect(graded == std::multiset<std::pair<std::size_t, long>>{{4, 3}, {3, 2}},
             "graded factors differ");
    o.expect(ungraded == std::multiset<std::pair<std::size_t, std::size_t>>{{2, 5}, {1, 4}},
             "ungraded factors differ");
    return o;
  }

  Outcome criterion_ar_quiver(Analysis const& an) {
    Outcome o;
    // Figure labels, r_1 = a12, r_2 = a3 and r'_1 = a45.
    std::map<std::string, std::string> label{
        {"[1,4]", "a123123"}, {"[1,3]", "a12312"}, {"[1,2]", "a123"},  {"r1", "a12"},
        {"[2,5]", "a312312"}, {"[2,4]", "a3123"},  {"[2,3]", "a312"},  {"r2", "a3"},
        {"[1,3]'", "a454545"}, {"[1,2]'", "a4545"}, {"r1'", "a45"}};
    std::vector<std::string> node{"",      "[1,4]",  "[1,3]",  "[1,2]", "r1",    "[2,5]", "[2,4]",
                                  "[2,3]", "r2",     "[1,4]",  "[1,3]", "[1,2]", "r1",    "[1,3]'",
                                  "[1,2]'", "r1'",   "[1,3]'", "[1,2]'", "r1'"};
    std::vector<std::pair<int, int>> arrows{{1, 2},   {2, 3},   {2, 5},   {3, 4},   {3, 6},
                                            {4, 7},   {5, 6},   {6, 7},   {6, 9},   {7, 8},
                                            {7, 10},  {8, 11},  {9, 10},  {10, 11}, {11, 12},
                                            {13, 14}, {14, 15}, {14, 16}, {15, 17}, {16, 17},
                                            {17, 18}};
    std::vector<std::pair<int, int>> dashed{{1, 5},   {5, 9},   {2, 6},   {6, 10},  {3, 7},
                                            {7, 11},  {4, 8},   {8, 12},  {13, 16}, {14, 17},
                                            {15, 18}};
    auto name = [&](int v) { return dotted(label.at(node[v])); };
    Edges want_arrows, want_tau;
    for (auto [a, b] : arrows) {
      want_arrows.emplace(name(a), name(b));
    }
    for (auto [a, b] : dashed) {
      want_tau.emplace(std::min(name(a), name(b)), std::max(name(a), name(b)));
    }

    auto  q = ungraded_ar_quiver(an);
    Edges got_arrows, got_tau;
    for (auto [a, b] : q.arrows) {
      got_arrows.emplace(an.format(q.vertices[a].path), an.format(q.vertices[b].path));
    }
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      if (!q.tau[v]) {
        o.expect(false, "tau undefined at a vertex");
        continue;
      }
      auto x = an.format(q.vertices[v].path), y = an.format(q.vertices[*q.tau[v]].path);
      got_tau.emplace(std::min(x, y), std::max(x, y));
    }
    o.expect(got_arrows == want_arrows, "arrow pattern differs from the figure");
    o.expect(got_tau == want_tau, "translation pairs differ from the figure");

    std::multiset<std::pair<std::size_t, std::size_t>> comps;
    for (auto [cls, period] : q.periods) {
      std::size_t n = 0;
      for (auto const& v : q.vertices) {
        n += v.cls == cls ? 1 : 0;
      }
      comps.emplace(n, period);
    }
    o.expect(comps == std::multiset<std::pair<std::size_t, std::size_t>>{{8, 2}, {3, 1}},
             "component sizes or periods differ");
    return o;
  }

  Outcome criterion_properties() {
    Outcome                             o;
    std::vector<MonomialAlgebra>        corpus = fixtures::named();
    for (char const* f : {"lambda_star", "a2", "loop3", "nakayama_2_2", "quadratic", "weighted"}) {
      corpus.push_back(load_algebra(std::string(GPROJ_FIXTURE_DIR "/") + f + ".json"));
    }
    auto random = oracle::random_algebras(20240611, 150);
    corpus.insert(corpus.end(), random.begin(), random.end());
    std::size_t checks = 0;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      Analysis an(corpus[k]);
      for (auto const& c : oracle::verify(an)) {
        ++checks;
        o.expect(c.passed, "algebra " + std::to_string(k) + ": " + c.name + " " + c.detail);
      }
    }
    o.expect(random.size() >= 100, "fewer than 100 random algebras");
    if (o.ok) {
      o.detail = std::to_string(corpus.size()) + " algebras, " + std::to_string(checks) + " checks";
    }
    return o;
  }

  Outcome criterion_nakayama() {
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
      for (int m = 1; m <= 4; ++m) {
        Analysis    an(fixtures::nakayama(n, m));
        std::string at = "N(" + std::to_string(n) + "," + std::to_string(m) + ")";
        std::size_t nontrivial = an.algebra().dimension() - an.algebra().quiver().vertex_count();
        o.expect(nontrivial == static_cast<std::size_t>(n * m), at + ": path count");
        o.expect(an.perfect().size() == nontrivial, at + ": not every path is perfect");
        o.expect(an.decompositions().size() == 1, at + ": class count");
        if (an.decompositions().size() != 1) {
          continue;
        }
        auto const& d = an.decomposition(0);
        o.expect(d.size == static_cast<std::size_t>(n) && d.m == static_cast<std::size_t>(m),
                 at + ": |c| or m_c");
        auto rep = classify(an, Grading::Standard);
        o.expect(rep.classes[0].nakayama_vertices == static_cast<std::size_t>(n)
                     && rep.classes[0].radical_exponent == static_cast<std::size_t>(m + 1),
                 at + ": ungraded classification");
      }
    }
    return o;
  }

  Outcome criterion_no_overlap() {
    Outcome  o;
    Analysis an(load_algebra(GPROJ_FIXTURE_DIR "/quadratic.json"));
    auto     P = an.perfect().paths();
    o.expect(!P.empty(), "fixture is CM-free");

    bool no_overlap = true;
    for (auto const& p : P) {
      for (auto const& q : P) {
        no_overlap = no_overlap && detect_overlap(an.algebra(), p, q).kind == OverlapKind::None;
      }
    }
    auto sorted = [](std::vector<Path> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    bool all_elementary = sorted(an.elementary().elementary) == P
                          && sorted(an.elementary().coelementary) == P;
    bool isolated = an.prec().arrows.empty() && an.leq().arrows.empty();
    o.expect(no_overlap == all_elementary && all_elementary == isolated,
             "the three conditions disagree");
    o.expect(no_overlap, "quadratic fixture has an overlap");
    for (auto const& d : an.decompositions()) {
      o.expect(d.m == 1, "m_c != 1");
    }
    for (auto const& c : classify(an, Grading::Standard).classes) {
      o.expect(c.type_a == 1, "graded factor is not A_1");
    }
    return o;
  }

}  // namespace

int main() {
  Analysis star(load_algebra(GPROJ_FIXTURE_DIR "/lambda_star.json"));

  std::vector<std::pair<std::string, Outcome>> rows{
      {"perfect paths and minimal sequences", criterion_sequences(star)},
      {"Hasse quivers of both orders", criterion_hasse(star)},
      {"elementary sets and cycle parameters", criterion_elementary(star)},
      {"graded and ungraded classification", criterion_classify(star)},
      {"ungraded AR quiver", criterion_ar_quiver(star)},
      {"property suite", criterion_properties()},
      {"Nakayama regression", criterion_nakayama()},
      {"no-overlap class", criterion_no_overlap()}};

  int failed = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto const& [title, out] = rows[k];
    std::printf("%s %zu %s%s%s\n", out.ok ? "PASS" : "FAIL", k + 1, title.c_str(),
                out.detail.empty() ? "" : ": ", out.detail.c_str());
    failed += out.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
