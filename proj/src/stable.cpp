#include "gproj/stable.hpp"

#include <algorithm>
#include <stdexcept>

#include "gproj/errors.hpp"

namespace gproj {

  namespace {

    long floor_div(long a, long b) {
      long q = a / b;
      return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
    }

    GradedObject at(Analysis const& an, std::size_t cls, long a, long b, long shift) {
      auto br = an.bracket(cls, a, b);
      if (br.zero || br.path.is_trivial()) {
        throw ConsistencyError("bracket [" + std::to_string(a) + "," + std::to_string(b)
                               + "] is not a perfect path");
      }
      return {br.path, static_cast<int>(shift)};
    }

    long len(Analysis const& an, std::size_t cls, long a, long b) {
      return static_cast<long>(an.bracket_length(cls, a, b));
    }

  }  // namespace

  std::string format(Analysis const& an, GradedObject const& x) {
    std::string s = an.format(x.path);
    if (x.shift != 0) {
      s += "(" + std::to_string(x.shift) + ")";
    }
    return s;
  }

  GradedHom graded_stable_hom(Analysis const& an, GradedObject const& src, GradedObject const& dst) {
    auto p = an.coordinate(src.path);
    auto q = an.coordinate(dst.path);
    if (p.cls != q.cls) {
      return {};
    }
    auto const& d  = an.decomposition(p.cls);
    long        n  = static_cast<long>(d.size);
    long        mc = static_cast<long>(d.m);
    long        k  = static_cast<long>(dst.shift) - src.shift;
    long        i = p.i, j = p.i + p.m - 1;
    long        i2 = q.i, j2 = q.i + q.m - 1;
    for (long alpha = floor_div(i2 - i, n); alpha <= floor_div(j2 - i, n) + 1; ++alpha) {
      long a = i + alpha * n, b = j + alpha * n;
      if (i2 <= a && a <= j2 && j2 <= b && b < i2 + mc && k == len(an, p.cls, i2, a - 1)) {
        return {1, an.bracket(p.cls, i2, b).path};
      }
    }
    return {};
  }

  UngradedHom ungraded_stable_hom(Analysis const& an, Path const& p, Path const& q) {
    UngradedHom out;
    for (int k = 0; k < static_cast<int>(q.length()); ++k) {
      auto h = graded_stable_hom(an, {p, 0}, {q, k});
      if (h.dimension > 0) {
        out.dimension += h.dimension;
        out.pieces.emplace_back(k, *h.witness);
      }
    }
    return out;
  }

  GradedObject suspend(Analysis const& an, GradedObject const& x, long power) {
    GradedObject y = x;
    auto const&  P = an.perfect();
    if (P.find(y.path) == nullptr) {
      throw std::invalid_argument("\"" + an.format(y.path) + "\" is not a perfect path");
    }
    for (; power > 0; --power) {
      Path const& p = P.find(y.path)->predecessor;
      y             = {p, y.shift + static_cast<int>(p.length())};
    }
    for (; power < 0; ++power) {
      int l = static_cast<int>(y.path.length());
      y     = {P.find(y.path)->successor, y.shift - l};
    }
    return y;
  }

  GradedObject suspend_closed_form(Analysis const& an, GradedObject const& x, long power) {
    auto        c  = an.coordinate(x.path);
    long        mc = static_cast<long>(an.decomposition(c.cls).m);
    long        t  = c.i - 1;
    long        i1 = c.m;
    std::size_t k  = c.cls;
    long        a, b, d;
    if (power % 2 != 0) {
      long m = floor_div(power - 1, 2);
      a      = i1 - (m + 1) * mc - m + t;
      b      = -m * (mc + 1) + t;
      d      = m >= 0 ? len(an, k, a, t) : -len(an, k, 1 + t, i1 - (m + 1) * (mc + 1) + t);
    } else {
      long m = power / 2;
      a      = -m * (mc + 1) + 1 + t;
      b      = i1 - m * (mc + 1) + t;
      d      = m >= 0 ? len(an, k, a, t) : -len(an, k, 1 + t, -m * (mc + 1) + t);
    }
    return at(an, k, a, b, x.shift + d);
  }

  GradedObject ar_translate(Analysis const& an, GradedObject const& x) {
    auto c = an.coordinate(x.path);
    return at(an, c.cls, c.i + 1, c.i + c.m, x.shift - len(an, c.cls, c.i, c.i));
  }

  GradedObject ar_translate_inverse(Analysis const& an, GradedObject const& x) {
    auto c = an.coordinate(x.path);
    return at(an, c.cls, c.i - 1, c.i + c.m - 2, x.shift + len(an, c.cls, c.i - 1, c.i - 1));
  }

  ARTriangle ar_triangle(Analysis const& an, GradedObject const& x) {
    auto        c     = an.coordinate(x.path);
    long        i     = c.i, m = c.m;
    long        mc    = static_cast<long>(an.decomposition(c.cls).m);
    int         lower = x.shift - static_cast<int>(len(an, c.cls, i, i));
    ARTriangle  tri;
    tri.left  = ar_translate(an, x);
    tri.right = x;
    tri.raw_middle.push_back(an.bracket(c.cls, i + 1, i + m - 1));
    tri.raw_middle.push_back(an.bracket(c.cls, i, i + m));
    auto const& inner = tri.raw_middle[0];
    auto const& outer = tri.raw_middle[1];
    if (!inner.path.is_trivial()) {
      tri.middle.push_back({inner.path, lower});
    }
    if (!outer.zero) {
      tri.middle.push_back({outer.path, x.shift});
    }
    if (inner.path.is_trivial() != (m == 1) || outer.zero != (m == mc)) {
      throw ConsistencyError("degenerate middle terms of the triangle ending at \""
                             + an.format(x.path) + "\" are misplaced");
    }
    tri.connecting = an.bracket(c.cls, i + m - mc, i + m - 1).path;
    return tri;
  }

  bool tau_periodicity_check(Analysis const& an, std::size_t cls, std::span<const GradedObject> sample) {
    auto const& d = an.decomposition(cls);
    for (auto const& x : sample) {
      GradedObject y = x;
      for (std::size_t k = 0; k < d.size; ++k) {
        y = ar_translate(an, y);
      }
      if (!(y == GradedObject{x.path, x.shift - static_cast<int>(d.length)})) {
        return false;
      }
    }
    return true;
  }

  namespace {

    long multiplicity(Analysis const& an, std::size_t cls, Grading grading) {
      auto const& d = an.decomposition(cls);
      if (grading == Grading::Standard) {
        return static_cast<long>(d.length);
      }
      long deg = an.algebra().degree(d.cycle);
      if (deg <= 0) {
        throw InputError("cycle \"" + an.format(d.cycle) + "\" has degree "
                         + std::to_string(deg) + " under the given arrow degrees; "
                         "a weighted classification needs every cycle degree > 0");
      }
      return deg;
    }

  }  // namespace

  std::vector<TiltingSummand> tilting_object(Analysis const& an, Grading grading) {
    std::vector<TiltingSummand> out;
    for (auto const& d : an.decompositions()) {
      long mult = multiplicity(an, d.cls, grading);
      for (long s = 0; s < mult; ++s) {
        for (long k = 1; k <= static_cast<long>(d.m); ++k) {
          out.push_back({d.cls, k, at(an, d.cls, 1, k, s)});
        }
      }
    }
    return out;
  }

  std::vector<EndomorphismBlock> end_algebra(Analysis const& an, Grading grading) {
    std::vector<EndomorphismBlock> out;
    for (auto const& d : an.decompositions()) {
      EndomorphismBlock blk{d.cls, d.m, multiplicity(an, d.cls, grading), {}, true, true};
      long              m = static_cast<long>(d.m);
      blk.entries.assign(d.m, std::vector<int>(d.m, 0));
      for (long r = 1; r <= m; ++r) {
        for (long c = 1; c <= m; ++c) {
          auto h = graded_stable_hom(an, at(an, d.cls, 1, c, 0), at(an, d.cls, 1, r, 0));
          blk.entries[r - 1][c - 1] = static_cast<int>(h.dimension);
          blk.upper_triangular =
              blk.upper_triangular && (h.dimension == (r <= c ? 1u : 0u));
        }
      }
      long copies = static_cast<long>(d.length);
      for (long s = 0; s < copies; ++s) {
        for (long s2 = 0; s2 < copies; ++s2) {
          if (s == s2) {
            continue;
          }
          for (long a = 1; a <= m; ++a) {
            for (long b = 1; b <= m; ++b) {
              if (graded_stable_hom(an, at(an, d.cls, 1, a, s), at(an, d.cls, 1, b, s2))
                      .dimension
                  != 0) {
                blk.copies_orthogonal = false;
              }
            }
          }
        }
      }
      out.push_back(std::move(blk));
    }
    return out;
  }

  std::size_t tilting_violations(Analysis const& an, std::size_t cls, long window) {
    auto const&               d = an.decomposition(cls);
    std::vector<GradedObject> summands;
    for (long s = 0; s < static_cast<long>(d.length); ++s) {
      for (long k = 1; k <= static_cast<long>(d.m); ++k) {
        summands.push_back(at(an, cls, 1, k, s));
      }
    }
    std::size_t bad = 0;
    for (long i = -window; i <= window; ++i) {
      if (i == 0) {
        continue;
      }
      for (auto const& y : summands) {
        auto sy = suspend(an, y, i);
        for (auto const& x : summands) {
          bad += graded_stable_hom(an, x, sy).dimension;
        }
      }
    }
    return bad;
  }

  ClassificationReport classify(Analysis const& an, Grading grading) {
    ClassificationReport rep{grading, an.cm_free(), {}, {}};
    for (auto const& d : an.decompositions()) {
      rep.classes.push_back({d.cls,
                             an.perfect().classes()[d.cls].cycle,
                             d.size,
                             d.length,
                             d.m,
                             multiplicity(an, d.cls, grading),
                             d.size,
                             d.m + 1});
    }
    if (grading == Grading::Weighted) {
      auto const& degs = an.algebra().arrow_degrees();
      if (std::find(degs.begin(), degs.end(), 0) != degs.end()) {
        rep.notes.push_back("some arrows have degree 0; positivity of the grading "
                            "is not verified");
      }
    }
    return rep;
  }

  std::size_t module_dimension(MonomialAlgebra const& alg, BracketPath const& b) {
    return b.zero ? 0 : alg.right_module_dimension(b.path);
  }

}  // namespace gproj
