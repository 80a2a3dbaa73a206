#include "gproj/order.hpp"

#include <algorithm>

#include "gproj/errors.hpp"

namespace gproj {

  Comparison order_compare(Quiver const& quiver, Path const& p, Path const& q, Order order) {
    if (p == q) {
      return Comparison::Equal;
    }
    auto pq = relate(quiver, p, q);
    auto qp = relate(quiver, q, p);
    if (order == Order::LeftDivisor) {
      if (pq.is_left_divisor) {
        return Comparison::Less;
      }
      if (qp.is_left_divisor) {
        return Comparison::Greater;
      }
    } else {
      if (qp.is_right_divisor) {
        return Comparison::Less;
      }
      if (pq.is_right_divisor) {
        return Comparison::Greater;
      }
    }
    return Comparison::Incomparable;
  }

  char const* to_string(Comparison c) {
    switch (c) {
      case Comparison::Equal:
        return "equal";
      case Comparison::Less:
        return "less";
      case Comparison::Greater:
        return "greater";
      default:
        return "incomparable";
    }
  }

  char const* to_string(Order o) {
    return o == Order::LeftDivisor ? "prec" : "leq";
  }

  std::optional<std::size_t> HasseQuiver::index_of(Path const& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || !(*it == p)) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - vertices.begin());
  }

  HasseQuiver hasse_quiver(Quiver const& quiver, PerfectPathSet const& perfect, Order order) {
    HasseQuiver h{order, perfect.paths(), {}, {}, {}, {}};
    std::size_t n = h.vertices.size();
    h.in.assign(n, std::nullopt);
    h.out.assign(n, std::nullopt);

    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        less[a][b] = order_compare(quiver, h.vertices[a], h.vertices[b], order)
                     == Comparison::Less;
      }
    }
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t p = 0; p < n; ++p) {
        if (!less[p][q]) {
          continue;
        }
        bool covered = true;
        for (std::size_t r = 0; r < n && covered; ++r) {
          covered = !(less[p][r] && less[r][q]);
        }
        if (!covered) {
          continue;
        }
        if (h.out[q] || h.in[p]) {
          throw ConsistencyError("Hasse quiver of " + std::string(to_string(order))
                                 + " is not of type A at \"" + quiver.format(h.vertices[q])
                                 + "\" -> \"" + quiver.format(h.vertices[p]) + "\"");
        }
        h.out[q] = p;
        h.in[p]  = q;
        h.arrows.emplace_back(q, p);
      }
    }
    std::sort(h.arrows.begin(), h.arrows.end());
    for (std::size_t v = 0; v < n; ++v) {
      if (h.in[v]) {
        continue;
      }
      std::vector<std::size_t> chain{v};
      while (h.out[chain.back()]) {
        chain.push_back(*h.out[chain.back()]);
      }
      h.chains.push_back(std::move(chain));
    }
    return h;
  }

  ElementarySets classify_elementary(HasseQuiver const& prec, HasseQuiver const& leq) {
    ElementarySets sets;
    for (std::size_t v = 0; v < prec.vertices.size(); ++v) {
      bool source = !prec.in[v], sink = !prec.out[v];
      auto w      = leq.index_of(prec.vertices[v]);
      if (!w || source != !leq.out[*w] || sink != !leq.in[*w]) {
        throw ConsistencyError("elementary classification disagrees between the "
                               "two Hasse quivers");
      }
      if (source) {
        sets.elementary.push_back(prec.vertices[v]);
      }
      if (sink) {
        sets.coelementary.push_back(prec.vertices[v]);
      }
    }
    return sets;
  }

  std::optional<std::vector<Path>> split_word(Quiver const&               quiver,
                                              std::vector<Path> const&    coelementary,
                                              std::span<const ArrowIndex> word) {
    std::vector<Path> factors;
    std::size_t       pos = 0;
    while (pos < word.size()) {
      Path const* hit = nullptr;
      for (auto const& r : coelementary) {
        if (!r.is_trivial() && occurs_at(word, r.arrows(), pos)) {
          if (hit != nullptr) {
            throw ConsistencyError("co-elementary paths \"" + quiver.format(*hit)
                                   + "\" and \"" + quiver.format(r)
                                   + "\" are comparable under left division");
          }
          hit = &r;
        }
      }
      if (hit == nullptr) {
        return std::nullopt;
      }
      factors.push_back(*hit);
      pos += hit->length();
    }
    return factors;
  }

  std::vector<Path> coelementary_factorization(Quiver const&            quiver,
                                               std::vector<Path> const& coelementary,
                                               Path const&              p) {
    auto f = split_word(quiver, coelementary, p.arrows());
    if (!f || f->empty()) {
      throw ConsistencyError("\"" + quiver.format(p)
                             + "\" has no factorization into co-elementary paths");
    }
    return *f;
  }

  std::size_t wrap_index(CycleDecomposition const& d, long i) {
    long n = static_cast<long>(d.size);
    return static_cast<std::size_t>(((i - 1) % n + n) % n) + 1;
  }

  std::size_t bracket_length(CycleDecomposition const& d, long i, long j) {
    if (i > j) {
      return 0;
    }
    long        n     = static_cast<long>(d.size);
    long        count = j - i + 1;
    std::size_t total = static_cast<std::size_t>(count / n) * d.length;
    for (long k = 0; k < count % n; ++k) {
      total += d.factors[wrap_index(d, i + k) - 1].length();
    }
    return total;
  }

  BracketPath bracket(MonomialAlgebra const& alg, CycleDecomposition const& d, long i, long j) {
    Path const& first = d.factors[wrap_index(d, i) - 1];
    if (i > j) {
      Path e = Path::trivial(first.source());
      return {d.cls, i, j, e, false};
    }
    std::vector<ArrowIndex> arrows;
    for (long k = i; k <= j; ++k) {
      auto const& r = d.factors[wrap_index(d, k) - 1];
      arrows.insert(arrows.end(), r.arrows().begin(), r.arrows().end());
    }
    Path p = alg.quiver().make_path(arrows);
    bool z = !alg.is_nonzero(p);
    return {d.cls, i, j, std::move(p), z};
  }

  CycleDecomposition decompose_cycle(MonomialAlgebra const&   alg,
                                     PerfectPathSet const&    perfect,
                                     HasseQuiver const&       prec,
                                     std::vector<Path> const& coelementary,
                                     std::size_t              cls) {
    Quiver const& quiver = alg.quiver();
    auto const&   klass  = perfect.classes().at(cls);
    Path const&   c      = klass.cycle;

    std::vector<Path> local;
    for (auto const& r : coelementary) {
      if (std::binary_search(klass.members.begin(), klass.members.end(), r)) {
        local.push_back(r);
      }
    }

    std::optional<std::vector<Path>>       best;
    std::optional<std::vector<ArrowIndex>> best_word;
    for (std::size_t k = 0; k < c.length(); ++k) {
      std::vector<ArrowIndex> word;
      for (std::size_t i = 0; i < c.length(); ++i) {
        word.push_back(c[(k + i) % c.length()]);
      }
      auto f = split_word(quiver, local, word);
      if (f && (!best || word < *best_word || (word == *best_word && *f < *best))) {
        best      = std::move(f);
        best_word = std::move(word);
      }
    }
    if (!best) {
      throw ConsistencyError("cycle \"" + quiver.format(c)
                             + "\" does not split into co-elementary paths");
    }

    CycleDecomposition d;
    d.cls     = cls;
    d.cycle   = quiver.make_path(*best_word);
    d.factors = std::move(*best);
    d.size    = d.factors.size();
    d.length  = c.length();
    d.m       = 0;
    for (auto const& p : prec.vertices) {
      if (relate(quiver, d.factors.front(), p).is_left_divisor) {
        ++d.m;
      }
    }

    long n = static_cast<long>(d.size), m = static_cast<long>(d.m);
    for (long i = 1; i <= n; ++i) {
      for (long k = 1; k <= m; ++k) {
        auto b   = bracket(alg, d, i, i + k - 1);
        auto rec = perfect.find(b.path);
        if (rec == nullptr || rec->cycle_class != cls) {
          throw ConsistencyError("bracket path \"" + quiver.format(b.path)
                                 + "\" is not a perfect path of its class");
        }
        d.members.push_back(b.path);
      }
      d.X.push_back(d.members.back());
      d.Y.push_back(d.factors[i - 1]);
      d.phi.push_back(perfect.find(d.X.back())->successor);
    }
    auto sorted = d.members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()
        || sorted != klass.members) {
      throw ConsistencyError("bracket coordinates of cycle \"" + quiver.format(c)
                             + "\" do not cover its perfect paths exactly once");
    }
    return d;
  }

  CyclePredicates cycle_predicates(MonomialAlgebra const&    alg,
                                   PerfectPathSet const&     perfect,
                                   CycleDecomposition const& d) {
    CyclePredicates out{};
    Quiver const&   quiver = alg.quiver();

    bool arrows_perfect = true;
    for (std::size_t k = 0; k < d.cycle.length(); ++k) {
      arrows_perfect = arrows_perfect && perfect.contains(quiver.slice(d.cycle, k, k + 1));
    }
    out.all_arrows_perfect = d.size == d.length;
    if (arrows_perfect != out.all_arrows_perfect) {
      throw ConsistencyError("all-arrows-perfect predicate disagrees with |c| = l(c)");
    }

    std::size_t longest = 0;
    for (auto const& r : alg.relations()) {
      longest = std::max(longest, r.length());
    }
    std::size_t L = d.cycle.length();
    for (std::size_t r = 2; r <= longest && !out.relation_length; ++r) {
      bool all = true;
      for (std::size_t s = 0; s < L && all; ++s) {
        std::vector<ArrowIndex> window;
        for (std::size_t t = 0; t < r; ++t) {
          window.push_back(d.cycle[(s + t) % L]);
        }
        all = alg.is_relation(quiver.make_path(window));
      }
      if (all) {
        out.relation_length = r;
      }
    }
    out.repetition_free = out.relation_length.has_value();
    return out;
  }

  std::vector<Path> ascending_chain(HasseQuiver const& prec, Path const& p) {
    std::vector<Path> chain;
    auto              v = prec.index_of(p);
    while (v) {
      chain.push_back(prec.vertices[*v]);
      v = prec.in[*v];
    }
    return chain;
  }

}  // namespace gproj
