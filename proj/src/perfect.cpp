#include "gproj/perfect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gproj/errors.hpp"

namespace gproj {

  namespace {

    std::size_t checked_index(MonomialAlgebra const& alg,
                              Path const&            p,
                              char const*            caller) {
      if (p.is_trivial()) {
        throw std::invalid_argument(std::string(caller) + ": path is trivial");
      }
      auto i = alg.index_of(p);
      if (!i) {
        throw std::invalid_argument(std::string(caller) + ": path \""
                                    + alg.format(p) + "\" is zero");
      }
      return *i;
    }

    // Walks q outward from the trivial path at `start`, keeping the index of
    // q and of the product with p; q is collected the first time the
    // product dies.
    template <typename Extend, typename Next>
    std::vector<Path> annihilators(MonomialAlgebra const& alg,
                                   std::size_t            p_index,
                                   VertexIndex            start,
                                   Extend                 extend,
                                   Next                   arrows_at) {
      std::vector<Path> found;
      auto              e = alg.index_of(Path::trivial(start));
      std::vector<std::pair<std::size_t, std::size_t>> stack{{*e, p_index}};
      while (!stack.empty()) {
        auto [qi, pqi] = stack.back();
        stack.pop_back();
        for (ArrowIndex a : arrows_at(alg.basis()[qi])) {
          auto q2 = extend(qi, a);
          if (!q2) {
            continue;
          }
          auto pq2 = extend(pqi, a);
          if (pq2) {
            stack.emplace_back(*q2, *pq2);
          } else {
            found.push_back(alg.basis()[*q2]);
          }
        }
      }
      std::sort(found.begin(), found.end());
      return found;
    }

  }  // namespace

  std::vector<Path> right_annihilators(MonomialAlgebra const& alg, Path const& p) {
    auto i = checked_index(alg, p, "right_annihilators");
    return annihilators(
        alg,
        i,
        p.target(),
        [&](std::size_t k, ArrowIndex a) { return alg.extend_right(k, a); },
        [&](Path const& q) -> auto const& { return alg.quiver().outgoing(q.target()); });
  }

  std::vector<Path> left_annihilators(MonomialAlgebra const& alg, Path const& p) {
    auto i = checked_index(alg, p, "left_annihilators");
    return annihilators(
        alg,
        i,
        p.source(),
        [&](std::size_t k, ArrowIndex a) { return alg.extend_left(k, a); },
        [&](Path const& q) -> auto const& { return alg.quiver().incoming(q.source()); });
  }

  bool is_perfect_pair(MonomialAlgebra const& alg, Path const& p, Path const& q) {
    if (p.is_trivial() || q.is_trivial() || !alg.is_nonzero(p) || !alg.is_nonzero(q)
        || p.target() != q.source()) {
      return false;
    }
    auto r = right_annihilators(alg, p);
    if (r.size() != 1 || !(r.front() == q)) {
      return false;
    }
    auto l = left_annihilators(alg, q);
    return l.size() == 1 && l.front() == p;
  }

  PerfectPathSet::PerfectPathSet(std::vector<PerfectPathRecord>      records,
                                 std::vector<MinimalPerfectSequence> sequences,
                                 std::vector<UnderlyingCycleClass>   classes)
      : _records(std::move(records)),
        _sequences(std::move(sequences)),
        _classes(std::move(classes)) {
    for (std::size_t i = 0; i < _records.size(); ++i) {
      _index.emplace(_records[i].path, i);
    }
  }

  PerfectPathRecord const* PerfectPathSet::find(Path const& p) const {
    auto it = _index.find(p);
    return it == _index.end() ? nullptr : &_records[it->second];
  }

  std::vector<Path> PerfectPathSet::paths() const {
    std::vector<Path> out;
    for (auto const& r : _records) {
      out.push_back(r.path);
    }
    return out;
  }

  std::size_t least_rotation(std::span<const ArrowIndex> s) {
    std::size_t const n = s.size();
    if (n == 0) {
      return 0;
    }
    std::vector<long> f(2 * n, -1);
    std::size_t       k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
      ArrowIndex sj = s[j % n];
      long       i  = f[j - k - 1];
      while (i != -1 && sj != s[(k + i + 1) % n]) {
        if (sj < s[(k + i + 1) % n]) {
          k = j - i - 1;
        }
        i = f[i];
      }
      if (sj != s[(k + i + 1) % n]) {
        // i == -1 here
        if (sj < s[k % n]) {
          k = j;
        }
        f[j - k] = -1;
      } else {
        f[j - k] = i + 1;
      }
    }
    return k % n;
  }

  Path primitive_root(Quiver const& quiver, Path const& cycle) {
    std::size_t n = cycle.length();
    if (n == 0 || cycle.source() != cycle.target()) {
      throw std::invalid_argument("primitive_root: not a non-trivial cycle");
    }
    auto arrows = cycle.arrows();
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) {
        periodic = arrows[i] == arrows[i - d];
      }
      if (periodic) {
        return quiver.slice(cycle, 0, d);
      }
    }
    return cycle;
  }

  Path canonical_rotation(Quiver const& quiver, Path const& cycle) {
    if (cycle.is_trivial() || cycle.source() != cycle.target()) {
      throw std::invalid_argument("canonical_rotation: not a non-trivial cycle");
    }
    std::size_t             k = least_rotation(cycle.arrows());
    std::vector<ArrowIndex> rotated;
    for (std::size_t i = 0; i < cycle.length(); ++i) {
      rotated.push_back(cycle[(k + i) % cycle.length()]);
    }
    return quiver.make_path(rotated);
  }

  PerfectPathSet enumerate_perfect_paths(MonomialAlgebra const& alg) {
    std::map<Path, Path> sigma;
    for (auto const& p : alg.basis()) {
      if (p.is_trivial()) {
        continue;
      }
      auto r = right_annihilators(alg, p);
      if (r.size() != 1) {
        continue;
      }
      auto l = left_annihilators(alg, r.front());
      if (l.size() == 1 && l.front() == p) {
        sigma.emplace(p, r.front());
      }
    }

    std::vector<MinimalPerfectSequence> sequences;
    std::map<Path, bool>                seen;
    // sigma is ordered, so each cycle is first met at its least member.
    for (auto const& [start, unused] : sigma) {
      if (seen.count(start)) {
        continue;
      }
      std::vector<Path> walk{start};
      bool              closed = false;
      for (std::size_t steps = 0; steps <= sigma.size(); ++steps) {
        auto it = sigma.find(walk.back());
        if (it == sigma.end()) {
          break;
        }
        if (it->second == start) {
          closed = true;
          break;
        }
        walk.push_back(it->second);
      }
      for (auto const& w : walk) {
        seen[w] = true;
      }
      if (closed) {
        sequences.push_back({std::move(walk), 0});
      }
    }

    std::map<Path, std::vector<std::size_t>> by_cycle;
    for (std::size_t s = 0; s < sequences.size(); ++s) {
      Path product = sequences[s].members.front();
      for (std::size_t i = 1; i < sequences[s].members.size(); ++i) {
        product = concat(product, sequences[s].members[i]);
      }
      Path root = canonical_rotation(alg.quiver(), primitive_root(alg.quiver(), product));
      by_cycle[root].push_back(s);
    }

    std::vector<UnderlyingCycleClass> classes;
    std::vector<PerfectPathRecord>    records;
    for (auto& [cycle, seqs] : by_cycle) {
      UnderlyingCycleClass cls{cycle, {}, seqs};
      for (std::size_t s : seqs) {
        auto& seq       = sequences[s];
        seq.cycle_class = classes.size();
        std::size_t n   = seq.members.size();
        for (std::size_t i = 0; i < n; ++i) {
          cls.members.push_back(seq.members[i]);
          records.push_back({seq.members[i],
                             seq.members[(i + 1) % n],
                             seq.members[(i + n - 1) % n],
                             classes.size(),
                             s,
                             i});
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      classes.push_back(std::move(cls));
    }
    std::sort(records.begin(), records.end(), [](auto const& a, auto const& b) {
      return a.path < b.path;
    });
    return PerfectPathSet(std::move(records), std::move(sequences), std::move(classes));
  }

  Overlap detect_overlap(MonomialAlgebra const& alg, Path const& p, Path const& q) {
    Quiver const& quiver = alg.quiver();
    std::size_t   lp = p.length(), lq = q.length();
    bool const    same = p == q;
    for (std::size_t k = 1; k <= std::min(lp, lq); ++k) {
      if (same && k >= lp) {
        break;
      }
      if (!std::equal(p.arrows().end() - k, p.arrows().end(), q.arrows().begin())) {
        continue;
      }
      std::vector<ArrowIndex> whole(p.arrows().begin(), p.arrows().end());
      whole.insert(whole.end(), q.arrows().begin() + k, q.arrows().end());
      if (!alg.is_nonzero(quiver.make_path(whole))) {
        continue;
      }
      return {same ? OverlapKind::O1 : OverlapKind::O2,
              quiver.slice(p, 0, lp - k),
              quiver.slice(q, 0, k),
              quiver.slice(q, k, lq)};
    }
    return {};
  }

  char const* to_string(OverlapKind kind) {
    switch (kind) {
      case OverlapKind::O1:
        return "O1";
      case OverlapKind::O2:
        return "O2";
      default:
        return "none";
    }
  }

}  // namespace gproj
