#ifndef GPROJ_PERFECT_HPP_
#define GPROJ_PERFECT_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gproj/algebra.hpp"
#include "gproj/path.hpp"

namespace gproj {

  //! R(p): the left-minimal non-zero paths q with pq = 0, in path order.
  //! Throws std::invalid_argument when p is trivial or zero.
  std::vector<Path> right_annihilators(MonomialAlgebra const& alg, Path const& p);

  //! L(p): the right-minimal non-zero paths q with qp = 0, in path order.
  std::vector<Path> left_annihilators(MonomialAlgebra const& alg, Path const& p);

  //! (P1)-(P3) via the annihilator sets. False for zero or trivial input.
  bool is_perfect_pair(MonomialAlgebra const& alg, Path const& p, Path const& q);

  struct PerfectPathRecord {
    Path        path;
    Path        successor;
    Path        predecessor;
    std::size_t cycle_class;
    std::size_t sequence;
    std::size_t position;
  };

  //! A cycle of the successor map, starting at its least member.
  struct MinimalPerfectSequence {
    std::vector<Path> members;
    std::size_t       cycle_class;
  };

  struct UnderlyingCycleClass {
    //! Least rotation of the primitive root.
    Path                     cycle;
    std::vector<Path>        members;
    std::vector<std::size_t> sequences;
  };

  class PerfectPathSet {
   public:
    PerfectPathSet() = default;
    PerfectPathSet(std::vector<PerfectPathRecord>      records,
                   std::vector<MinimalPerfectSequence> sequences,
                   std::vector<UnderlyingCycleClass>   classes);

    //! Every perfect path, in path order.
    std::vector<PerfectPathRecord> const& records() const noexcept {
      return _records;
    }
    std::vector<MinimalPerfectSequence> const& sequences() const noexcept {
      return _sequences;
    }
    std::vector<UnderlyingCycleClass> const& classes() const noexcept {
      return _classes;
    }
    PerfectPathRecord const* find(Path const& p) const;
    bool                     contains(Path const& p) const {
      return find(p) != nullptr;
    }
    std::size_t size() const noexcept {
      return _records.size();
    }
    bool empty() const noexcept {
      return _records.empty();
    }
    std::vector<Path> paths() const;

   private:
    std::vector<PerfectPathRecord>                     _records;
    std::vector<MinimalPerfectSequence>                _sequences;
    std::vector<UnderlyingCycleClass>                  _classes;
    std::unordered_map<Path, std::size_t, PathHash>    _index;
  };

  //! Perfect paths are the periodic points of the successor partial map
  //! p -> q, (p, q) perfect. An empty result means the algebra is CM-free.
  PerfectPathSet enumerate_perfect_paths(MonomialAlgebra const& alg);

  //! Offset of the lexicographically least rotation (Booth).
  std::size_t least_rotation(std::span<const ArrowIndex> word);

  //! Shortest cycle whose power is the closed path `cycle`.
  Path primitive_root(Quiver const& quiver, Path const& cycle);

  //! Least rotation of a closed path.
  Path canonical_rotation(Quiver const& quiver, Path const& cycle);

  enum class OverlapKind { None, O1, O2 };

  //! p = left_rest * shared, q = shared * right_rest.
  struct Overlap {
    OverlapKind         kind = OverlapKind::None;
    std::optional<Path> left_rest;
    std::optional<Path> shared;
    std::optional<Path> right_rest;
  };

  //! Searches the factorizations p = p'x, q = xq' with x non-trivial and
  //! p'xq' non-zero, shortest x first. When p = q both p' and q' must be
  //! non-trivial.
  Overlap detect_overlap(MonomialAlgebra const& alg, Path const& p, Path const& q);

  char const* to_string(OverlapKind kind);

}  // namespace gproj

#endif  // GPROJ_PERFECT_HPP_
