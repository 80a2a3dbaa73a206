#ifndef GPROJ_ALGEBRA_HPP_
#define GPROJ_ALGEBRA_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gproj/path.hpp"

namespace gproj {

  //! Result of closing the trivial paths under arrow extensions while
  //! avoiding every relation as a factor.
  struct PathEnumeration {
    //! All non-zero paths in path order (empty when infinite).
    std::vector<Path> basis;
    //! A cycle all of whose powers are non-zero, when the language is
    //! infinite.
    std::optional<Path> infinite_witness;
  };

  //! Breadth-first enumeration of the non-zero paths of KQ/(F).
  //!
  //! Admissibility is decided first on the factor-avoidance automaton whose
  //! states are (vertex, last d-1 arrows), d the longest relation; the
  //! language is infinite exactly when that automaton has a reachable cycle.
  PathEnumeration enumerate_nonzero_paths(Quiver const&            quiver,
                                          std::vector<Path> const& relations);

  //! A finite-dimensional monomial algebra KQ/I with its minimal relation set
  //! and the basis of non-zero paths. Immutable once constructed.
  class MonomialAlgebra {
   public:
    //! Validates and normalizes the relations (dropping any relation that
    //! contains another one, with a warning) and enumerates the basis.
    //! Throws InputError for relations of length < 2 or an infinite
    //! dimensional quotient.
    MonomialAlgebra(Quiver                   quiver,
                    std::vector<Path>        relations,
                    std::vector<int>         arrow_degrees = {});

    Quiver const& quiver() const noexcept {
      return _quiver;
    }
    //! The minimal relation set F, in path order.
    std::vector<Path> const& relations() const noexcept {
      return _relations;
    }
    std::vector<std::string> const& warnings() const noexcept {
      return _warnings;
    }
    //! Non-zero paths (trivial ones included), in path order.
    std::vector<Path> const& basis() const noexcept {
      return _basis;
    }
    std::size_t dimension() const noexcept {
      return _basis.size();
    }
    //! Smallest N such that every path of length N is zero.
    std::size_t nilpotency_bound() const noexcept {
      return _nilpotency;
    }
    std::vector<int> const& arrow_degrees() const noexcept {
      return _degrees;
    }
    bool has_custom_degrees() const noexcept {
      return _custom_degrees;
    }

    //! Sum of arrow degrees along p.
    int degree(Path const& p) const;

    //! Index of p in basis(), or nullopt when p is zero.
    std::optional<std::size_t> index_of(Path const& p) const;
    bool                       is_nonzero(Path const& p) const {
      return index_of(p).has_value();
    }
    bool is_relation(Path const& p) const;

    //! Basis index of (basis[i]) * a, or nullopt when zero or not composable.
    std::optional<std::size_t> extend_right(std::size_t i, ArrowIndex a) const;
    //! Basis index of a * (basis[i]).
    std::optional<std::size_t> extend_left(std::size_t i, ArrowIndex a) const;

    //! dim rΛ: the number of non-zero paths having r as a left divisor.
    std::size_t right_module_dimension(Path const& r) const;

    std::string format(Path const& p) const {
      return _quiver.format(p);
    }
    Path parse_path(std::string_view text) const {
      return _quiver.parse_path(text);
    }

   private:
    Quiver                                       _quiver;
    std::vector<Path>                            _relations;
    std::vector<std::string>                     _warnings;
    std::vector<int>                             _degrees;
    bool                                         _custom_degrees = false;
    std::vector<Path>                            _basis;
    std::unordered_map<Path, std::size_t, PathHash> _index;
    std::vector<std::vector<std::optional<std::size_t>>> _right;
    std::vector<std::vector<std::optional<std::size_t>>> _left;
    std::size_t                                  _nilpotency = 1;
  };

  //! Literal test: does some relation occur as a subpath of p?
  bool path_is_zero(MonomialAlgebra const& alg, Path const& p);

  //! How p sits inside q.
  struct PathRelation {
    bool is_subpath       = false;
    bool is_left_divisor  = false;
    bool is_right_divisor = false;
    bool is_proper        = false;
    //! q = p * right_complement when p is a left divisor.
    std::optional<Path> right_complement;
    //! q = left_complement * p when p is a right divisor.
    std::optional<Path> left_complement;
    //! q = before * p * after for the first occurrence of p.
    std::optional<std::pair<Path, Path>> occurrence;
  };

  PathRelation relate(Quiver const& quiver, Path const& p, Path const& q);

  //! Reads the JSON input document (vertices, arrows, relations, optional
  //! arrow_degrees). Throws InputError with a located message.
  MonomialAlgebra parse_algebra(std::string_view document);
  MonomialAlgebra load_algebra(std::filesystem::path const& file);

}  // namespace gproj

#endif  // GPROJ_ALGEBRA_HPP_
