#ifndef GPROJ_ORDER_HPP_
#define GPROJ_ORDER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gproj/algebra.hpp"
#include "gproj/perfect.hpp"

namespace gproj {

  //! LeftDivisor is p ⪯ q (p left-divides q); RightDivisor is p ≤ q
  //! (q right-divides p).
  enum class Order { LeftDivisor, RightDivisor };

  enum class Comparison { Incomparable, Equal, Less, Greater };

  Comparison  order_compare(Quiver const& quiver, Path const& p, Path const& q, Order order);
  char const* to_string(Comparison c);
  char const* to_string(Order o);

  //! Hasse quiver of an order on the perfect paths; there is an arrow q -> p
  //! whenever q covers p.
  struct HasseQuiver {
    Order                                            order;
    std::vector<Path>                                vertices;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    std::vector<std::optional<std::size_t>>          in;
    std::vector<std::optional<std::size_t>>          out;
    //! Components as vertex lists from source to sink, ordered by source.
    std::vector<std::vector<std::size_t>> chains;

    std::optional<std::size_t> index_of(Path const& p) const;
  };

  //! Throws ConsistencyError if some vertex has in- or out-degree > 1.
  HasseQuiver hasse_quiver(Quiver const& quiver, PerfectPathSet const& perfect, Order order);

  struct ElementarySets {
    std::vector<Path> elementary;
    std::vector<Path> coelementary;
  };

  //! Sources and sinks of the ⪯ quiver, checked against the sinks and
  //! sources of the ≤ quiver.
  ElementarySets classify_elementary(HasseQuiver const& prec, HasseQuiver const& leq);

  //! Greedy left-to-right split of an arrow word into members of
  //! `coelementary`; nullopt when the word cannot be split.
  std::optional<std::vector<Path>> split_word(Quiver const&               quiver,
                                              std::vector<Path> const&    coelementary,
                                              std::span<const ArrowIndex> word);

  //! Throws ConsistencyError when p has no factorization.
  std::vector<Path> coelementary_factorization(Quiver const&            quiver,
                                               std::vector<Path> const& coelementary,
                                               Path const&              p);

  struct CycleDecomposition {
    std::size_t       cls;
    //! c rotated to start at r_1.
    Path              cycle;
    std::vector<Path> factors;
    std::size_t       size;
    std::size_t       length;
    std::size_t       m;
    std::vector<Path> X;
    std::vector<Path> Y;
    //! phi[i] is the image of X[i].
    std::vector<Path> phi;
    //! Perfect path [i, i+m-1] is at members[(i-1) * m_c + (m-1)].
    std::vector<Path> members;
  };

  //! Rotation anchor: among rotations of c starting at a factor boundary,
  //! the one whose arrow word is lexicographically least.
  CycleDecomposition decompose_cycle(MonomialAlgebra const& alg,
                                     PerfectPathSet const&  perfect,
                                     HasseQuiver const&     prec,
                                     std::vector<Path> const& coelementary,
                                     std::size_t            cls);

  //! r_i ... r_j, indices mod |c| and 1-based; trivial at s(r_i) when i > j.
  struct BracketPath {
    std::size_t cls;
    long        i;
    long        j;
    Path        path;
    bool        zero;
    std::size_t length() const noexcept {
      return path.length();
    }
  };

  BracketPath bracket(MonomialAlgebra const& alg, CycleDecomposition const& d, long i, long j);

  //! l([i, j]) without building the path.
  std::size_t bracket_length(CycleDecomposition const& d, long i, long j);

  //! The 1-based position of i modulo |c|.
  std::size_t wrap_index(CycleDecomposition const& d, long i);

  struct CyclePredicates {
    bool                       all_arrows_perfect;
    bool                       repetition_free;
    std::optional<std::size_t> relation_length;
  };

  CyclePredicates cycle_predicates(MonomialAlgebra const&    alg,
                                   PerfectPathSet const&     perfect,
                                   CycleDecomposition const& d);

  //! p, followed by the paths above it in ⪯ up to the elementary one.
  std::vector<Path> ascending_chain(HasseQuiver const& prec, Path const& p);

}  // namespace gproj

#endif  // GPROJ_ORDER_HPP_
