#ifndef GPROJ_ANALYSIS_HPP_
#define GPROJ_ANALYSIS_HPP_

#include <cstddef>
#include <vector>

#include "gproj/algebra.hpp"
#include "gproj/order.hpp"
#include "gproj/perfect.hpp"

namespace gproj {

  //! A perfect path written as [i, i+m-1] in its class, 1 <= i <= |c|.
  struct BracketCoordinate {
    std::size_t cls;
    long        i;
    long        m;
  };

  //! Everything derived from an algebra's perfect paths, computed once.
  class Analysis {
   public:
    explicit Analysis(MonomialAlgebra alg);

    MonomialAlgebra const& algebra() const noexcept {
      return _alg;
    }
    PerfectPathSet const& perfect() const noexcept {
      return _perfect;
    }
    HasseQuiver const& prec() const noexcept {
      return _prec;
    }
    HasseQuiver const& leq() const noexcept {
      return _leq;
    }
    HasseQuiver const& hasse(Order o) const noexcept {
      return o == Order::LeftDivisor ? _prec : _leq;
    }
    ElementarySets const& elementary() const noexcept {
      return _elementary;
    }
    std::vector<CycleDecomposition> const& decompositions() const noexcept {
      return _decompositions;
    }
    CycleDecomposition const& decomposition(std::size_t cls) const {
      return _decompositions.at(cls);
    }
    bool cm_free() const noexcept {
      return _perfect.empty();
    }

    //! Throws std::invalid_argument unless p is perfect.
    BracketCoordinate coordinate(Path const& p) const;

    BracketPath bracket(std::size_t cls, long i, long j) const {
      return gproj::bracket(_alg, decomposition(cls), i, j);
    }
    std::size_t bracket_length(std::size_t cls, long i, long j) const {
      return gproj::bracket_length(decomposition(cls), i, j);
    }
    std::string format(Path const& p) const {
      return _alg.format(p);
    }

   private:
    MonomialAlgebra                 _alg;
    PerfectPathSet                  _perfect;
    HasseQuiver                     _prec;
    HasseQuiver                     _leq;
    ElementarySets                  _elementary;
    std::vector<CycleDecomposition> _decompositions;
  };

}  // namespace gproj

#endif  // GPROJ_ANALYSIS_HPP_
