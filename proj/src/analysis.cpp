#include "gproj/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace gproj {

  Analysis::Analysis(MonomialAlgebra alg)
      : _alg(std::move(alg)),
        _perfect(enumerate_perfect_paths(_alg)),
        _prec(hasse_quiver(_alg.quiver(), _perfect, Order::LeftDivisor)),
        _leq(hasse_quiver(_alg.quiver(), _perfect, Order::RightDivisor)),
        _elementary(classify_elementary(_prec, _leq)) {
    for (std::size_t c = 0; c < _perfect.classes().size(); ++c) {
      _decompositions.push_back(
          decompose_cycle(_alg, _perfect, _prec, _elementary.coelementary, c));
    }
  }

  BracketCoordinate Analysis::coordinate(Path const& p) const {
    auto rec = _perfect.find(p);
    if (rec == nullptr) {
      throw std::invalid_argument("\"" + format(p) + "\" is not a perfect path");
    }
    auto const& d   = _decompositions[rec->cycle_class];
    auto        it  = std::find(d.members.begin(), d.members.end(), p);
    long        pos = it - d.members.begin();
    long        m   = static_cast<long>(d.m);
    return {rec->cycle_class, pos / m + 1, pos % m + 1};
  }

}  // namespace gproj
