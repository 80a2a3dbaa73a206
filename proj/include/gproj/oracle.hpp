#ifndef GPROJ_ORACLE_HPP_
#define GPROJ_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gproj/algebra.hpp"
#include "gproj/analysis.hpp"
#include "gproj/order.hpp"

// Brute-force counterparts of the closed forms. Exponential in the worst
// case; meant for small algebras only.

namespace gproj::oracle {

  struct HomBasis {
    std::size_t       dimension = 0;
    //! Paths of qΛ ∩ Λ_k p that are not in qΛp.
    std::vector<Path> basis;
  };

  //! Graded piece at shift k of (qΛ ∩ Λp) / qΛp.
  HomBasis bf_stable_hom(MonomialAlgebra const& alg, Path const& p, Path const& q, int k);

  //! All non-zero graded pieces, keyed by shift.
  std::vector<std::pair<int, HomBasis>> bf_stable_hom(MonomialAlgebra const& alg,
                                                      Path const&            p,
                                                      Path const&            q);

  //! dim (qΛ ∩ Λp), the ordinary Hom space.
  std::size_t bf_ordinary_hom(MonomialAlgebra const& alg, Path const& p, Path const& q);

  //! (P1)-(P3) quantified over every non-zero path.
  bool bf_verify_perfect(MonomialAlgebra const& alg, Path const& p, Path const& q);

  //! Paths on a cycle of the graph of perfect pairs, in path order.
  std::vector<Path> bf_perfect_paths(MonomialAlgebra const& alg);

  //! dim qΛ + dim pΛ == dim e_{t(p)}Λ, counting paths directly.
  bool bf_ses_dims(MonomialAlgebra const& alg, Path const& p, Path const& q);

  //! Every way to cut p into members of `coelementary`.
  std::vector<std::vector<Path>> bf_factorizations(std::vector<Path> const& coelementary,
                                                   Path const&              p);

  //! Covering pairs (upper, lower) computed by arrow slicing.
  std::vector<std::pair<Path, Path>> bf_hasse_arrows(std::vector<Path> const& paths, Order order);

  std::size_t bf_least_rotation(std::span<const ArrowIndex> word);

  //! R(p) by filtering every non-zero path and pruning non-minimal ones.
  std::vector<Path> bf_right_annihilators(MonomialAlgebra const& alg, Path const& p);
  std::vector<Path> bf_left_annihilators(MonomialAlgebra const& alg, Path const& p);

  struct RandomOptions {
    std::size_t max_vertices  = 4;
    std::size_t max_arrows    = 6;
    std::size_t max_relations = 5;
    std::size_t min_relation  = 2;
    std::size_t max_relation  = 5;
    std::size_t max_dimension = 120;
  };

  //! One sample; nullopt when it is not admissible or too large.
  std::optional<MonomialAlgebra> random_algebra(std::mt19937_64& rng, RandomOptions const& opts = {});

  //! Keeps drawing until `count` admissible algebras are found.
  std::vector<MonomialAlgebra> random_algebras(std::uint64_t seed, std::size_t count, RandomOptions const& opts = {});

  struct Check {
    std::string name;
    bool        passed;
    std::string detail;
  };

  //! Every closed form against its oracle and every structural invariant.
  std::vector<Check> verify(Analysis const& an);

  bool all_passed(std::vector<Check> const& checks);

}  // namespace gproj::oracle

#endif  // GPROJ_ORACLE_HPP_
