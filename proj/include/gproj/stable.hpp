#ifndef GPROJ_STABLE_HPP_
#define GPROJ_STABLE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gproj/analysis.hpp"

namespace gproj {

  //! pΛ(shift) for a perfect path p. The zero object is std::nullopt.
  struct GradedObject {
    Path path;
    int  shift = 0;
    bool operator==(GradedObject const&) const = default;
  };

  std::string format(Analysis const& an, GradedObject const& x);

  struct GradedHom {
    std::size_t         dimension = 0;
    //! q'p spanning the Hom space when non-zero.
    std::optional<Path> witness;
  };

  //! Closed form over bracket coordinates. Throws std::invalid_argument if
  //! either path is not perfect.
  GradedHom graded_stable_hom(Analysis const& an, GradedObject const& src, GradedObject const& dst);

  struct UngradedHom {
    std::size_t                       dimension = 0;
    std::vector<std::pair<int, Path>> pieces;
  };

  //! Sum of the graded pieces over shifts 0 <= k < l(q).
  UngradedHom ungraded_stable_hom(Analysis const& an, Path const& p, Path const& q);

  //! Iterates Σ(qΛ(j)) = pΛ(j + l(p)) for (p, q) perfect, or its inverse.
  GradedObject suspend(Analysis const& an, GradedObject const& x, long power);

  //! Evaluates Σ^power directly from the bracket coordinate of x.
  GradedObject suspend_closed_form(Analysis const& an, GradedObject const& x, long power);

  GradedObject ar_translate(Analysis const& an, GradedObject const& x);
  GradedObject ar_translate_inverse(Analysis const& an, GradedObject const& x);

  struct ARTriangle {
    GradedObject              left;
    //! Non-degenerate middle summands only.
    std::vector<GradedObject> middle;
    GradedObject              right;
    Path                      connecting;
    //! Bracket paths of both middle terms, including degenerate ones.
    std::vector<BracketPath> raw_middle;
  };

  ARTriangle ar_triangle(Analysis const& an, GradedObject const& x);

  //! τ^{|c|} X = X(-l(c)) for every sample X.
  bool tau_periodicity_check(Analysis const& an, std::size_t cls, std::span<const GradedObject> sample);

  enum class Grading { Standard, Weighted };

  struct TiltingSummand {
    std::size_t  cls;
    long         k;
    GradedObject object;
  };

  //! ⊕_c ⊕_s ⊕_{k=1..m_c} [1,k]Λ(s), s over l(c) copies (deg(c) when
  //! weighted).
  std::vector<TiltingSummand> tilting_object(Analysis const& an, Grading grading);

  struct EndomorphismBlock {
    std::size_t                   cls;
    std::size_t                   size;
    long                          multiplicity;
    //! entries[r][c] = dim Hom([1,c+1], [1,r+1]).
    std::vector<std::vector<int>> entries;
    bool                          upper_triangular;
    //! No Hom between distinct shift copies.
    bool                          copies_orthogonal;
  };

  std::vector<EndomorphismBlock> end_algebra(Analysis const& an, Grading grading);

  //! Number of pairs (X, Y) of summands of T_c with Hom(X, Σ^i Y) != 0 for
  //! 0 < |i| <= window.
  std::size_t tilting_violations(Analysis const& an, std::size_t cls, long window);

  struct ClassReport {
    std::size_t cls;
    Path        cycle;
    std::size_t size;
    std::size_t length;
    std::size_t type_a;
    long        multiplicity;
    std::size_t nakayama_vertices;
    std::size_t radical_exponent;
  };

  struct ClassificationReport {
    Grading                  grading;
    bool                     cm_free;
    std::vector<ClassReport> classes;
    std::vector<std::string> notes;
  };

  //! Throws InputError for a weighted grading with some deg(c) <= 0.
  ClassificationReport classify(Analysis const& an, Grading grading);

  //! dim rΛ for a bracket: 0 for a zero path, dim e_vΛ for a trivial one.
  std::size_t module_dimension(MonomialAlgebra const& alg, BracketPath const& b);

}  // namespace gproj

#endif  // GPROJ_STABLE_HPP_
