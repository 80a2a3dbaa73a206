#ifndef GPROJ_AR_QUIVER_HPP_
#define GPROJ_AR_QUIVER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gproj/analysis.hpp"
#include "gproj/stable.hpp"

namespace gproj {

  struct TranslationVertex {
    Path               path;
    std::size_t        cls;
    long               i;
    long               m;
    std::optional<int> shift;
    //! Some neighbour or τ-partner lies outside the window.
    bool               incomplete = false;
  };

  //! Arrows all carry valuation (1,1).
  struct TranslationQuiver {
    bool                                             graded = false;
    std::vector<TranslationVertex>                   vertices;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    std::vector<std::optional<std::size_t>>          tau;
    //! (class, τ-period) for each class present.
    std::vector<std::pair<std::size_t, std::size_t>> periods;

    std::optional<std::size_t> index_of(Path const& p, std::optional<int> shift = {}) const;
  };

  //! All classes when cls is empty.
  TranslationQuiver ungraded_ar_quiver(Analysis const& an, std::optional<std::size_t> cls = {});

  //! Vertices pΛ(j), p in class cls, lo <= j <= hi. Throws
  //! std::invalid_argument when lo > hi.
  TranslationQuiver graded_ar_window(Analysis const& an, std::size_t cls, int lo, int hi);

  std::string emit_dot(Analysis const& an, TranslationQuiver const& q);
  std::string emit_json(Analysis const& an, TranslationQuiver const& q);

  std::string emit_dot(Analysis const& an, HasseQuiver const& h);
  std::string emit_json(Analysis const& an, HasseQuiver const& h);

}  // namespace gproj

#endif  // GPROJ_AR_QUIVER_HPP_
