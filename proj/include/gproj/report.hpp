#ifndef GPROJ_REPORT_HPP_
#define GPROJ_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "gproj/analysis.hpp"
#include "gproj/oracle.hpp"
#include "gproj/stable.hpp"

namespace gproj {

  nlohmann::json analysis_json(Analysis const& an);
  std::string    analysis_text(Analysis const& an);

  //! {"graded": [...], "ungraded": [...], "cm_free": bool}
  nlohmann::json classification_json(Analysis const& an, ClassificationReport const& rep);
  std::string    classification_text(Analysis const& an, ClassificationReport const& rep);

  nlohmann::json checks_json(std::vector<oracle::Check> const& checks);
  std::string    checks_text(std::vector<oracle::Check> const& checks);

}  // namespace gproj

#endif  // GPROJ_REPORT_HPP_
