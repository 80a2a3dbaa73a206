#include "gproj/report.hpp"

#include <sstream>

namespace gproj {

  namespace {

    std::string bracket_label(BracketCoordinate const& c) {
      return "[" + std::to_string(c.i) + "," + std::to_string(c.i + c.m - 1) + "]";
    }

    std::string join(Analysis const& an, std::vector<Path> const& paths, char const* sep = ", ") {
      std::string out;
      for (std::size_t i = 0; i < paths.size(); ++i) {
        out += (i ? sep : "") + an.format(paths[i]);
      }
      return out;
    }

  }  // namespace

  nlohmann::json analysis_json(Analysis const& an) {
    using nlohmann::json;
    auto const& alg = an.algebra();
    json        doc;
    doc["dimension"]        = alg.dimension();
    doc["nilpotency_bound"] = alg.nilpotency_bound();
    doc["warnings"]         = alg.warnings();
    doc["relations"]        = json::array();
    for (auto const& r : alg.relations()) {
      doc["relations"].push_back(an.format(r));
    }
    doc["cm_free"] = an.cm_free();
    doc["perfect_paths"] = json::array();
    for (auto const& rec : an.perfect().records()) {
      auto c = an.coordinate(rec.path);
      doc["perfect_paths"].push_back({{"path", an.format(rec.path)},
                                      {"successor", an.format(rec.successor)},
                                      {"predecessor", an.format(rec.predecessor)},
                                      {"class", rec.cycle_class},
                                      {"sequence", rec.sequence},
                                      {"position", rec.position},
                                      {"bracket", {c.i, c.i + c.m - 1}}});
    }
    doc["sequences"] = json::array();
    for (auto const& s : an.perfect().sequences()) {
      json members = json::array();
      for (auto const& p : s.members) {
        members.push_back(an.format(p));
      }
      doc["sequences"].push_back({{"members", members}, {"class", s.cycle_class}});
    }
    doc["classes"] = json::array();
    for (auto const& d : an.decompositions()) {
      json factors = json::array();
      for (auto const& r : d.factors) {
        factors.push_back(an.format(r));
      }
      auto pr = cycle_predicates(alg, an.perfect(), d);
      json c{{"cycle", an.format(an.perfect().classes()[d.cls].cycle)},
             {"anchored_cycle", an.format(d.cycle)},
             {"factors", factors},
             {"size", d.size},
             {"length", d.length},
             {"m", d.m},
             {"all_arrows_perfect", pr.all_arrows_perfect},
             {"repetition_free", pr.repetition_free}};
      c["relation_length"] = pr.relation_length ? json(*pr.relation_length) : json(nullptr);
      doc["classes"].push_back(std::move(c));
    }
    doc["elementary"]   = json::array();
    doc["coelementary"] = json::array();
    for (auto const& p : an.elementary().elementary) {
      doc["elementary"].push_back(an.format(p));
    }
    for (auto const& p : an.elementary().coelementary) {
      doc["coelementary"].push_back(an.format(p));
    }
    return doc;
  }

  std::string analysis_text(Analysis const& an) {
    auto const&        alg = an.algebra();
    std::ostringstream out;
    for (auto const& w : alg.warnings()) {
      out << "warning: " << w << "\n";
    }
    out << "vertices: " << alg.quiver().vertex_count() << ", arrows: " << alg.quiver().arrow_count()
        << ", relations: " << alg.relations().size() << "\n";
    out << "dimension: " << alg.dimension() << ", nilpotency bound: " << alg.nilpotency_bound()
        << "\n";
    if (an.cm_free()) {
      out << "CM-free: no perfect paths\n";
      return out.str();
    }
    out << "perfect paths (" << an.perfect().size() << "):\n";
    for (auto const& rec : an.perfect().records()) {
      out << "  " << an.format(rec.path) << "  class " << rec.cycle_class << " "
          << bracket_label(an.coordinate(rec.path)) << "  successor "
          << an.format(rec.successor) << "\n";
    }
    out << "minimal perfect sequences (" << an.perfect().sequences().size() << "):\n";
    for (auto const& s : an.perfect().sequences()) {
      out << "  (" << join(an, s.members) << ")\n";
    }
    out << "cycle classes (" << an.decompositions().size() << "):\n";
    for (auto const& d : an.decompositions()) {
      out << "  " << d.cls << ": " << an.format(an.perfect().classes()[d.cls].cycle)
          << "  factors (" << join(an, d.factors) << ")  |c| = " << d.size
          << ", l(c) = " << d.length << ", m_c = " << d.m << "\n";
    }
    out << "elementary: " << join(an, an.elementary().elementary) << "\n";
    out << "co-elementary: " << join(an, an.elementary().coelementary) << "\n";
    return out.str();
  }

  nlohmann::json classification_json(Analysis const& an, ClassificationReport const& rep) {
    using nlohmann::json;
    json doc;
    doc["graded"]   = json::array();
    doc["ungraded"] = json::array();
    for (auto const& c : rep.classes) {
      doc["graded"].push_back({{"cycle", an.format(c.cycle)},
                               {"typeA_size", c.type_a},
                               {"multiplicity", c.multiplicity}});
      doc["ungraded"].push_back({{"cycle", an.format(c.cycle)},
                                 {"vertices", c.nakayama_vertices},
                                 {"radical_exponent", c.radical_exponent}});
    }
    doc["cm_free"] = rep.cm_free;
    doc["grading"] = rep.grading == Grading::Weighted ? "weighted" : "standard";
    doc["notes"]   = rep.notes;
    return doc;
  }

  std::string classification_text(Analysis const& an, ClassificationReport const& rep) {
    std::ostringstream out;
    if (rep.cm_free) {
      out << "CM-free: no perfect paths; both stable categories are zero\n";
      return out.str();
    }
    out << "graded (" << (rep.grading == Grading::Weighted ? "weighted" : "standard")
        << " grading):\n";
    for (auto const& c : rep.classes) {
      out << "  " << an.format(c.cycle) << ": D^b(mod K A_" << c.type_a << ") x "
          << c.multiplicity << "\n";
    }
    out << "ungraded:\n";
    for (auto const& c : rep.classes) {
      out << "  " << an.format(c.cycle) << ": Nakayama algebra on " << c.nakayama_vertices
          << (c.nakayama_vertices == 1 ? " vertex" : " vertices") << ", rad^"
          << c.radical_exponent << "\n";
    }
    for (auto const& n : rep.notes) {
      out << "note: " << n << "\n";
    }
    return out.str();
  }

  nlohmann::json checks_json(std::vector<oracle::Check> const& checks) {
    nlohmann::json doc = nlohmann::json::array();
    for (auto const& c : checks) {
      doc.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return doc;
  }

  std::string checks_text(std::vector<oracle::Check> const& checks) {
    std::ostringstream out;
    for (auto const& c : checks) {
      out << (c.passed ? "PASS  " : "FAIL  ") << c.name;
      if (!c.passed && !c.detail.empty()) {
        out << "  (" << c.detail << ")";
      }
      out << "\n";
    }
    return out.str();
  }

}  // namespace gproj
