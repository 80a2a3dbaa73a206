// gproj: command-line front end.
//
// Exit status: 0 success, 1 input error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gproj/algebra.hpp"
#include "gproj/analysis.hpp"
#include "gproj/ar_quiver.hpp"
#include "gproj/errors.hpp"
#include "gproj/oracle.hpp"
#include "gproj/report.hpp"
#include "gproj/stable.hpp"

namespace {

  using nlohmann::json;

  int write_output(std::string const& text, std::string const& file) {
    if (file.empty()) {
      std::cout << text;
      return 0;
    }
    std::ofstream out(file);
    if (!out) {
      throw gproj::InputError("cannot write \"" + file + "\"");
    }
    out << text;
    return 0;
  }

  gproj::Analysis load(std::string const& file) {
    return gproj::Analysis(gproj::load_algebra(file));
  }

  gproj::Path perfect_path(gproj::Analysis const& an, std::string const& text, char const* flag) {
    auto p = an.algebra().parse_path(text);
    if (!an.perfect().contains(p)) {
      throw gproj::InputError(std::string(flag) + ": \"" + text + "\" is not a perfect path");
    }
    return p;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein-projective classification for monomial algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output")->configurable(false);
  app.fallthrough();

  std::string file;

  auto* analyze = app.add_subcommand("analyze", "Perfect paths, sequences, cycle classes");
  analyze->add_option("file", file, "Algebra document")->required();

  std::string order_name = "prec", format = "dot", output;
  auto*       hasse = app.add_subcommand("hasse", "Hasse quiver of a divisor order");
  hasse->add_option("file", file, "Algebra document")->required();
  hasse->add_option("--order", order_name, "prec or leq")
      ->check(CLI::IsMember({"prec", "leq"}));
  hasse->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  bool  weighted = false;
  auto* classify = app.add_subcommand("classify", "Graded and ungraded classification");
  classify->add_option("file", file, "Algebra document")->required();
  classify->add_flag("--weighted", weighted, "Use the document's arrow degrees");

  std::string from, to;
  int         shift  = 0;
  bool        graded = false;
  auto*       hom    = app.add_subcommand("hom", "Stable Hom between two perfect paths");
  hom->add_option("file", file, "Algebra document")->required();
  hom->add_option("--from", from, "Source perfect path, e.g. a1.a2")->required();
  hom->add_option("--to", to, "Target perfect path")->required();
  hom->add_option("--shift", shift, "Shift of the target (graded)");
  hom->add_flag("--graded", graded, "Graded Hom at the given shift");

  int                        window = 2;
  std::optional<std::size_t> cls;
  auto*                      ar = app.add_subcommand("ar-quiver", "Auslander-Reiten quiver");
  ar->add_option("file", file, "Algebra document")->required();
  ar->add_flag("--graded", graded, "Finite window of the graded quiver");
  ar->add_option("--window", window, "Shifts -W..W in graded mode")->check(CLI::NonNegativeNumber);
  ar->add_option("--class", cls, "Restrict to one cycle class (index)");
  ar->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  ar->add_option("--output", output, "Write to a file instead of stdout");

  std::uint64_t seed   = 1;
  std::size_t   random = 0;
  auto*         verify = app.add_subcommand("verify", "Run the brute-force oracle suite");
  verify->add_option("file", file, "Algebra document")->required();
  verify->add_option("--seed", seed, "Seed for random algebras");
  verify->add_option("--random", random, "Number of random algebras to check as well");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) {
      auto an = load(file);
      if (as_json) {
        std::cout << gproj::analysis_json(an).dump(2) << "\n";
      } else {
        std::cout << gproj::analysis_text(an);
      }
    } else if (*hasse) {
      auto an = load(file);
      auto o  = order_name == "prec" ? gproj::Order::LeftDivisor : gproj::Order::RightDivisor;
      auto const& h = an.hasse(o);
      std::cout << (as_json || format == "json" ? gproj::emit_json(an, h) : gproj::emit_dot(an, h));
    } else if (*classify) {
      auto an  = load(file);
      auto rep = gproj::classify(an, weighted ? gproj::Grading::Weighted : gproj::Grading::Standard);
      if (as_json) {
        std::cout << gproj::classification_json(an, rep).dump(2) << "\n";
      } else {
        std::cout << gproj::classification_text(an, rep);
      }
    } else if (*hom) {
      auto an = load(file);
      auto p  = perfect_path(an, from, "--from");
      auto q  = perfect_path(an, to, "--to");
      json doc{{"from", an.format(p)}, {"to", an.format(q)}, {"graded", graded}};
      if (graded) {
        auto h           = gproj::graded_stable_hom(an, {p, 0}, {q, shift});
        doc["shift"]     = shift;
        doc["dimension"] = h.dimension;
        doc["witness"]   = h.witness ? json(an.format(*h.witness)) : json(nullptr);
      } else {
        auto h           = gproj::ungraded_stable_hom(an, p, q);
        doc["dimension"] = h.dimension;
        doc["pieces"]    = json::array();
        for (auto const& [k, w] : h.pieces) {
          doc["pieces"].push_back({{"shift", k}, {"witness", an.format(w)}});
        }
      }
      if (as_json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "dim " << doc["dimension"].get<std::size_t>() << "\n";
        if (graded && doc["witness"].is_string()) {
          std::cout << "witness " << doc["witness"].get<std::string>() << "\n";
        }
        if (!graded) {
          for (auto const& piece : doc["pieces"]) {
            std::cout << "shift " << piece["shift"].get<int>() << ": witness "
                      << piece["witness"].get<std::string>() << "\n";
          }
        }
      }
    } else if (*ar) {
      auto an = load(file);
      if (cls && *cls >= an.decompositions().size()) {
        throw gproj::InputError("--class: no cycle class " + std::to_string(*cls));
      }
      gproj::TranslationQuiver q;
      if (graded) {
        if (!cls && an.decompositions().size() != 1) {
          throw gproj::InputError("--graded needs --class when there is not exactly one class");
        }
        if (an.cm_free()) {
          throw gproj::InputError("the algebra is CM-free; there is no graded quiver to draw");
        }
        q = gproj::graded_ar_window(an, cls.value_or(0), -window, window);
      } else {
        q = gproj::ungraded_ar_quiver(an, cls);
      }
      return write_output(as_json || format == "json" ? gproj::emit_json(an, q)
                                                      : gproj::emit_dot(an, q),
                          output);
    } else if (*verify) {
      auto an     = load(file);
      auto checks = gproj::oracle::verify(an);
      bool ok     = gproj::oracle::all_passed(checks);
      json doc{{"file", file}, {"checks", gproj::checks_json(checks)}};
      std::string text = "== " + file + "\n" + gproj::checks_text(checks);
      if (random > 0) {
        auto algs   = gproj::oracle::random_algebras(seed, random);
        json sample = json::array();
        text += "== " + std::to_string(random) + " random algebras, seed " + std::to_string(seed)
                + "\n";
        std::size_t failed = 0;
        for (std::size_t k = 0; k < algs.size(); ++k) {
          gproj::Analysis rand_an(algs[k]);
          auto            rc = gproj::oracle::verify(rand_an);
          if (!gproj::oracle::all_passed(rc)) {
            ++failed;
            ok = false;
            text += "sample " + std::to_string(k) + ":\n" + gproj::checks_text(rc);
          }
          sample.push_back({{"sample", k}, {"passed", gproj::oracle::all_passed(rc)}});
        }
        text += (failed == 0 ? "PASS  " : "FAIL  ") + std::to_string(random - failed) + "/"
                + std::to_string(random) + " random algebras\n";
        doc["random"] = {{"seed", seed}, {"samples", sample}};
      }
      doc["passed"] = ok;
      std::cout << (as_json ? doc.dump(2) + "\n" : text);
      return ok ? 0 : 2;
    }
  } catch (gproj::InputError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (gproj::ConsistencyError const& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 2;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
