#include "gproj/ar_quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace gproj {

  std::optional<std::size_t> TranslationQuiver::index_of(Path const& p, std::optional<int> shift) const {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      if (vertices[v].path == p && vertices[v].shift == shift) {
        return v;
      }
    }
    return std::nullopt;
  }

  namespace {

    TranslationVertex make_vertex(Analysis const& an, Path const& p, std::optional<int> shift) {
      auto c = an.coordinate(p);
      return {p, c.cls, c.i, c.m, shift, false};
    }

    std::size_t tau_period(Analysis const& an, Path const& p) {
      GradedObject start{p, 0}, x = ar_translate(an, start);
      std::size_t  k = 1;
      while (!(x.path == start.path)) {
        x = ar_translate(an, x);
        ++k;
      }
      return k;
    }

  }  // namespace

  TranslationQuiver ungraded_ar_quiver(Analysis const& an, std::optional<std::size_t> cls) {
    TranslationQuiver q;
    for (auto const& d : an.decompositions()) {
      if (cls && *cls != d.cls) {
        continue;
      }
      auto members = d.members;
      std::sort(members.begin(), members.end());
      for (auto const& p : members) {
        q.vertices.push_back(make_vertex(an, p, std::nullopt));
      }
      q.periods.emplace_back(d.cls, tau_period(an, members.front()));
    }
    std::set<std::pair<std::size_t, std::size_t>> arrows;
    q.tau.assign(q.vertices.size(), std::nullopt);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      auto tri  = ar_triangle(an, {q.vertices[v].path, 0});
      auto a    = q.index_of(tri.left.path);
      q.tau[v]  = a;
      for (auto const& b : tri.middle) {
        auto bi = q.index_of(b.path);
        arrows.emplace(*bi, v);
        arrows.emplace(*a, *bi);
      }
    }
    q.arrows.assign(arrows.begin(), arrows.end());
    return q;
  }

  TranslationQuiver graded_ar_window(Analysis const& an, std::size_t cls, int lo, int hi) {
    if (lo > hi) {
      throw std::invalid_argument("graded_ar_window: empty shift window");
    }
    TranslationQuiver q;
    q.graded     = true;
    auto const& d = an.decomposition(cls);
    auto members = d.members;
    std::sort(members.begin(), members.end());
    for (int j = lo; j <= hi; ++j) {
      for (auto const& p : members) {
        q.vertices.push_back(make_vertex(an, p, j));
      }
    }
    q.periods.emplace_back(cls, 0);
    q.tau.assign(q.vertices.size(), std::nullopt);
    std::set<std::pair<std::size_t, std::size_t>> arrows;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      GradedObject x{q.vertices[v].path, *q.vertices[v].shift};
      auto         tri  = ar_triangle(an, x);
      auto         up   = ar_translate_inverse(an, x);
      auto         next = ar_triangle(an, up);
      bool         incomplete = false;
      auto         find = [&](GradedObject const& y) {
        auto k = q.index_of(y.path, y.shift);
        incomplete = incomplete || !k;
        return k;
      };
      q.tau[v] = find(tri.left);
      find(up);
      for (auto const& b : tri.middle) {
        if (auto bi = find(b)) {
          arrows.emplace(*bi, v);
        }
      }
      for (auto const& b : next.middle) {
        find(b);
      }
      q.vertices[v].incomplete = incomplete;
    }
    q.arrows.assign(arrows.begin(), arrows.end());
    return q;
  }

  namespace {

    std::string label(Analysis const& an, TranslationVertex const& v) {
      std::string s = "[" + std::to_string(v.i) + "," + std::to_string(v.i + v.m - 1) + "] "
                      + an.format(v.path);
      if (v.shift) {
        s += " (" + std::to_string(*v.shift) + ")";
      }
      return s;
    }

  }  // namespace

  std::string emit_dot(Analysis const& an, TranslationQuiver const& q) {
    std::ostringstream out;
    out << "digraph ar {\n";
    for (auto const& [cls, period] : q.periods) {
      out << "  // class " << cls << ": cycle " << an.format(an.decomposition(cls).cycle);
      if (q.graded) {
        out << ", finite window of the graded quiver\n";
      } else {
        out << ", tau-period " << period << "; vertices in the same tau-orbit are identified\n";
      }
    }
    out << "  node [shape=plaintext];\n";
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      out << "  v" << v << " [label=\"" << label(an, q.vertices[v]) << "\"";
      if (q.vertices[v].incomplete) {
        out << ", fontcolor=gray";
      }
      out << "];\n";
    }
    std::map<std::tuple<std::size_t, long, int>, std::vector<std::size_t>> ranks;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      auto const& x = q.vertices[v];
      ranks[{x.cls, x.m, x.shift.value_or(0)}].push_back(v);
    }
    for (auto const& [key, vs] : ranks) {
      out << "  { rank=same;";
      for (auto v : vs) {
        out << " v" << v << ";";
      }
      out << " }\n";
    }
    for (auto const& [a, b] : q.arrows) {
      out << "  v" << a << " -> v" << b << ";\n";
    }
    std::set<std::pair<std::size_t, std::size_t>> dashed;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      if (q.tau[v] && *q.tau[v] != v) {
        dashed.emplace(std::min(v, *q.tau[v]), std::max(v, *q.tau[v]));
      }
    }
    for (auto const& [a, b] : dashed) {
      out << "  v" << a << " -> v" << b << " [style=dashed, dir=none, constraint=false];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string emit_json(Analysis const& an, TranslationQuiver const& q) {
    using nlohmann::json;
    json doc;
    doc["graded"]    = q.graded;
    doc["valuation"] = {1, 1};
    doc["vertices"]  = json::array();
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
      auto const& x = q.vertices[v];
      json        j{{"id", v},
                    {"path", an.format(x.path)},
                    {"class", x.cls},
                    {"bracket", {x.i, x.i + x.m - 1}},
                    {"incomplete", x.incomplete}};
      j["shift"] = x.shift ? json(*x.shift) : json(nullptr);
      j["tau"]   = q.tau[v] ? json(*q.tau[v]) : json(nullptr);
      doc["vertices"].push_back(std::move(j));
    }
    doc["arrows"] = json::array();
    for (auto const& [a, b] : q.arrows) {
      doc["arrows"].push_back({a, b});
    }
    doc["classes"] = json::array();
    for (auto const& [cls, period] : q.periods) {
      json c{{"class", cls}, {"cycle", an.format(an.decomposition(cls).cycle)}};
      c["tau_period"] = q.graded ? json(nullptr) : json(period);
      doc["classes"].push_back(std::move(c));
    }
    return doc.dump(2) + "\n";
  }

  std::string emit_dot(Analysis const& an, HasseQuiver const& h) {
    std::ostringstream out;
    out << "digraph hasse_" << to_string(h.order) << " {\n";
    out << "  node [shape=plaintext];\n";
    for (std::size_t v = 0; v < h.vertices.size(); ++v) {
      out << "  v" << v << " [label=\"" << an.format(h.vertices[v]) << "\"];\n";
    }
    for (auto const& [a, b] : h.arrows) {
      out << "  v" << a << " -> v" << b << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string emit_json(Analysis const& an, HasseQuiver const& h) {
    using nlohmann::json;
    json doc;
    doc["order"]    = to_string(h.order);
    doc["vertices"] = json::array();
    for (auto const& p : h.vertices) {
      doc["vertices"].push_back(an.format(p));
    }
    doc["arrows"] = json::array();
    for (auto const& [a, b] : h.arrows) {
      doc["arrows"].push_back({an.format(h.vertices[a]), an.format(h.vertices[b])});
    }
    doc["chains"] = json::array();
    for (auto const& chain : h.chains) {
      json c = json::array();
      for (auto v : chain) {
        c.push_back(an.format(h.vertices[v]));
      }
      doc["chains"].push_back(std::move(c));
    }
    return doc.dump(2) + "\n";
  }

}  // namespace gproj
