#include "gproj/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "gproj/errors.hpp"

namespace gproj {

  namespace {

    bool has_relation_suffix(std::span<const ArrowIndex>  word,
                             std::vector<Path> const&     relations) {
      for (auto const& r : relations) {
        if (r.length() <= word.size()
            && occurs_at(word, r.arrows(), word.size() - r.length())) {
          return true;
        }
      }
      return false;
    }

    bool contains_subpath(std::span<const ArrowIndex> hay,
                          std::span<const ArrowIndex> needle) {
      if (needle.size() > hay.size()) {
        return false;
      }
      for (std::size_t pos = 0; pos + needle.size() <= hay.size(); ++pos) {
        if (occurs_at(hay, needle, pos)) {
          return true;
        }
      }
      return false;
    }

    // State of the factor-avoidance automaton.
    struct WindowState {
      VertexIndex             vertex;
      std::vector<ArrowIndex> window;
      auto operator<=>(WindowState const&) const = default;
    };

    std::optional<Path> find_live_cycle(Quiver const&            quiver,
                                        std::vector<Path> const& relations) {
      std::size_t longest = 0;
      for (auto const& r : relations) {
        longest = std::max(longest, r.length());
      }
      std::size_t const width = longest > 0 ? longest - 1 : 0;

      std::map<WindowState, std::size_t> ids;
      std::vector<WindowState>           states;
      auto                               id_of = [&](WindowState const& s) {
        auto [it, fresh] = ids.emplace(s, states.size());
        if (fresh) {
          states.push_back(s);
        }
        return it->second;
      };

      // 0 = unseen, 1 = on stack, 2 = done
      std::vector<int> colour;
      struct Frame {
        std::size_t state;
        std::size_t next_edge;
        ArrowIndex  via;
      };

      for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
        std::size_t root = id_of({v, {}});
        colour.resize(states.size(), 0);
        if (colour[root] != 0) {
          continue;
        }
        std::vector<Frame> stack{{root, 0, 0}};
        colour[root] = 1;
        while (!stack.empty()) {
          Frame&      top  = stack.back();
          auto const& out  = quiver.outgoing(states[top.state].vertex);
          if (top.next_edge == out.size()) {
            colour[top.state] = 2;
            stack.pop_back();
            continue;
          }
          ArrowIndex a = out[top.next_edge++];
          std::vector<ArrowIndex> word = states[top.state].window;
          word.push_back(a);
          if (has_relation_suffix(word, relations)) {
            continue;
          }
          if (word.size() > width) {
            word.erase(word.begin(), word.end() - width);
          }
          std::size_t next = id_of({quiver.arrow(a).target, std::move(word)});
          colour.resize(states.size(), 0);
          if (colour[next] == 1) {
            std::vector<ArrowIndex> cycle;
            auto it = std::find_if(stack.begin(), stack.end(), [&](Frame const& f) {
              return f.state == next;
            });
            for (auto jt = it + 1; jt != stack.end(); ++jt) {
              cycle.push_back(jt->via);
            }
            cycle.push_back(a);
            return quiver.make_path(cycle);
          }
          if (colour[next] == 0) {
            colour[next] = 1;
            stack.push_back({next, 0, a});
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  PathEnumeration enumerate_nonzero_paths(Quiver const&            quiver,
                                          std::vector<Path> const& relations) {
    PathEnumeration result;
    if (auto witness = find_live_cycle(quiver, relations)) {
      result.infinite_witness = std::move(witness);
      return result;
    }
    std::vector<Path> frontier;
    for (VertexIndex v = 0; v < quiver.vertex_count(); ++v) {
      frontier.push_back(Path::trivial(v));
    }
    while (!frontier.empty()) {
      std::vector<Path> next;
      for (auto const& p : frontier) {
        for (ArrowIndex a : quiver.outgoing(p.target())) {
          std::vector<ArrowIndex> arrows(p.arrows().begin(), p.arrows().end());
          arrows.push_back(a);
          if (!has_relation_suffix(arrows, relations)) {
            next.emplace_back(p.source(), quiver.arrow(a).target, std::move(arrows));
          }
        }
      }
      result.basis.insert(result.basis.end(), frontier.begin(), frontier.end());
      frontier = std::move(next);
    }
    std::sort(result.basis.begin(), result.basis.end());
    return result;
  }

  MonomialAlgebra::MonomialAlgebra(Quiver            quiver,
                                   std::vector<Path> relations,
                                   std::vector<int>  arrow_degrees)
      : _quiver(std::move(quiver)), _degrees(std::move(arrow_degrees)) {
    if (_degrees.empty()) {
      _degrees.assign(_quiver.arrow_count(), 1);
    } else {
      _custom_degrees = true;
      if (_degrees.size() != _quiver.arrow_count()) {
        throw InputError("arrow degree list does not match the arrow count");
      }
      for (std::size_t a = 0; a < _degrees.size(); ++a) {
        if (_degrees[a] < 0) {
          throw InputError("arrow \"" + _quiver.arrow(a).id
                           + "\" has negative degree");
        }
      }
    }

    for (auto const& r : relations) {
      if (r.length() < 2) {
        throw InputError("relation \"" + _quiver.format(r)
                         + "\" has length < 2; relations must lie in the square "
                           "of the arrow ideal");
      }
    }
    std::sort(relations.begin(), relations.end());
    relations.erase(std::unique(relations.begin(), relations.end()),
                    relations.end());
    // Shorter relations come first, so each candidate only needs checking
    // against the ones already kept.
    for (auto const& r : relations) {
      auto hit = std::find_if(_relations.begin(), _relations.end(), [&](Path const& s) {
        return contains_subpath(r.arrows(), s.arrows());
      });
      if (hit != _relations.end()) {
        _warnings.push_back("relation \"" + _quiver.format(r)
                            + "\" contains relation \"" + _quiver.format(*hit)
                            + "\" and was dropped");
      } else {
        _relations.push_back(r);
      }
    }

    auto enumeration = enumerate_nonzero_paths(_quiver, _relations);
    if (enumeration.infinite_witness) {
      throw InputError("relations do not generate an admissible ideal: the cycle \""
                       + _quiver.format(*enumeration.infinite_witness)
                       + "\" has all powers non-zero");
    }
    _basis = std::move(enumeration.basis);
    for (std::size_t i = 0; i < _basis.size(); ++i) {
      _index.emplace(_basis[i], i);
      _nilpotency = std::max(_nilpotency, _basis[i].length() + 1);
    }
    _right.assign(_basis.size(),
                  std::vector<std::optional<std::size_t>>(_quiver.arrow_count()));
    _left = _right;
    for (std::size_t i = 0; i < _basis.size(); ++i) {
      Path const& p = _basis[i];
      for (ArrowIndex a : _quiver.outgoing(p.target())) {
        auto ext = concat(p, _quiver.make_path(std::span(&a, 1)));
        _right[i][a] = index_of(ext);
      }
      for (ArrowIndex a : _quiver.incoming(p.source())) {
        auto ext = concat(_quiver.make_path(std::span(&a, 1)), p);
        _left[i][a] = index_of(ext);
      }
    }
  }

  int MonomialAlgebra::degree(Path const& p) const {
    int d = 0;
    for (ArrowIndex a : p.arrows()) {
      d += _degrees[a];
    }
    return d;
  }

  std::optional<std::size_t> MonomialAlgebra::index_of(Path const& p) const {
    auto it = _index.find(p);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool MonomialAlgebra::is_relation(Path const& p) const {
    return std::binary_search(_relations.begin(), _relations.end(), p);
  }

  std::optional<std::size_t> MonomialAlgebra::extend_right(std::size_t i,
                                                           ArrowIndex  a) const {
    return _right.at(i).at(a);
  }

  std::optional<std::size_t> MonomialAlgebra::extend_left(std::size_t i,
                                                          ArrowIndex  a) const {
    return _left.at(i).at(a);
  }

  std::size_t MonomialAlgebra::right_module_dimension(Path const& r) const {
    auto start = index_of(r);
    if (!start) {
      return 0;
    }
    std::size_t              count = 0;
    std::vector<std::size_t> stack{*start};
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      ++count;
      for (ArrowIndex a : _quiver.outgoing(_basis[i].target())) {
        if (auto j = _right[i][a]) {
          stack.push_back(*j);
        }
      }
    }
    return count;
  }

  bool path_is_zero(MonomialAlgebra const& alg, Path const& p) {
    for (auto const& r : alg.relations()) {
      if (contains_subpath(p.arrows(), r.arrows())) {
        return true;
      }
    }
    return false;
  }

  PathRelation relate(Quiver const& quiver, Path const& p, Path const& q) {
    PathRelation rel;
    std::size_t  n = q.length(), k = p.length();
    auto         fits = [&](std::size_t pos) {
      if (p.is_trivial()) {
        return quiver.vertex_at(q, pos) == p.source();
      }
      return occurs_at(q.arrows(), p.arrows(), pos);
    };
    if (k <= n) {
      for (std::size_t pos = 0; pos + k <= n; ++pos) {
        if (fits(pos)) {
          rel.is_subpath = true;
          rel.occurrence.emplace(quiver.slice(q, 0, pos), quiver.slice(q, pos + k, n));
          break;
        }
      }
      if (fits(0)) {
        rel.is_left_divisor  = true;
        rel.right_complement = quiver.slice(q, k, n);
      }
      if (fits(n - k)) {
        rel.is_right_divisor = true;
        rel.left_complement  = quiver.slice(q, 0, n - k);
      }
    }
    rel.is_proper = rel.is_subpath && !(p == q);
    return rel;
  }

  namespace {

    std::string as_string(nlohmann::json const& j, std::string const& where) {
      if (j.is_string()) {
        return j.get<std::string>();
      }
      if (j.is_number_integer()) {
        return std::to_string(j.get<long long>());
      }
      throw InputError(where + ": expected a string");
    }

  }  // namespace

  MonomialAlgebra parse_algebra(std::string_view document) {
    using nlohmann::json;
    json doc;
    try {
      doc = json::parse(document);
    } catch (json::parse_error const& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
      throw InputError("top level: expected an object");
    }
    for (auto const* key : {"vertices", "arrows"}) {
      if (!doc.contains(key) || !doc[key].is_array()) {
        throw InputError(std::string("missing array \"") + key + "\"");
      }
    }

    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
      vertices.push_back(
          as_string(doc["vertices"][i], "vertices[" + std::to_string(i) + "]"));
    }
    auto vertex_index = [&](std::string const& id, std::string const& where) {
      auto it = std::find(vertices.begin(), vertices.end(), id);
      if (it == vertices.end()) {
        throw InputError(where + ": undeclared vertex \"" + id + "\"");
      }
      return static_cast<VertexIndex>(it - vertices.begin());
    };

    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < doc["arrows"].size(); ++i) {
      auto const& a     = doc["arrows"][i];
      std::string where = "arrows[" + std::to_string(i) + "]";
      if (!a.is_object() || !a.contains("id") || !a.contains("from")
          || !a.contains("to")) {
        throw InputError(where + ": expected {\"id\", \"from\", \"to\"}");
      }
      arrows.push_back({as_string(a["id"], where + ".id"),
                        vertex_index(as_string(a["from"], where + ".from"), where),
                        vertex_index(as_string(a["to"], where + ".to"), where)});
    }
    Quiver quiver(std::move(vertices), std::move(arrows));

    std::vector<Path> relations;
    if (doc.contains("relations")) {
      if (!doc["relations"].is_array()) {
        throw InputError("\"relations\" must be an array");
      }
      for (std::size_t i = 0; i < doc["relations"].size(); ++i) {
        auto const& r     = doc["relations"][i];
        std::string where = "relations[" + std::to_string(i) + "]";
        if (!r.is_array() || r.empty()) {
          throw InputError(where + ": expected a non-empty array of arrow ids");
        }
        std::vector<ArrowIndex> seq;
        for (auto const& id : r) {
          auto name = as_string(id, where);
          auto a    = quiver.find_arrow(name);
          if (!a) {
            throw InputError(where + ": unknown arrow \"" + name + "\"");
          }
          seq.push_back(*a);
        }
        try {
          relations.push_back(quiver.make_path(seq));
        } catch (std::invalid_argument const& e) {
          throw InputError(where + ": not a path (" + e.what() + ")");
        }
      }
    }

    std::vector<int> degrees;
    if (doc.contains("arrow_degrees")) {
      auto const& d = doc["arrow_degrees"];
      if (!d.is_object()) {
        throw InputError("\"arrow_degrees\" must be an object");
      }
      degrees.assign(quiver.arrow_count(), 1);
      for (auto const& [id, value] : d.items()) {
        auto a = quiver.find_arrow(id);
        if (!a) {
          throw InputError("arrow_degrees: unknown arrow \"" + id + "\"");
        }
        if (!value.is_number_integer()) {
          throw InputError("arrow_degrees." + id + ": expected an integer");
        }
        degrees[*a] = value.get<int>();
      }
    }
    return MonomialAlgebra(std::move(quiver), std::move(relations), std::move(degrees));
  }

  MonomialAlgebra load_algebra(std::filesystem::path const& file) {
    std::ifstream in(file);
    if (!in) {
      throw InputError("cannot open \"" + file.string() + "\"");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra(buffer.str());
  }

}  // namespace gproj
