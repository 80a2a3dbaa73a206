#include "gproj/path.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "gproj/errors.hpp"

namespace gproj {

  std::strong_ordering Path::operator<=>(Path const& that) const {
    if (auto c = length() <=> that.length(); c != 0) {
      return c;
    }
    if (auto c = std::lexicographical_compare_three_way(_arrows.begin(),
                                                        _arrows.end(),
                                                        that._arrows.begin(),
                                                        that._arrows.end());
        c != 0) {
      return c;
    }
    if (auto c = _source <=> that._source; c != 0) {
      return c;
    }
    return _target <=> that._target;
  }

  std::size_t PathHash::operator()(Path const& p) const noexcept {
    std::size_t h = std::hash<std::uint64_t>{}(
        (static_cast<std::uint64_t>(p.source()) << 32) | p.target());
    for (ArrowIndex a : p.arrows()) {
      h ^= std::hash<ArrowIndex>{}(a) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }

  Path concat(Path const& p, Path const& q) {
    if (p.target() != q.source()) {
      throw std::invalid_argument("cannot concatenate paths: target of the "
                                  "left factor differs from source of the "
                                  "right factor");
    }
    std::vector<ArrowIndex> arrows(p.arrows().begin(), p.arrows().end());
    arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
    return Path(p.source(), q.target(), std::move(arrows));
  }

  bool occurs_at(std::span<const ArrowIndex> hay,
                 std::span<const ArrowIndex> needle,
                 std::size_t                 pos) {
    if (pos + needle.size() > hay.size()) {
      return false;
    }
    return std::equal(needle.begin(), needle.end(), hay.begin() + pos);
  }

  Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
      : _vertices(std::move(vertices)), _arrows(std::move(arrows)) {
    if (_vertices.empty()) {
      throw InputError("quiver has no vertices");
    }
    std::unordered_set<std::string> seen;
    for (auto const& v : _vertices) {
      if (!seen.insert(v).second) {
        throw InputError("duplicate vertex id \"" + v + "\"");
      }
    }
    seen.clear();
    for (auto const& a : _arrows) {
      if (!seen.insert(a.id).second) {
        throw InputError("duplicate arrow id \"" + a.id + "\"");
      }
      if (a.source >= _vertices.size() || a.target >= _vertices.size()) {
        throw InputError("arrow \"" + a.id + "\" has an undeclared endpoint");
      }
    }
    _out.resize(_vertices.size());
    _in.resize(_vertices.size());
    for (ArrowIndex i = 0; i < _arrows.size(); ++i) {
      _out[_arrows[i].source].push_back(i);
      _in[_arrows[i].target].push_back(i);
    }
  }

  std::optional<VertexIndex> Quiver::find_vertex(std::string_view id) const {
    auto it = std::find(_vertices.begin(), _vertices.end(), id);
    if (it == _vertices.end()) {
      return std::nullopt;
    }
    return static_cast<VertexIndex>(it - _vertices.begin());
  }

  std::optional<ArrowIndex> Quiver::find_arrow(std::string_view id) const {
    auto it = std::find_if(_arrows.begin(), _arrows.end(), [&](Arrow const& a) {
      return a.id == id;
    });
    if (it == _arrows.end()) {
      return std::nullopt;
    }
    return static_cast<ArrowIndex>(it - _arrows.begin());
  }

  Path Quiver::make_path(std::span<const ArrowIndex> arrows) const {
    if (arrows.empty()) {
      throw std::invalid_argument("make_path: empty arrow sequence");
    }
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (arrows[i] >= _arrows.size()) {
        throw std::invalid_argument("make_path: arrow index out of range");
      }
      if (i > 0 && _arrows[arrows[i - 1]].target != _arrows[arrows[i]].source) {
        throw std::invalid_argument("make_path: arrows \""
                                    + _arrows[arrows[i - 1]].id + "\" and \""
                                    + _arrows[arrows[i]].id
                                    + "\" do not compose");
      }
    }
    return Path(_arrows[arrows.front()].source,
                _arrows[arrows.back()].target,
                std::vector<ArrowIndex>(arrows.begin(), arrows.end()));
  }

  VertexIndex Quiver::vertex_at(Path const& p, std::size_t k) const {
    if (k == 0) {
      return p.source();
    }
    return _arrows[p[k - 1]].target;
  }

  Path Quiver::slice(Path const& p, std::size_t from, std::size_t to) const {
    if (from > to || to > p.length()) {
      throw std::out_of_range("Quiver::slice: bad range");
    }
    if (from == to) {
      return Path::trivial(vertex_at(p, from));
    }
    return Path(vertex_at(p, from),
                vertex_at(p, to),
                std::vector<ArrowIndex>(p.arrows().begin() + from,
                                        p.arrows().begin() + to));
  }

  std::string Quiver::format(Path const& p) const {
    if (p.is_trivial()) {
      return "e_" + _vertices[p.source()];
    }
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (i > 0) {
        out += '.';
      }
      out += _arrows[p[i]].id;
    }
    return out;
  }

  Path Quiver::parse_path(std::string_view text) const {
    if (text.starts_with("e_")) {
      auto v = find_vertex(text.substr(2));
      if (!v) {
        throw InputError("unknown vertex in trivial path \"" + std::string(text)
                         + "\"");
      }
      return Path::trivial(*v);
    }
    std::vector<ArrowIndex> arrows;
    std::size_t             start = 0;
    while (start <= text.size()) {
      auto end = text.find('.', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto token = text.substr(start, end - start);
      auto a     = find_arrow(token);
      if (!a) {
        throw InputError("unknown arrow \"" + std::string(token) + "\" in path \""
                         + std::string(text) + "\"");
      }
      arrows.push_back(*a);
      start = end + 1;
    }
    try {
      return make_path(arrows);
    } catch (std::invalid_argument const& e) {
      throw InputError("path \"" + std::string(text)
                       + "\" is not composable: " + e.what());
    }
  }

}  // namespace gproj
