#ifndef GPROJ_PATH_HPP_
#define GPROJ_PATH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gproj {

  using VertexIndex = std::uint32_t;
  using ArrowIndex  = std::uint32_t;

  struct Arrow {
    std::string id;
    VertexIndex source;
    VertexIndex target;
  };

  //! A path in a quiver: either the trivial path at a vertex or a sequence of
  //! composable arrows. Paths are plain values; composability is checked by
  //! the Quiver that creates them.
  //!
  //! Paths are totally ordered by (length, arrow sequence, source, target),
  //! where arrows compare by declaration index. Every listing produced by the
  //! library follows this order.
  class Path {
   public:
    Path() = default;

    static Path trivial(VertexIndex v) {
      return Path(v, v, {});
    }

    // Unchecked; use Quiver::make_path for validated construction.
    Path(VertexIndex source, VertexIndex target, std::vector<ArrowIndex> arrows)
        : _source(source), _target(target), _arrows(std::move(arrows)) {}

    VertexIndex source() const noexcept {
      return _source;
    }
    VertexIndex target() const noexcept {
      return _target;
    }
    std::size_t length() const noexcept {
      return _arrows.size();
    }
    bool is_trivial() const noexcept {
      return _arrows.empty();
    }
    std::span<const ArrowIndex> arrows() const noexcept {
      return _arrows;
    }
    ArrowIndex operator[](std::size_t i) const {
      return _arrows[i];
    }

    bool operator==(Path const&) const = default;
    std::strong_ordering operator<=>(Path const& that) const;

   private:
    VertexIndex             _source = 0;
    VertexIndex             _target = 0;
    std::vector<ArrowIndex> _arrows;
  };

  struct PathHash {
    std::size_t operator()(Path const& p) const noexcept;
  };

  //! Concatenation pq. Throws std::invalid_argument unless t(p) = s(q).
  Path concat(Path const& p, Path const& q);

  //! Does `needle` occur in `hay` as a contiguous block starting at `pos`?
  bool occurs_at(std::span<const ArrowIndex> hay,
                 std::span<const ArrowIndex> needle,
                 std::size_t                 pos);

  class Quiver {
   public:
    Quiver() = default;
    //! Throws InputError on duplicate ids, unknown endpoints or an empty
    //! vertex set.
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t vertex_count() const noexcept {
      return _vertices.size();
    }
    std::size_t arrow_count() const noexcept {
      return _arrows.size();
    }
    std::string const& vertex_id(VertexIndex v) const {
      return _vertices.at(v);
    }
    Arrow const& arrow(ArrowIndex a) const {
      return _arrows.at(a);
    }
    std::vector<std::string> const& vertices() const noexcept {
      return _vertices;
    }
    std::vector<Arrow> const& arrows() const noexcept {
      return _arrows;
    }
    std::vector<ArrowIndex> const& outgoing(VertexIndex v) const {
      return _out.at(v);
    }
    std::vector<ArrowIndex> const& incoming(VertexIndex v) const {
      return _in.at(v);
    }

    std::optional<VertexIndex> find_vertex(std::string_view id) const;
    std::optional<ArrowIndex>  find_arrow(std::string_view id) const;

    //! Validated non-trivial path. Throws std::invalid_argument if the
    //! sequence is empty or two consecutive arrows do not compose.
    Path make_path(std::span<const ArrowIndex> arrows) const;

    //! Subpath made of arrows [from, to); trivial when from == to.
    Path slice(Path const& p, std::size_t from, std::size_t to) const;

    //! Vertex visited after `k` arrows of p (k = 0 is the source).
    VertexIndex vertex_at(Path const& p, std::size_t k) const;

    //! Dot-separated arrow ids ("a1.a2.a3"); trivial paths print as "e_<v>".
    std::string format(Path const& p) const;

    //! Inverse of format(). Throws InputError naming the offending token.
    Path parse_path(std::string_view text) const;

   private:
    std::vector<std::string>             _vertices;
    std::vector<Arrow>                   _arrows;
    std::vector<std::vector<ArrowIndex>> _out;
    std::vector<std::vector<ArrowIndex>> _in;
  };

}  // namespace gproj

#endif  // GPROJ_PATH_HPP_
