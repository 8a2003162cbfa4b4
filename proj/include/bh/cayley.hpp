#ifndef BH_CAYLEY_HPP_
#define BH_CAYLEY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace bh {

  struct CayleyEdge {
    std::size_t   from;
    std::size_t   to;  // to = from * generator
    std::uint32_t gen;
  };

  // The ball of radius n about the identity in the Cayley graph of a
  // presentation, with every edge whose endpoints both lie in the ball.
  //
  // Vertices are listed shell by shell in shortlex order of their normal
  // forms (the shortlex-least geodesic word), so vertex 0 is the identity
  // and the ball of any smaller radius is a prefix of the vertex list.
  // Edges are sorted so that the edges of every smaller ball likewise form a
  // prefix of the edge list.
  class CayleyBall {
   public:
    static constexpr std::int64_t outside = -1;

    [[nodiscard]] std::size_t radius() const noexcept {
      return _radius;
    }
    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] std::vector<Word> const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] Word const& vertex(std::size_t i) const {
      return _vertices.at(i);
    }
    [[nodiscard]] std::vector<CayleyEdge> const& edges() const noexcept {
      return _edges;
    }
    // Start index of each distance shell; sphere_offsets()[radius + 1] is
    // size().
    [[nodiscard]] std::vector<std::size_t> const&
    sphere_offsets() const noexcept {
      return _offsets;
    }
    [[nodiscard]] std::size_t depth(std::size_t v) const {
      return _vertices.at(v).size();
    }
    // Number of vertices / edges of the sub-ball of radius k <= radius().
    [[nodiscard]] std::size_t vertex_count(std::size_t k) const;
    [[nodiscard]] std::size_t edge_count(std::size_t k) const;

    // Vertex reached from v along the letter, or outside.
    [[nodiscard]] std::int64_t neighbor(std::size_t v, Letter x) const {
      return _adjacent[v * 2 * _rank + x.code()];
    }

    // Vertex reached by reading w from vertex `from`; nothing if the path
    // leaves the ball.
    [[nodiscard]] std::optional<std::size_t> walk(std::size_t from,
                                                  Word const& w) const;
    [[nodiscard]] std::optional<std::size_t> locate(Word const& w) const {
      return walk(0, w);
    }

    // Breadth-first distances from source inside the ball (unreachable
    // vertices get -1).
    [[nodiscard]] std::vector<int> distances_from(std::size_t source) const;

   private:
    friend CayleyBall build_ball(Presentation const& p, std::size_t n);

    std::size_t               _radius = 0;
    std::size_t               _rank   = 0;
    std::vector<Word>         _vertices;
    std::vector<std::size_t>  _offsets;
    std::vector<CayleyEdge>   _edges;
    std::vector<std::size_t>  _edge_counts;  // per radius
    std::vector<std::int64_t> _adjacent;
  };

  // Breadth-first enumeration of group elements. Free presentations need no
  // word problem; otherwise candidates are deduplicated with Dehn's
  // algorithm, so the presentation must pass the Dehn check
  // (NotDehnPresentation otherwise).
  [[nodiscard]] CayleyBall build_ball(Presentation const& p, std::size_t n);

  // Exact Cayley graph distance, searched inside the ball of radius
  // |u| + |v|, which contains every geodesic from u to v.
  [[nodiscard]] std::size_t distance(Presentation const& p,
                                     Word const&         u,
                                     Word const&         v);

  enum class Orientation : char {
    forward    = '+',  // the edge's `to` end is closer to the target
    backward   = '-',
    unoriented = '0'
  };

  struct VectorField {
    std::vector<Orientation> orientation;  // one per ball edge, edge order

    [[nodiscard]] std::string encode() const;
    [[nodiscard]] static VectorField decode(std::string const& text);
    // Restriction to the first edge_count edges (a smaller ball).
    [[nodiscard]] VectorField restrict_to(std::size_t edge_count) const;

    friend bool operator==(VectorField const&, VectorField const&) = default;
  };

  // Orients every edge of the ball towards the vertex v.
  [[nodiscard]] VectorField vector_field(CayleyBall const&   ball,
                                         Presentation const& p,
                                         Word const&         v);

  struct Atom {
    std::size_t       level = 0;
    VectorField       field;
    std::vector<Word> members_within_horizon;  // shortlex order
    // Members on the sphere of radius horizon, i.e. the atom kept growing
    // when the horizon was last increased.
    bool infinite_candidate = false;
    // Smallest distance from the identity of any member: the horizon at
    // which the atom first becomes visible.
    std::size_t stable_since_horizon = 0;
  };

  // Distances from every vertex of B_level to every vertex of B_horizon,
  // computed once and shared by all levels up to max_level.
  class AtomAnalysis {
   public:
    AtomAnalysis(Presentation const& p,
                 std::size_t         max_level,
                 std::size_t         horizon);

    [[nodiscard]] std::size_t horizon() const noexcept {
      return _horizon;
    }
    [[nodiscard]] std::size_t max_level() const noexcept {
      return _max_level;
    }
    [[nodiscard]] CayleyBall const& ball() const noexcept {
      return _ball;
    }
    [[nodiscard]] std::size_t horizon_size() const {
      return _ball.vertex_count(_horizon);
    }

    // Field on B_level induced by vertex v of B_horizon.
    [[nodiscard]] VectorField field(std::size_t level, std::size_t v) const;

    // Atoms of the given level, ordered by field encoding.
    [[nodiscard]] std::vector<Atom> atoms(std::size_t level) const;

   private:
    std::size_t      _max_level;
    std::size_t      _horizon;
    CayleyBall       _ball;   // radius max_level + horizon
    std::vector<int> _dist;   // [x in B_max_level][v in B_horizon]
    std::size_t      _stride;
  };

  // Partition of B_horizon by the vector field each vertex induces on
  // B_level. Requires horizon >= level.
  [[nodiscard]] std::vector<Atom> enumerate_atoms(Presentation const& p,
                                                  std::size_t         level,
                                                  std::size_t horizon);

}  // namespace bh

#endif  // BH_CAYLEY_HPP_
