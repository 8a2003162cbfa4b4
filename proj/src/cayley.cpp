#include "bh/cayley.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "bh/errors.hpp"

namespace bh {

  namespace {
    constexpr std::int64_t unset = -2;
  }

  std::size_t CayleyBall::vertex_count(std::size_t k) const {
    return _offsets.at(std::min(k, _radius) + 1);
  }

  std::size_t CayleyBall::edge_count(std::size_t k) const {
    return _edge_counts.at(std::min(k, _radius));
  }

  std::optional<std::size_t> CayleyBall::walk(std::size_t from,
                                              Word const& w) const {
    auto v = static_cast<std::int64_t>(from);
    for (Letter x : w) {
      if (x.gen >= _rank) {
        return std::nullopt;
      }
      v = neighbor(static_cast<std::size_t>(v), x);
      if (v < 0) {
        return std::nullopt;
      }
    }
    return static_cast<std::size_t>(v);
  }

  std::vector<int> CayleyBall::distances_from(std::size_t source) const {
    std::vector<int>         dist(size(), -1);
    std::vector<std::size_t> queue;
    queue.reserve(size());
    dist[source] = 0;
    queue.push_back(source);
    std::size_t const letters = 2 * _rank;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto const  v    = queue[head];
      auto const* adj  = &_adjacent[v * letters];
      int const   next = dist[v] + 1;
      for (std::size_t c = 0; c < letters; ++c) {
        auto u = adj[c];
        if (u >= 0 && dist[static_cast<std::size_t>(u)] < 0) {
          dist[static_cast<std::size_t>(u)] = next;
          queue.push_back(static_cast<std::size_t>(u));
        }
      }
    }
    return dist;
  }

  CayleyBall build_ball(Presentation const& p, std::size_t n) {
    CayleyBall ball;
    ball._radius = n;
    ball._rank   = p.rank();
    std::size_t const letters = 2 * p.rank();

    std::optional<DehnSolver> solver;
    bool const                free = p.relators().empty();
    if (!free) {
      solver.emplace(p);
    }
    bool const use_sums = !free && p.exponent_sums_are_invariant();
    std::map<std::vector<std::int64_t>, std::vector<std::size_t>> buckets;
    auto key = [&](Word const& w) {
      return use_sums ? exponent_sums(w, p.rank())
                      : std::vector<std::int64_t>{};
    };

    auto& verts = ball._vertices;
    auto& adj   = ball._adjacent;
    auto  add_vertex = [&](Word w) {
      if (!free) {
        buckets[key(w)].push_back(verts.size());
      }
      verts.push_back(std::move(w));
      adj.resize(adj.size() + letters, unset);
      return verts.size() - 1;
    };
    auto link = [&](std::size_t v, Letter x, std::size_t u) {
      adj[v * letters + x.code()] = static_cast<std::int64_t>(u);
      auto& back = adj[u * letters + x.inverse().code()];
      if (back == unset) {
        back = static_cast<std::int64_t>(v);
      }
    };

    add_vertex(Word{});
    ball._offsets.push_back(0);
    for (std::size_t d = 0; d <= n; ++d) {
      std::size_t const shell_begin = ball._offsets[d];
      std::size_t const shell_end   = verts.size();
      ball._offsets.push_back(shell_end);
      for (std::size_t v = shell_begin; v < shell_end; ++v) {
        for (std::uint32_t c = 0; c < letters; ++c) {
          if (adj[v * letters + c] != unset) {
            continue;
          }
          Letter const x = Letter::from_code(c);
          std::optional<std::size_t> found;
          if (!free) {
            Word candidate = verts[v];
            candidate.push_back(x);
            candidate = free_reduce(candidate);
            auto it   = buckets.find(key(candidate));
            if (it != buckets.end()) {
              for (auto u : it->second) {
                // Edges back to shell d - 1 were linked from that shell.
                auto du = verts[u].size();
                if (du < d || du > d + 1) {
                  continue;
                }
                if (solver->is_identity(concat(candidate,
                                               inverse(verts[u])))) {
                  found = u;
                  break;
                }
              }
            }
          }
          if (found) {
            link(v, x, *found);
          } else if (d < n) {
            // In the free case an uncancelled extension is always new; a
            // cancelling one was linked when the parent was created.
            Word w = verts[v];
            w.push_back(x);
            auto u = add_vertex(std::move(w));
            link(v, x, u);
          } else {
            adj[v * letters + c] = CayleyBall::outside;
          }
        }
      }
    }
    // Shell n + 1 is empty; its offset was pushed as the end marker.
    ball._offsets.resize(n + 2);
    for (auto& a : adj) {
      if (a == unset) {
        a = CayleyBall::outside;
      }
    }

    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::uint32_t g = 0; g < p.rank(); ++g) {
        auto j = adj[i * letters + 2 * g];
        if (j < 0) {
          continue;
        }
        auto const ju = static_cast<std::size_t>(j);
        // An involution would otherwise contribute the same edge twice.
        if (ju < i && adj[ju * letters + 2 * g]
                          == static_cast<std::int64_t>(i)) {
          continue;
        }
        ball._edges.push_back(CayleyEdge{i, ju, g});
      }
    }
    auto edge_key = [&](CayleyEdge const& e) {
      return std::make_tuple(std::max(verts[e.from].size(),
                                      verts[e.to].size()),
                             std::min(e.from, e.to),
                             std::max(e.from, e.to),
                             e.gen);
    };
    std::sort(ball._edges.begin(), ball._edges.end(),
              [&](auto const& a, auto const& b) {
                return edge_key(a) < edge_key(b);
              });
    ball._edge_counts.assign(n + 1, 0);
    for (auto const& e : ball._edges) {
      auto k = std::max(verts[e.from].size(), verts[e.to].size());
      for (std::size_t r = k; r <= n; ++r) {
        ++ball._edge_counts[r];
      }
    }
    return ball;
  }

  std::size_t distance(Presentation const& p, Word const& u, Word const& v) {
    auto ball = build_ball(p, u.size() + v.size());
    auto iu   = ball.locate(u);
    auto iv   = ball.locate(v);
    if (!iu || !iv) {
      throw InvalidParameters("word uses generators outside the presentation");
    }
    auto dist = ball.distances_from(*iu);
    return static_cast<std::size_t>(dist[*iv]);
  }

  std::string VectorField::encode() const {
    std::string s;
    s.reserve(orientation.size());
    for (auto o : orientation) {
      s.push_back(static_cast<char>(o));
    }
    return s;
  }

  VectorField VectorField::decode(std::string const& text) {
    VectorField f;
    for (char ch : text) {
      if (ch != '+' && ch != '-' && ch != '0') {
        throw ParseError("bad vector field character '" + std::string(1, ch)
                         + "'");
      }
      f.orientation.push_back(static_cast<Orientation>(ch));
    }
    return f;
  }

  VectorField VectorField::restrict_to(std::size_t edge_count) const {
    VectorField f;
    f.orientation.assign(
        orientation.begin(),
        orientation.begin()
            + static_cast<std::ptrdiff_t>(std::min(edge_count,
                                                   orientation.size())));
    return f;
  }

  namespace {
    Orientation orient(int d_from, int d_to) {
      if (d_to < d_from) {
        return Orientation::forward;
      }
      if (d_to > d_from) {
        return Orientation::backward;
      }
      return Orientation::unoriented;
    }
  }  // namespace

  VectorField vector_field(CayleyBall const&   ball,
                           Presentation const& p,
                           Word const&         v) {
    auto big = build_ball(p, ball.radius() + v.size());
    auto iv  = big.locate(v);
    if (!iv) {
      throw InvalidParameters("target word uses unknown generators");
    }
    auto        dist = big.distances_from(*iv);
    VectorField f;
    f.orientation.reserve(ball.edges().size());
    for (auto const& e : ball.edges()) {
      f.orientation.push_back(orient(dist[e.from], dist[e.to]));
    }
    return f;
  }

  AtomAnalysis::AtomAnalysis(Presentation const& p,
                             std::size_t         max_level,
                             std::size_t         horizon)
      : _max_level(max_level),
        _horizon(horizon),
        _ball(build_ball(p, max_level + horizon)),
        _dist(),
        _stride(_ball.vertex_count(horizon)) {
    if (horizon < max_level) {
      throw HorizonTooSmall("horizon must be at least the level");
    }
    auto const sources = _ball.vertex_count(max_level);
    _dist.resize(sources * _stride);
    for (std::size_t x = 0; x < sources; ++x) {
      auto d = _ball.distances_from(x);
      std::copy(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(_stride),
                _dist.begin() + static_cast<std::ptrdiff_t>(x * _stride));
    }
  }

  VectorField AtomAnalysis::field(std::size_t level, std::size_t v) const {
    VectorField f;
    auto const  count = _ball.edge_count(level);
    f.orientation.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
      auto const& e = _ball.edges()[k];
      f.orientation.push_back(orient(_dist[e.from * _stride + v],
                                     _dist[e.to * _stride + v]));
    }
    return f;
  }

  std::vector<Atom> AtomAnalysis::atoms(std::size_t level) const {
    if (level > _max_level) {
      throw InvalidParameters("level beyond the analysed range");
    }
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < _stride; ++v) {
      groups[field(level, v).encode()].push_back(v);
    }
    std::vector<Atom> result;
    result.reserve(groups.size());
    for (auto const& [code, members] : groups) {
      Atom atom;
      atom.level                = level;
      atom.field                = VectorField::decode(code);
      atom.stable_since_horizon = _ball.depth(members.front());
      for (auto v : members) {
        atom.members_within_horizon.push_back(_ball.vertex(v));
        atom.infinite_candidate
            = atom.infinite_candidate || _ball.depth(v) == _horizon;
      }
      result.push_back(std::move(atom));
    }
    return result;
  }

  std::vector<Atom> enumerate_atoms(Presentation const& p,
                                    std::size_t         level,
                                    std::size_t         horizon) {
    return AtomAnalysis(p, level, horizon).atoms(level);
  }

}  // namespace bh
