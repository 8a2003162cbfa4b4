#include <algorithm>
#include <set>

#include "catch_amalgamated.hpp"

#include "bh/cayley.hpp"
#include "bh/errors.hpp"

using namespace bh;

namespace {
  // All freely reduced words of length <= n, shell by shell.
  std::vector<std::vector<Word>> reduced_shells(std::size_t rank,
                                                std::size_t n) {
    std::vector<std::vector<Word>> shells{{Word{}}};
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<Word> next;
      for (auto const& u : shells.back()) {
        for (std::uint32_t c = 0; c < 2 * rank; ++c) {
          auto x = Letter::from_code(c);
          if (!u.empty() && u.back().cancels(x)) {
            continue;
          }
          auto v = u;
          v.push_back(x);
          next.push_back(v);
        }
      }
      shells.push_back(next);
    }
    return shells;
  }

  // Number of distinct elements among words of length <= n, found by
  // comparing every pair with Dehn's algorithm.
  std::size_t all_pairs_count(Presentation const& p, std::size_t n) {
    std::vector<Word> reps;
    for (auto const& shell : reduced_shells(p.rank(), n)) {
      for (auto const& u : shell) {
        bool fresh = std::none_of(reps.begin(), reps.end(), [&](Word const& v) {
          return dehn_solve(concat(u, inverse(v)), p).identity;
        });
        if (fresh) {
          reps.push_back(u);
        }
      }
    }
    return reps.size();
  }
}  // namespace

TEST_CASE("free group balls", "[cayley]") {
  auto f2 = presentations::free_group(2);
  auto b  = build_ball(f2, 2);
  CHECK(b.size() == 17);
  CHECK(b.sphere_offsets() == std::vector<std::size_t>{0, 1, 5, 17});
  CHECK(b.edges().size() == 16);
  auto shells = reduced_shells(2, 2);
  for (std::size_t k = 0; k <= 2; ++k) {
    auto const lo = b.sphere_offsets()[k];
    auto const hi = b.sphere_offsets()[k + 1];
    std::set<Word> got(b.vertices().begin() + lo, b.vertices().begin() + hi);
    CHECK(got == std::set<Word>(shells[k].begin(), shells[k].end()));
  }

  auto z = build_ball(presentations::free_group(1), 3);
  CHECK(z.size() == 7);
  CHECK(z.edges().size() == 6);
}

TEST_CASE("surface group balls against all-pairs deduplication", "[cayley]") {
  auto g2 = presentations::surface_genus2();
  CHECK(build_ball(g2, 2).size() == all_pairs_count(g2, 2));
  CHECK(build_ball(g2, 2).size() == 65);
  CHECK(build_ball(g2, 3).size() == all_pairs_count(g2, 3));
}

TEST_CASE("random one-relator balls", "[cayley]") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    auto p = random_presentation(2, 1, 6 + seed, seed);
    if (!check_dehn_condition(p, {1, 2}).passes) {
      continue;
    }
    CHECK(build_ball(p, 3).size() == all_pairs_count(p, 3));
  }
}

TEST_CASE("smaller balls are prefixes", "[cayley]") {
  auto g2    = presentations::surface_genus2();
  auto big   = build_ball(g2, 3);
  auto small = build_ball(g2, 2);
  REQUIRE(big.vertex_count(2) == small.size());
  REQUIRE(big.edge_count(2) == small.edges().size());
  for (std::size_t i = 0; i < small.size(); ++i) {
    CHECK(big.vertex(i) == small.vertex(i));
  }
  for (std::size_t i = 0; i < small.edges().size(); ++i) {
    CHECK(big.edges()[i].from == small.edges()[i].from);
    CHECK(big.edges()[i].to == small.edges()[i].to);
    CHECK(big.edges()[i].gen == small.edges()[i].gen);
  }
}

TEST_CASE("edges join v to v x", "[cayley]") {
  auto       g2 = presentations::surface_genus2();
  auto       b  = build_ball(g2, 2);
  DehnSolver solver(g2);
  std::size_t expected = 0;
  for (std::size_t v = 0; v < b.size(); ++v) {
    for (std::uint32_t g = 0; g < 4; ++g) {
      auto target = concat(b.vertex(v), gen_word(g));
      for (std::size_t u = 0; u < b.size(); ++u) {
        if (solver.is_identity(concat(target, inverse(b.vertex(u))))) {
          ++expected;
        }
      }
    }
  }
  CHECK(b.edges().size() == expected);
  for (auto const& e : b.edges()) {
    CHECK(solver.is_identity(concat(concat(b.vertex(e.from), gen_word(e.gen)),
                                    inverse(b.vertex(e.to)))));
  }
}

TEST_CASE("distances", "[cayley]") {
  auto g2    = presentations::surface_genus2();
  auto names = g2.names();
  auto w     = [&](char const* t) { return parse_word(t, names); };
  CHECK(distance(g2, w("a"), w("b")) == 2);
  CHECK(distance(g2, w(""), w("a b a^-1 b^-1 c")) == 3);
  CHECK(distance(g2, w("a"), w("a")) == 0);
  CHECK(distance(presentations::free_group(2), w("a b"), w("a b^-1")) == 2);

  std::vector<Word> sample{w(""), w("a"), w("b c"), w("d^-1 a"), w("c^-1")};
  for (auto const& u : sample) {
    for (auto const& v : sample) {
      auto const duv = distance(g2, u, v);
      CHECK(duv == distance(g2, v, u));
      CHECK(duv == distance(g2, Word{}, free_reduce(concat(inverse(u), v))));
      for (auto const& x : sample) {
        CHECK(duv <= distance(g2, u, x) + distance(g2, x, v));
      }
    }
  }
}

TEST_CASE("vector fields", "[cayley]") {
  auto z  = presentations::free_group(1);
  auto bz = build_ball(z, 1);
  CHECK(vector_field(bz, z, gen_word(0, 5)).encode() == "++");
  CHECK(vector_field(bz, z, gen_word(0, -5)).encode() == "--");

  auto f2 = presentations::free_group(2);
  auto b  = build_ball(f2, 1);
  auto ab = parse_word("a b", f2.names());
  auto vf = vector_field(b, f2, ab);
  for (std::size_t i = 0; i < b.edges().size(); ++i) {
    auto const& e      = b.edges()[i];
    auto        toward = [&](std::size_t v) {
      return vf.orientation[i]
             == (e.to == v ? Orientation::forward : Orientation::backward);
    };
    if (b.vertex(e.to) == gen_word(0)) {
      CHECK(toward(e.to));
    } else {
      CHECK(toward(0));
    }
  }
  for (auto o : vector_field(b, f2, Word{}).orientation) {
    CHECK(o != Orientation::unoriented);
  }
  CHECK(VectorField::decode("+-0").encode() == "+-0");
  CHECK_THROWS_AS(VectorField::decode("+x"), ParseError);
}

TEST_CASE("orientation agrees with distances", "[cayley]") {
  auto g2 = presentations::surface_genus2();
  auto b  = build_ball(g2, 1);
  auto n  = g2.names();
  for (auto const* t : {"a b", "c d^-1 a", "a b a^-1", "d d"}) {
    auto v  = parse_word(t, n);
    auto vf = vector_field(b, g2, v);
    for (std::size_t i = 0; i < b.edges().size(); ++i) {
      auto const& e  = b.edges()[i];
      auto        df = distance(g2, b.vertex(e.from), v);
      auto        dt = distance(g2, b.vertex(e.to), v);
      switch (vf.orientation[i]) {
        case Orientation::forward:
          CHECK(dt + 1 == df);
          break;
        case Orientation::backward:
          CHECK(df + 1 == dt);
          break;
        case Orientation::unoriented:
          CHECK(df == dt);
          break;
      }
    }
  }
}

TEST_CASE("atoms", "[cayley]") {
  auto z     = presentations::free_group(1);
  auto atoms = enumerate_atoms(z, 1, 6);
  CHECK(atoms.size() == 3);
  CHECK(std::count_if(atoms.begin(), atoms.end(), [](Atom const& a) {
          return a.infinite_candidate;
        }) == 2);

  auto f2 = enumerate_atoms(presentations::free_group(2), 1, 5);
  CHECK(f2.size() == 5);
  CHECK(std::count_if(f2.begin(), f2.end(), [](Atom const& a) {
          return a.infinite_candidate;
        }) == 4);

  auto root = enumerate_atoms(presentations::surface_genus2(), 0, 2);
  REQUIRE(root.size() == 1);
  CHECK(root[0].members_within_horizon.size() == 65);

  CHECK_THROWS_AS(enumerate_atoms(z, 3, 2), HorizonTooSmall);
}

TEST_CASE("atoms partition the horizon ball", "[cayley]") {
  auto g2    = presentations::surface_genus2();
  auto atoms = enumerate_atoms(g2, 1, 3);
  auto ball  = build_ball(g2, 3);
  auto unit  = build_ball(g2, 1);
  std::set<Word> seen;
  std::size_t    total = 0;
  for (auto const& a : atoms) {
    total += a.members_within_horizon.size();
    seen.insert(a.members_within_horizon.begin(),
                a.members_within_horizon.end());
    for (auto const& v : a.members_within_horizon) {
      CHECK(vector_field(unit, g2, v) == a.field);
    }
  }
  CHECK(total == ball.size());
  CHECK(seen.size() == ball.size());
}
