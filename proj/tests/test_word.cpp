#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "bh/errors.hpp"
#include "bh/presentation.hpp"
#include "bh/word.hpp"

using namespace bh;

namespace {
  std::vector<std::string> const abcd{"a", "b", "c", "d"};

  Word w(std::string_view text) {
    return parse_word(text, abcd);
  }

  // Naive free reduction: cancel any adjacent pair until none is left.
  Word naive_reduce(Word v) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].cancels(v[i + 1])) {
          v.erase(v.begin() + i, v.begin() + i + 2);
          changed = true;
          break;
        }
      }
    }
    return v;
  }

  Word random_word(std::mt19937_64& rng, std::size_t len, std::uint32_t rank) {
    std::uniform_int_distribution<std::uint32_t> pick(0, 2 * rank - 1);
    Word                                         out;
    for (std::size_t i = 0; i < len; ++i) {
      out.push_back(Letter::from_code(pick(rng)));
    }
    return out;
  }

  std::vector<std::uint32_t> codes(Word const& v) {
    std::vector<std::uint32_t> out;
    for (auto x : v) {
      out.push_back(x.code());
    }
    return out;
  }
}  // namespace

TEST_CASE("parse and format", "[word]") {
  CHECK(format_word(w("a b^-1 c"), abcd) == "a b^-1 c");
  CHECK(w("a^3") == w("a a a"));
  CHECK(w("b^-2") == w("b^-1 b^-1"));
  CHECK(w("1").empty());
  CHECK(w("").empty());
  CHECK_THROWS_AS(w("e"), ParseError);
  CHECK_THROWS_AS(w("a^"), ParseError);
  CHECK(format_word(Word{}, abcd) == "1");
}

TEST_CASE("free reduction", "[word]") {
  CHECK(free_reduce(w("a a^-1")).empty());
  CHECK(free_reduce(w("a b b^-1 a")) == w("a a"));
  CHECK(free_reduce(w("d^-1 a a^-1 d")).empty());

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto v = random_word(rng, rng() % 20, 2);
    auto r = free_reduce(v);
    CHECK(r == naive_reduce(v));
    CHECK(is_reduced(r));
    CHECK(free_reduce(r) == r);
    CHECK(free_reduce(concat(v, inverse(v))).empty());
  }
}

TEST_CASE("cyclic reduction", "[word]") {
  CHECK(cyclic_reduce(w("a b a^-1")).word() == w("b"));
  CHECK(cyclic_reduce(w("a")).word() == w("a"));
  CHECK(cyclic_reduce(w("b a a b^-1")).word() == w("a a"));
  // b a b^-1 a is cyclically reduced already; its least rotation starts at a.
  CHECK(cyclic_reduce(w("b a b^-1 a")).word() == w("a b a b^-1"));
  CHECK_THROWS_AS(cyclic_reduce(w("a b b^-1 a^-1")), EmptyAfterReduction);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    auto v = free_reduce(random_word(rng, 1 + rng() % 12, 2));
    if (v.empty()) {
      continue;
    }
    // Oracle: strip matching ends by hand, then take the least rotation by
    // trying all of them.
    auto s = v;
    while (s.size() > 1 && s.front().cancels(s.back())) {
      s = Word(s.begin() + 1, s.end() - 1);
    }
    auto best = s;
    for (std::size_t k = 0; k < s.size(); ++k) {
      Word r(s.begin() + k, s.end());
      r.insert(r.end(), s.begin(), s.begin() + k);
      if (codes(r) < codes(best)) {
        best = r;
      }
    }
    auto c = cyclic_reduce(v);
    CHECK(c.word() == best);
    CHECK(is_cyclically_reduced(c.word()));
    CHECK(min_rotation(c.word()) == c.word());
  }
}

TEST_CASE("cyclic words compare as circular sequences", "[word]") {
  auto x = CyclicWord(w("a b c"));
  CHECK(x == CyclicWord(w("b c a")));
  CHECK(x == CyclicWord(w("c a b")));
  CHECK_FALSE(x == CyclicWord(w("a c b")));
  CHECK(x.inverse() == CyclicWord(w("c^-1 b^-1 a^-1")));
  CHECK(x[4] == x[1]);
}

TEST_CASE("shortlex", "[word]") {
  CHECK(shortlex_less(w("b"), w("a a")));
  CHECK(shortlex_less(w("a"), w("a^-1")));
  CHECK(shortlex_less(w("a^-1"), w("b")));
  CHECK_FALSE(shortlex_less(w("a"), w("a")));
}

TEST_CASE("circular relators", "[presentation]") {
  auto g2   = presentations::surface_genus2();
  auto rels = circular_relators(g2);
  REQUIRE(rels.size() == 2);
  std::set<Word> rotations;
  for (auto const& r : rels) {
    REQUIRE(r.word.size() == 8);
    for (std::size_t k = 0; k < 8; ++k) {
      rotations.insert(r.word.rotation(k));
    }
  }
  CHECK(rotations.size() == 16);

  CHECK(circular_relators(presentations::free_group(2)).empty());

  auto a3 = Presentation::from_words({"a"}, {gen_word(0, 3)});
  auto r3 = circular_relators(a3);
  REQUIRE(r3.size() == 2);
  CHECK(r3[0].word.word() == gen_word(0, 3));
  CHECK(r3[1].word.word() == gen_word(0, -3));
}

namespace {
  // Longest common subword of two cyclic words, compared position by
  // position, skipping the trivial self-alignment.
  Rational brute_ratio(Presentation const& p) {
    auto     rels = circular_relators(p);
    Rational best{0, 1};
    for (std::size_t i = 0; i < rels.size(); ++i) {
      for (std::size_t j = 0; j < rels.size(); ++j) {
        auto const& a = rels[i].word;
        auto const& b = rels[j].word;
        auto        m = std::min(a.size(), b.size());
        for (std::size_t s = 0; s < a.size(); ++s) {
          for (std::size_t t = 0; t < b.size(); ++t) {
            if (i == j && s == t) {
              continue;
            }
            std::size_t len = 0;
            while (len < m && a[s + len] == b[t + len]) {
              ++len;
            }
            if (i == j) {
              len = std::min(len, a.size() - 1);
            }
            best = std::max(best, Rational(static_cast<std::int64_t>(len),
                                           static_cast<std::int64_t>(m)));
          }
        }
      }
    }
    return best;
  }
}  // namespace

TEST_CASE("dehn condition", "[presentation]") {
  auto g2 = check_dehn_condition(presentations::surface_genus2(), {1, 2});
  CHECK(g2.passes);
  CHECK(g2.max_overlap_ratio == Rational(1, 8));
  CHECK(g2.max_overlap_ratio.to_string() == "1/8");

  auto free = check_dehn_condition(presentations::free_group(3), {1, 6});
  CHECK(free.passes);
  CHECK(free.max_overlap_ratio == Rational(0, 1));

  auto a6 = check_dehn_condition(
      Presentation::from_words({"a"}, {gen_word(0, 6)}), {1, 2});
  CHECK_FALSE(a6.passes);
  CHECK(a6.max_overlap_ratio == Rational(5, 6));
  REQUIRE_FALSE(a6.witnesses.empty());
  CHECK(a6.witnesses.front().length == 5);

  CHECK_THROWS_AS(check_dehn_condition(presentations::free_group(1), {0, 1}),
                  InvalidParameters);
  CHECK_THROWS_AS(check_dehn_condition(presentations::free_group(1), {3, 2}),
                  InvalidParameters);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto p = random_presentation(2, 2, 4 + seed % 9, seed);
    CHECK(check_dehn_condition(p, {1, 2}).max_overlap_ratio == brute_ratio(p));
  }
}

TEST_CASE("worked reduction trace", "[presentation]") {
  auto       g2 = presentations::surface_genus2();
  DehnSolver solver(g2);
  auto       start = w("d^-1 a c d c^-1 d^-1 a b a^-1 a^-1 b^-1 c d c^-1");
  auto       r     = solver.solve(start, true);
  CHECK(r.identity);
  CHECK(r.residual.empty());
  std::vector<Word> expected{
      w("d^-1 a c d c^-1 d^-1 a b a^-1 b^-1 a^-1 d"),
      w("d^-1 a a^-1 d"),
      w("d^-1 d"),
      w(""),
  };
  REQUIRE(r.trace.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(r.trace[i].result == expected[i]);
  }
  CHECK(r.trace[0].kind == DehnStepKind::relator_replacement);
  CHECK(r.trace[1].kind == DehnStepKind::relator_replacement);
  CHECK(r.trace[2].kind == DehnStepKind::free_cancellation);
  CHECK(r.trace[3].kind == DehnStepKind::free_cancellation);

  CHECK_FALSE(dehn_reduce_once(w("a b"), solver.relators()).has_value());
  CHECK(dehn_solve(Word{}, g2).identity);
  CHECK_FALSE(dehn_solve(w("a"), g2).identity);
}

TEST_CASE("dehn solver on random consequences", "[presentation]") {
  auto            g2 = presentations::surface_genus2();
  DehnSolver      solver(g2);
  auto const      r = g2.relators()[0].word();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Word product;
    for (int k = 0; k < 4; ++k) {
      auto u   = free_reduce(random_word(rng, rng() % 5, 4));
      auto rel = rng() % 2 ? r : inverse(r);
      product  = concat(product, concat(u, concat(rel, inverse(u))));
    }
    CHECK(solver.is_identity(free_reduce(product)));
  }
  // Abelianisation oracle: a nonzero exponent sum is never trivial.
  for (int i = 0; i < 200; ++i) {
    auto v    = free_reduce(random_word(rng, 1 + rng() % 10, 4));
    auto sums = exponent_sums(v, 4);
    if (std::any_of(sums.begin(), sums.end(), [](auto s) { return s != 0; })) {
      CHECK_FALSE(solver.is_identity(v));
    }
  }
}

TEST_CASE("solver rejects presentations failing the check", "[presentation]") {
  auto a6 = Presentation::from_words({"a"}, {gen_word(0, 6)});
  CHECK_THROWS_AS(DehnSolver(a6), NotDehnPresentation);
  DehnSolver g2(presentations::surface_genus2());
  CHECK(g2.soundness_warning() == false);
}

TEST_CASE("random presentations", "[presentation]") {
  auto p = random_presentation(2, 1, 1, 99);
  REQUIRE(p.relators().size() == 1);
  CHECK(p.relators()[0].size() == 1);

  auto x = random_presentation(2, 2, 40, 7);
  auto y = random_presentation(2, 2, 40, 7);
  REQUIRE(x.relators().size() == 2);
  CHECK(x.relators() == y.relators());
  for (auto const& r : x.relators()) {
    CHECK(r.size() == 40);
    CHECK(is_cyclically_reduced(r.word()));
  }
  CHECK_FALSE(random_presentation(2, 2, 40, 8).relators() == x.relators());
  CHECK_THROWS_AS(random_presentation(0, 1, 5, 1), InvalidParameters);
  CHECK_THROWS_AS(random_presentation(2, 1, 0, 1), InvalidParameters);
}

TEST_CASE("random relators are uniform over cyclically reduced words",
          "[presentation]") {
  // Length 3 over two generators: 4*3*3 reduced words, of which the ones
  // whose last letter does not cancel the first are cyclically reduced.
  std::map<Word, int> counts;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    auto p = random_presentation(2, 1, 3, seed);
    // CyclicWord stores the least rotation, so count rotation classes.
    counts[p.relators()[0].word()]++;
  }
  std::size_t cyclic = 0;
  std::map<Word, int> expected;
  for (std::uint32_t x = 0; x < 4; ++x) {
    for (std::uint32_t y = 0; y < 4; ++y) {
      for (std::uint32_t z = 0; z < 4; ++z) {
        Word v{Letter::from_code(x), Letter::from_code(y),
               Letter::from_code(z)};
        if (is_cyclically_reduced(v)) {
          ++cyclic;
          expected[min_rotation(v)]++;
        }
      }
    }
  }
  CHECK(cyclic == 28);
  CHECK(counts.size() == expected.size());
  for (auto const& [v, k] : expected) {
    double const want = 4000.0 * k / 28.0;
    CHECK(std::abs(counts[v] - want) < 5 * std::sqrt(want) + 5);
  }
}
