#ifndef BH_WORD_HPP_
#define BH_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bh {

  // A generator or its inverse. Letters are totally ordered by code(), which
  // gives x_0 < x_0^-1 < x_1 < x_1^-1 < ...; shortlex comparisons of words
  // use this order.
  struct Letter {
    std::uint32_t gen  = 0;
    std::int8_t   sign = 1;

    [[nodiscard]] constexpr std::uint32_t code() const noexcept {
      return 2 * gen + (sign < 0 ? 1 : 0);
    }

    [[nodiscard]] static constexpr Letter from_code(std::uint32_t c) noexcept {
      return Letter{c / 2, static_cast<std::int8_t>((c % 2) == 0 ? 1 : -1)};
    }

    [[nodiscard]] constexpr Letter inverse() const noexcept {
      return Letter{gen, static_cast<std::int8_t>(-sign)};
    }

    [[nodiscard]] constexpr bool cancels(Letter other) const noexcept {
      return gen == other.gen && sign == -other.sign;
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr std::strong_ordering operator<=>(Letter a,
                                                      Letter b) noexcept {
      return a.code() <=> b.code();
    }
  };

  using Word = std::vector<Letter>;

  [[nodiscard]] Word gen_word(std::uint32_t gen, int power = 1);

  [[nodiscard]] Word inverse(Word const& w);
  [[nodiscard]] Word concat(Word const& u, Word const& v);

  [[nodiscard]] Word free_reduce(Word const& w);
  [[nodiscard]] bool is_reduced(Word const& w) noexcept;
  [[nodiscard]] bool is_cyclically_reduced(Word const& w) noexcept;

  // Shortlex order on words.
  [[nodiscard]] bool shortlex_less(Word const& u, Word const& v) noexcept;

  // Rotation of w by k: w[k..] w[..k].
  [[nodiscard]] Word rotate(Word const& w, std::size_t k);

  // Lexicographically least rotation.
  [[nodiscard]] Word min_rotation(Word const& w);

  // Exponent sum of each generator; the vector has length rank.
  [[nodiscard]] std::vector<std::int64_t> exponent_sums(Word const& w,
                                                        std::size_t rank);

  // A cyclically reduced word, stored as its least rotation. Two CyclicWords
  // compare equal iff they are the same circular sequence of letters.
  class CyclicWord {
   public:
    CyclicWord() = default;

    // Requires w to be cyclically reduced and nonempty.
    explicit CyclicWord(Word const& w);

    [[nodiscard]] Word const& word() const noexcept {
      return _word;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _word.size();
    }
    [[nodiscard]] Letter operator[](std::size_t i) const noexcept {
      return _word[i % _word.size()];
    }
    [[nodiscard]] Word rotation(std::size_t k) const {
      return rotate(_word, k);
    }
    [[nodiscard]] CyclicWord inverse() const;

    friend bool operator==(CyclicWord const&, CyclicWord const&) = default;
    friend std::strong_ordering operator<=>(CyclicWord const& a,
                                            CyclicWord const& b) {
      return a._word <=> b._word;
    }

   private:
    Word _word;
  };

  // Free reduction followed by stripping conjugating letter pairs; the result
  // is conjugate to w in the free group. Throws EmptyAfterReduction when w
  // is freely trivial.
  [[nodiscard]] CyclicWord cyclic_reduce(Word const& w);

  // Words are written as space-separated generator names, inverses with a
  // "^-1" suffix ("a b^-1"). On input, "x^k" for any nonzero integer k is
  // also accepted and expanded. "1" or an empty string is the empty word.
  [[nodiscard]] Word parse_word(std::string_view text,
                                std::span<std::string const> names);
  [[nodiscard]] std::string format_word(Word const& w,
                                        std::span<std::string const> names);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

}  // namespace bh

#endif  // BH_WORD_HPP_
