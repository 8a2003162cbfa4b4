#ifndef BH_RATIONAL_HPP_
#define BH_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace bh {

  // Exact ratio of 64-bit integers, always stored in lowest terms with a
  // positive denominator.
  class Rational {
   public:
    constexpr Rational() = default;

    constexpr Rational(std::int64_t num, std::int64_t den = 1) {
      if (den == 0) {
        throw InvalidParameters("zero denominator");
      }
      if (den < 0) {
        num = -num;
        den = -den;
      }
      auto g = std::gcd(num, den);
      _num   = num / g;
      _den   = den / g;
    }

    [[nodiscard]] constexpr std::int64_t num() const noexcept {
      return _num;
    }
    [[nodiscard]] constexpr std::int64_t den() const noexcept {
      return _den;
    }

    friend constexpr bool operator==(Rational const&, Rational const&)
        = default;

    friend constexpr std::strong_ordering operator<=>(Rational const& a,
                                                      Rational const& b) {
      auto lhs = static_cast<__int128>(a._num) * b._den;
      auto rhs = static_cast<__int128>(b._num) * a._den;
      return lhs <=> rhs;
    }

    [[nodiscard]] std::string to_string() const {
      return std::to_string(_num) + "/" + std::to_string(_den);
    }

    // Accepts "p/q" or a bare integer.
    static Rational parse(std::string_view text);

   private:
    std::int64_t _num = 0;
    std::int64_t _den = 1;
  };

}  // namespace bh

#endif  // BH_RATIONAL_HPP_
