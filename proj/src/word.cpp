#include "bh/word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "bh/errors.hpp"
#include "bh/rational.hpp"

namespace bh {

  Word gen_word(std::uint32_t gen, int power) {
    Letter x{gen, static_cast<std::int8_t>(power < 0 ? -1 : 1)};
    return Word(static_cast<std::size_t>(std::abs(power)), x);
  }

  Word inverse(Word const& w) {
    Word result;
    result.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      result.push_back(it->inverse());
    }
    return result;
  }

  Word concat(Word const& u, Word const& v) {
    Word result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  Word free_reduce(Word const& w) {
    Word stack;
    stack.reserve(w.size());
    for (Letter x : w) {
      if (!stack.empty() && stack.back().cancels(x)) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return stack;
  }

  bool is_reduced(Word const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i - 1].cancels(w[i])) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(Word const& w) noexcept {
    return is_reduced(w)
           && (w.size() < 2 || !w.front().cancels(w.back()));
  }

  bool shortlex_less(Word const& u, Word const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  Word rotate(Word const& w, std::size_t k) {
    Word result;
    if (w.empty()) {
      return result;
    }
    k %= w.size();
    result.reserve(w.size());
    result.insert(result.end(), w.begin() + static_cast<std::ptrdiff_t>(k),
                  w.end());
    result.insert(result.end(), w.begin(),
                  w.begin() + static_cast<std::ptrdiff_t>(k));
    return result;
  }

  Word min_rotation(Word const& w) {
    std::size_t const n    = w.size();
    std::size_t       best = 0;
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        auto a = w[(k + i) % n];
        auto b = w[(best + i) % n];
        if (a != b) {
          if (a < b) {
            best = k;
          }
          break;
        }
      }
    }
    return rotate(w, best);
  }

  std::vector<std::int64_t> exponent_sums(Word const& w, std::size_t rank) {
    std::vector<std::int64_t> sums(rank, 0);
    for (Letter x : w) {
      sums.at(x.gen) += x.sign;
    }
    return sums;
  }

  CyclicWord::CyclicWord(Word const& w) {
    if (w.empty()) {
      throw EmptyAfterReduction("a cyclic word must be nonempty");
    }
    if (!is_cyclically_reduced(w)) {
      throw InvalidParameters("word is not cyclically reduced");
    }
    _word = min_rotation(w);
  }

  CyclicWord CyclicWord::inverse() const {
    return CyclicWord(bh::inverse(_word));
  }

  CyclicWord cyclic_reduce(Word const& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo].cancels(r[hi - 1])) {
      ++lo;
      --hi;
    }
    if (lo == hi) {
      throw EmptyAfterReduction("word is freely trivial");
    }
    return CyclicWord(Word(r.begin() + static_cast<std::ptrdiff_t>(lo),
                           r.begin() + static_cast<std::ptrdiff_t>(hi)));
  }

  namespace {
    std::ptrdiff_t find_name(std::string_view name,
                             std::span<std::string const> names) {
      auto it = std::find(names.begin(), names.end(), name);
      return it == names.end() ? -1 : it - names.begin();
    }
  }  // namespace

  Word parse_word(std::string_view text, std::span<std::string const> names) {
    Word        result;
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
        ++pos;
      }
      if (pos == text.size()) {
        break;
      }
      auto end = text.find_first_of(" \t", pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto token = text.substr(pos, end - pos);
      pos        = end;

      auto        caret = token.find('^');
      auto        name  = token.substr(0, caret);
      long long   power = 1;
      if (caret != std::string_view::npos) {
        auto exp = token.substr(caret + 1);
        auto [ptr, ec]
            = std::from_chars(exp.data(), exp.data() + exp.size(), power);
        if (ec != std::errc() || ptr != exp.data() + exp.size()
            || power == 0) {
          throw ParseError("bad exponent in token '" + std::string(token)
                           + "'");
        }
      }
      if (name == "1" && caret == std::string_view::npos) {
        continue;
      }
      auto g = find_name(name, names);
      if (g < 0) {
        throw ParseError("unknown generator '" + std::string(name) + "'");
      }
      auto more = gen_word(static_cast<std::uint32_t>(g),
                           static_cast<int>(power));
      result.insert(result.end(), more.begin(), more.end());
    }
    return result;
  }

  std::string format_word(Word const& w, std::span<std::string const> names) {
    std::string out;
    for (Letter x : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += names[x.gen];
      if (x.sign < 0) {
        out += "^-1";
      }
    }
    return out.empty() ? "1" : out;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Letter x : w) {
      h ^= x.code() + 1;
      h *= 1099511628211ULL;
    }
    return h;
  }

  Rational Rational::parse(std::string_view text) {
    auto         slash = text.find('/');
    std::int64_t num = 0, den = 1;
    auto         parse_int = [&](std::string_view s, std::int64_t& out) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError("bad rational '" + std::string(text) + "'");
      }
    };
    if (slash == std::string_view::npos) {
      parse_int(text, num);
    } else {
      parse_int(text.substr(0, slash), num);
      parse_int(text.substr(slash + 1), den);
    }
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

}  // namespace bh
