#include "bh/presentation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "bh/errors.hpp"

namespace bh {

  Presentation::Presentation(std::vector<std::string> names,
                             std::vector<CyclicWord>  relators)
      : _names(std::move(names)), _relators(std::move(relators)) {
    std::set<std::string> seen;
    for (auto const& name : _names) {
      if (name.empty() || name.find_first_of(" \t^") != std::string::npos
          || name == "1") {
        throw InvalidParameters("invalid generator name '" + name + "'");
      }
      if (!seen.insert(name).second) {
        throw InvalidParameters("duplicate generator name '" + name + "'");
      }
    }
    for (auto const& r : _relators) {
      if (r.size() == 0) {
        throw InvalidParameters("empty relator");
      }
      for (Letter x : r.word()) {
        if (x.gen >= _names.size()) {
          throw InvalidParameters("relator uses generator index "
                                  + std::to_string(x.gen)
                                  + " beyond the rank");
        }
      }
    }
  }

  Presentation Presentation::from_words(std::vector<std::string> names,
                                        std::vector<Word> const& relators) {
    std::vector<CyclicWord> cyclic;
    cyclic.reserve(relators.size());
    for (auto const& r : relators) {
      cyclic.push_back(cyclic_reduce(r));
    }
    return Presentation(std::move(names), std::move(cyclic));
  }

  Word Presentation::parse(std::string_view text) const {
    return parse_word(text, _names);
  }

  std::string Presentation::format(Word const& w) const {
    return format_word(w, _names);
  }

  Presentation Presentation::with_relator(Word const& w) const {
    auto rels = _relators;
    rels.push_back(cyclic_reduce(w));
    return Presentation(_names, std::move(rels));
  }

  bool Presentation::exponent_sums_are_invariant() const {
    for (auto const& r : _relators) {
      for (auto s : exponent_sums(r.word(), rank())) {
        if (s != 0) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<CircularRelator> circular_relators(Presentation const& p) {
    std::vector<CircularRelator> result;
    std::set<CyclicWord>         seen;
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      auto const& r = p.relators()[i];
      for (int orientation : {1, -1}) {
        auto c = orientation > 0 ? r : r.inverse();
        if (seen.insert(c).second) {
          result.push_back(CircularRelator{std::move(c), i, orientation});
        }
      }
    }
    return result;
  }

  std::size_t overlap_length(CircularRelator const& a,
                             std::size_t            offset_a,
                             CircularRelator const& b,
                             std::size_t            offset_b,
                             bool                   same) {
    std::size_t const cap = same ? a.word.size() - 1
                                 : std::min(a.word.size(), b.word.size());
    std::size_t len = 0;
    while (len < cap && a.word[offset_a + len] == b.word[offset_b + len]) {
      ++len;
    }
    return len;
  }

  DehnReport check_dehn_condition(Presentation const& p, Rational lambda) {
    if (lambda <= Rational(0) || lambda > Rational(1)) {
      throw InvalidParameters("lambda must lie in (0, 1], got "
                              + lambda.to_string());
    }
    DehnReport report;
    report.lambda   = lambda;
    report.relators = circular_relators(p);
    auto const& rels = report.relators;

    Rational best(0, 1);
    for (std::size_t i = 0; i < rels.size(); ++i) {
      for (std::size_t j = i; j < rels.size(); ++j) {
        bool const same = i == j;
        auto const ni = rels[i].word.size(), nj = rels[j].word.size();
        auto const shorter = static_cast<std::int64_t>(std::min(ni, nj));
        for (std::size_t oi = 0; oi < ni; ++oi) {
          for (std::size_t oj = same ? oi + 1 : 0; oj < nj; ++oj) {
            auto len = overlap_length(rels[i], oi, rels[j], oj, same);
            if (len == 0) {
              continue;
            }
            Rational ratio(static_cast<std::int64_t>(len), shorter);
            if (ratio > best) {
              best = ratio;
              report.witnesses.clear();
            }
            if (ratio == best && report.witnesses.size() < max_witnesses) {
              report.witnesses.push_back(OverlapWitness{i, j, oi, oj, len});
            }
          }
        }
      }
    }
    report.max_overlap_ratio = best;
    report.passes            = best < lambda;
    return report;
  }

  std::optional<DehnStep>
  dehn_reduce_once(Word const& w, std::vector<CircularRelator> const& rels) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].cancels(w[i + 1])) {
        DehnStep step{DehnStepKind::free_cancellation, i, 2, 0, 0, {}};
        step.result.reserve(w.size() - 2);
        step.result.insert(step.result.end(), w.begin(),
                           w.begin() + static_cast<std::ptrdiff_t>(i));
        step.result.insert(step.result.end(),
                           w.begin() + static_cast<std::ptrdiff_t>(i + 2),
                           w.end());
        return step;
      }
    }

    struct Match {
      std::size_t end, length, rel_size, rel, offset;
    };
    // Larger is better: rightmost end, then longest, then longer relator,
    // then earlier relator and offset.
    auto better = [](Match const& x, Match const& y) {
      return std::make_tuple(x.end, x.length, x.rel_size, y.rel, y.offset)
             > std::make_tuple(y.end, y.length, y.rel_size, x.rel, x.offset);
    };
    std::optional<Match> best;
    for (std::size_t r = 0; r < rels.size(); ++r) {
      auto const& c = rels[r].word;
      auto const  n = c.size();
      for (std::size_t off = 0; off < n; ++off) {
        for (std::size_t s = 0; s < w.size(); ++s) {
          std::size_t len = 0;
          while (len < n && s + len < w.size() && w[s + len] == c[off + len]) {
            ++len;
          }
          if (2 * len <= n) {
            continue;
          }
          Match m{s + len, len, n, r, off};
          if (!best || better(m, *best)) {
            best = m;
          }
        }
      }
    }
    if (!best) {
      return std::nullopt;
    }
    auto const& c     = rels[best->rel].word;
    auto const  n     = c.size();
    auto const  start = best->end - best->length;
    // The matched part u and the complement v satisfy u v = 1, so u = v^-1.
    Word complement;
    for (std::size_t k = best->length; k < n; ++k) {
      complement.push_back(c[best->offset + k]);
    }
    DehnStep step{DehnStepKind::relator_replacement, start, best->length,
                  best->rel, best->offset, {}};
    step.result.insert(step.result.end(), w.begin(),
                       w.begin() + static_cast<std::ptrdiff_t>(start));
    auto replacement = inverse(complement);
    step.result.insert(step.result.end(), replacement.begin(),
                       replacement.end());
    step.result.insert(step.result.end(),
                       w.begin() + static_cast<std::ptrdiff_t>(best->end),
                       w.end());
    return step;
  }

  DehnSolver::DehnSolver(Presentation const& p) {
    auto half = check_dehn_condition(p, Rational(1, 2));
    if (!half.passes) {
      throw NotDehnPresentation(
          "maximal overlap ratio " + half.max_overlap_ratio.to_string()
          + " is not below 1/2");
    }
    _rels    = std::move(half.relators);
    _warning = !(half.max_overlap_ratio < Rational(1, 6));
    for (auto const& r : _rels) {
      for (std::size_t i = 0; i < r.word.size(); ++i) {
        _codes = std::max(_codes, r.word[i].code() + 1);
      }
    }
    _starts.resize(std::size_t{_codes} * _codes);
    for (std::size_t r = 0; r < _rels.size(); ++r) {
      auto const& c = _rels[r].word;
      for (std::size_t off = 0; off < c.size(); ++off) {
        if (c.size() == 1) {
          _singles.push_back({r, off});
        } else {
          _starts[c[off].code() * _codes + c[off + 1].code()].push_back(
              {r, off});
        }
      }
    }
  }

  DehnResult DehnSolver::solve(Word const& w, bool keep_trace) const {
    DehnResult result;
    result.soundness_warning = _warning;
    Word current             = w;
    while (auto step = dehn_reduce_once(current, _rels)) {
      current = step->result;
      if (keep_trace) {
        result.trace.push_back(std::move(*step));
      }
    }
    result.identity = current.empty();
    result.residual = std::move(current);
    return result;
  }

  // Same choice of step as dehn_reduce_once, without building a trace.
  bool DehnSolver::reduce_once(Word& w, Word& scratch) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].cancels(w[i + 1])) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                w.begin() + static_cast<std::ptrdiff_t>(i + 2));
        return true;
      }
    }
    std::size_t best_end = 0, best_len = 0, best_n = 0, best_rel = 0,
                best_off = 0;
    bool found = false;
    auto consider = [&](std::size_t s, Start const& st) {
      auto const& c = _rels[st.rel].word;
      auto const  n = c.size();
      std::size_t len = 0;
      while (len < n && s + len < w.size() && w[s + len] == c[st.offset + len]) {
        ++len;
      }
      if (2 * len <= n) {
        return;
      }
      auto const end = s + len;
      if (!found
          || std::make_tuple(end, len, n, best_rel, best_off)
                 > std::make_tuple(best_end, best_len, best_n, st.rel,
                                   st.offset)) {
        found    = true;
        best_end = end;
        best_len = len;
        best_n   = n;
        best_rel = st.rel;
        best_off = st.offset;
      }
    };
    for (std::size_t s = 0; s < w.size(); ++s) {
      for (auto const& st : _singles) {
        consider(s, st);
      }
      if (s + 1 < w.size() && w[s].code() < _codes && w[s + 1].code() < _codes) {
        for (auto const& st : _starts[w[s].code() * _codes + w[s + 1].code()]) {
          consider(s, st);
        }
      }
    }
    if (!found) {
      return false;
    }
    auto const& c     = _rels[best_rel].word;
    auto const  start = best_end - best_len;
    scratch.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
    for (std::size_t k = best_n; k > best_len; --k) {
      scratch.push_back(c[best_off + k - 1].inverse());
    }
    scratch.insert(scratch.end(),
                   w.begin() + static_cast<std::ptrdiff_t>(best_end), w.end());
    w.swap(scratch);
    return true;
  }

  bool DehnSolver::is_identity(Word const& w) const {
    auto current = free_reduce(w);
    Word scratch;
    while (reduce_once(current, scratch)) {
    }
    return current.empty();
  }

  DehnResult dehn_solve(Word const& w, Presentation const& p) {
    return DehnSolver(p).solve(w, true);
  }

  namespace {
    // Unbiased draw from [0, bound) that does not depend on the standard
    // library's distribution implementation.
    std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
      std::uint64_t const limit = UINT64_MAX - UINT64_MAX % bound;
      std::uint64_t       x;
      do {
        x = rng();
      } while (x >= limit);
      return x % bound;
    }

    std::vector<std::string> letter_names(std::size_t rank) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < rank; ++i) {
        names.push_back(rank <= 26 ? std::string(1, static_cast<char>('a' + i))
                                   : "x" + std::to_string(i));
      }
      return names;
    }
  }  // namespace

  Presentation random_presentation(std::size_t   num_gens,
                                   std::size_t   num_relators,
                                   std::size_t   length,
                                   std::uint64_t seed) {
    if (num_gens < 2 || length < 1) {
      throw InvalidParameters("random_presentation needs num_gens >= 2 and "
                              "length >= 1");
    }
    std::mt19937_64         rng(seed);
    std::vector<CyclicWord> relators;
    auto const              letters = 2 * num_gens;
    while (relators.size() < num_relators) {
      // Uniform over reduced words, then reject the ones that are not
      // cyclically reduced.
      Word w;
      w.push_back(Letter::from_code(static_cast<std::uint32_t>(
          draw(rng, letters))));
      while (w.size() < length) {
        auto c = static_cast<std::uint32_t>(draw(rng, letters - 1));
        if (c >= w.back().inverse().code()) {
          ++c;
        }
        w.push_back(Letter::from_code(c));
      }
      if (is_cyclically_reduced(w)) {
        relators.emplace_back(w);
      }
    }
    return Presentation(letter_names(num_gens), std::move(relators));
  }

  namespace presentations {
    Presentation surface_genus2() {
      std::vector<std::string> names{"a", "b", "c", "d"};
      return Presentation::from_words(
          names, {parse_word("a b a^-1 b^-1 c d c^-1 d^-1", names)});
    }

    Presentation free_group(std::size_t rank) {
      return Presentation(letter_names(rank), {});
    }

    Presentation cyclic(std::size_t n) {
      return Presentation::from_words(
          {"x"}, {gen_word(0, static_cast<int>(n))});
    }
  }  // namespace presentations

}  // namespace bh
