#include "bh/kuznetsov.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace bh {

  Word replay(std::vector<ConjugateFactor> const& factors,
              Presentation const&                 p) {
    Word product;
    for (auto const& f : factors) {
      auto r = p.relators().at(f.relator).word();
      if (f.sign < 0) {
        r = inverse(r);
      }
      product = free_reduce(
          concat(product, concat(f.conjugator, concat(r, inverse(f.conjugator)))));
    }
    return product;
  }

  ConsequenceStream::ConsequenceStream(Presentation p, std::size_t work_limit)
      : _p(std::move(p)), _work_limit(work_limit) {
    for (auto const& r : _p.relators()) {
      _relator_words.push_back(r.word());
    }
    _seen.insert(Word{});
    _frontier.push_back(Word{});
  }

  void ConsequenceStream::extend_pool(std::size_t length) {
    while (_pool_end.size() <= length) {
      if (!_pool_end.empty()) {
        std::vector<Word> next;
        auto const        letters = static_cast<std::uint32_t>(2 * _p.rank());
        for (auto const& u : _frontier) {
          for (std::uint32_t c = 0; c < letters; ++c) {
            auto x = Letter::from_code(c);
            if (!u.empty() && u.back().cancels(x)) {
              continue;
            }
            auto v = u;
            v.push_back(x);
            next.push_back(std::move(v));
          }
        }
        _frontier = std::move(next);
      }
      for (auto const& u : _frontier) {
        for (std::size_t r = 0; r < _relator_words.size(); ++r) {
          for (int sign : {1, -1}) {
            auto rel = sign > 0 ? _relator_words[r] : inverse(_relator_words[r]);
            auto w   = free_reduce(concat(u, concat(rel, inverse(u))));
            if (_pool_seen.insert(w).second) {
              _factors.push_back(ConjugateFactor{u, r, sign});
              _factor_words.push_back(std::move(w));
            }
          }
        }
      }
      _pool_end.push_back(_factors.size());
    }
  }

  void ConsequenceStream::next_stage() {
    if (_length + 1 < _diagonal) {
      ++_length;
    } else {
      ++_diagonal;
      _length = 0;
    }
    _depth    = _diagonal - _length;
    _in_stage = false;
  }

  // Sets up the cursor for stage (L, k); false if the stage is skipped.
  bool ConsequenceStream::start_stage() {
    extend_pool(_length);
    if (_length > 0 && _pool_end[_length] == _pool_end[_length - 1]) {
      return false;
    }
    if (_searches.size() <= _length) {
      _searches.resize(_length + 1);
    }
    auto& s = _searches[_length];
    if (s.nodes.empty()) {
      s.nodes.push_back(Node{Word{}, SIZE_MAX, 0});
      s.layer_start = {0, 1};
      s.visited.insert(Word{});
    }
    _node     = s.layer_start[_depth - 1];
    _node_end = s.layer_start[_depth];
    _factor   = 0;
    _in_stage = true;
    return true;
  }

  std::vector<ConjugateFactor>
  ConsequenceStream::certificate(Search const& s, std::size_t node) const {
    std::vector<ConjugateFactor> out;
    for (; s.nodes[node].parent != SIZE_MAX; node = s.nodes[node].parent) {
      out.push_back(_factors[s.nodes[node].factor]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::optional<Consequence> ConsequenceStream::next() {
    if (_relator_words.empty()) {
      return std::nullopt;
    }
    while (_work < _work_limit) {
      if (!_in_stage && !start_stage()) {
        next_stage();
        continue;
      }
      auto&      s    = _searches[_length];
      auto const pool = _pool_end[_length];
      if (_node == _node_end || pool == 0) {
        s.layer_start.push_back(s.nodes.size());
        next_stage();
        continue;
      }
      auto const j = _factor;
      auto const i = _node;
      if (++_factor == pool) {
        _factor = 0;
        ++_node;
      }
      ++_work;
      auto w = free_reduce(concat(s.nodes[i].word, _factor_words[j]));
      if (!s.visited.insert(w).second) {
        continue;
      }
      s.nodes.push_back(Node{w, i, j});
      if (_seen.insert(w).second) {
        return Consequence{std::move(w), certificate(s, s.nodes.size() - 1)};
      }
    }
    return std::nullopt;
  }

  std::vector<Consequence> enumerate_consequences(Presentation const& p,
                                                  std::size_t budget) {
    ConsequenceStream        stream(p, budget * work_factor);
    std::vector<Consequence> result;
    while (result.size() < budget) {
      auto c = stream.next();
      if (!c) {
        break;
      }
      result.push_back(std::move(*c));
    }
    return result;
  }

  namespace {
    // The first search: looks for the target word among consequences.
    class IdentitySearch {
     public:
      IdentitySearch(Presentation const& p, Word target, std::size_t budget)
          : _stream(p, budget * work_factor),
            _target(std::move(target)),
            _budget(budget) {}

      // Returns false once exhausted; sets hit when the target appears.
      bool step() {
        if (_emitted >= _budget) {
          return false;
        }
        auto c = _stream.next();
        if (!c) {
          return false;
        }
        ++_emitted;
        if (c->word == _target) {
          hit         = true;
          certificate = std::move(c->factors);
        }
        return true;
      }

      bool                         hit = false;
      std::vector<ConjugateFactor> certificate;

     private:
      ConsequenceStream _stream;
      Word              _target;
      std::size_t       _budget;
      std::size_t       _emitted = 0;
    };

    // The second search: derives every generator from p plus w.
    class TrivialitySearch {
     public:
      TrivialitySearch(Presentation const& extended, std::size_t budget)
          : _stream(extended, budget * work_factor),
            _rank(extended.rank()),
            _budget(budget) {}

      bool step() {
        if (_emitted >= _budget) {
          return false;
        }
        auto c = _stream.next();
        if (!c) {
          return false;
        }
        ++_emitted;
        if (c->word.size() == 1) {
          auto x = c->word.front();
          if (!derived.count(x.gen)) {
            derived.emplace(x.gen, GeneratorDerivation{x.gen, x.sign,
                                                       std::move(c->factors)});
          }
          hit = derived.size() == _rank;
        }
        return true;
      }

      bool                                             hit = false;
      std::map<std::uint32_t, GeneratorDerivation>     derived;

     private:
      ConsequenceStream _stream;
      std::size_t       _rank;
      std::size_t       _budget;
      std::size_t       _emitted = 0;
    };

    Verdict finish_identity(std::size_t steps, IdentitySearch& g) {
      Verdict v;
      v.kind                 = VerdictKind::identity;
      v.steps_used           = steps;
      v.identity_certificate = std::move(g.certificate);
      return v;
    }

    Verdict finish_not_identity(std::size_t steps, TrivialitySearch& h) {
      Verdict v;
      v.kind       = VerdictKind::not_identity;
      v.steps_used = steps;
      for (auto& [gen, d] : h.derived) {
        v.generator_certificates.push_back(std::move(d));
      }
      return v;
    }

    constexpr std::size_t none = SIZE_MAX;
  }  // namespace

  Verdict kuznetsov_decide(Presentation const& p,
                           Word const&         w,
                           std::size_t         budget,
                           DecideMode          mode) {
    auto const target = free_reduce(w);
    if (target.empty()) {
      Verdict v;
      v.kind = VerdictKind::identity;
      return v;
    }
    IdentitySearch   g(p, target, budget);
    TrivialitySearch h(p.with_relator(target), budget);

    if (mode == DecideMode::interleaved) {
      std::size_t steps  = 0;
      bool        g_live = true, h_live = true;
      while (g_live || h_live) {
        if (g_live && (g_live = g.step())) {
          ++steps;
          if (g.hit) {
            return finish_identity(steps, g);
          }
        }
        if (h_live && (h_live = h.step())) {
          ++steps;
          if (h.hit) {
            return finish_not_identity(steps, h);
          }
        }
      }
      Verdict v;
      v.steps_used = steps;
      return v;
    }

    // Two workers, each recording the round of its hit; a worker stops once
    // the other has hit in an earlier round. Round r holds the r-th
    // candidate of the first search, then the r-th of the second.
    std::atomic<std::size_t> g_hit{none}, h_hit{none};
    std::size_t              g_count = 0, h_count = 0;
    {
      std::jthread first([&] {
        while (g_count + 1 <= h_hit.load() && g.step()) {
          ++g_count;
          if (g.hit) {
            g_hit = g_count;
            return;
          }
        }
      });
      std::jthread second([&] {
        while (h_count + 1 < g_hit.load() && h.step()) {
          ++h_count;
          if (h.hit) {
            h_hit = h_count;
            return;
          }
        }
      });
    }
    std::size_t steps = 0;
    for (std::size_t round = 1;; ++round) {
      if (round > g_count && round > h_count) {
        break;
      }
      if (round <= g_count) {
        ++steps;
        if (g_hit == round) {
          return finish_identity(steps, g);
        }
      }
      if (round <= h_count) {
        ++steps;
        if (h_hit == round) {
          return finish_not_identity(steps, h);
        }
      }
    }
    Verdict v;
    v.steps_used = steps;
    return v;
  }

}  // namespace bh
