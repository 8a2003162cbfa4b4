#include "bh/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>

#include "bh/errors.hpp"

namespace bh {

  namespace {
    char letter(std::size_t x) {
      return static_cast<char>('0' + x);
    }

    std::size_t index_of(char c) {
      return static_cast<std::size_t>(c - '0');
    }

    // Breadth-first order of the states reachable from `from`.
    std::vector<std::size_t>
    bfs_order(std::vector<std::vector<Transition>> const& delta,
              std::size_t                                 from) {
      std::vector<char>        seen(delta.size(), 0);
      std::vector<std::size_t> order{from};
      seen[from] = 1;
      for (std::size_t head = 0; head < order.size(); ++head) {
        for (auto const& tr : delta[order[head]]) {
          if (!seen[tr.next]) {
            seen[tr.next] = 1;
            order.push_back(tr.next);
          }
        }
      }
      return order;
    }
  }  // namespace

  void check_word(CantorWord const& w, std::size_t d) {
    for (char c : w) {
      if (c < '0' || index_of(c) >= d) {
        throw InvalidParameters("letter '" + std::string(1, c)
                                + "' outside the alphabet of size "
                                + std::to_string(d));
      }
    }
  }

  Transducer::Transducer(std::size_t                          d,
                         std::vector<std::string>             names,
                         std::size_t                          initial,
                         std::vector<std::vector<Transition>> delta)
      : _d(d), _names(), _initial(0), _delta() {
    if (d < 2 || d > 10) {
      throw InvalidParameters("alphabet size must be between 2 and 10");
    }
    if (names.size() != delta.size() || delta.empty()) {
      throw InvalidParameters("state names and transition table disagree");
    }
    if (initial >= delta.size()) {
      throw InvalidParameters("initial state out of range");
    }
    std::set<std::string> distinct(names.begin(), names.end());
    if (distinct.size() != names.size()) {
      throw InvalidParameters("state names must be distinct");
    }
    for (auto const& row : delta) {
      if (row.size() != d) {
        throw InvalidParameters("transition table is not total");
      }
      for (auto const& tr : row) {
        check_word(tr.output, d);
        if (tr.next >= delta.size()) {
          throw InvalidParameters("transition to a missing state");
        }
      }
    }
    // Keep reachable states in their original order.
    auto reach = bfs_order(delta, initial);
    std::sort(reach.begin(), reach.end());
    std::vector<std::size_t> renumber(delta.size(), 0);
    for (std::size_t i = 0; i < reach.size(); ++i) {
      renumber[reach[i]] = i;
    }
    for (auto s : reach) {
      _names.push_back(std::move(names[s]));
      auto row = delta[s];
      for (auto& tr : row) {
        tr.next = renumber[tr.next];
      }
      _delta.push_back(std::move(row));
    }
    _initial = renumber[initial];
  }

  Transducer Transducer::identity(std::size_t d) {
    std::vector<Transition> row;
    for (std::size_t x = 0; x < d; ++x) {
      row.push_back(Transition{std::string(1, letter(x)), 0});
    }
    return Transducer(d, {"id"}, 0, {row});
  }

  std::size_t Transducer::state_index(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      throw InvalidParameters("no state named '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - _names.begin());
  }

  Transducer Transducer::with_initial(std::size_t state) const {
    return Transducer(_d, _names, state, _delta);
  }

  std::size_t Transducer::max_output_length() const noexcept {
    std::size_t best = 0;
    for (auto const& row : _delta) {
      for (auto const& tr : row) {
        best = std::max(best, tr.output.size());
      }
    }
    return best;
  }

  std::string Transducer::structure_key() const {
    auto                     order = bfs_order(_delta, _initial);
    std::vector<std::size_t> number(_delta.size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      number[order[i]] = i;
    }
    std::string key = std::to_string(_d) + ":";
    for (auto s : order) {
      for (auto const& tr : _delta[s]) {
        key += tr.output;
        key += '>';
        key += std::to_string(number[tr.next]);
        key += ',';
      }
      key += ';';
    }
    return key;
  }

  CantorWord run(Transducer const& t, CantorWord const& input) {
    check_word(input, t.alphabet());
    CantorWord  out;
    std::size_t s = t.initial();
    for (char c : input) {
      auto const& tr = t.transition(s, index_of(c));
      out += tr.output;
      s = tr.next;
    }
    return out;
  }

  std::size_t run_state(Transducer const& t,
                        std::size_t       from,
                        CantorWord const& input) {
    check_word(input, t.alphabet());
    std::size_t s = from;
    for (char c : input) {
      s = t.transition(s, index_of(c)).next;
    }
    return s;
  }

  LocalActionId local_action(Transducer const& t, CantorWord const& prefix) {
    return LocalActionId{run_state(t, t.initial(), prefix)};
  }

  std::vector<CantorWord> all_words(std::size_t d, std::size_t length) {
    std::vector<CantorWord> words{CantorWord{}};
    for (std::size_t k = 0; k < length; ++k) {
      std::vector<CantorWord> next;
      next.reserve(words.size() * d);
      for (auto const& w : words) {
        for (std::size_t x = 0; x < d; ++x) {
          next.push_back(w + letter(x));
        }
      }
      words = std::move(next);
    }
    return words;
  }

  bool prefix_comparable(std::string_view a, std::string_view b) noexcept {
    auto n = std::min(a.size(), b.size());
    return a.substr(0, n) == b.substr(0, n);
  }

  CantorWord image_cone(Transducer const& t,
                        CantorWord const& prefix,
                        std::size_t       lookahead) {
    std::optional<CantorWord> common;
    for (auto const& x : all_words(t.alphabet(), lookahead)) {
      auto out = run(t, prefix + x);
      if (!common) {
        common = std::move(out);
        continue;
      }
      std::size_t n = 0;
      while (n < common->size() && n < out.size() && (*common)[n] == out[n]) {
        ++n;
      }
      common->resize(n);
    }
    return *common;
  }

  Transducer compose(Transducer const& f,
                     Transducer const& g,
                     std::size_t       state_cap) {
    if (f.alphabet() != g.alphabet()) {
      throw AlphabetMismatch("cannot compose machines over alphabets of size "
                             + std::to_string(f.alphabet()) + " and "
                             + std::to_string(g.alphabet()));
    }
    auto const d = f.alphabet();
    using Pair   = std::pair<std::size_t, std::size_t>;
    std::map<Pair, std::size_t>          id;
    std::vector<Pair>                    pairs;
    std::vector<std::vector<Transition>> delta;
    auto intern = [&](Pair pq) {
      auto [it, inserted] = id.emplace(pq, pairs.size());
      if (inserted) {
        if (pairs.size() >= state_cap) {
          throw StateExplosion("composition exceeds "
                               + std::to_string(state_cap) + " states");
        }
        pairs.push_back(pq);
      }
      return it->second;
    };
    intern({f.initial(), g.initial()});
    for (std::size_t head = 0; head < pairs.size(); ++head) {
      auto const [p, q] = pairs[head];
      std::vector<Transition> row;
      for (std::size_t x = 0; x < d; ++x) {
        auto const& tf = f.transition(p, x);
        CantorWord  out;
        std::size_t q2 = q;
        for (char c : tf.output) {
          auto const& tg = g.transition(q2, index_of(c));
          out += tg.output;
          q2 = tg.next;
        }
        row.push_back(Transition{std::move(out), intern({tf.next, q2})});
      }
      delta.push_back(std::move(row));
    }

    std::vector<std::string> names;
    std::set<std::string>    used;
    for (auto const& [p, q] : pairs) {
      auto name = "(" + f.name(p) + "," + g.name(q) + ")";
      while (!used.insert(name).second) {
        name += "'";
      }
      names.push_back(std::move(name));
    }
    return Transducer(d, std::move(names), 0, std::move(delta));
  }

  bool is_synchronous(Transducer const& t) noexcept {
    for (auto const& row : t.delta()) {
      for (auto const& tr : row) {
        if (tr.output.size() != 1) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_invertible(Transducer const& t) noexcept {
    if (!is_synchronous(t)) {
      return false;
    }
    for (auto const& row : t.delta()) {
      std::vector<char> hit(t.alphabet(), 0);
      for (auto const& tr : row) {
        auto y = index_of(tr.output[0]);
        if (hit[y]) {
          return false;
        }
        hit[y] = 1;
      }
    }
    return true;
  }

  Transducer minimize(Transducer const& t) {
    if (!is_synchronous(t)) {
      throw NotSynchronous("minimize requires a synchronous machine");
    }
    auto const               n = t.size(), d = t.alphabet();
    std::vector<std::size_t> cls(n, 0);
    std::size_t              count = 0;
    // Moore refinement: start from the output labels, split by successor
    // classes until stable.
    {
      std::map<std::string, std::size_t> seen;
      for (std::size_t s = 0; s < n; ++s) {
        std::string sig;
        for (auto const& tr : t.delta()[s]) {
          sig += tr.output;
        }
        auto [it, _] = seen.emplace(sig, seen.size());
        cls[s]       = it->second;
      }
      count = seen.size();
    }
    while (true) {
      std::map<std::vector<std::size_t>, std::size_t> seen;
      std::vector<std::size_t>                        next(n, 0);
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> sig{cls[s]};
        for (auto const& tr : t.delta()[s]) {
          sig.push_back(cls[tr.next]);
        }
        auto [it, _] = seen.emplace(std::move(sig), seen.size());
        next[s]      = it->second;
      }
      cls = std::move(next);
      if (seen.size() == count) {
        break;
      }
      count = seen.size();
    }

    // Number classes in breadth-first order from the initial class.
    std::vector<std::size_t> number(count, SIZE_MAX);
    std::vector<std::size_t> representative;
    std::deque<std::size_t>  queue{t.initial()};
    number[cls[t.initial()]] = 0;
    representative.push_back(t.initial());
    while (!queue.empty()) {
      auto s = queue.front();
      queue.pop_front();
      for (auto const& tr : t.delta()[s]) {
        if (number[cls[tr.next]] == SIZE_MAX) {
          number[cls[tr.next]] = representative.size();
          representative.push_back(tr.next);
          queue.push_back(tr.next);
        }
      }
    }
    std::vector<std::string>             names;
    std::vector<std::vector<Transition>> delta;
    for (auto s : representative) {
      names.push_back(t.name(s));
      std::vector<Transition> row;
      for (std::size_t x = 0; x < d; ++x) {
        auto const& tr = t.transition(s, x);
        row.push_back(Transition{tr.output, number[cls[tr.next]]});
      }
      delta.push_back(std::move(row));
    }
    return Transducer(d, std::move(names), 0, std::move(delta));
  }

  Transducer invert(Transducer const& t) {
    if (!is_synchronous(t)) {
      throw NotSynchronous("only synchronous machines are inverted");
    }
    if (!is_invertible(t)) {
      throw NotInvertible("some state does not permute the alphabet");
    }
    auto const                           d = t.alphabet();
    std::vector<std::vector<Transition>> delta(t.size());
    std::vector<std::string>             names;
    for (std::size_t s = 0; s < t.size(); ++s) {
      delta[s].resize(d);
      for (std::size_t x = 0; x < d; ++x) {
        auto const& tr                = t.transition(s, x);
        delta[s][index_of(tr.output[0])] = Transition{
            std::string(1, letter(x)), tr.next};
      }
      names.push_back(t.name(s) == "id" ? "id" : t.name(s) + "^-1");
    }
    return Transducer(d, std::move(names), t.initial(), std::move(delta));
  }

  CoreSet core(Transducer const& t) {
    // Peel off states with no incoming transitions from the remaining
    // states; what survives is exactly what is reachable from a cycle.
    auto const               n = t.size();
    std::vector<std::size_t> indegree(n, 0);
    for (auto const& row : t.delta()) {
      for (auto const& tr : row) {
        ++indegree[tr.next];
      }
    }
    std::vector<char>        removed(n, 0);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < n; ++s) {
      if (indegree[s] == 0) {
        stack.push_back(s);
      }
    }
    while (!stack.empty()) {
      auto s = stack.back();
      stack.pop_back();
      removed[s] = 1;
      for (auto const& tr : t.delta()[s]) {
        if (--indegree[tr.next] == 0) {
          stack.push_back(tr.next);
        }
      }
    }
    CoreSet result;
    for (std::size_t s = 0; s < n; ++s) {
      if (!removed[s]) {
        result.states.push_back(s);
      }
    }
    return result;
  }

  std::vector<Transducer> nucleus(std::vector<Transducer> const& generators,
                                  std::size_t                    budget) {
    if (generators.empty()) {
      return {Transducer::identity(2)};
    }
    auto const d = generators.front().alphabet();
    std::vector<Transducer> letters;
    for (auto const& g : generators) {
      if (g.alphabet() != d) {
        throw AlphabetMismatch("generators over different alphabets");
      }
      if (!is_synchronous(g)) {
        throw NotSynchronous("nucleus generators must be synchronous");
      }
      letters.push_back(minimize(g));
      letters.push_back(minimize(invert(g)));
    }

    std::map<std::string, Transducer> found;
    std::deque<std::string>           pending;
    auto add_core = [&](Transducer const& t) {
      auto m = minimize(t);
      for (auto s : core(m).states) {
        auto c   = minimize(m.with_initial(s));
        auto key = c.structure_key();
        if (found.emplace(key, std::move(c)).second) {
          if (found.size() > budget) {
            throw BudgetExceeded("nucleus closure exceeded "
                                 + std::to_string(budget) + " machines");
          }
          pending.push_back(key);
        }
      }
    };
    for (auto const& g : letters) {
      add_core(g);
    }
    while (!pending.empty()) {
      auto element = found.at(pending.front());
      pending.pop_front();
      for (auto const& g : letters) {
        add_core(compose(element, g));
      }
    }
    std::vector<Transducer> result;
    for (auto& [key, t] : found) {
      result.push_back(std::move(t));
    }
    return result;
  }

  BoundaryComparison boundary_equal(Transducer const& f,
                                    Transducer const& g,
                                    std::size_t       depth) {
    if (f.alphabet() != g.alphabet()) {
      throw AlphabetMismatch("machines over different alphabets");
    }
    if (is_synchronous(f) && is_synchronous(g)) {
      bool same = minimize(f).structure_key() == minimize(g).structure_key();
      return {same ? BoundaryVerdict::equal : BoundaryVerdict::not_equal, 0,
              0};
    }
    if (f.structure_key() == g.structure_key()) {
      return {BoundaryVerdict::equal, 0, 0};
    }
    BoundaryComparison result{BoundaryVerdict::unknown_at_depth, 0, 0};
    for (auto const& w : all_words(f.alphabet(), depth)) {
      ++result.compared;
      if (!prefix_comparable(run(f, w), run(g, w))) {
        ++result.conflicts;
      }
    }
    if (result.conflicts > 0) {
      result.verdict = BoundaryVerdict::not_equal;
    }
    return result;
  }

}  // namespace bh
