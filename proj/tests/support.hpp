#ifndef BH_TESTS_SUPPORT_HPP_
#define BH_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bh/piecewise.hpp"
#include "bh/transducer.hpp"

namespace bh::testing {

  inline Transducer figure_machine() {
    return Transducer(2, {"a", "b"}, 0,
                      {{{"", 1}, {"11", 0}}, {{"0", 0}, {"10", 0}}});
  }

  inline PrefixMap caret_map() {
    return PrefixMap(2, {{"00", "0"}, {"01", "10"}, {"1", "11"}});
  }

  // Leaves of a random binary tree with the given number of leaves, no leaf
  // deeper than max_depth.
  inline std::vector<CantorWord> random_antichain(std::mt19937_64& rng,
                                                  std::size_t      leaves,
                                                  std::size_t max_depth) {
    std::vector<CantorWord> out{""};
    while (out.size() < leaves) {
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].size() < max_depth) {
          open.push_back(i);
        }
      }
      if (open.empty()) {
        break;
      }
      auto i    = open[rng() % open.size()];
      auto leaf = out[i];
      out[i]    = leaf + "0";
      out.push_back(leaf + "1");
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline PrefixMap random_prefix_map(std::mt19937_64& rng,
                                     std::size_t      max_leaves,
                                     std::size_t      max_depth) {
    auto const k   = 1 + rng() % max_leaves;
    auto       dom = random_antichain(rng, k, max_depth);
    auto       ran = random_antichain(rng, dom.size(), max_depth);
    while (ran.size() != dom.size()) {
      ran = random_antichain(rng, dom.size(), max_depth);
    }
    std::shuffle(ran.begin(), ran.end(), rng);
    std::vector<PrefixMap::Pair> pairs;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      pairs.emplace_back(dom[i], ran[i]);
    }
    return PrefixMap(2, pairs);
  }

  // Synchronous, every state permuting {0, 1}.
  inline Transducer random_invertible(std::mt19937_64& rng,
                                      std::size_t      max_states) {
    auto const n = 1 + rng() % max_states;
    std::vector<std::string>             names;
    std::vector<std::vector<Transition>> delta;
    for (std::size_t s = 0; s < n; ++s) {
      names.push_back("s" + std::to_string(s));
      bool swap = rng() % 2;
      delta.push_back({{swap ? "1" : "0", rng() % n},
                       {swap ? "0" : "1", rng() % n}});
    }
    return Transducer(2, names, 0, delta);
  }

  // Grigorchuk elements as reduced words over a, b, c, d, with sections
  // computed from the wreath recursion directly.
  using Element = std::string;

  inline Element reduce(Element const& e) {
    Element out;
    for (char x : e) {
      if (x == '1') {
        continue;
      }
      if (!out.empty()) {
        char y = out.back();
        if (x == y) {
          out.pop_back();
          continue;
        }
        if (x != 'a' && y != 'a') {
          out.pop_back();
          out += static_cast<char>('b' + 'c' + 'd' - x - y);
          continue;
        }
      }
      out += x;
    }
    return out;
  }

  // Section of e at the letter bit, and the image letter.
  inline std::pair<Element, int> section(Element const& e, int bit) {
    Element s;
    for (char x : e) {
      switch (x) {
        case 'a':
          bit ^= 1;
          break;
        case 'b':
          s += bit == 0 ? 'a' : 'c';
          break;
        case 'c':
          s += bit == 0 ? 'a' : 'd';
          break;
        case 'd':
          s += bit == 0 ? '1' : 'b';
          break;
      }
    }
    return {reduce(s), bit};
  }

  inline CantorWord act(Element const& e, CantorWord const& w) {
    if (w.empty() || e.empty()) {
      return w;
    }
    auto [s, y] = section(e, w[0] - '0');
    return static_cast<char>('0' + y) + act(s, w.substr(1));
  }

  inline std::set<Element> oracle_nucleus() {
    std::vector<Element> elements{""};
    for (int len = 0; len < 6; ++len) {
      std::vector<Element> next;
      for (auto const& e : elements) {
        for (char x : std::string("abcd")) {
          auto r = reduce(e + x);
          if (r.size() == e.size() + 1) {
            next.push_back(r);
          }
        }
      }
      elements.insert(elements.end(), next.begin(), next.end());
      std::sort(elements.begin(), elements.end());
      elements.erase(std::unique(elements.begin(), elements.end()),
                     elements.end());
    }
    std::set<Element> result;
    for (auto const& e : elements) {
      std::vector<Element> layer{e};
      for (int depth = 0; depth < 5; ++depth) {
        std::vector<Element> next;
        for (auto const& x : layer) {
          next.push_back(section(x, 0).first);
          next.push_back(section(x, 1).first);
        }
        layer = next;
      }
      result.insert(layer.begin(), layer.end());
    }
    return result;
  }
}  // namespace bh::testing

#endif  // BH_TESTS_SUPPORT_HPP_
