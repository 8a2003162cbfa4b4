#include "bh/piecewise.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bh/errors.hpp"

namespace bh {

  namespace {
    bool complete_below(std::vector<std::string_view> const& set,
                        std::size_t                          d) {
      if (set.empty()) {
        return false;
      }
      if (std::find(set.begin(), set.end(), std::string_view{}) != set.end()) {
        return set.size() == 1;
      }
      std::vector<std::vector<std::string_view>> children(d);
      for (auto w : set) {
        auto x = static_cast<std::size_t>(w[0] - '0');
        if (w[0] < '0' || x >= d) {
          return false;
        }
        children[x].push_back(w.substr(1));
      }
      return std::all_of(children.begin(), children.end(),
                         [d](auto const& c) { return complete_below(c, d); });
    }

    bool is_prefix(std::string_view p, std::string_view w) {
      return p.size() <= w.size() && w.substr(0, p.size()) == p;
    }

    void check_alphabet(std::size_t d) {
      if (d < 2 || d > 10) {
        throw InvalidParameters("alphabet size must be between 2 and 10");
      }
    }
  }  // namespace

  bool is_complete_antichain(std::vector<CantorWord> const& set,
                             std::size_t                    d) {
    std::vector<std::string_view> views(set.begin(), set.end());
    return complete_below(views, d);
  }

  PrefixMap::PrefixMap(std::size_t d, std::vector<Pair> pairs)
      : _d(d), _pairs(std::move(pairs)) {
    check_alphabet(d);
    std::vector<CantorWord> domain, range;
    for (auto const& [a, b] : _pairs) {
      domain.push_back(a);
      range.push_back(b);
    }
    if (!is_complete_antichain(domain, d)) {
      throw InvalidParameters("domain prefixes are not a complete antichain");
    }
    if (!is_complete_antichain(range, d)) {
      throw InvalidParameters("range prefixes are not a complete antichain");
    }
  }

  PrefixMap PrefixMap::identity(std::size_t d) {
    return PrefixMap(d, {{"", ""}});
  }

  std::optional<CantorWord> PrefixMap::apply(CantorWord const& w) const {
    for (auto const& [a, b] : _pairs) {
      if (is_prefix(a, w)) {
        return b + w.substr(a.size());
      }
    }
    return std::nullopt;
  }

  PrefixMap PrefixMap::canonical() const {
    std::map<CantorWord, CantorWord> table(_pairs.begin(), _pairs.end());
    bool                             merged = true;
    while (merged) {
      merged = false;
      for (auto const& [a, b] : table) {
        if (a.empty() || b.empty() || a.back() != b.back()) {
          continue;
        }
        auto const alpha = a.substr(0, a.size() - 1);
        auto const beta  = b.substr(0, b.size() - 1);
        bool       all   = true;
        for (std::size_t x = 0; x < _d && all; ++x) {
          char c  = static_cast<char>('0' + x);
          auto it = table.find(alpha + c);
          all     = it != table.end() && it->second == beta + c;
        }
        if (!all) {
          continue;
        }
        for (std::size_t x = 0; x < _d; ++x) {
          table.erase(alpha + static_cast<char>('0' + x));
        }
        table.emplace(alpha, beta);
        merged = true;
        break;
      }
    }
    PrefixMap result(*this);
    result._pairs.assign(table.begin(), table.end());
    return result;
  }

  PrefixMap compose_prefix_maps(PrefixMap const& f, PrefixMap const& g) {
    if (f.alphabet() != g.alphabet()) {
      throw AlphabetMismatch("prefix maps over different alphabets");
    }
    std::vector<PrefixMap::Pair> pairs;
    for (auto const& [alpha, beta] : f.pairs()) {
      bool placed = false;
      for (auto const& [gamma, delta] : g.pairs()) {
        if (is_prefix(gamma, beta)) {
          // beta lies inside a cone of g.
          pairs.emplace_back(alpha, delta + beta.substr(gamma.size()));
          placed = true;
          break;
        }
      }
      if (placed) {
        continue;
      }
      // Otherwise the cone of beta is cut into several cones of g.
      for (auto const& [gamma, delta] : g.pairs()) {
        if (is_prefix(beta, gamma)) {
          pairs.emplace_back(alpha + gamma.substr(beta.size()), delta);
        }
      }
    }
    return PrefixMap(f.alphabet(), std::move(pairs)).canonical();
  }

  PrefixMap invert_prefix_map(PrefixMap const& f) {
    std::vector<PrefixMap::Pair> pairs;
    for (auto const& [a, b] : f.pairs()) {
      pairs.emplace_back(b, a);
    }
    return PrefixMap(f.alphabet(), std::move(pairs)).canonical();
  }

  Transducer prefix_map_to_transducer(PrefixMap const& f) {
    auto const d = f.alphabet();
    std::map<CantorWord, CantorWord> range(f.pairs().begin(), f.pairs().end());
    if (range.count("")) {
      return Transducer::identity(d);
    }
    std::set<CantorWord> internal;
    for (auto const& [a, b] : f.pairs()) {
      for (std::size_t k = 0; k < a.size(); ++k) {
        internal.insert(a.substr(0, k));
      }
    }
    std::vector<CantorWord> nodes(internal.begin(), internal.end());
    std::map<CantorWord, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      index[nodes[i]] = i;
    }
    std::size_t const                    id = nodes.size();
    std::vector<std::string>             names;
    std::vector<std::vector<Transition>> delta;
    for (auto const& node : nodes) {
      names.push_back("[" + node + "]");
      std::vector<Transition> row;
      for (std::size_t x = 0; x < d; ++x) {
        auto child = node + static_cast<char>('0' + x);
        if (auto it = range.find(child); it != range.end()) {
          row.push_back(Transition{it->second, id});
        } else {
          row.push_back(Transition{"", index.at(child)});
        }
      }
      delta.push_back(std::move(row));
    }
    names.emplace_back("id");
    std::vector<Transition> tail;
    for (std::size_t x = 0; x < d; ++x) {
      tail.push_back(Transition{std::string(1, static_cast<char>('0' + x)),
                                id});
    }
    delta.push_back(std::move(tail));
    return Transducer(d, std::move(names), index.at(""), std::move(delta));
  }

  PiecewiseElement::PiecewiseElement(std::size_t        d,
                                     std::vector<Piece> pieces,
                                     std::size_t        verification_depth)
      : _d(d), _pieces(std::move(pieces)) {
    check_alphabet(d);
    std::vector<CantorWord> cones;
    for (auto const& piece : _pieces) {
      if (piece.element.alphabet() != d) {
        throw AlphabetMismatch("piece machine over a different alphabet");
      }
      cones.push_back(piece.cone);
    }
    if (!is_complete_antichain(cones, d)) {
      throw InvalidParameters("piece cones are not a complete antichain");
    }
    std::sort(_pieces.begin(), _pieces.end(),
              [](Piece const& a, Piece const& b) { return a.cone < b.cone; });
    if (!injective_at(std::max(verification_depth, longest_cone()))) {
      throw NotInjective("two inputs of length "
                         + std::to_string(verification_depth)
                         + " have the same image");
    }
  }

  std::size_t PiecewiseElement::longest_cone() const noexcept {
    std::size_t best = 0;
    for (auto const& piece : _pieces) {
      best = std::max(best, piece.cone.size());
    }
    return best;
  }

  std::optional<std::size_t>
  PiecewiseElement::piece_of(CantorWord const& w) const {
    for (std::size_t i = 0; i < _pieces.size(); ++i) {
      if (is_prefix(_pieces[i].cone, w)) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<CantorWord>
  PiecewiseElement::apply(CantorWord const& w) const {
    auto i = piece_of(w);
    if (!i) {
      return std::nullopt;
    }
    return run(_pieces[*i].element, w);
  }

  bool PiecewiseElement::injective_at(std::size_t depth) const {
    std::set<CantorWord> images;
    for (auto const& w : all_words(_d, depth)) {
      if (!images.insert(*apply(w)).second) {
        return false;
      }
    }
    return true;
  }

  PiecewiseElement compose_piecewise(PiecewiseElement const& f,
                                     PiecewiseElement const& g,
                                     std::size_t             depth) {
    if (f.alphabet() != g.alphabet()) {
      throw AlphabetMismatch("piecewise elements over different alphabets");
    }
    if (depth < f.longest_cone() || depth < g.longest_cone()) {
      throw DepthInsufficient("depth is shorter than a piece cone");
    }
    std::vector<Piece> pieces;
    for (auto const& piece : f.pieces()) {
      std::vector<CantorWord> cones{piece.cone};
      while (!cones.empty()) {
        auto cone = std::move(cones.back());
        cones.pop_back();
        auto image = image_cone(piece.element, cone, depth - cone.size());
        if (auto j = g.piece_of(image)) {
          pieces.push_back(
              Piece{cone, compose(piece.element, g.pieces()[*j].element)});
          continue;
        }
        if (cone.size() >= depth) {
          throw DepthInsufficient("image of cone '" + cone
                                  + "' is not separated at depth "
                                  + std::to_string(depth));
        }
        for (std::size_t x = f.alphabet(); x-- > 0;) {
          cones.push_back(cone + static_cast<char>('0' + x));
        }
      }
    }
    return PiecewiseElement(f.alphabet(), std::move(pieces), depth);
  }

}  // namespace bh
