#ifndef BH_PIECEWISE_HPP_
#define BH_PIECEWISE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "transducer.hpp"

namespace bh {

  // Prefix sets that meet every infinite word exactly once.
  [[nodiscard]] bool is_complete_antichain(std::vector<CantorWord> const& set,
                                           std::size_t                    d);

  // An element of the Higman-Thompson group V_d: the cone of each domain
  // prefix is carried onto the cone of the paired range prefix by prefix
  // replacement. Both prefix lists are complete antichains.
  class PrefixMap {
   public:
    using Pair = std::pair<CantorWord, CantorWord>;

    PrefixMap(std::size_t d, std::vector<Pair> pairs);

    static PrefixMap identity(std::size_t d);

    [[nodiscard]] std::size_t alphabet() const noexcept {
      return _d;
    }
    [[nodiscard]] std::vector<Pair> const& pairs() const noexcept {
      return _pairs;
    }

    // Image of a finite word with the identity acting past the prefix;
    // nothing if w is too short to pick a domain prefix.
    [[nodiscard]] std::optional<CantorWord> apply(CantorWord const& w) const;

    // Fully reduced form (no d sibling pairs alpha x -> beta x can be merged
    // into alpha -> beta), pairs sorted by domain prefix. Two maps induce the
    // same homeomorphism iff their canonical forms are equal.
    [[nodiscard]] PrefixMap canonical() const;

    friend bool operator==(PrefixMap const& a, PrefixMap const& b) {
      return a._d == b._d && a.canonical()._pairs == b.canonical()._pairs;
    }

   private:
    std::size_t       _d;
    std::vector<Pair> _pairs;
  };

  // "f, then g", in canonical form. Throws AlphabetMismatch.
  [[nodiscard]] PrefixMap compose_prefix_maps(PrefixMap const& f,
                                              PrefixMap const& g);

  [[nodiscard]] PrefixMap invert_prefix_map(PrefixMap const& f);

  // One state per proper prefix of a domain prefix, plus an identity state
  // entered once a domain prefix has been read.
  [[nodiscard]] Transducer prefix_map_to_transducer(PrefixMap const& f);

  struct Piece {
    CantorWord cone;
    Transducer element;  // applied to the whole input word
  };

  inline constexpr std::size_t default_verification_depth = 12;

  // A homeomorphism that agrees on each cone of a finite clopen partition
  // with a transducer-defined group element. The cones form a complete
  // antichain; injectivity is checked on all inputs of the verification
  // depth (NotInjective otherwise).
  class PiecewiseElement {
   public:
    PiecewiseElement(std::size_t        d,
                     std::vector<Piece> pieces,
                     std::size_t verification_depth = default_verification_depth);

    [[nodiscard]] std::size_t alphabet() const noexcept {
      return _d;
    }
    [[nodiscard]] std::vector<Piece> const& pieces() const noexcept {
      return _pieces;
    }
    [[nodiscard]] std::size_t longest_cone() const noexcept;

    // Index of the piece whose cone contains w, if w is long enough.
    [[nodiscard]] std::optional<std::size_t>
    piece_of(CantorWord const& w) const;

    // Output of the selected piece's machine; nothing if w is too short to
    // select a piece.
    [[nodiscard]] std::optional<CantorWord> apply(CantorWord const& w) const;

    // Distinct inputs of the given length have distinct outputs.
    [[nodiscard]] bool injective_at(std::size_t depth) const;

   private:
    std::size_t        _d;
    std::vector<Piece> _pieces;
  };

  // "f, then g". Each cone of f is subdivided until its image, read as the
  // longest common output prefix over all extensions to `depth`, lies in a
  // single cone of g; that sub-cone then carries the composite machine.
  // Throws AlphabetMismatch, DepthInsufficient, NotInjective.
  [[nodiscard]] PiecewiseElement compose_piecewise(PiecewiseElement const& f,
                                                   PiecewiseElement const& g,
                                                   std::size_t depth);

}  // namespace bh

#endif  // BH_PIECEWISE_HPP_
