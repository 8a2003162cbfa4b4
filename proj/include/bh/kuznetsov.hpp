#ifndef BH_KUZNETSOV_HPP_
#define BH_KUZNETSOV_HPP_

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "presentation.hpp"
#include "word.hpp"

namespace bh {

  // u r^sign u^-1 for relator index r.
  struct ConjugateFactor {
    Word        conjugator;
    std::size_t relator = 0;
    int         sign    = 1;

    friend bool operator==(ConjugateFactor const&, ConjugateFactor const&)
        = default;
  };

  struct Consequence {
    Word                         word;  // freely reduced product
    std::vector<ConjugateFactor> factors;
  };

  // Free reduction of the product of the factors.
  [[nodiscard]] Word replay(std::vector<ConjugateFactor> const& factors,
                            Presentation const&                 p);

  // Fair, deterministic enumeration of the distinct nontrivial freely
  // reduced products of conjugates of relators.
  //
  // The pool P_L holds the distinct words u r^sign u^-1 with |u| <= L, in
  // order of (|u|, u shortlex, relator, sign). Stage (L, k) is layer k of a
  // breadth-first search from the empty word in which each step multiplies
  // on the right by a member of P_L; stages run along the anti-diagonals
  // L + k = 1, 2, ... with L increasing. A stage whose pool adds nothing to
  // P_(L-1) would repeat earlier work and is skipped. Every consequence
  // appears after finitely many steps.
  class ConsequenceStream {
   public:
    // work_limit bounds the number of products formed, including ones
    // skipped as repeats; the stream ends when it is reached.
    ConsequenceStream(Presentation p, std::size_t work_limit);

    [[nodiscard]] std::optional<Consequence> next();

    [[nodiscard]] std::size_t work() const noexcept {
      return _work;
    }

   private:
    struct Node {
      Word        word;
      std::size_t parent;  // SIZE_MAX at the root
      std::size_t factor;
    };
    struct Search {
      std::vector<Node>                  nodes;
      std::vector<std::size_t>           layer_start;
      std::unordered_set<Word, WordHash> visited;
    };

    bool                         start_stage();
    void                         next_stage();
    void                         extend_pool(std::size_t length);
    std::vector<ConjugateFactor> certificate(Search const& s,
                                             std::size_t   node) const;

    Presentation                       _p;
    std::vector<Word>                  _relator_words;
    std::size_t                        _work_limit;
    std::size_t                        _work = 0;
    std::vector<ConjugateFactor>       _factors;
    std::vector<Word>                  _factor_words;
    std::unordered_set<Word, WordHash> _pool_seen;
    std::vector<std::size_t>           _pool_end;  // per L
    std::vector<Word>                  _frontier;  // conjugators of length L
    std::vector<Search>                _searches;  // per L
    std::size_t                        _diagonal = 1;
    std::size_t                        _length   = 0;  // L
    std::size_t                        _depth    = 1;  // k
    bool                               _in_stage = false;
    std::size_t                        _node     = 0;
    std::size_t                        _factor   = 0;
    std::size_t                        _node_end = 0;
    std::unordered_set<Word, WordHash> _seen;
  };

  [[nodiscard]] std::vector<Consequence>
  enumerate_consequences(Presentation const& p, std::size_t budget);

  enum class VerdictKind { identity, not_identity, budget_exceeded };

  struct GeneratorDerivation {
    std::uint32_t                generator;
    int                          sign;  // which of x, x^-1 was derived
    std::vector<ConjugateFactor> factors;
  };

  struct Verdict {
    VerdictKind kind       = VerdictKind::budget_exceeded;
    std::size_t steps_used = 0;
    // Identity: w as a product of conjugates of relators of p.
    std::vector<ConjugateFactor> identity_certificate;
    // NotIdentity: every generator from relators of p plus w (the relator
    // w has index p.relators().size()).
    std::vector<GeneratorDerivation> generator_certificates;
  };

  enum class DecideMode { interleaved, two_workers };

  // Per stream, at most budget candidates and budget * work_factor products.
  inline constexpr std::size_t work_factor = 4096;

  // Two searches alternate one candidate at a time, starting with the first:
  // consequences of p looking for w (Identity), and consequences of p with w
  // added as a relator looking for every generator (NotIdentity, valid when
  // p presents a simple group). Both modes give identical verdicts and step
  // counts.
  [[nodiscard]] Verdict kuznetsov_decide(Presentation const& p,
                                         Word const&         w,
                                         std::size_t         budget,
                                         DecideMode mode = DecideMode::interleaved);

}  // namespace bh

#endif  // BH_KUZNETSOV_HPP_
