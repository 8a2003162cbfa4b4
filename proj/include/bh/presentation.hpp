#ifndef BH_PRESENTATION_HPP_
#define BH_PRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"
#include "word.hpp"

namespace bh {

  // A finite presentation <x_0, ..., x_{n-1} | r_0, ..., r_{m-1}>. Relators
  // are kept as cyclic words; adding a conjugate of a relator does not change
  // the group.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(std::vector<std::string> names,
                 std::vector<CyclicWord>  relators);

    // Convenience: relators given as words, each cyclically reduced here.
    static Presentation from_words(std::vector<std::string> names,
                                   std::vector<Word> const& relators);

    [[nodiscard]] std::size_t rank() const noexcept {
      return _names.size();
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::vector<CyclicWord> const& relators() const noexcept {
      return _relators;
    }

    [[nodiscard]] Word        parse(std::string_view text) const;
    [[nodiscard]] std::string format(Word const& w) const;

    // Copy with one more relator; the word is cyclically reduced first.
    [[nodiscard]] Presentation with_relator(Word const& w) const;

    // True if every relator has exponent sum zero in every generator, so
    // exponent sums are invariants of group elements.
    [[nodiscard]] bool exponent_sums_are_invariant() const;

   private:
    std::vector<std::string> _names;
    std::vector<CyclicWord>  _relators;
  };

  // One relator or its inverse read around its circle. Rotations are
  // addressed by offset into word.
  struct CircularRelator {
    CyclicWord  word;
    std::size_t source;       // index of the relator in the presentation
    int         orientation;  // +1 for r, -1 for r^-1
  };

  // For each relator both r and r^-1 (deduplicated), in presentation order.
  [[nodiscard]] std::vector<CircularRelator>
  circular_relators(Presentation const& p);

  struct OverlapWitness {
    std::size_t relator_a;  // indices into circular_relators(p)
    std::size_t relator_b;
    std::size_t offset_a;
    std::size_t offset_b;
    std::size_t length;
  };

  struct DehnReport {
    bool                        passes = true;
    Rational                    lambda{1, 2};
    Rational                    max_overlap_ratio{0, 1};
    std::vector<CircularRelator> relators;
    // All position pairs attaining max_overlap_ratio (at most
    // max_witnesses of them).
    std::vector<OverlapWitness> witnesses;
  };

  inline constexpr std::size_t max_witnesses = 64;

  // Longest common subword of the circular relators read from the two given
  // positions. A relator compared with itself at another offset is capped at
  // length - 1; distinct relators are capped at the shorter length.
  [[nodiscard]] std::size_t overlap_length(CircularRelator const& a,
                                           std::size_t            offset_a,
                                           CircularRelator const& b,
                                           std::size_t            offset_b,
                                           bool                   same);

  // Computes the longest overlap between any two positions of circular
  // relators (distinct relators, or one relator at two distinct offsets),
  // measured as a fraction of the shorter relator. Passes iff that fraction
  // is strictly below lambda. Requires 0 < lambda <= 1.
  [[nodiscard]] DehnReport check_dehn_condition(Presentation const& p,
                                                Rational            lambda);

  enum class DehnStepKind { free_cancellation, relator_replacement };

  struct DehnStep {
    DehnStepKind kind;
    std::size_t  position;  // start of the rewritten subword
    std::size_t  length;    // letters removed
    std::size_t  relator = 0;  // index into the circular relator list
    std::size_t  offset  = 0;  // rotation matched
    Word         result;
  };

  // One step of Dehn's algorithm. If w has an adjacent inverse pair, the
  // leftmost one is cancelled. Otherwise the subword of w that agrees with
  // more than half of a circular relator is replaced by the inverse of the
  // complementary part. Among all such subwords the one ending furthest
  // right is chosen, then the longest, then longer relators and earlier
  // relators. Returns nothing when neither rule applies; a returned step is
  // always strictly shorter.
  [[nodiscard]] std::optional<DehnStep>
  dehn_reduce_once(Word const& w, std::vector<CircularRelator> const& rels);

  struct DehnResult {
    bool                  identity = false;
    Word                  residual;
    std::vector<DehnStep> trace;
    // Set when the presentation passes the overlap check at 1/2 but not at
    // 1/6, where Dehn's algorithm is no longer guaranteed to be complete.
    bool soundness_warning = false;
  };

  // Validates the presentation once and then answers word problems.
  class DehnSolver {
   public:
    // Throws NotDehnPresentation if check_dehn_condition(p, 1/2) fails.
    explicit DehnSolver(Presentation const& p);

    [[nodiscard]] DehnResult solve(Word const& w, bool keep_trace) const;
    [[nodiscard]] bool       is_identity(Word const& w) const;
    [[nodiscard]] bool       soundness_warning() const noexcept {
      return _warning;
    }
    [[nodiscard]] std::vector<CircularRelator> const& relators() const {
      return _rels;
    }

   private:
    struct Start {
      std::size_t rel, offset;
    };
    bool reduce_once(Word& w, Word& scratch) const;

    std::vector<CircularRelator> _rels;
    bool                         _warning = false;
    // Relator positions keyed by their first two letters.
    std::uint32_t                   _codes = 0;
    std::vector<std::vector<Start>> _starts;
    std::vector<Start>              _singles;
  };

  [[nodiscard]] DehnResult dehn_solve(Word const& w, Presentation const& p);

  // Relators drawn uniformly from the cyclically reduced words of the given
  // length over num_gens generators named a, b, c, ... Deterministic in the
  // seed.
  [[nodiscard]] Presentation random_presentation(std::size_t   num_gens,
                                                 std::size_t   num_relators,
                                                 std::size_t   length,
                                                 std::uint64_t seed);

  // Standard presentations used throughout the tools and tests.
  namespace presentations {
    // <a, b, c, d | a b a^-1 b^-1 c d c^-1 d^-1>
    [[nodiscard]] Presentation surface_genus2();
    // Free group of the given rank on a, b, c, ...
    [[nodiscard]] Presentation free_group(std::size_t rank);
    // <x | x^n>
    [[nodiscard]] Presentation cyclic(std::size_t n);
  }  // namespace presentations

}  // namespace bh

#endif  // BH_PRESENTATION_HPP_
