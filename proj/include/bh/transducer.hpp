#ifndef BH_TRANSDUCER_HPP_
#define BH_TRANSDUCER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bh {

  // Finite words over the alphabet {0, ..., d-1}, one digit character per
  // letter ("0110"). Alphabets therefore have 2 <= d <= 10.
  using CantorWord = std::string;

  struct Transition {
    CantorWord  output;
    std::size_t next = 0;

    friend bool operator==(Transition const&, Transition const&) = default;
  };

  // An asynchronous finite-state transducer over a d-letter alphabet. Each
  // state is one local action of the homeomorphism the machine defines.
  // Transitions are total and every state is reachable from the initial
  // state; the constructor drops unreachable states.
  class Transducer {
   public:
    Transducer(std::size_t                          d,
               std::vector<std::string>             names,
               std::size_t                          initial,
               std::vector<std::vector<Transition>> delta);

    static Transducer identity(std::size_t d);

    [[nodiscard]] std::size_t alphabet() const noexcept {
      return _d;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _delta.size();
    }
    [[nodiscard]] std::size_t initial() const noexcept {
      return _initial;
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::string const& name(std::size_t s) const {
      return _names.at(s);
    }
    [[nodiscard]] Transition const& transition(std::size_t s,
                                               std::size_t letter) const {
      return _delta.at(s).at(letter);
    }
    [[nodiscard]] std::vector<std::vector<Transition>> const&
    delta() const noexcept {
      return _delta;
    }
    [[nodiscard]] std::size_t state_index(std::string_view name) const;

    // The same machine started in another state (restricted to the states
    // reachable from there).
    [[nodiscard]] Transducer with_initial(std::size_t state) const;

    // Longest output on a single transition.
    [[nodiscard]] std::size_t max_output_length() const noexcept;

    // Structural identity up to renaming of states: same alphabet and the
    // same transition table after numbering states in breadth-first order
    // from the initial state.
    [[nodiscard]] std::string structure_key() const;

   private:
    std::size_t                          _d;
    std::vector<std::string>             _names;
    std::size_t                          _initial;
    std::vector<std::vector<Transition>> _delta;
  };

  // Throws InvalidParameters on letters outside the alphabet.
  void check_word(CantorWord const& w, std::size_t d);

  [[nodiscard]] CantorWord run(Transducer const& t, CantorWord const& input);

  // State reached from `from` after reading the input.
  [[nodiscard]] std::size_t run_state(Transducer const& t,
                                      std::size_t       from,
                                      CantorWord const& input);

  struct LocalActionId {
    std::size_t state;
    friend bool operator==(LocalActionId, LocalActionId) = default;
  };

  // The state reached after reading the prefix: started there, the machine
  // computes the restriction of the map to the cone of the prefix, read
  // after the output already emitted.
  [[nodiscard]] LocalActionId local_action(Transducer const& t,
                                           CantorWord const& prefix);

  // Longest common prefix of run(t, prefix x) over all x of length
  // lookahead: the smallest cone known to contain the image of the cone of
  // the prefix, at that lookahead.
  [[nodiscard]] CantorWord image_cone(Transducer const& t,
                                      CantorWord const& prefix,
                                      std::size_t       lookahead);

  inline constexpr std::size_t default_state_cap = 10000;

  // Machine for "f, then g" (g o f as maps). States are pairs (state of f,
  // state of g after reading f's output so far). Throws AlphabetMismatch,
  // StateExplosion.
  [[nodiscard]] Transducer compose(Transducer const& f,
                                   Transducer const& g,
                                   std::size_t state_cap = default_state_cap);

  // Every reachable transition writes exactly one letter.
  [[nodiscard]] bool is_synchronous(Transducer const& t) noexcept;

  // Every state writes a permutation of the alphabet (synchronous only).
  [[nodiscard]] bool is_invertible(Transducer const& t) noexcept;

  // Bisimulation quotient of a synchronous machine, states numbered in
  // breadth-first order. Throws NotSynchronous.
  [[nodiscard]] Transducer minimize(Transducer const& t);

  // Inverse of a synchronous invertible machine. Throws NotSynchronous,
  // NotInvertible.
  [[nodiscard]] Transducer invert(Transducer const& t);

  // States visited by infinitely many prefixes: the states reachable from a
  // directed cycle. Sorted by index.
  struct CoreSet {
    std::vector<std::size_t> states;
  };
  [[nodiscard]] CoreSet core(Transducer const& t);

  // Closure of the cores of the generators and their inverses under
  // products with generators, compared in minimized form. The result is
  // sorted by structure_key. Throws NotSynchronous, NotInvertible, and
  // BudgetExceeded once more than `budget` machines have been found.
  [[nodiscard]] std::vector<Transducer>
  nucleus(std::vector<Transducer> const& generators, std::size_t budget = 64);

  enum class BoundaryVerdict { equal, not_equal, unknown_at_depth };

  struct BoundaryComparison {
    BoundaryVerdict verdict;
    std::size_t     conflicts = 0;  // inputs whose outputs disagree
    std::size_t     compared  = 0;  // inputs examined
  };

  // Synchronous pairs are decided exactly by minimization. Otherwise two
  // machines that are structurally identical are equal, and the rest are
  // compared on every input of length depth: outputs of equal maps are
  // always prefix-comparable. Throws AlphabetMismatch.
  [[nodiscard]] BoundaryComparison boundary_equal(Transducer const& f,
                                                  Transducer const& g,
                                                  std::size_t       depth);

  // All words of the given length in lexicographic order.
  [[nodiscard]] std::vector<CantorWord> all_words(std::size_t d,
                                                  std::size_t length);

  [[nodiscard]] bool prefix_comparable(std::string_view a,
                                       std::string_view b) noexcept;

}  // namespace bh

#endif  // BH_TRANSDUCER_HPP_
