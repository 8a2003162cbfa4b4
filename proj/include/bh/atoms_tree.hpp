#ifndef BH_ATOMS_TREE_HPP_
#define BH_ATOMS_TREE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayley.hpp"
#include "presentation.hpp"

namespace bh {

  struct AtomNode {
    Atom                       atom;
    std::optional<std::size_t> parent;  // index into the previous level
    std::optional<int>         type;
  };

  // Truncation of the tree of atoms to levels 0..depth, with infinite atoms
  // detected against a finite horizon. A depth-n ray (root to a level-n
  // node) stands in for a point of the horofunction boundary.
  struct AtomTree {
    std::size_t                        depth   = 0;
    std::size_t                        horizon = 0;
    std::vector<std::vector<AtomNode>> levels;

    [[nodiscard]] std::size_t node_count() const;
    // Global index of (level, i) in level order.
    [[nodiscard]] std::size_t global_index(std::size_t level,
                                           std::size_t i) const;
  };

  // Levels 0..depth of the tree of atoms. Requires horizon > depth when
  // depth > 0 (HorizonTooSmall otherwise: no vertex lies beyond the
  // deepest ball, so no atom can be seen to grow).
  [[nodiscard]] AtomTree build_tree(Presentation const& p,
                                    std::size_t         depth,
                                    std::size_t         horizon);

  struct TypeOptions {
    std::size_t translation_bound = 2;  // length of translating elements
    std::size_t window            = 2;  // sample depth past the nearest member
  };

  // Labels nodes by a translation heuristic: two nodes share a type when
  // some group element of length <= translation_bound carries the sample
  // of one onto the sample of the other, closed up transitively. A node's
  // sample is its members within `window` of its nearest member. Labels are
  // numbered by the smallest (level, field) in each class, so they do not
  // depend on the order in which nodes are stored.
  [[nodiscard]] AtomTree assign_types(AtomTree            tree,
                                      Presentation const& p,
                                      TypeOptions         options = {});

  enum class TreeFormat { dot, json };

  // Throws UnknownFormat.
  [[nodiscard]] TreeFormat parse_tree_format(std::string_view name);

  // Nodes are named L<level>A<index>. Output is byte-deterministic.
  [[nodiscard]] std::string export_tree(AtomTree const&     tree,
                                        Presentation const& p,
                                        TreeFormat          format);
  [[nodiscard]] std::string export_tree(AtomTree const&     tree,
                                        Presentation const& p,
                                        std::string_view    format);

}  // namespace bh

#endif  // BH_ATOMS_TREE_HPP_
