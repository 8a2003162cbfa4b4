#include "bh/atoms_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

#include "bh/errors.hpp"

namespace bh {

  std::size_t AtomTree::node_count() const {
    std::size_t total = 0;
    for (auto const& level : levels) {
      total += level.size();
    }
    return total;
  }

  std::size_t AtomTree::global_index(std::size_t level, std::size_t i) const {
    std::size_t offset = 0;
    for (std::size_t k = 0; k < level; ++k) {
      offset += levels[k].size();
    }
    return offset + i;
  }

  AtomTree build_tree(Presentation const& p,
                      std::size_t         depth,
                      std::size_t         horizon) {
    if (horizon < depth || (depth > 0 && horizon == depth)) {
      throw HorizonTooSmall("horizon " + std::to_string(horizon)
                            + " does not reach beyond depth "
                            + std::to_string(depth));
    }
    AtomAnalysis analysis(p, depth, horizon);
    AtomTree     tree;
    tree.depth   = depth;
    tree.horizon = horizon;

    auto roots = analysis.atoms(0);
    tree.levels.push_back({AtomNode{std::move(roots.front()), {}, {}}});

    for (std::size_t n = 1; n <= depth; ++n) {
      std::map<std::string, std::size_t> parent_of;
      auto const& previous = tree.levels.back();
      for (std::size_t i = 0; i < previous.size(); ++i) {
        parent_of[previous[i].atom.field.encode()] = i;
      }
      auto const parent_edges = analysis.ball().edge_count(n - 1);

      std::vector<AtomNode> level;
      for (auto& atom : analysis.atoms(n)) {
        if (!atom.infinite_candidate) {
          continue;
        }
        auto it = parent_of.find(atom.field.restrict_to(parent_edges).encode());
        if (it == parent_of.end()) {
          throw std::logic_error("infinite atom without an infinite parent");
        }
        level.push_back(AtomNode{std::move(atom), it->second, {}});
      }
      tree.levels.push_back(std::move(level));
    }
    return tree;
  }

  namespace {
    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        parent[find(a)] = find(b);
      }
    };
  }  // namespace

  AtomTree assign_types(AtomTree            tree,
                        Presentation const& p,
                        TypeOptions         options) {
    auto const ball = build_ball(p, options.translation_bound + tree.horizon);

    struct Ref {
      std::size_t level, index;
    };
    std::vector<Ref>                      refs;
    std::vector<std::vector<std::size_t>> samples;
    for (std::size_t n = 0; n < tree.levels.size(); ++n) {
      for (std::size_t i = 0; i < tree.levels[n].size(); ++i) {
        auto const& atom  = tree.levels[n][i].atom;
        auto const  limit = atom.stable_since_horizon + options.window;
        std::vector<std::size_t> sample;
        for (auto const& w : atom.members_within_horizon) {
          if (w.size() <= limit) {
            sample.push_back(ball.locate(w).value());
          }
        }
        std::sort(sample.begin(), sample.end());
        refs.push_back({n, i});
        samples.push_back(std::move(sample));
      }
    }

    auto const translations = ball.vertex_count(options.translation_bound);
    auto       carries      = [&](std::size_t a, std::size_t b) {
      std::vector<std::size_t> image;
      for (std::size_t g = 0; g < translations; ++g) {
        image.clear();
        for (auto m : samples[a]) {
          auto t = ball.walk(g, ball.vertex(m));
          if (!t) {
            break;
          }
          image.push_back(*t);
        }
        if (image.size() != samples[a].size()) {
          continue;
        }
        std::sort(image.begin(), image.end());
        if (image == samples[b]) {
          return true;
        }
      }
      return false;
    };

    UnionFind classes(refs.size());
    for (std::size_t a = 0; a < refs.size(); ++a) {
      for (std::size_t b = a + 1; b < refs.size(); ++b) {
        if (samples[a].size() != samples[b].size()
            || classes.find(a) == classes.find(b)) {
          continue;
        }
        if (carries(a, b)) {
          classes.unite(a, b);
        }
      }
    }

    using Key = std::tuple<std::size_t, std::string>;
    std::map<std::size_t, Key> smallest;
    for (std::size_t a = 0; a < refs.size(); ++a) {
      Key key{refs[a].level,
              tree.levels[refs[a].level][refs[a].index].atom.field.encode()};
      auto root = classes.find(a);
      auto it   = smallest.find(root);
      if (it == smallest.end() || key < it->second) {
        smallest[root] = key;
      }
    }
    std::vector<std::pair<Key, std::size_t>> order;
    for (auto const& [root, key] : smallest) {
      order.emplace_back(key, root);
    }
    std::sort(order.begin(), order.end());
    std::map<std::size_t, int> label;
    for (std::size_t k = 0; k < order.size(); ++k) {
      label[order[k].second] = static_cast<int>(k);
    }
    for (std::size_t a = 0; a < refs.size(); ++a) {
      tree.levels[refs[a].level][refs[a].index].type
          = label[classes.find(a)];
    }
    return tree;
  }

  TreeFormat parse_tree_format(std::string_view name) {
    if (name == "dot") {
      return TreeFormat::dot;
    }
    if (name == "json") {
      return TreeFormat::json;
    }
    throw UnknownFormat("unknown tree format '" + std::string(name) + "'");
  }

  namespace {
    std::string node_name(std::size_t level, std::size_t index) {
      return "L" + std::to_string(level) + "A" + std::to_string(index);
    }

    constexpr char const* palette[] = {
        "lightblue", "salmon",     "palegreen", "gold",
        "plum",      "lightcyan",  "orange",    "khaki",
        "pink",      "lightgray",  "tan",       "aquamarine"};

    std::string to_dot(AtomTree const& tree) {
      std::ostringstream out;
      out << "digraph atoms {\n";
      out << "  node [shape=circle, style=filled];\n";
      for (std::size_t n = 0; n < tree.levels.size(); ++n) {
        out << "  { rank=same;";
        for (std::size_t i = 0; i < tree.levels[n].size(); ++i) {
          out << ' ' << node_name(n, i) << ';';
        }
        out << " }\n";
      }
      for (std::size_t n = 0; n < tree.levels.size(); ++n) {
        for (std::size_t i = 0; i < tree.levels[n].size(); ++i) {
          auto const& node = tree.levels[n][i];
          out << "  " << node_name(n, i) << " [label=\"";
          if (node.type) {
            out << 't' << *node.type;
          }
          out << "\", fillcolor=\"";
          out << (node.type ? palette[static_cast<std::size_t>(*node.type)
                                      % std::size(palette)]
                            : "white");
          out << "\"];\n";
        }
      }
      for (std::size_t n = 1; n < tree.levels.size(); ++n) {
        for (std::size_t i = 0; i < tree.levels[n].size(); ++i) {
          out << "  " << node_name(n - 1, *tree.levels[n][i].parent) << " -> "
              << node_name(n, i) << ";\n";
        }
      }
      out << "}\n";
      return out.str();
    }

    std::string to_json(AtomTree const& tree, Presentation const& p) {
      using nlohmann::json;
      json nodes   = json::array();
      json parents = json::array();
      for (std::size_t n = 0; n < tree.levels.size(); ++n) {
        for (std::size_t i = 0; i < tree.levels[n].size(); ++i) {
          auto const& node   = tree.levels[n][i];
          json        parent = nullptr;
          if (node.parent) {
            parent = tree.global_index(n - 1, *node.parent);
          }
          json type = nullptr;
          if (node.type) {
            type = *node.type;
          }
          nodes.push_back(
              {{"name", node_name(n, i)},
               {"level", n},
               {"field", node.atom.field.encode()},
               {"parent", parent},
               {"type", type},
               {"members_within_horizon",
                node.atom.members_within_horizon.size()},
               {"nearest_member",
                p.format(node.atom.members_within_horizon.front())},
               {"stable_since_horizon", node.atom.stable_since_horizon}});
          parents.push_back(parent);
        }
      }
      json out = {{"depth", tree.depth},
                  {"horizon", tree.horizon},
                  {"nodes", nodes},
                  {"parents", parents}};
      return out.dump(2) + "\n";
    }
  }  // namespace

  std::string export_tree(AtomTree const&     tree,
                          Presentation const& p,
                          TreeFormat          format) {
    return format == TreeFormat::dot ? to_dot(tree) : to_json(tree, p);
  }

  std::string export_tree(AtomTree const&     tree,
                          Presentation const& p,
                          std::string_view    format) {
    return export_tree(tree, p, parse_tree_format(format));
  }

}  // namespace bh
