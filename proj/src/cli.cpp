#include "bh/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "bh/atoms_tree.hpp"
#include "bh/cayley.hpp"
#include "bh/errors.hpp"
#include "bh/io.hpp"
#include "bh/kuznetsov.hpp"
#include "bh/piecewise.hpp"
#include "bh/presentation.hpp"
#include "bh/transducer.hpp"

namespace bh::cli {

  namespace {
    using io::json;

    constexpr std::size_t default_kuz_budget     = 2000;
    constexpr std::size_t default_nucleus_budget = 64;

    std::size_t default_budget(std::size_t fallback) {
      char const* env = std::getenv("BHTOOL_BUDGET");
      if (env == nullptr || *env == '\0') {
        return fallback;
      }
      char* end   = nullptr;
      auto  value = std::strtoull(env, &end, 10);
      if (*end != '\0' || value == 0) {
        throw ParseError("BHTOOL_BUDGET must be a positive integer");
      }
      return static_cast<std::size_t>(value);
    }

    std::string dump(json const& j) {
      return j.dump(2) + "\n";
    }

    Presentation load_presentation(std::string const& path) {
      return io::presentation_from_json(io::load_json(path));
    }

    Transducer load_transducer(std::string const& path) {
      return io::transducer_from_json(io::load_json(path));
    }

    bool is_piecewise(json const& j) {
      return j.is_object() && j.contains("pieces");
    }

    Word parse_in(Presentation const& p, std::string const& text) {
      try {
        return p.parse(text);
      } catch (Error const& e) {
        if (e.is_input_error()) {
          throw;
        }
        throw ParseError(e.what());
      }
    }

    // Leaf subcommand plus the action it runs.
    struct Leaf {
      CLI::App*                   app;
      std::function<std::string()> run;
    };
  }  // namespace

  Outcome execute(std::vector<std::string> const& args) {
    CLI::App app{"Tools for word problems, atoms and Cantor-space maps",
                 "bhtool"};
    app.require_subcommand(1, 1);
    app.fallthrough(false);

    std::vector<Leaf> leaves;
    auto group = [&](std::string const& name, std::string const& help) {
      auto* g = app.add_subcommand(name, help);
      g->require_subcommand(1, 1);
      return g;
    };
    auto leaf = [&](CLI::App* g, std::string const& name,
                    std::string const& help) {
      auto* sub = g->add_subcommand(name, help);
      leaves.push_back(Leaf{sub, {}});
      return leaves.size() - 1;
    };

    // dehn check
    std::string dehn_pres, dehn_lambda = "1/2";
    auto*       dehn = group("dehn", "Dehn presentations");
    auto        dehn_check
        = leaf(dehn, "check", "Compute the maximal piece ratio");
    leaves[dehn_check].app->add_option("presentation", dehn_pres)->required();
    leaves[dehn_check].app->add_option("--lambda", dehn_lambda,
                                       "Threshold as p/q");
    leaves[dehn_check].run = [&] {
      auto p      = load_presentation(dehn_pres);
      auto lambda = Rational::parse(dehn_lambda);
      return dump(io::to_json(check_dehn_condition(p, lambda), p));
    };

    // word solve
    std::string solve_pres, solve_word, solve_format = "text";
    auto*       word       = group("word", "Word problem");
    auto        word_solve = leaf(word, "solve", "Run Dehn's algorithm");
    leaves[word_solve].app->add_option("presentation", solve_pres)->required();
    leaves[word_solve].app->add_option("--word", solve_word)->required();
    leaves[word_solve]
        .app->add_option("--format", solve_format)
        ->check(CLI::IsMember({"text", "json"}));
    leaves[word_solve].run = [&] {
      auto       p = load_presentation(solve_pres);
      auto       w = parse_in(p, solve_word);
      DehnSolver solver(p);
      auto       result = solver.solve(w, solve_format == "json");
      if (solve_format == "json") {
        return dump(io::to_json(result, p));
      }
      if (result.identity) {
        return std::string("identity\n");
      }
      return "not identity: " + p.format(result.residual) + "\n";
    };

    // pres random
    std::size_t   rand_gens = 2, rand_rels = 1, rand_length = 0;
    std::uint64_t rand_seed = 0;
    auto*         pres      = group("pres", "Presentations");
    auto pres_random = leaf(pres, "random", "Sample a few-relator presentation");
    leaves[pres_random].app->add_option("--gens", rand_gens);
    leaves[pres_random].app->add_option("--relators", rand_rels);
    leaves[pres_random].app->add_option("--length", rand_length)->required();
    leaves[pres_random].app->add_option("--seed", rand_seed)->required();
    leaves[pres_random].run = [&] {
      return dump(io::to_json(
          random_presentation(rand_gens, rand_rels, rand_length, rand_seed)));
    };

    // ball build
    std::string ball_pres;
    std::size_t ball_radius = 2;
    auto*       ball        = group("ball", "Cayley graph balls");
    auto        ball_build  = leaf(ball, "build", "Build the ball of a radius");
    leaves[ball_build].app->add_option("presentation", ball_pres)->required();
    leaves[ball_build].app->add_option("--radius", ball_radius)->required();
    leaves[ball_build].run = [&] {
      auto p = load_presentation(ball_pres);
      return dump(io::to_json(build_ball(p, ball_radius), p));
    };

    // atoms list / atoms tree
    std::string atoms_pres, tree_format = "json";
    std::size_t atoms_level = 1, atoms_horizon = 0, tree_depth = 2;
    bool        tree_untyped = false;
    auto*       atoms        = group("atoms", "Atoms and the tree of atoms");
    auto atoms_list = leaf(atoms, "list", "Partition a ball into atoms");
    leaves[atoms_list].app->add_option("presentation", atoms_pres)->required();
    leaves[atoms_list].app->add_option("--level", atoms_level)->required();
    leaves[atoms_list].app->add_option("--horizon", atoms_horizon)->required();
    leaves[atoms_list].run = [&] {
      auto p = load_presentation(atoms_pres);
      return dump(
          io::to_json(enumerate_atoms(p, atoms_level, atoms_horizon), p));
    };
    auto atoms_tree = leaf(atoms, "tree", "Export the tree of atoms");
    leaves[atoms_tree].app->add_option("presentation", atoms_pres)->required();
    leaves[atoms_tree].app->add_option("--depth", tree_depth)->required();
    leaves[atoms_tree].app->add_option("--horizon", atoms_horizon)->required();
    leaves[atoms_tree]
        .app->add_option("--format", tree_format)
        ->check(CLI::IsMember({"json", "dot"}));
    leaves[atoms_tree].app->add_flag("--untyped", tree_untyped,
                                     "Skip the type heuristic");
    leaves[atoms_tree].run = [&] {
      auto p    = load_presentation(atoms_pres);
      auto tree = build_tree(p, tree_depth, atoms_horizon);
      if (!tree_untyped) {
        tree = assign_types(std::move(tree), p);
      }
      auto text = export_tree(tree, p, tree_format);
      if (text.empty() || text.back() != '\n') {
        text += '\n';
      }
      return text;
    };

    // trans run / compose / core / nucleus
    std::string              trans_a, trans_b, trans_input;
    std::vector<std::string> trans_files;
    std::size_t              nucleus_budget = 0;
    auto*                    trans = group("trans", "Transducers");
    auto trans_run = leaf(trans, "run", "Feed a finite word to a machine");
    leaves[trans_run].app->add_option("machine", trans_a)->required();
    leaves[trans_run].app->add_option("--input", trans_input)->required();
    leaves[trans_run].run = [&] {
      auto t = load_transducer(trans_a);
      auto s = run_state(t, t.initial(), trans_input);
      return dump({{"input", trans_input},
                   {"output", run(t, trans_input)},
                   {"state", t.name(s)}});
    };
    auto trans_compose = leaf(trans, "compose", "First f, then g");
    leaves[trans_compose].app->add_option("f", trans_a)->required();
    leaves[trans_compose].app->add_option("g", trans_b)->required();
    leaves[trans_compose].run = [&] {
      return dump(io::to_json(
          compose(load_transducer(trans_a), load_transducer(trans_b))));
    };
    auto trans_core = leaf(trans, "core", "States reachable from a cycle");
    leaves[trans_core].app->add_option("machine", trans_a)->required();
    leaves[trans_core].run = [&] {
      auto t     = load_transducer(trans_a);
      json names = json::array();
      for (auto s : core(t).states) {
        names.push_back(t.name(s));
      }
      return dump({{"core", names}});
    };
    auto trans_nucleus
        = leaf(trans, "nucleus", "Close the cores of generator products");
    leaves[trans_nucleus].app->add_option("machines", trans_files)->required();
    leaves[trans_nucleus].app->add_option("--budget", nucleus_budget);
    leaves[trans_nucleus].run = [&] {
      std::vector<Transducer> gens;
      for (auto const& f : trans_files) {
        gens.push_back(load_transducer(f));
      }
      auto budget = nucleus_budget != 0
                        ? nucleus_budget
                        : default_budget(default_nucleus_budget);
      auto members = nucleus(gens, budget);
      json out     = json::array();
      for (auto const& t : members) {
        out.push_back(io::to_json(t));
      }
      return dump({{"size", members.size()}, {"nucleus", out}});
    };

    // vmap compose / invert
    auto* vmap         = group("vmap", "Prefix maps and piecewise elements");
    auto  vmap_compose = leaf(vmap, "compose", "First f, then g");
    leaves[vmap_compose].app->add_option("f", trans_a)->required();
    leaves[vmap_compose].app->add_option("g", trans_b)->required();
    leaves[vmap_compose].run = [&] {
      auto f = io::load_json(trans_a);
      auto g = io::load_json(trans_b);
      if (is_piecewise(f) || is_piecewise(g)) {
        auto lift = [](json const& j) {
          if (is_piecewise(j)) {
            return io::piecewise_from_json(j);
          }
          auto m = io::prefix_map_from_json(j);
          return PiecewiseElement(m.alphabet(),
                                  {Piece{"", prefix_map_to_transducer(m)}});
        };
        return dump(io::to_json(
            compose_piecewise(lift(f), lift(g), default_verification_depth)));
      }
      return dump(io::to_json(compose_prefix_maps(
          io::prefix_map_from_json(f), io::prefix_map_from_json(g))));
    };
    auto vmap_invert = leaf(vmap, "invert", "Swap domain and range");
    leaves[vmap_invert].app->add_option("f", trans_a)->required();
    leaves[vmap_invert].run = [&] {
      return dump(io::to_json(
          invert_prefix_map(io::prefix_map_from_json(io::load_json(trans_a)))));
    };

    // kuz decide
    std::string kuz_pres, kuz_word;
    std::size_t kuz_budget = 0, kuz_workers = 1;
    auto*       kuz        = group("kuz", "Word problem in simple groups");
    auto kuz_decide = leaf(kuz, "decide", "Run both enumerations");
    leaves[kuz_decide].app->add_option("presentation", kuz_pres)->required();
    leaves[kuz_decide].app->add_option("--word", kuz_word)->required();
    leaves[kuz_decide].app->add_option("--budget", kuz_budget);
    leaves[kuz_decide]
        .app->add_option("--workers", kuz_workers)
        ->check(CLI::Range(1, 2));
    leaves[kuz_decide].run = [&] {
      auto p      = load_presentation(kuz_pres);
      auto w      = parse_in(p, kuz_word);
      auto budget = kuz_budget != 0 ? kuz_budget
                                    : default_budget(default_kuz_budget);
      auto mode   = kuz_workers == 2 ? DecideMode::two_workers
                                     : DecideMode::interleaved;
      return dump(io::to_json(kuznetsov_decide(p, w, budget, mode), p));
    };

    Outcome outcome;
    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      outcome.out = app.help();
      return outcome;
    } catch (CLI::ParseError const& e) {
      outcome.exit_code = 1;
      outcome.err       = std::string(e.what()) + "\n";
      return outcome;
    }

    auto it = std::find_if(leaves.begin(), leaves.end(),
                           [](Leaf const& l) { return l.app->parsed(); });
    try {
      outcome.out = it->run();
    } catch (Error const& e) {
      if (e.is_input_error()) {
        outcome.exit_code = 1;
        outcome.err       = e.kind() + ": " + e.what() + "\n";
      } else {
        outcome.exit_code = 2;
        outcome.out = dump({{"error", e.kind()}, {"message", e.what()}});
      }
    }
    return outcome;
  }

}  // namespace bh::cli
