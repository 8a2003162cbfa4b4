#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "catch_amalgamated.hpp"
#include "json.hpp"

#include "bh/cli.hpp"

using bh::cli::execute;
using nlohmann::json;

namespace {
  std::string data(std::string const& name) {
    return std::string(BH_DATA_DIR) + "/" + name;
  }

  std::string scratch(std::string const& name, std::string const& content) {
    auto path = std::filesystem::temp_directory_path()
                / ("bhtool_test_" + name);
    std::ofstream(path) << content;
    return path.string();
  }

  json ok(std::vector<std::string> const& args) {
    auto r = execute(args);
    INFO(r.err);
    REQUIRE(r.exit_code == 0);
    return json::parse(r.out);
  }
}  // namespace

TEST_CASE("documented invocations", "[cli]") {
  auto report = ok({"dehn", "check", data("surface2.json"), "--lambda", "1/2"});
  CHECK(report["max_overlap_ratio"] == "1/8");
  CHECK(report["passes"] == true);

  auto solve = execute(
      {"word", "solve", data("surface2.json"), "--word",
       "d^-1 a c d c^-1 d^-1 a b a^-1 a^-1 b^-1 c d c^-1"});
  CHECK(solve.exit_code == 0);
  CHECK(solve.out == "identity\n");

  auto tree = ok({"atoms", "tree", data("z.json"), "--depth", "3",
                  "--horizon", "10", "--format", "json"});
  CHECK(tree["nodes"].size() == 7);
}

TEST_CASE("subcommands", "[cli]") {
  auto solve = ok({"word", "solve", data("surface2.json"), "--word", "a b",
                   "--format", "json"});
  CHECK(solve["identity"] == false);
  CHECK(solve["residual"] == "a b");

  auto ball = ok({"ball", "build", data("f2.json"), "--radius", "2"});
  CHECK(ball["vertices"].size() == 17);
  CHECK(ball["edges"].size() == 16);

  auto atoms = ok({"atoms", "list", data("z.json"), "--level", "1",
                   "--horizon", "6"});
  CHECK(atoms.size() == 3);

  auto dot = execute({"atoms", "tree", data("f2.json"), "--depth", "1",
                      "--horizon", "4", "--format", "dot"});
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);

  auto r = ok({"trans", "run", data("figure_machine.json"), "--input", "01"});
  CHECK(r["output"] == "10");

  auto c = ok({"trans", "core", data("figure_machine.json")});
  CHECK(c["core"] == json::parse(R"(["a", "b"])"));

  auto n = ok({"trans", "nucleus", data("grigorchuk_a.json"),
               data("grigorchuk_b.json"), data("grigorchuk_c.json"),
               data("grigorchuk_d.json")});
  CHECK(n["size"] == 5);

  auto k = ok({"kuz", "decide", data("c5.json"), "--word", "x^2",
               "--budget", "500", "--workers", "2"});
  CHECK(k["verdict"] == "NotIdentity");
  auto k5 = ok({"kuz", "decide", data("c5.json"), "--word", "x^5"});
  CHECK(k5["verdict"] == "Identity");
}

TEST_CASE("artifacts round-trip", "[cli]") {
  auto p    = execute({"pres", "random", "--gens", "2", "--relators", "1",
                       "--length", "30", "--seed", "5"});
  REQUIRE(p.exit_code == 0);
  auto path = scratch("random.json", p.out);
  CHECK(ok({"dehn", "check", path, "--lambda", "1/6"}).contains("passes"));
  CHECK(execute({"ball", "build", path, "--radius", "2"}).exit_code == 0);

  auto composed = execute({"trans", "compose", data("figure_machine.json"),
                           data("odometer.json")});
  REQUIRE(composed.exit_code == 0);
  auto t = scratch("composed.json", composed.out);
  CHECK(ok({"trans", "run", t, "--input", "0110"})["output"].is_string());
  CHECK(execute({"trans", "core", t}).exit_code == 0);

  auto inverse = execute({"vmap", "invert", data("caret_map.json")});
  REQUIRE(inverse.exit_code == 0);
  auto inv = scratch("inverse.json", inverse.out);
  auto id  = ok({"vmap", "compose", data("caret_map.json"), inv});
  CHECK(id["pairs"] == json::parse(R"([["", ""]])"));
}

TEST_CASE("output is deterministic", "[cli]") {
  std::vector<std::vector<std::string>> runs{
      {"pres", "random", "--gens", "3", "--relators", "2", "--length", "12",
       "--seed", "9"},
      {"atoms", "tree", data("surface2.json"), "--depth", "1", "--horizon",
       "3", "--format", "dot"},
      {"kuz", "decide", data("c5.json"), "--word", "x^3", "--workers", "2"},
  };
  for (auto const& args : runs) {
    CHECK(execute(args).out == execute(args).out);
  }
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(execute({}).exit_code == 1);
  CHECK(execute({"dehn"}).exit_code == 1);
  CHECK(execute({"dehn", "check", data("surface2.json"), "--bogus"}).exit_code
        == 1);
  CHECK(execute({"dehn", "check", data("missing.json")}).exit_code == 1);
  CHECK(execute({"dehn", "check", scratch("bad.json", "{oops")}).exit_code
        == 1);
  CHECK(execute({"word", "solve", data("surface2.json"), "--word", "q"})
            .exit_code
        == 1);

  auto a6 = scratch("a6.json", R"({"generators": ["a"], "relators": ["a^6"]})");
  auto r  = execute({"word", "solve", a6, "--word", "a"});
  CHECK(r.exit_code == 2);
  CHECK(json::parse(r.out)["error"] == "NotDehnPresentation");

  auto h = execute({"atoms", "list", data("z.json"), "--level", "3",
                    "--horizon", "2"});
  CHECK(h.exit_code == 2);
  CHECK(json::parse(h.out)["error"] == "HorizonTooSmall");

  CHECK(execute({"--help"}).exit_code == 0);
}

TEST_CASE("budget from the environment", "[cli]") {
  ::setenv("BHTOOL_BUDGET", "1", 1);
  auto r = ok({"kuz", "decide", data("c5.json"), "--word", "x^2"});
  CHECK(r["verdict"] == "BudgetExceeded");
  auto explicit_budget = ok({"kuz", "decide", data("c5.json"), "--word",
                             "x^2", "--budget", "500"});
  CHECK(explicit_budget["verdict"] == "NotIdentity");
  ::unsetenv("BHTOOL_BUDGET");
}
