#ifndef BH_IO_HPP_
#define BH_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "atoms_tree.hpp"
#include "cayley.hpp"
#include "kuznetsov.hpp"
#include "piecewise.hpp"
#include "presentation.hpp"
#include "transducer.hpp"

// JSON forms of the library's values. Readers throw ParseError on malformed
// documents; rationals are written as "p/q" strings and words in the
// "a b^-1" notation.
namespace bh::io {

  using nlohmann::json;

  [[nodiscard]] std::string read_file(std::string const& path);
  [[nodiscard]] json        parse_json(std::string const& text);
  [[nodiscard]] json        load_json(std::string const& path);

  // {"generators": ["a", ...], "relators": ["a b a^-1 b^-1", ...]}
  [[nodiscard]] Presentation presentation_from_json(json const& j);
  [[nodiscard]] json         to_json(Presentation const& p);

  [[nodiscard]] json to_json(DehnReport const& r, Presentation const& p);
  [[nodiscard]] json to_json(DehnResult const& r, Presentation const& p);

  // {"vertices": [words], "edges": [[i, j, "gen"], ...]}
  [[nodiscard]] json to_json(CayleyBall const& b, Presentation const& p);
  [[nodiscard]] json to_json(std::vector<Atom> const& atoms,
                             Presentation const&      p);

  // {"d": 2, "states": [...], "initial": "a",
  //  "delta": {"a": {"0": ["", "b"], "1": ["11", "a"]}, ...}}
  [[nodiscard]] Transducer transducer_from_json(json const& j);
  [[nodiscard]] json       to_json(Transducer const& t);

  // {"d": 2, "pairs": [["00", "0"], ["01", "10"], ["1", "11"]]}
  [[nodiscard]] PrefixMap prefix_map_from_json(json const& j);
  [[nodiscard]] json      to_json(PrefixMap const& f);

  // {"d": 2, "pieces": [{"cone": "0", "transducer": {...}}, ...]}
  [[nodiscard]] PiecewiseElement piecewise_from_json(json const& j);
  [[nodiscard]] json             to_json(PiecewiseElement const& f);

  // {"verdict": "NotIdentity", "steps": 123, "certificate": [...]}
  [[nodiscard]] json to_json(Verdict const& v, Presentation const& p);

}  // namespace bh::io

#endif  // BH_IO_HPP_
