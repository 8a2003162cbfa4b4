#include "bh/io.hpp"

#include <fstream>
#include <sstream>

#include "bh/errors.hpp"

namespace bh::io {

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }

  json parse_json(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::exception const& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
  }

  json load_json(std::string const& path) {
    return parse_json(read_file(path));
  }

  namespace {
    // Runs a reader, turning JSON access errors into ParseError.
    template <typename F>
    auto guarded(char const* what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
      }
    }

    json word_list(std::vector<Word> const& words, Presentation const& p) {
      json out = json::array();
      for (auto const& w : words) {
        out.push_back(p.format(w));
      }
      return out;
    }
  }  // namespace

  Presentation presentation_from_json(json const& j) {
    return guarded("presentation", [&] {
      auto names = j.at("generators").get<std::vector<std::string>>();
      std::vector<Word> relators;
      if (j.contains("relators")) {
        for (auto const& r : j.at("relators")) {
          relators.push_back(parse_word(r.get<std::string>(), names));
        }
      }
      return Presentation::from_words(std::move(names), relators);
    });
  }

  json to_json(Presentation const& p) {
    json rels = json::array();
    for (auto const& r : p.relators()) {
      rels.push_back(p.format(r.word()));
    }
    return {{"generators", p.names()}, {"relators", rels}};
  }

  json to_json(DehnReport const& r, Presentation const& p) {
    json witnesses = json::array();
    for (auto const& w : r.witnesses) {
      witnesses.push_back(
          {{"relator_a", p.format(r.relators[w.relator_a].word.word())},
           {"relator_b", p.format(r.relators[w.relator_b].word.word())},
           {"offset_a", w.offset_a},
           {"offset_b", w.offset_b},
           {"length", w.length}});
    }
    return {{"passes", r.passes},
            {"lambda", r.lambda.to_string()},
            {"max_overlap_ratio", r.max_overlap_ratio.to_string()},
            {"circular_relators", r.relators.size()},
            {"witnesses", witnesses}};
  }

  json to_json(DehnResult const& r, Presentation const& p) {
    json trace = json::array();
    for (auto const& step : r.trace) {
      trace.push_back(
          {{"kind", step.kind == DehnStepKind::free_cancellation
                        ? "free_cancellation"
                        : "relator_replacement"},
           {"position", step.position},
           {"length", step.length},
           {"result", p.format(step.result)}});
    }
    return {{"identity", r.identity},
            {"residual", p.format(r.residual)},
            {"soundness_warning", r.soundness_warning},
            {"trace", trace}};
  }

  json to_json(CayleyBall const& b, Presentation const& p) {
    json edges = json::array();
    for (auto const& e : b.edges()) {
      edges.push_back({e.from, e.to, p.names()[e.gen]});
    }
    return {{"radius", b.radius()},
            {"vertices", word_list(b.vertices(), p)},
            {"sphere_offsets", b.sphere_offsets()},
            {"edges", edges}};
  }

  json to_json(std::vector<Atom> const& atoms, Presentation const& p) {
    json out = json::array();
    for (auto const& a : atoms) {
      out.push_back({{"level", a.level},
                     {"field", a.field.encode()},
                     {"members", word_list(a.members_within_horizon, p)},
                     {"infinite_candidate", a.infinite_candidate},
                     {"stable_since_horizon", a.stable_since_horizon}});
    }
    return out;
  }

  Transducer transducer_from_json(json const& j) {
    return guarded("transducer", [&] {
      auto const d      = j.at("d").get<std::size_t>();
      auto       states = j.at("states").get<std::vector<std::string>>();
      auto       index  = [&](std::string const& name) {
        auto it = std::find(states.begin(), states.end(), name);
        if (it == states.end()) {
          throw ParseError("unknown state '" + name + "'");
        }
        return static_cast<std::size_t>(it - states.begin());
      };
      std::vector<std::vector<Transition>> delta;
      for (auto const& s : states) {
        auto const&             row = j.at("delta").at(s);
        std::vector<Transition> out;
        for (std::size_t x = 0; x < d; ++x) {
          auto const& entry = row.at(std::to_string(x));
          out.push_back(Transition{entry.at(0).get<std::string>(),
                                   index(entry.at(1).get<std::string>())});
        }
        delta.push_back(std::move(out));
      }
      auto initial = index(j.at("initial").get<std::string>());
      return Transducer(d, std::move(states), initial, std::move(delta));
    });
  }

  json to_json(Transducer const& t) {
    json delta = json::object();
    for (std::size_t s = 0; s < t.size(); ++s) {
      json row = json::object();
      for (std::size_t x = 0; x < t.alphabet(); ++x) {
        auto const& tr        = t.transition(s, x);
        row[std::to_string(x)] = {tr.output, t.name(tr.next)};
      }
      delta[t.name(s)] = row;
    }
    return {{"d", t.alphabet()},
            {"states", t.names()},
            {"initial", t.name(t.initial())},
            {"delta", delta}};
  }

  PrefixMap prefix_map_from_json(json const& j) {
    return guarded("prefix map", [&] {
      std::vector<PrefixMap::Pair> pairs;
      for (auto const& pr : j.at("pairs")) {
        pairs.emplace_back(pr.at(0).get<std::string>(),
                           pr.at(1).get<std::string>());
      }
      return PrefixMap(j.at("d").get<std::size_t>(), std::move(pairs));
    });
  }

  json to_json(PrefixMap const& f) {
    json pairs = json::array();
    for (auto const& [a, b] : f.pairs()) {
      pairs.push_back({a, b});
    }
    return {{"d", f.alphabet()}, {"pairs", pairs}};
  }

  PiecewiseElement piecewise_from_json(json const& j) {
    return guarded("piecewise element", [&] {
      std::vector<Piece> pieces;
      for (auto const& pc : j.at("pieces")) {
        pieces.push_back(Piece{pc.at("cone").get<std::string>(),
                               transducer_from_json(pc.at("transducer"))});
      }
      return PiecewiseElement(j.at("d").get<std::size_t>(), std::move(pieces));
    });
  }

  json to_json(PiecewiseElement const& f) {
    json pieces = json::array();
    for (auto const& pc : f.pieces()) {
      pieces.push_back({{"cone", pc.cone}, {"transducer", to_json(pc.element)}});
    }
    return {{"d", f.alphabet()}, {"pieces", pieces}};
  }

  namespace {
    json factors_json(std::vector<ConjugateFactor> const& factors,
                      Presentation const&                 p) {
      json out = json::array();
      for (auto const& f : factors) {
        out.push_back({{"conjugator", p.format(f.conjugator)},
                       {"relator", f.relator},
                       {"sign", f.sign}});
      }
      return out;
    }
  }  // namespace

  json to_json(Verdict const& v, Presentation const& p) {
    json out;
    out["steps"]      = v.steps_used;
    out["assumption"] = "presentation is assumed to define a simple group";
    switch (v.kind) {
      case VerdictKind::identity:
        out["verdict"]     = "Identity";
        out["certificate"] = factors_json(v.identity_certificate, p);
        break;
      case VerdictKind::not_identity: {
        out["verdict"] = "NotIdentity";
        json certs     = json::array();
        for (auto const& g : v.generator_certificates) {
          certs.push_back({{"generator", p.names()[g.generator]},
                           {"sign", g.sign},
                           {"factors", factors_json(g.factors, p)}});
        }
        out["certificate"] = certs;
        break;
      }
      case VerdictKind::budget_exceeded:
        out["verdict"]     = "BudgetExceeded";
        out["certificate"] = json::array();
        break;
    }
    return out;
  }

}  // namespace bh::io
