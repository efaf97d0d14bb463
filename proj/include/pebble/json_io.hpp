#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pebble/extremal.hpp"
#include "pebble/family_spec.hpp"
#include "pebble/formulas.hpp"
#include "pebble/solver.hpp"

namespace pebble {

using Json = nlohmann::json;

inline Outcome parse_outcome(std::string_view s) {
  if (s == "solvable") return Outcome::solvable;
  if (s == "unsolvable") return Outcome::unsolvable;
  if (s == "unknown") return Outcome::unknown;
  throw ParameterError("unknown outcome '" + std::string(s) + "'");
}

inline Json to_json(const Graph& g, const Witness& w) {
  return Json{{"start", to_text(g, w.start)}, {"moves", to_text(g, w.moves)}, {"end", to_text(g, w.end)}, {"cost", w.cost()}};
}

inline Json stats_json(const SolveStats& s, bool timing) {
  Json j{{"visited", s.visited}, {"memo_hits", s.memo_hits}, {"dominance_hits", s.dominance_hits}, {"weight_cuts", s.weight_cuts}};
  if (timing) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(s.elapsed).count();
  return j;
}

inline Json to_json(const Graph& g, const SolveResult& r, bool timing = false) {
  Json j{{"outcome", to_string(r.outcome)}, {"certificate", to_string(r.certificate)}, {"stats", stats_json(r.stats, timing)}};
  if (r.witness) j["witness"] = to_json(g, *r.witness);
  return j;
}

/// Golden format: graph spec, distribution text, queries by vertex label.
inline Json to_json(const ExtremalCase& c) {
  Json queries = Json::array();
  for (const auto& q : c.queries)
    queries.push_back({{"root", c.graph.label(q.root)}, {"t", q.t}, {"policy", to_string(q.policy)}, {"expected", to_string(q.expected)}});
  return Json{{"name", c.name},
              {"graph", c.graph_spec},
              {"distribution", to_text(c.graph, c.distribution)},
              {"size", c.distribution.size()},
              {"queries", std::move(queries)},
              {"note", c.note}};
}

inline ExtremalCase extremal_case_from_json(const Json& j) {
  ExtremalCase c;
  c.name = j.at("name").get<std::string>();
  c.graph_spec = j.at("graph").get<std::string>();
  c.graph = build_graph(c.graph_spec);
  c.distribution = parse_distribution(c.graph, j.at("distribution").get<std::string>());
  for (const auto& q : j.at("queries"))
    c.queries.push_back({c.graph.vertex(q.at("root").get<std::string>()), q.at("t").get<Count>(),
                         parse_policy(q.at("policy").get<std::string>()), parse_outcome(q.at("expected").get<std::string>())});
  c.note = j.value("note", "");
  return c;
}

inline Json to_json(const AlphaBreakdown& a) {
  return Json{{"n", a.n}, {"m", a.m}, {"S", a.s_max}, {"M", a.m_max}, {"L", a.l_max}, {"alpha", a.alpha}};
}

inline Json to_json(const PathPartition& p) { return Json{{"sizes", p.sizes}, {"total", p.total()}}; }

}  // namespace pebble
