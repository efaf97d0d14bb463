#pragma once

#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pebble/pebble.hpp"
#include "pebble/json_io.hpp"

namespace pebble::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kPass = 0, kFail = 1, kUnknown = 2, kUsage = 3 };

struct Globals {
  bool json = false;
  std::uint64_t budget = 100'000'000;
  unsigned threads = default_thread_count();
  std::uint64_t seed = 0;
  bool timing = false;
  bool one_based = false;

  LabelOptions labels() const { return LabelOptions{one_based ? 1u : 0u}; }

  ExactOptions exact() const {
    ExactOptions o;
    o.state_budget = budget;
    o.threads = threads;
    o.solver.state_budget = budget;
    return o;
  }

  SolverOptions solver() const {
    SolverOptions o;
    o.state_budget = budget;
    return o;
  }
};

enum class Status { pass, fail, unknown };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unknown: return "unknown";
  }
  return "?";
}

struct Check {
  std::string name;
  Status status = Status::pass;
  Json detail = Json::object();
};

struct Report {
  std::vector<std::string> command;
  Json results = Json::object();
  std::vector<Check> checks;
  /// Set when a computation ran out of budget and the result is partial.
  bool partial = false;
  std::uint64_t seed = 0;
  std::optional<double> elapsed_ms;

  void add(std::string name, Status status, Json detail = Json::object()) {
    checks.push_back(Check{std::move(name), status, std::move(detail)});
  }
  void add(std::string name, bool ok, Json detail = Json::object()) {
    add(std::move(name), ok ? Status::pass : Status::fail, std::move(detail));
  }

  Status status() const {
    bool unknown = partial;
    for (const auto& c : checks) {
      if (c.status == Status::fail) return Status::fail;
      if (c.status == Status::unknown) unknown = true;
    }
    return unknown ? Status::unknown : Status::pass;
  }

  int exit_code() const {
    switch (status()) {
      case Status::pass: return kPass;
      case Status::fail: return kFail;
      case Status::unknown: return kUnknown;
    }
    return kFail;
  }

  Json to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks) checks_json.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    Json j{{"tool", "pebble"},
           {"version", kVersion},
           {"command", command},
           {"seed", seed},
           {"results", results},
           {"checks", std::move(checks_json)},
           {"partial", partial},
           {"status", to_string(status())}};
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j;
  }
};

inline void render_text(const Report& r, std::ostream& out) {
  out << "pebble " << kVersion << " |";
  for (const auto& a : r.command) out << ' ' << a;
  out << '\n';
  for (const auto& [key, value] : r.results.items()) {
    out << key << ": ";
    if (value.is_string()) out << value.get<std::string>();
    else out << value.dump();
    out << '\n';
  }
  if (!r.checks.empty()) {
    std::size_t width = 0;
    for (const auto& c : r.checks) width = std::max(width, c.name.size());
    out << '\n';
    for (const auto& c : r.checks) {
      std::string tag(to_string(c.status));
      for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      out << tag << std::string(8 - tag.size(), ' ') << c.name;
      if (!c.detail.empty()) out << std::string(width - c.name.size() + 2, ' ') << c.detail.dump();
      out << '\n';
    }
  }
  if (r.partial) out << "partial: budget exhausted, values are lower bounds\n";
  if (r.elapsed_ms) out << "elapsed_ms: " << *r.elapsed_ms << '\n';
  out << "status: " << to_string(r.status()) << '\n';
}

inline Status outcome_status(bool exhaustive, bool ok) {
  if (!exhaustive) return Status::unknown;
  return ok ? Status::pass : Status::fail;
}

// ---------------------------------------------------------------- number

struct NumberArgs {
  std::string spec;
  std::string root;
  Count t = 1;
  std::string policy = "unrestricted";
  std::string strategy = "extend";
};

inline Report cmd_number(const Globals& g, const NumberArgs& a) {
  Report r;
  const Graph graph = build_graph(a.spec, g.labels());
  auto opts = g.exact();
  if (a.strategy == "enumerate") opts.strategy = Strategy::enumerate;
  else if (a.strategy != "extend") throw ParameterError("unknown strategy '" + a.strategy + "'");
  const MovePolicy policy = parse_policy(a.policy);
  ExactResult res = a.root.empty() ? pebbling_number(graph, a.t, policy, opts)
                                   : pebbling_number_rooted(graph, graph.vertex(a.root), a.t, policy, opts);
  r.results["graph"] = to_string(parse_family_spec(a.spec));
  r.results["vertices"] = graph.vertex_count();
  r.results["t"] = a.t;
  r.results["policy"] = to_string(policy);
  r.results["value"] = res.value;
  if (res.root) r.results["root"] = graph.label(*res.root);
  if (res.witnessing_distribution)
    r.results["unsolvable_distribution"] = to_text(graph, *res.witnessing_distribution);
  r.results["exhaustive"] = res.exhaustive;
  r.results["visited"] = res.visited;
  r.partial = !res.exhaustive;
  return r;
}

// ---------------------------------------------------------------- formula

inline std::uint64_t parse_uint(const std::string& s, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParameterError(std::string(what) + " must be a nonnegative integer, got '" + s + "'");
  return v;
}

inline void require_params(const std::vector<std::string>& p, std::size_t lo, std::size_t hi, const char* usage) {
  if (p.size() < lo || p.size() > hi) throw ParameterError(std::string("usage: formula ") + usage);
}

/// Runs the brute-force gate for the t-pebbling rule and records it.
inline bool t_rule_gate(const Globals& g, Report& r) {
  const auto cases = default_t_rule_cases();
  bool ok = true;
  Json detail = Json::array();
  for (const auto& c : validate_t_pebbling_rule(cases, g.exact())) {
    detail.push_back({{"C", 2 * c.half_length}, {"t", c.t}, {"formula", c.formula}, {"brute_force", c.brute.value}});
    ok = ok && c.agrees();
  }
  r.add("t-pebbling rule t*2^k agrees with brute force", ok, Json{{"cases", detail}});
  return ok;
}

inline Report cmd_formula(const Globals& g, const std::string& name, const std::vector<std::string>& p) {
  Report r;
  r.results["formula"] = name;
  if (name == "cycle") {
    require_params(p, 1, 1, "cycle <k>");
    const auto k = parse_uint(p[0], "k");
    r.results["value"] = cycle_pebbling_formula(k);
    r.results["provenance"] = to_string(cycle_formula_provenance(k));
  } else if (name == "tree") {
    require_params(p, 1, 2, "tree <graph-spec> [root-label]");
    const Graph tree = build_graph(p[0], g.labels());
    Vertex best = 0;
    std::uint64_t value = 0;
    if (p.size() == 2) {
      best = tree.vertex(p[1]);
      value = tree_pebbling_formula(tree, best);
    } else {
      for (Vertex v = 0; v < tree.vertex_count(); ++v) {
        const auto f = tree_pebbling_formula(tree, v);
        if (f > value) value = f, best = v;
      }
    }
    r.results["value"] = value;
    r.results["root"] = tree.label(best);
    r.results["path_partition"] = to_json(max_path_partition(tree, best));
    r.results["provenance"] = to_string(Provenance::theorem);
  } else if (name == "alpha") {
    require_params(p, 2, 2, "alpha <n> <m>");
    auto a = alpha(parse_uint(p[0], "n"), parse_uint(p[1], "m"));
    r.results["value"] = a.alpha;
    r.results["breakdown"] = to_json(a);
    r.results["provenance"] = to_string(Provenance::theorem);
  } else if (name == "jahangir") {
    require_params(p, 2, 2, "jahangir <n> <m>");
    const auto n = parse_uint(p[0], "n"), m = parse_uint(p[1], "m");
    require_jahangir_formula_range(n, m);
    if (!t_rule_gate(g, r)) {
      r.results["withheld"] = "the t-pebbling rule disagreed with brute force";
      return r;
    }
    const std::uint64_t half = n / 2 + 1;
    const std::uint64_t t = detail::pow2(half) - 1;
    auto a = alpha(n, m);
    r.results["value"] = jahangir_pebbling_formula(n, m);
    r.results["breakdown"] = Json{{"t_fold_cycle", {{"cycle", 2 * half},
                                                   {"t", t},
                                                   {"value", t_pebbling_even_cycle(half, t)},
                                                   {"provenance", to_string(Provenance::external_validated)}}},
                                  {"alpha", to_json(a)},
                                  {"plus", 1}};
    r.results["provenance"] = to_string(Provenance::theorem);
  } else if (name == "j2m") {
    require_params(p, 1, 1, "j2m <m>");
    const auto m = parse_uint(p[0], "m");
    r.results["value"] = j2m_formula(m);
    r.results["provenance"] = to_string(Provenance::theorem);
    r.add("agrees with the general Jahangir formula at n = 2", j2m_formula(m) == jahangir_pebbling_formula(2, m));
  } else if (name == "tcycle") {
    require_params(p, 2, 2, "tcycle <half-length k> <t>");
    const auto k = parse_uint(p[0], "k"), t = parse_uint(p[1], "t");
    const auto value = t_pebbling_even_cycle(k, t);
    if (!t_rule_gate(g, r)) {
      r.results["withheld"] = "the t-pebbling rule disagreed with brute force";
      return r;
    }
    r.results["cycle"] = 2 * k;
    r.results["t"] = t;
    r.results["value"] = value;
    r.results["provenance"] = to_string(Provenance::external_validated);
  } else {
    throw ParameterError("unknown formula '" + name + "' (tree, cycle, alpha, jahangir, j2m, tcycle)");
  }
  return r;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  std::uint32_t n = 2;
  std::uint32_t m = 8;
  bool n_set = false;
  bool m_set = false;
  std::uint32_t max_n = 12;
  std::uint32_t max_k = 8;
  std::uint32_t max_vertices = 8;
  std::uint32_t max_m = 3;
  std::uint64_t trials = 10'000;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cycles", "trees",       "segments",     "convexity", "dstar", "greedy",
                                              "lower-bound", "upper-sample", "clones", "j2m",   "tgate"};
  return names;
}

inline Json case_checks(const ExtremalCase& c, const std::vector<QueryCheck>& checks, Report& r, const std::string& prefix) {
  for (const auto& q : checks) {
    const bool decided = q.result.outcome != Outcome::unknown;
    r.add(prefix + ": root " + c.graph.label(q.query.root) + " t=" + std::to_string(q.query.t) + " " +
              std::string(to_string(q.query.policy)) + " is " + std::string(to_string(q.query.expected)),
          decided ? (q.passed() ? Status::pass : Status::fail) : Status::unknown,
          Json{{"outcome", to_string(q.result.outcome)},
               {"certificate", to_string(q.result.certificate)},
               {"visited", q.result.stats.visited}});
  }
  return to_json(c);
}

inline void suite_cycles(const Globals& g, const VerifyArgs& a, Report& r) {
  for (std::uint32_t k = 3; k <= a.max_k; ++k) {
    auto res = pebbling_number(build_cycle(k), 1, MovePolicy::unrestricted, g.exact());
    const auto formula = cycle_pebbling_formula(k);
    r.add("f(C_" + std::to_string(k) + ") brute force = formula", outcome_status(res.exhaustive, res.value == formula),
          Json{{"brute_force", res.value}, {"formula", formula}, {"visited", res.visited}});
  }
}

inline void suite_trees(const Globals& g, const VerifyArgs& a, Report& r) {
  for (std::uint32_t n = 1; n <= a.max_vertices; ++n) {
    std::uint64_t roots = 0, mismatches = 0, partial = 0;
    Json first = nullptr;
    const auto trees = trees_on(n);
    for (const auto& parents : trees) {
      const Graph t = build_tree(parents);
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        ++roots;
        auto res = pebbling_number_rooted(t, v, 1, MovePolicy::unrestricted, g.exact());
        const auto formula = tree_pebbling_formula(t, v);
        if (!res.exhaustive) ++partial;
        else if (res.value != formula) {
          ++mismatches;
          if (first.is_null())
            first = Json{{"tree", "tree:" + Json(parents).dump()}, {"root", v}, {"brute_force", res.value}, {"formula", formula}};
        }
      }
    }
    Json detail{{"trees", trees.size()}, {"roots", roots}, {"mismatches", mismatches}};
    if (!first.is_null()) detail["first_mismatch"] = first;
    r.add("trees on " + std::to_string(n) + " vertices, every root: brute force = formula",
          mismatches ? Status::fail : (partial ? Status::unknown : Status::pass), detail);
  }
}

inline void suite_segments(const Globals& g, const VerifyArgs& a, Report& r) {
  std::vector<std::uint32_t> ns = a.n_set ? std::vector<std::uint32_t>{a.n} : std::vector<std::uint32_t>{2, 4};
  Json cases = Json::array();
  for (auto n : ns) {
    for (auto profile : {SegmentClass::S, SegmentClass::M, SegmentClass::L}) {
      const std::string label = "L_" + std::to_string(n) + " " + std::string(to_string(profile));
      const auto bound = segment_profile_bound(n, profile);
      auto found = max_unsolvable(build_path(n), segment_profile_query(n, profile), g.exact());
      r.add(label + ": exhaustive maximum = bound", outcome_status(found.exhaustive, found.size == bound && found.distribution),
            Json{{"maximum", found.size}, {"bound", bound}});
      auto c = build_segment_extremal(n, profile);
      const auto checks = verify_case(c, g.solver());
      cases.push_back(case_checks(c, checks, r, label + " construction"));
      r.add(label + ": construction size = bound and profile = " + std::string(to_string(profile)),
            c.distribution.size() == bound && classify_path_segment(c.graph, c.distribution, g.solver()) == profile,
            Json{{"size", c.distribution.size()}});
    }
  }
  r.results["cases"] = cases;
}

inline void suite_convexity(const Globals&, const VerifyArgs& a, Report& r) {
  for (const auto& c : check_cycle_convexity(3, a.max_n))
    r.add("f(C_" + std::to_string(c.n - 1) + ") + f(C_" + std::to_string(c.n + 1) + ") >= 2 f(C_" + std::to_string(c.n) + ")",
          c.holds(), Json{{"lhs", c.lhs}, {"rhs", c.rhs}});
}

inline void suite_dstar(const Globals& g, const VerifyArgs& a, Report& r) {
  std::vector<std::uint32_t> ns{2, 4, 6}, ms{8, 9, 10, 11, 12};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> solve{{2, 8}, {2, 9}};
  if (a.n_set || a.m_set) {
    ns = {a.n};
    ms = {a.m};
    solve = {{a.n, a.m}};
  }
  for (auto n : ns)
    for (auto m : ms) {
      auto c = build_dstar(n, m);
      const auto al = alpha(n, m).alpha;
      r.add("|D*(" + std::to_string(n) + "," + std::to_string(m) + ")| = alpha", c.distribution.size() == al,
            Json{{"size", c.distribution.size()}, {"alpha", al}});
    }
  auto opts = g.solver();
  opts.state_budget = std::min<std::uint64_t>(opts.state_budget, 10'000'000);
  Json cases = Json::array();
  for (auto [n, m] : solve) {
    auto c = build_dstar(n, m);
    cases.push_back(case_checks(c, verify_case(c, opts), r, c.name));
  }
  r.results["cases"] = cases;
}

inline void suite_greedy(const Globals& g, const VerifyArgs&, Report& r) {
  auto c = build_greedy_counterexample(0);
  const auto checks = verify_case(c, g.solver());
  r.results["case"] = case_checks(c, checks, r, c.name);
  for (const auto& q : checks)
    if (q.result.witness) r.results["unrestricted_witness"] = to_json(c.graph, *q.result.witness);
}

inline void suite_lower_bound(const Globals& g, const VerifyArgs& a, Report& r) {
  auto c = build_jahangir_lower_bound(a.n, a.m);
  const auto f = jahangir_pebbling_formula(a.n, a.m);
  r.add("size = f(J_{n,m}) - 1", c.distribution.size() + 1 == f, Json{{"size", c.distribution.size()}, {"formula", f}});
  auto checks = verify_case(c, g.solver());
  r.results["case"] = case_checks(c, checks, r, c.name);
  r.results["stats"] = stats_json(checks.front().result.stats, g.timing);
}

inline void suite_upper_sample(const Globals& g, const VerifyArgs& a, Report& r) {
  const Graph graph = build_jahangir(a.n, a.m);
  const auto k = jahangir_pebbling_formula(a.n, a.m);
  auto rep = sample_verify_solvable(graph, static_cast<Count>(k), a.trials, g.seed, MovePolicy::unrestricted, g.exact());
  auto listing = [&](const std::vector<SampleCase>& cases) {
    Json j = Json::array();
    for (std::size_t i = 0; i < cases.size() && i < 10; ++i)
      j.push_back({{"distribution", to_text(graph, cases[i].distribution)}, {"root", graph.label(cases[i].root)}});
    return j;
  };
  r.results["graph"] = "jahangir:" + std::to_string(a.n) + "," + std::to_string(a.m);
  r.results["size"] = k;
  r.results["trials"] = a.trials;
  r.results["visited"] = rep.visited;
  r.add("random size-" + std::to_string(k) + " distributions are solvable", rep.failures.empty(),
        Json{{"failures", rep.failures.size()}, {"examples", listing(rep.failures)}});
  r.add("no undecided trials", rep.unknowns.empty() ? Status::pass : Status::unknown,
        Json{{"unknown", rep.unknowns.size()}, {"examples", listing(rep.unknowns)}});
}

inline void suite_clones(const Globals& g, const VerifyArgs& a, Report& r) {
  Json cases = Json::array();
  for (std::uint32_t m = 1; m <= a.max_m; ++m) {
    auto c = build_greedy_counterexample(m);
    cases.push_back(case_checks(c, verify_case(c, g.solver()), r, c.name));
  }
  r.results["cases"] = cases;
  const Graph g1 = build_graph("clone:jahangir:2,3@u*1");
  auto f = pebbling_number(g1, 1, MovePolicy::unrestricted, g.exact());
  r.results["f(G_1)"] = Json{{"value", f.value},
                             {"vertices", g1.vertex_count()},
                             {"exhaustive", f.exhaustive},
                             {"root", g1.label(*f.root)},
                             {"unsolvable_distribution", to_text(g1, *f.witnessing_distribution)}};
  r.partial = r.partial || !f.exhaustive;
}

inline void suite_j2m(const Globals&, const VerifyArgs&, Report& r) {
  Json mismatches = Json::array();
  for (std::uint64_t m = 8; m <= 64; ++m)
    if (jahangir_pebbling_formula(2, m) != 2 * m + 10) mismatches.push_back(m);
  r.add("jahangir formula at n = 2 equals 2m + 10 for 8 <= m <= 64", mismatches.empty(), Json{{"mismatches", mismatches}});
}

inline void suite_tgate(const Globals& g, const VerifyArgs&, Report& r) { t_rule_gate(g, r); }

inline void run_suite(const Globals& g, const VerifyArgs& a, Report& r) {
  using Fn = void (*)(const Globals&, const VerifyArgs&, Report&);
  static const std::map<std::string, Fn> suites{
      {"cycles", suite_cycles},       {"trees", suite_trees},   {"segments", suite_segments},
      {"convexity", suite_convexity}, {"dstar", suite_dstar},   {"greedy", suite_greedy},
      {"lower-bound", suite_lower_bound}, {"upper-sample", suite_upper_sample}, {"clones", suite_clones},
      {"j2m", suite_j2m},             {"tgate", suite_tgate}};
  auto it = suites.find(a.suite);
  if (it == suites.end()) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw ParameterError("unknown suite '" + a.suite + "' (" + known + ")");
  }
  it->second(g, a, r);
}

inline Report cmd_verify(const Globals& g, const VerifyArgs& a) {
  Report r;
  r.results["suite"] = a.suite;
  run_suite(g, a, r);
  return r;
}

inline Report cmd_campaign(const Globals& g, std::vector<std::string> suites, const VerifyArgs& base) {
  if (suites.empty()) suites = suite_names();
  Report r;
  Json summary = Json::object();
  for (const auto& s : suites) {
    VerifyArgs a = base;
    a.suite = s;
    Report sub;
    run_suite(g, a, sub);
    for (auto& c : sub.checks) r.add(s + "/" + c.name, c.status, std::move(c.detail));
    r.partial = r.partial || sub.partial;
    summary[s] = to_string(sub.status());
  }
  r.results["suites"] = summary;
  return r;
}

// ---------------------------------------------------------------- solve

inline std::string read_distribution_arg(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SolveArgs {
  std::string spec;
  std::string distribution;
  std::string root;
  Count t = 1;
  std::string policy = "unrestricted";
  std::string expect;
};

inline Report cmd_solve(const Globals& g, const SolveArgs& a) {
  Report r;
  const Graph graph = build_graph(a.spec, g.labels());
  const Distribution d = parse_distribution(graph, read_distribution_arg(a.distribution));
  const Vertex root = graph.vertex(a.root);
  const MovePolicy policy = parse_policy(a.policy);
  auto res = is_solvable(graph, d, SolveQuery{root, a.t, policy}, g.solver());
  r.results["graph"] = to_string(parse_family_spec(a.spec));
  r.results["distribution"] = to_text(graph, d);
  r.results["size"] = d.size();
  r.results["root"] = graph.label(root);
  r.results["t"] = a.t;
  r.results["policy"] = to_string(policy);
  r.results["outcome"] = to_string(res.outcome);
  r.results["certificate"] = to_string(res.certificate);
  r.results["stats"] = stats_json(res.stats, g.timing);
  if (res.witness) {
    r.results["witness"] = to_json(graph, *res.witness);
    r.results["normalized_witness"] = to_json(graph, normalize_witness(graph, *res.witness));
  }
  if (!a.expect.empty()) {
    const Outcome want = parse_outcome(a.expect);
    r.add("outcome is " + a.expect, res.outcome == Outcome::unknown ? Status::unknown : (res.outcome == want ? Status::pass : Status::fail));
  } else {
    r.partial = res.outcome == Outcome::unknown;
  }
  return r;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  std::string spec;
  Count size = 0;
  Count t = 1;
  std::string policy = "unrestricted";
  std::string expect;  // none | some
};

inline Report cmd_enumerate(const Globals& g, const EnumerateArgs& a) {
  Report r;
  const Graph graph = build_graph(a.spec, g.labels());
  auto scan = scan_size(graph, a.size, a.t, parse_policy(a.policy), g.exact());
  r.results["graph"] = to_string(parse_family_spec(a.spec));
  r.results["size"] = a.size;
  r.results["t"] = a.t;
  r.results["distributions"] = scan.distributions;
  r.results["unsolvable"] = scan.unsolvable;
  r.results["unknown"] = scan.unknown;
  r.results["visited"] = scan.visited;
  if (scan.example)
    r.results["example"] = Json{{"distribution", to_text(graph, scan.example->first)}, {"root", graph.label(scan.example->second)}};
  if (a.expect == "none") {
    r.add("every size-" + std::to_string(a.size) + " distribution is solvable for every root",
          scan.unsolvable ? Status::fail : (scan.unknown ? Status::unknown : Status::pass));
  } else if (a.expect == "some") {
    r.add("some size-" + std::to_string(a.size) + " distribution is unsolvable", scan.unsolvable ? Status::pass : (scan.unknown ? Status::unknown : Status::fail));
  } else if (!a.expect.empty()) {
    throw ParameterError("--expect takes 'none' or 'some'");
  } else {
    r.partial = scan.unknown > 0;
  }
  return r;
}

// ---------------------------------------------------------------- entry

/// Parses argv, runs one command, writes the report. Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph pebbling toolkit: exact pebbling numbers, formulas and extremal constructions", "pebble"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit the report as JSON");
  app.add_option("--budget", g.budget, "Solver state budget per campaign")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for sampled checks")->capture_default_str();
  app.add_flag("--timing", g.timing, "Include wall-clock timings (reports are then not byte-stable)");
  app.add_flag("--one-based", g.one_based, "Label cycle vertices v1.. instead of v0..");

  NumberArgs number;
  auto* number_cmd = app.add_subcommand("number", "Exact pebbling number by exhaustive search");
  number_cmd->add_option("spec", number.spec, "Graph spec, e.g. cycle:6 or jahangir:2,3")->required();
  number_cmd->add_option("--root", number.root, "Root label (default: maximum over all roots)");
  number_cmd->add_option("--t", number.t, "Fold count")->check(CLI::PositiveNumber);
  number_cmd->add_option("--policy", number.policy, "unrestricted or greedy");
  number_cmd->add_option("--strategy", number.strategy, "extend or enumerate");

  std::string formula_name;
  std::vector<std::string> formula_params;
  auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed-form pebbling number");
  formula_cmd->add_option("name", formula_name, "tree, cycle, alpha, jahangir, j2m or tcycle")->required();
  formula_cmd->add_option("params", formula_params, "Formula parameters");

  VerifyArgs verify;
  auto add_verify_options = [&](CLI::App* cmd) {
    cmd->add_option("--n", verify.n, "Segment length n");
    cmd->add_option("--m", verify.m, "Segment count m");
    cmd->add_option("--max-n", verify.max_n, "Largest n for convexity");
    cmd->add_option("--max-k", verify.max_k, "Largest cycle length");
    cmd->add_option("--max-vertices", verify.max_vertices, "Largest tree size");
    cmd->add_option("--max-m", verify.max_m, "Largest clone count");
    cmd->add_option("--trials", verify.trials, "Random trials");
  };
  auto* verify_cmd = app.add_subcommand("verify", "Run one verification suite");
  verify_cmd->add_option("suite", verify.suite, "Suite name")->required();
  add_verify_options(verify_cmd);

  std::vector<std::string> campaign_suites;
  auto* campaign_cmd = app.add_subcommand("campaign", "Run several suites (default: all) into one report");
  campaign_cmd->add_option("suites", campaign_suites, "Suite names");
  add_verify_options(campaign_cmd);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide one rooted instance");
  solve_cmd->add_option("spec", solve.spec, "Graph spec")->required();
  solve_cmd->add_option("distribution", solve.distribution, "label=count,... or a file holding it")->required();
  solve_cmd->add_option("--root", solve.root, "Root label")->required();
  solve_cmd->add_option("--t", solve.t, "Fold count")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--policy", solve.policy, "unrestricted or greedy");
  solve_cmd->add_option("--expect", solve.expect, "solvable or unsolvable; turns the run into a check");

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Test every distribution of one size against every root");
  enumerate_cmd->add_option("spec", enumerate.spec, "Graph spec")->required();
  enumerate_cmd->add_option("size", enumerate.size, "Pebble count")->required();
  enumerate_cmd->add_option("--t", enumerate.t, "Fold count")->check(CLI::PositiveNumber);
  enumerate_cmd->add_option("--policy", enumerate.policy, "unrestricted or greedy");
  enumerate_cmd->add_option("--expect", enumerate.expect, "none or some unsolvable distributions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  verify.n_set = verify_cmd->count("--n") + campaign_cmd->count("--n") > 0;
  verify.m_set = verify_cmd->count("--m") + campaign_cmd->count("--m") > 0;

  const auto started = std::chrono::steady_clock::now();
  Report report;
  try {
    if (number_cmd->parsed()) report = cmd_number(g, number);
    else if (formula_cmd->parsed()) report = cmd_formula(g, formula_name, formula_params);
    else if (verify_cmd->parsed()) report = cmd_verify(g, verify);
    else if (campaign_cmd->parsed()) report = cmd_campaign(g, campaign_suites, verify);
    else if (solve_cmd->parsed()) report = cmd_solve(g, solve);
    else if (enumerate_cmd->parsed()) report = cmd_enumerate(g, enumerate);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (at offset " << e.position() << ")\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  }
  for (int i = 1; i < argc; ++i) report.command.emplace_back(argv[i]);
  report.seed = g.seed;
  if (g.timing) report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  if (g.json) out << report.to_json().dump(2) << '\n';
  else render_text(report, out);
  return report.exit_code();
}

}  // namespace pebble::cli
