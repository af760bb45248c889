// etgds: simulate, export and count extended threshold graph dynamical systems.
//
// Exit codes: 0 success, 1 usage error, 2 state-space cap exceeded,
// 3 verification failure (including a failed --check).

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "etgds/dynamics.hpp"
#include "etgds/fixed_points.hpp"
#include "etgds/io.hpp"
#include "etgds/phase_space.hpp"
#include "etgds/verify.hpp"

using namespace etgds;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitFailed = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string graph_spec;
  std::string rule = "mixed";
  std::string scheme = "parallel";
  std::string format = "text";
  std::optional<std::uint64_t> cap;
  std::size_t workers = 1;
  std::uint64_t seed = 0;
  std::string isa = "auto";
  bool json = false;

  // simulate
  std::string state;
  std::size_t max_steps = 1'000'000;
  // count-fix
  std::string method = "brute";
  std::string check;
  // verify
  std::string suite;
  std::size_t max_n = 4;
};

std::uint64_t resolve_cap(const Config& c) {
  if (c.cap) return *c.cap;
  if (const char* env = std::getenv("ETGDS_CAP")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("ETGDS_CAP is not a non-negative integer: '") + env + "'");
  }
  return kDefaultStateCap;
}

Rule resolve_rule(const Config& c) {
  if (auto r = parse_rule(c.rule)) return *r;
  throw UsageError("unknown rule '" + c.rule + "'");
}

UpdateScheme resolve_scheme(const Config& c, const Graph& g) {
  if (c.scheme == "parallel") return UpdateScheme::parallel();
  if (c.scheme == "seq:lex") return UpdateScheme::sequential_identity(g.order());
  if (c.scheme.rfind("seq:", 0) != 0) {
    throw UsageError("scheme must be 'parallel', 'seq:lex' or 'seq:v0,v1,...'");
  }
  std::vector<Vertex> order;
  std::string token;
  const auto list = c.scheme.substr(4) + ",";
  for (char ch : list) {
    if (ch != ',') {
      token += ch;
      continue;
    }
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("bad vertex '" + token + "' in scheme '" + c.scheme + "'");
    }
    order.push_back(static_cast<Vertex>(std::stoul(token)));
    token.clear();
  }
  if (!is_permutation_of_vertices(order, g.order())) {
    throw UsageError("scheme '" + c.scheme + "' is not a permutation of 0.." +
                     std::to_string(g.order() == 0 ? 0 : g.order() - 1));
  }
  return UpdateScheme::sequential(std::move(order));
}

BuildOptions resolve_build(const Config& c) {
  BuildOptions b;
  b.cap = resolve_cap(c);
  b.workers = c.workers;
  if (c.isa == "scalar") b.isa = kernels::Isa::Scalar;
  if (c.isa == "avx2") {
    if (!kernels::isa_available(kernels::Isa::Avx2)) throw UsageError("AVX2 kernels are not available here");
    b.isa = kernels::Isa::Avx2;
  }
  return b;
}

Graph resolve_graph(const Config& c) {
  if (c.graph_spec.empty()) throw UsageError("--graph is required");
  try {
    return graph_from_spec(c.graph_spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------------------

int cmd_simulate(const Config& c) {
  const auto g = resolve_graph(c);
  const RuleScheme rs{resolve_rule(c), resolve_scheme(c, g)};
  ExtendedState start;
  try {
    start = parse_state(c.state);
    validate_state(g, start);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("state: ") + e.what());
  }
  const auto o = orbit(g, rs, start, c.max_steps);
  const bool show_potential = rs.rule == Rule::Mixed;
  const auto steps = o.transient.size() + o.cycle.size();

  if (c.json) {
    auto entries = [&](const std::vector<ExtendedState>& states) {
      json out = json::array();
      for (const auto& s : states) {
        json e = {{"state", format_state(s)}};
        if (show_potential) e["potential"] = potential(g, s);
        out.push_back(e);
      }
      return out;
    };
    const json doc = {{"graph", describe_graph(g)},     {"rule", c.rule},
                      {"scheme", rs.scheme.describe()}, {"transient", entries(o.transient)},
                      {"cycle", entries(o.cycle)},      {"transient_length", o.transient.size()},
                      {"cycle_length", o.cycle.size()}, {"steps", steps}};
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "graph " << describe_graph(g) << "\n"
            << "rule " << to_string(rs.rule) << ", scheme " << rs.scheme.describe() << "\n";
  std::size_t t = 0;
  auto print = [&](const char* tag, const std::vector<ExtendedState>& states) {
    for (const auto& s : states) {
      std::cout << "t=" << t++ << " " << tag << " " << format_state(s);
      if (show_potential) std::cout << " P=" << potential(g, s);
      std::cout << "\n";
    }
  };
  print("transient", o.transient);
  print("cycle", o.cycle);
  std::cout << "cycle length " << o.cycle.size() << ", transient " << o.transient.size() << ", steps "
            << steps << "\n";
  return kExitOk;
}

int cmd_phase_space(const Config& c) {
  const auto g = resolve_graph(c);
  const RuleScheme rs{resolve_rule(c), resolve_scheme(c, g)};
  const auto ps = build_phase_space(g, rs, resolve_build(c));
  const auto summary = attractors(ps);
  if (c.format == "dot") {
    write_phase_space_dot(std::cout, ps);
  } else if (c.format == "json" || c.json) {
    write_phase_space_json(std::cout, ps, summary);
  } else {
    std::cout << "graph " << describe_graph(g) << "\n"
              << "rule " << to_string(rs.rule) << ", scheme " << rs.scheme.describe() << "\n"
              << "states " << ps.size() << "\n"
              << "fixed " << summary.fixed_points << "\n"
              << "periodic " << summary.periodic_states << "\n"
              << "transient " << summary.transient_states << "\n";
    for (const auto& [length, count] : summary.cycle_lengths) {
      std::cout << "cycles of length " << length << ": " << count << "\n";
    }
  }
  return kExitOk;
}

bool is_path_graph(const Graph& g) {
  if (!g.is_tree()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !g.is_connected()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

BigCount count_by(const std::string& method, const Graph& g, const Config& c) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw UsageError("method '" + method + "' needs " + what + "; got " + describe_graph(g));
  };
  if (method == "brute") return count_fixed_brute(g, resolve_build(c));
  if (method == "backtrack") return count_fixed_backtrack(g);
  if (method == "path") {
    require(g.order() > 0 && is_path_graph(g), "a path");
    return count_fixed_path(g.order());
  }
  if (method == "cycle" || method == "cycle-recursion" || method == "transfer") {
    require(is_cycle_graph(g), "a cycle");
    if (method == "cycle") return count_fixed_cycle(g.order());
    if (method == "cycle-recursion") return count_fixed_cycle_recursion(g.order());
    return count_fixed_cycle_transfer(g.order());
  }
  if (method == "tree") {
    require(g.is_tree(), "a tree");
    return count_fixed_tree(g);
  }
  throw UsageError("unknown method '" + method + "'");
}

int cmd_count_fix(const Config& c) {
  const auto g = resolve_graph(c);
  const auto count = count_by(c.method, g, c);
  std::optional<BigCount> other;
  if (!c.check.empty()) other = count_by(c.check, g, c);
  const bool agree = !other || *other == count;
  if (c.json) {
    json doc = {{"graph", describe_graph(g)}, {"method", c.method}, {"count", to_decimal(count)}};
    if (other) {
      doc["check"] = {{"method", c.check}, {"count", to_decimal(*other)}, {"agree", agree}};
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << to_decimal(count) << "\n";
    if (other) {
      std::cout << "check " << c.check << ": " << to_decimal(*other) << (agree ? " (agrees)" : " (MISMATCH)")
                << "\n";
    }
  }
  return agree ? kExitOk : kExitFailed;
}

std::vector<CheckResult> run_suite(const std::string& suite, const std::vector<Graph>& graphs, const Config& c) {
  VerifyOptions opts;
  opts.cap = resolve_cap(c);
  opts.workers = c.workers;
  opts.permutation_seed = c.seed;
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  for (const auto& g : graphs) {
    if (all || suite == "limits") {
      for (Rule rule : {Rule::Static, Rule::Increasing, Rule::Decreasing, Rule::Mixed}) {
        out.push_back(verify_limit_cycles(g, rule, SchemeFamily::Sequential, opts));
        out.push_back(verify_limit_cycles(g, rule, SchemeFamily::Parallel, opts));
      }
    }
    if (all || suite == "conjugacy") {
      out.push_back(verify_conjugacy(g, UpdateScheme::parallel(), opts));
      for (auto& order : update_orders(g.order(), opts)) {
        out.push_back(verify_conjugacy(g, UpdateScheme::sequential(std::move(order)), opts));
      }
    }
    if (all || suite == "potential") out.push_back(verify_potential_descent(g, opts));
    if (all || suite == "fixsets") out.push_back(verify_fixed_sets(g, opts));
    if (all || suite == "half-ones") out.push_back(verify_half_ones(g, opts));
    if (all || suite == "unidirectional") out.push_back(verify_unidirectional(g, opts));
    if (all || suite == "weighted") out.push_back(verify_weighted_agreement(g, opts));
  }
  if (all || suite == "weighted") {
    WeightedCheckOptions w;
    w.seed = c.seed;
    out.push_back(verify_weighted_period(w));
  }
  return out;
}

int cmd_verify(const Config& c) {
  std::vector<Graph> graphs;
  if (!c.graph_spec.empty()) {
    graphs.push_back(resolve_graph(c));
  } else {
    for (std::size_t n = 1; n <= c.max_n; ++n) {
      for (auto& g : enumerate_connected_graphs(n)) graphs.push_back(std::move(g));
    }
  }
  const auto results = run_suite(c.suite, graphs, c);
  std::size_t failed = 0;
  for (const auto& r : results) failed += !r.passed;

  if (c.json) {
    json checks = json::array();
    for (const auto& r : results) {
      json e = {{"check", r.check}, {"subject", r.subject}, {"passed", r.passed}, {"detail", r.detail}};
      if (r.counterexample) e["counterexample"] = *r.counterexample;
      checks.push_back(e);
    }
    const json doc = {{"suite", c.suite}, {"checks", checks}, {"failed", failed}, {"passed", failed == 0}};
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.check << " [" << r.subject << "] " << r.detail << "\n";
      if (r.counterexample) std::cout << "  counterexample: " << *r.counterexample << "\n";
    }
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? kExitOk : kExitFailed;
}

void add_graph_options(CLI::App* cmd, Config& c, bool required) {
  auto* opt = cmd->add_option("--graph", c.graph_spec,
                              "path:n | cycle:n | star:n | random-tree:n:seed | file:PATH | tree-file:PATH");
  if (required) opt->required();
}

void add_system_options(CLI::App* cmd, Config& c) {
  cmd->add_option("--rule", c.rule, "static | increasing | decreasing | mixed")
      ->check(CLI::IsMember({"static", "increasing", "decreasing", "mixed"}));
  cmd->add_option("--scheme", c.scheme, "parallel | seq:lex | seq:v0,v1,...");
}

void add_resource_options(CLI::App* cmd, Config& c) {
  cmd->add_option("--cap", c.cap, "state-space cap (default 10000000, or ETGDS_CAP)");
  cmd->add_option("--workers", c.workers, "worker threads for exhaustive sweeps")->check(CLI::PositiveNumber);
  cmd->add_option("--isa", c.isa, "sweep kernels: auto | scalar | avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended threshold graph dynamical systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  app.add_flag("--json", c.json, "machine-readable output");

  auto* simulate = app.add_subcommand("simulate", "follow one orbit to its limit cycle");
  add_graph_options(simulate, c, true);
  add_system_options(simulate, c);
  simulate->add_option("--state", c.state, "initial state, e.g. \"((0,1),(1,2))\"")->required();
  simulate->add_option("--max-steps", c.max_steps, "give up after this many distinct states");

  auto* phase = app.add_subcommand("phase-space", "build the full phase space and classify it");
  add_graph_options(phase, c, true);
  add_system_options(phase, c);
  add_resource_options(phase, c);
  phase->add_option("--format", c.format, "text | json | dot")->check(CLI::IsMember({"text", "json", "dot"}));

  auto* count = app.add_subcommand("count-fix", "count fixed points exactly");
  const std::vector<std::string> methods = {"brute", "backtrack", "path", "cycle", "cycle-recursion", "transfer", "tree"};
  add_graph_options(count, c, true);
  add_resource_options(count, c);
  count->add_option("--method", c.method, "brute | backtrack | path | cycle | cycle-recursion | transfer | tree")
      ->check(CLI::IsMember(methods));
  count->add_option("--check", c.check, "second method that must agree")->check(CLI::IsMember(methods));

  auto* verify = app.add_subcommand("verify", "exhaustive structural checks on small graphs");
  verify->add_option("suite", c.suite, "limits | conjugacy | potential | fixsets | half-ones | unidirectional | weighted | all")
      ->required()
      ->check(CLI::IsMember({"limits", "conjugacy", "potential", "fixsets", "half-ones", "unidirectional", "weighted", "all"}));
  add_graph_options(verify, c, false);
  add_resource_options(verify, c);
  verify->add_option("--max-n", c.max_n, "sweep every connected graph up to this order")->check(CLI::Range(1, 5));
  verify->add_option("--seed", c.seed, "seed for sampled orders and random weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(c);
    if (*phase) return cmd_phase_space(c);
    if (*count) return cmd_count_fix(c);
    return cmd_verify(c);
  } catch (const CapExceeded& e) {
    std::cerr << "error: state space has " << to_decimal(e.size()) << " states, cap is " << e.cap()
              << " (raise --cap or ETGDS_CAP)\n";
    return kExitCap;
  } catch (const OrbitCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
