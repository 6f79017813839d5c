// gk: command-line front end for the graph knapsack solvers.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gk/approximation.hpp"
#include "gk/connected_solver.hpp"
#include "gk/decomposition.hpp"
#include "gk/generators.hpp"
#include "gk/io.hpp"
#include "gk/oracles.hpp"
#include "gk/path_solver.hpp"
#include "gk/reductions.hpp"
#include "gk/shortest_path_solver.hpp"
#include "gk/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("GK_LOG");
  if (!env) return LogLevel::Error;
  const std::string level = env;
  if (level == "debug") return LogLevel::Debug;
  if (level == "info") return LogLevel::Info;
  return LogLevel::Error;
}

void log(LogLevel level, const std::string& message) {
  static const LogLevel threshold = log_level();
  if (level > threshold) return;
  static const char* names[] = {"error", "info", "debug"};
  std::cerr << "gk[" << names[static_cast<int>(level)] << "]: " << message << '\n';
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print(const gk::Json& j) { std::cout << j.dump(2) << '\n'; }

void write_json(const std::string& path, const gk::Json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

// solve ----------------------------------------------------------------------

struct SolveArgs {
  std::string input;
  std::string engine = "auto";
  std::string mode;
  std::string epsilon;
  std::uint64_t seed = 0;
  std::optional<int> trials;
  std::optional<int> k;
  int repeat = 1;
  bool timing = false;
};

std::string pick_engine(const gk::Instance& inst, const std::string& requested) {
  if (requested != "auto") return requested;
  if (inst.variant != gk::Variant::Connected && gk::Graph(inst).is_forest()) return "tree";
  if (inst.variant == gk::Variant::ShortestPath) return "labels";
  return "treewidth";
}

gk::ExactSolver make_solver(const gk::Instance& inst, const std::string& engine, const SolveArgs& args) {
  using gk::Variant;
  const Variant variant = inst.variant;
  auto mismatch = [&] {
    return UsageError("engine '" + engine + "' does not handle variant '" + std::string(gk::to_string(variant)) + "'");
  };
  if (engine == "oracle") return [](const gk::Instance& i) { return gk::oracle_solve(i); };
  if (engine == "labels") {
    if (variant != Variant::ShortestPath) throw mismatch();
    return [](const gk::Instance& i) { return gk::solve_shortest_path(i); };
  }
  if (engine == "tree") {
    if (variant == Variant::Connected) throw mismatch();
    return [](const gk::Instance& i) {
      try {
        return gk::solve_path_tree(i);
      } catch (const gk::Error& e) {
        if (e.code() != gk::ErrorCode::NoPath) throw;
        return gk::SolveReport{};
      }
    };
  }
  if (engine == "treewidth") {
    if (variant == Variant::Connected) return [](const gk::Instance& i) { return gk::solve_connected(i); };
    if (variant == Variant::Path) return [](const gk::Instance& i) { return gk::solve_path_treewidth(i); };
    throw mismatch();
  }
  if (engine == "color") {
    if (variant != Variant::Path) throw mismatch();
    const auto trials = args.trials;
    const auto k = args.k;
    const std::uint64_t seed = args.seed;
    return [trials, k, seed](const gk::Instance& i) {
      if (k) return gk::solve_path_color_coding(i, *k, trials.value_or(gk::default_trials(*k)), seed);
      return gk::solve_path_color_coding_sweep(i, trials, seed);
    };
  }
  throw UsageError("unknown engine '" + engine + "'");
}

int cmd_solve(const SolveArgs& args) {
  gk::Instance inst = gk::instance_from_json(gk::read_json_file(args.input));
  std::string mode = args.mode.empty() ? (inst.d ? "decision" : "optimize") : args.mode;
  if (mode == "decision" && !inst.d) throw UsageError("--mode decision needs a target d in the instance");
  if (mode == "optimize" && inst.d) {
    log(LogLevel::Error, "warning: optimize mode ignores the target d");
    inst.d.reset();
  }
  const std::string engine = pick_engine(inst, args.engine);
  log(LogLevel::Info, "engine " + engine + ", mode " + mode);
  const gk::ExactSolver exact = make_solver(inst, engine, args);
  std::optional<gk::Epsilon> eps;
  if (!args.epsilon.empty()) eps = gk::Epsilon::parse(args.epsilon);

  gk::SolveReport report;
  double total_ms = 0.0;
  for (int run = 0; run < args.repeat; ++run) {
    report = eps ? gk::fptas_optimize(inst, *eps, exact) : exact(inst);
    total_ms += report.stats.wall_time_ms;
    log(LogLevel::Debug, "run " + std::to_string(run) + ": " + std::to_string(report.stats.wall_time_ms) + " ms");
  }
  report.stats.wall_time_ms = total_ms / args.repeat;

  gk::Json out;
  out["variant"] = gk::to_string(inst.variant);
  out["engine"] = engine;
  out["mode"] = mode;
  if (eps) out["epsilon"] = eps->str();
  const gk::Json body = gk::report_to_json(report, args.timing);
  for (const auto& [key, value] : body.items()) out[key] = value;
  if (args.timing) out["repeat"] = args.repeat;
  print(out);
  return report.feasible ? kExitOk : kExitNo;
}

// generate -------------------------------------------------------------------

struct GenerateArgs {
  std::string reduction;
  std::string random;
  std::string graph;
  std::string items;
  std::string variant;
  std::string output;
  std::string provenance;
  std::optional<int> k;
  std::optional<int> l;
  std::optional<int> x;
  std::optional<int> y;
  int n = 0;
  std::uint64_t seed = 0;
  double p = 0.3;
  gk::Weight max_weight = 8;
  gk::Value max_value = 8;
  gk::Cost max_cost = 5;
  std::optional<gk::Weight> s;
  std::optional<gk::Value> d;
};

gk::ReductionOutput run_reduction(const GenerateArgs& args) {
  auto need = [](const std::string& file, const char* flag) {
    if (file.empty()) throw UsageError(std::string("this reduction needs ") + flag);
    return gk::read_json_file(file);
  };
  auto need_int = [](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("this reduction needs ") + flag);
    return *v;
  };
  if (args.reduction == "vc")
    return gk::reduce_vertex_cover_to_connected(gk::graph_from_json(need(args.graph, "--graph")), need_int(args.k, "--k"));
  if (args.reduction == "pvc")
    return gk::reduce_partial_vc_to_connected(gk::graph_from_json(need(args.graph, "--graph")), need_int(args.k, "--k"),
                                              need_int(args.l, "--l"));
  if (args.reduction == "star") return gk::reduce_knapsack_to_star_connected(gk::items_from_json(need(args.items, "--items")));
  if (args.reduction == "ladder") {
    const gk::Variant variant = args.variant.empty() ? gk::Variant::Path : gk::variant_from_string(args.variant);
    return gk::reduce_knapsack_to_path_gadget(gk::items_from_json(need(args.items, "--items")), variant);
  }
  if (args.reduction == "ham") {
    const gk::Json j = need(args.graph, "--graph");
    std::optional<int> x = args.x, y = args.y;
    if (!x && j.contains("x")) x = j.at("x").get<int>();
    if (!y && j.contains("y")) y = j.at("y").get<int>();
    return gk::reduce_hamiltonian_to_path(gk::graph_from_json(j), need_int(x, "--x"), need_int(y, "--y"));
  }
  throw UsageError("unknown reduction '" + args.reduction + "'");
}

int cmd_generate(const GenerateArgs& args) {
  if (args.reduction.empty() == args.random.empty()) throw UsageError("give exactly one of --reduction or --random");
  gk::Json instance;
  std::optional<gk::Json> provenance;
  if (!args.reduction.empty()) {
    const gk::ReductionOutput out = run_reduction(args);
    instance = gk::instance_to_json(out.instance);
    provenance = gk::provenance_to_json(out);
  } else {
    gk::RandomSpec spec;
    spec.family = gk::family_from_string(args.random);
    spec.variant = args.variant.empty() ? gk::Variant::Connected : gk::variant_from_string(args.variant);
    spec.n = args.n;
    spec.p = args.p;
    spec.max_weight = args.max_weight;
    spec.max_value = args.max_value;
    spec.max_cost = args.max_cost;
    spec.s = args.s;
    spec.d = args.d;
    instance = gk::instance_to_json(gk::random_instance(spec, args.seed));
  }
  if (args.output.empty()) {
    print(instance);
  } else {
    write_json(args.output, instance);
  }
  if (provenance) {
    std::string sidecar = args.provenance;
    if (sidecar.empty() && !args.output.empty()) sidecar = args.output + ".provenance.json";
    if (!sidecar.empty()) write_json(sidecar, *provenance);
  }
  return kExitOk;
}

// verify ---------------------------------------------------------------------

int cmd_verify(const std::string& input, const std::string& witness_file) {
  const gk::Instance inst = gk::instance_from_json(gk::read_json_file(input));
  const std::vector<gk::Vertex> witness = gk::witness_from_json(gk::read_json_file(witness_file));
  for (gk::Vertex v : witness)
    if (v < 0 || v >= inst.n) throw gk::Error(gk::ErrorCode::IdOutOfRange, "unknown vertex " + std::to_string(v));
  const gk::Verification result = gk::verify_solution(inst, witness);
  gk::Json out;
  out["w"] = result.w;
  out["value"] = result.a;
  out["ok"] = result.ok;
  out["reason"] = result.reason;
  print(out);
  return result.ok ? kExitOk : kExitNo;
}

// decompose ------------------------------------------------------------------

std::vector<gk::Vertex> parse_pins(const std::string& text) {
  std::vector<gk::Vertex> pins;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("bad pin '" + item + "'");
    pins.push_back(v);
  }
  return pins;
}

int cmd_decompose(const std::string& input, const std::string& pin_text, std::uint64_t seed) {
  const gk::Instance inst = gk::instance_from_json(gk::read_json_file(input));
  const std::vector<gk::Vertex> pins = pin_text.empty() ? std::vector<gk::Vertex>{} : parse_pins(pin_text);
  const gk::NiceDecomposition nd =
      gk::build_nice_decomposition(inst, gk::elimination_order_minfill(inst, seed), pins);
  gk::validate_nice_decomposition(inst, nd);
  print(gk::decomposition_to_json(nd));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knapsack solvers under connectivity, path and shortest-path constraints"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance and print a JSON report");
  solve_cmd->add_option("--input", solve.input, "Instance JSON")->required();
  solve_cmd->add_option("--engine", solve.engine)
      ->check(CLI::IsMember({"auto", "treewidth", "color", "labels", "tree", "oracle"}));
  solve_cmd->add_option("--mode", solve.mode)->check(CLI::IsMember({"decision", "optimize"}));
  solve_cmd->add_option("--epsilon", solve.epsilon, "Approximation accuracy NUM/DEN");
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_option("--trials", solve.trials)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--k", solve.k, "Colour coding path size (default: sweep 1..n)")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--repeat", solve.repeat)->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--timing", solve.timing, "Include wall time in the report");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a reduction gadget or a random instance");
  gen_cmd->add_option("--reduction", gen.reduction)->check(CLI::IsMember({"vc", "star", "pvc", "ham", "ladder"}));
  gen_cmd->add_option("--random", gen.random)->check(CLI::IsMember({"tree", "gnp", "grid"}));
  gen_cmd->add_option("--graph", gen.graph, "Source graph JSON");
  gen_cmd->add_option("--items", gen.items, "Knapsack items JSON");
  gen_cmd->add_option("--variant", gen.variant)->check(CLI::IsMember({"connected", "path", "shortest_path"}));
  gen_cmd->add_option("--output", gen.output);
  gen_cmd->add_option("--provenance", gen.provenance);
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--l", gen.l);
  gen_cmd->add_option("--x", gen.x);
  gen_cmd->add_option("--y", gen.y);
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--p", gen.p);
  gen_cmd->add_option("--max-weight", gen.max_weight);
  gen_cmd->add_option("--max-value", gen.max_value);
  gen_cmd->add_option("--max-cost", gen.max_cost);
  gen_cmd->add_option("--s", gen.s);
  gen_cmd->add_option("--d", gen.d);

  std::string verify_input, verify_witness;
  auto* verify_cmd = app.add_subcommand("verify", "Check a witness against an instance");
  verify_cmd->add_option("--input", verify_input)->required();
  verify_cmd->add_option("--witness", verify_witness)->required();

  std::string decompose_input, pins;
  std::uint64_t decompose_seed = 0;
  auto* decompose_cmd = app.add_subcommand("decompose", "Print a nice tree decomposition");
  decompose_cmd->add_option("--input", decompose_input)->required();
  decompose_cmd->add_option("--pin", pins, "Pinned vertices v[,v2]");
  decompose_cmd->add_option("--seed", decompose_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve);
    if (*gen_cmd) return cmd_generate(gen);
    if (*verify_cmd) return cmd_verify(verify_input, verify_witness);
    if (*decompose_cmd) return cmd_decompose(decompose_input, pins, decompose_seed);
  } catch (const gk::Error& e) {
    log(LogLevel::Error, e.what());
    return kExitUsage;
  } catch (const UsageError& e) {
    log(LogLevel::Error, e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    log(LogLevel::Error, e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
