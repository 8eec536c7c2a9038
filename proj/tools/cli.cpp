#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "rebel/dynamics.hpp"
#include "rebel/error.hpp"
#include "rebel/experiment.hpp"
#include "rebel/generators.hpp"
#include "rebel/graph_io.hpp"
#include "rebel/oracle.hpp"
#include "rebel/reductions.hpp"
#include "rebel/runner.hpp"

namespace rebel::cli {

namespace {

// Sends output to a file, or to the fallback stream when path is empty.
void emit(const std::string& path, std::ostream& fallback,
          const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidInput(path + ": cannot open for writing");
  write(file);
  if (!file) throw InvalidInput(path + ": write failed");
}

std::string fixed3(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << v;
  return s.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

struct GenArgs {
  std::string kind;
  std::size_t size = 0;
  std::optional<double> p;
  std::uint64_t seed = 1;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  gen::Params params{gen::parse_kind(a.kind), a.size, 0.0, a.seed};
  if (params.kind == gen::Kind::random_connected) {
    if (!a.p) throw InvalidInput("random graphs need an edge probability p");
    params.p = *a.p;
  }
  const Graph g = gen::generate(params);
  emit(a.out, out, [&](std::ostream& o) { write_edge_list(o, g); });
  return 0;
}

struct RunArgs {
  std::string algorithm;
  std::string graph;
  std::string schedule_out;
  std::string trace_out;
  bool no_timing = false;
};

int cmd_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  const Algorithm alg = parse_algorithm(a.algorithm);
  const LabelledGraph lg = load_graph(a.graph);
  require_schedulable(lg.graph);
  RunResult r;
  try {
    r = run_algorithm(lg.graph, alg, !a.no_timing);
  } catch (const ContractViolation& e) {
    err << "guarantee failed: " << e.what() << '\n';
    return kGuaranteeFailed;
  } catch (const IterationCapExceeded& e) {
    err << "guarantee failed: " << e.what() << '\n';
    return kGuaranteeFailed;
  }
  if (!a.schedule_out.empty())
    emit(a.schedule_out, out, [&](std::ostream& o) { write_schedule(o, r.schedule, lg.labels); });
  if (!a.trace_out.empty())
    emit(a.trace_out, out, [&](std::ostream& o) { write_trace_csv(o, r.trace); });

  out << "n,m,algorithm,countY,countN,regret_proof,runtime_ms\n";
  out << lg.graph.node_count() << ',' << lg.graph.edge_count() << ',' << algorithm_name(alg) << ','
      << r.outcome.count_y << ',' << r.outcome.count_n << ',' << yes_no(r.regret_proof) << ','
      << fixed3(r.runtime_ms) << '\n';
  if (r.oracle) {
    out << "optY=" << r.oracle->opt_y << " optN=" << r.oracle->opt_n
        << " regret_proof_exists=" << yes_no(r.oracle->regret_proof_exists)
        << " best_regret_proof_y=" << r.oracle->best_regret_proof_y
        << " best_regret_proof_n=" << r.oracle->best_regret_proof_n << '\n';
  }
  if (!r.bound_met) {
    err << "guarantee failed: " << algorithm_name(alg) << " needs " << r.bound_required << ' '
        << to_char(r.objective) << " decisions"
        << (alg == Algorithm::alg4 || alg == Algorithm::alg5 ? " and a regret-proof outcome" : "")
        << '\n';
    return kGuaranteeFailed;
  }
  return 0;
}

int cmd_check(const std::string& graph_path, const std::string& schedule_path, std::ostream& out,
              std::ostream& err) {
  const LabelledGraph lg = load_graph(graph_path);
  std::ifstream in(schedule_path);
  if (!in) throw InvalidInput(schedule_path + ": cannot open");
  Schedule schedule;
  try {
    schedule = read_schedule(in, lg.labels);
  } catch (const InvalidInput& e) {
    throw InvalidInput(schedule_path + ": " + e.what());
  }
  const Outcome outcome = simulate(lg.graph, schedule);
  write_outcome_csv(out, schedule, outcome, lg.labels);
  const StabilityReport report = is_stable(lg.graph, associated_cut(lg.graph, outcome));
  err << "countY=" << outcome.count_y << " countN=" << outcome.count_n
      << " regret_proof=" << yes_no(report.stable);
  if (!report.stable) {
    err << " violators=";
    bool first = true;
    for (NodeId v : report.violators.members()) {
      err << (first ? "" : ";") << lg.labels[v];
      first = false;
    }
  }
  err << '\n';
  return 0;
}

struct ReduceArgs {
  std::string kind;
  std::string input;
  std::string out;
  std::string certificate;
};

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  ReducedInstance inst;
  if (a.kind == "mis") {
    inst = mis_to_rebel(load_graph(a.input).graph);
  } else if (a.kind == "sat") {
    inst = sat_to_rebel(load_dimacs(a.input));
  } else {
    throw InvalidInput("unknown reduction '" + a.kind + "' (expected mis or sat)");
  }
  emit(a.out, out, [&](std::ostream& o) { write_edge_list(o, inst.graph); });
  if (!a.certificate.empty())
    emit(a.certificate, out, [&](std::ostream& o) { write_certificate(o, inst); });
  err << "nodes=" << inst.graph.node_count() << " edges=" << inst.graph.edge_count() << '\n';
  return 0;
}

int cmd_experiment(const std::string& spec_path, const std::string& out_path, bool no_timing,
                   std::ostream& out) {
  ExperimentSpec spec = load_experiment_spec(spec_path);
  if (no_timing) spec.timing = false;
  const auto rows = run_experiment(spec);
  emit(out_path, out, [&](std::ostream& o) { write_experiment_csv(o, rows); });
  bool all_met = true;
  for (const auto& r : rows) all_met = all_met && r.bound_met;
  return all_met ? 0 : kGuaranteeFailed;
}

int cmd_audit(const std::string& graph_path, bool csv, std::ostream& out) {
  const LabelledGraph lg = load_graph(graph_path);
  require_schedulable(lg.graph);
  const AuditReport report = audit(lg.graph, graph_path);
  if (csv) {
    write_audit_csv_header(out);
    write_audit_csv(out, report);
  } else {
    write_audit_text(out, report);
  }
  return report.passed() ? 0 : kGuaranteeFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Marketing schedules for rebel consumers on social networks", "rebel-sched"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("kind", gen_args.kind,
                  "star | complete | wheel | triangle-chain | path | cycle | random")
      ->required();
  gen->add_option("size", gen_args.size, "node count (triangle count for triangle-chain)")->required();
  gen->add_option("p", gen_args.p, "edge probability for random");
  gen->add_option("--seed", gen_args.seed, "random seed")->envname("REBEL_SCHED_SEED");
  gen->add_option("-o,--out", gen_args.out, "output file (default stdout)");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "Schedule a graph and print a summary line");
  run->add_option("algorithm", run_args.algorithm, "alg1 | alg2 | alg4 | alg5 | brute")->required();
  run->add_option("graph", run_args.graph, "edge-list file")->required();
  run->add_option("-o,--schedule", run_args.schedule_out, "write the schedule, one label per line");
  run->add_option("--trace", run_args.trace_out, "per-iteration CSV for alg4/alg5");
  run->add_flag("--no-timing", run_args.no_timing, "report runtime_ms as 0");

  std::string check_graph, check_schedule;
  auto* check = app.add_subcommand("check", "Simulate a schedule: decisions CSV, verdict on stderr");
  check->add_option("graph", check_graph, "edge-list file")->required();
  check->add_option("schedule", check_schedule, "schedule file")->required();

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Build a hardness instance with a role certificate");
  reduce->add_option("kind", reduce_args.kind, "mis | sat")->required();
  reduce->add_option("input", reduce_args.input, "edge list (mis) or DIMACS CNF (sat)")->required();
  reduce->add_option("-o,--out", reduce_args.out, "output edge list (default stdout)");
  reduce->add_option("--certificate", reduce_args.certificate, "JSON-lines role certificate");

  std::string spec_path, experiment_out;
  bool experiment_no_timing = false;
  auto* experiment = app.add_subcommand("experiment", "Run a JSON experiment spec to CSV");
  experiment->add_option("spec", spec_path, "JSON spec file")->required();
  experiment->add_option("-o,--out", experiment_out, "output CSV (default stdout)");
  experiment->add_flag("--no-timing", experiment_no_timing, "report runtime_ms as 0");

  std::string audit_graph;
  bool audit_csv = false;
  auto* audit_cmd = app.add_subcommand("audit", "Check every guarantee on one graph");
  audit_cmd->add_option("graph", audit_graph, "edge-list file")->required();
  audit_cmd->add_flag("--csv", audit_csv, "CSV instead of text");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_args, out);
    if (run->parsed()) return cmd_run(run_args, out, err);
    if (check->parsed()) return cmd_check(check_graph, check_schedule, out, err);
    if (reduce->parsed()) return cmd_reduce(reduce_args, out, err);
    if (experiment->parsed()) return cmd_experiment(spec_path, experiment_out, experiment_no_timing, out);
    if (audit_cmd->parsed()) return cmd_audit(audit_graph, audit_csv, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace rebel::cli
