#include "rebel/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "rebel/error.hpp"
#include "rebel/graph_io.hpp"

namespace rebel {

namespace {

using nlohmann::json;

template <typename T>
std::vector<T> one_or_many(const json& node, const char* single, const char* plural, T fallback) {
  if (node.contains(plural)) return node.at(plural).get<std::vector<T>>();
  if (node.contains(single)) return {node.at(single).get<T>()};
  return {fallback};
}

}  // namespace

ExperimentSpec parse_experiment_spec(std::istream& in, const std::filesystem::path& base_dir) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  ExperimentSpec spec;
  spec.algorithms = {Algorithm::alg1, Algorithm::alg2, Algorithm::alg4, Algorithm::alg5};
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    spec.algorithms.clear();
    return spec;
  }

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("experiment spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("experiment spec must be a JSON object");

  try {
    const auto default_seed = doc.value("seed", std::uint64_t{1});
    spec.repetitions = doc.value("repetitions", std::size_t{1});
    spec.timing = doc.value("timing", true);
    if (doc.contains("algorithms")) {
      spec.algorithms.clear();
      for (const auto& a : doc.at("algorithms")) spec.algorithms.push_back(parse_algorithm(a.get<std::string>()));
    }
    if (!doc.contains("graphs")) return spec;
    for (const auto& g : doc.at("graphs")) {
      if (g.contains("file")) {
        std::filesystem::path p = g.at("file").get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        spec.graphs.push_back({std::nullopt, p});
        continue;
      }
      const gen::Kind kind = gen::parse_kind(g.at("generator").get<std::string>());
      const double p = g.value("p", 0.0);
      for (std::size_t size : one_or_many<std::size_t>(g, "size", "sizes", 0))
        for (std::uint64_t seed : one_or_many<std::uint64_t>(g, "seed", "seeds", default_seed))
          spec.graphs.push_back({gen::Params{kind, size, p, seed}, {}});
    }
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("experiment spec: ") + e.what());
  }
  return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path.string() + ": cannot open experiment spec");
  try {
    return parse_experiment_spec(in, path.parent_path());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  struct Keyed {
    std::size_t graph, rep, alg;
    ExperimentRow row;
  };
  std::vector<Keyed> out;
  for (std::size_t gi = 0; gi < spec.graphs.size(); ++gi) {
    const GraphSource& src = spec.graphs[gi];
    for (std::size_t rep = 0; rep < spec.repetitions; ++rep) {
      Graph graph;
      std::string name;
      std::uint64_t seed = 0;
      if (src.generator) {
        gen::Params params = *src.generator;
        if (params.kind == gen::Kind::random_connected) params.seed += rep;
        graph = gen::generate(params);
        name = gen::describe(params);
        seed = params.seed;
      } else {
        graph = load_graph(src.file).graph;
        name = src.file.filename().string();
      }
      for (std::size_t ai = 0; ai < spec.algorithms.size(); ++ai) {
        ExperimentRow row;
        row.graph = name;
        row.n = graph.node_count();
        row.m = graph.edge_count();
        row.seed = seed;
        row.alg = algorithm_name(spec.algorithms[ai]);
        try {
          const RunResult r = run_algorithm(graph, spec.algorithms[ai], spec.timing);
          row.count_y = r.outcome.count_y;
          row.count_n = r.outcome.count_n;
          row.bound_required = r.bound_required;
          row.bound_met = r.bound_met;
          row.regret_proof = r.regret_proof;
          row.runtime_ms = r.runtime_ms;
        } catch (const ContractViolation&) {
          row.bound_required = required_count(graph, spec.algorithms[ai]);
          row.bound_met = false;
        } catch (const IterationCapExceeded&) {
          row.bound_required = required_count(graph, spec.algorithms[ai]);
          row.bound_met = false;
        }
        out.push_back({gi, rep, ai, std::move(row)});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Keyed& a, const Keyed& b) {
    return std::tie(a.graph, a.rep, a.alg) < std::tie(b.graph, b.rep, b.alg);
  });
  std::vector<ExperimentRow> rows;
  rows.reserve(out.size());
  for (auto& k : out) rows.push_back(std::move(k.row));
  return rows;
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "graph,n,m,seed,alg,countY,countN,bound_required,bound_met,regret_proof,runtime_ms\n";
  for (const auto& r : rows) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << r.runtime_ms;
    out << r.graph << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.alg << ',' << r.count_y
        << ',' << r.count_n << ',' << r.bound_required << ',' << (r.bound_met ? "true" : "false")
        << ',' << (r.regret_proof ? "true" : "false") << ',' << ms.str() << '\n';
  }
}

}  // namespace rebel
