#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rebel/dynamics.hpp"
#include "rebel/equilibrium.hpp"
#include "rebel/error.hpp"
#include "rebel/generators.hpp"
#include "rebel/independent_set.hpp"
#include "rebel/mirror.hpp"
#include "rebel/oracle.hpp"
#include "rebel/peeling.hpp"
#include "rebel/reductions.hpp"

namespace py = pybind11;
using namespace rebel;

namespace {

std::vector<NodeId> order_of(const Schedule& s) { return {s.order().begin(), s.order().end()}; }

std::string decisions_of(const Outcome& o) {
  std::string out;
  for (Decision d : o.decision) out.push_back(to_char(d));
  return out;
}

Graph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Marketing schedules for rebel consumers";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", PyExc_RuntimeError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);
  py::register_exception<IterationCapExceeded>(m, "IterationCapExceeded", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::node_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("neighbors", [](const Graph& g, NodeId v) {
        auto s = g.neighbors(v);
        return std::vector<NodeId>(s.begin(), s.end());
      })
      .def("edges", [](const Graph& g) {
        std::vector<std::pair<NodeId, NodeId>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
        return out;
      });

  m.def("generate", [](const std::string& kind, std::size_t size, double p, std::uint64_t seed) {
    return gen::generate({gen::parse_kind(kind), size, p, seed});
  }, py::arg("kind"), py::arg("size"), py::arg("p") = 0.0, py::arg("seed") = 1);

  m.def("simulate", [](const Graph& g, const std::vector<NodeId>& order) {
    return decisions_of(simulate(g, Schedule(order)));
  }, "Decision string, one 'Y' or 'N' per node id.");
  m.def("is_regret_proof", [](const Graph& g, const std::vector<NodeId>& order) {
    return is_regret_proof(g, Schedule(order)).stable;
  });

  m.def("schedule_y", [](const Graph& g) { return order_of(schedule_y(g)); });
  m.def("schedule_n", [](const Graph& g) { return order_of(schedule_n(g)); });
  m.def("algorithm4", [](const Graph& g) { return order_of(algorithm4(g).schedule); });
  m.def("algorithm5", [](const Graph& g) { return order_of(algorithm5(g).schedule); });
  m.def("algorithm5_bound", &algorithm5_bound, py::arg("n"), py::arg("alpha") = py::none());
  m.def("independence_number", [](const Graph& g) { return exact_max_independent_set(g).alpha; });

  m.def("brute_force", [](const Graph& g) {
    const OracleResult r = brute_force(g);
    py::dict d;
    d["opt_y"] = r.opt_y;
    d["opt_n"] = r.opt_n;
    d["regret_proof_exists"] = r.regret_proof_exists;
    d["best_regret_proof_y"] = r.best_regret_proof_y;
    d["best_regret_proof_n"] = r.best_regret_proof_n;
    return d;
  });
  m.def("exact_optimum", [](const Graph& g, const std::string& objective) {
    if (objective != "Y" && objective != "N") throw InvalidInput("objective must be 'Y' or 'N'");
    const ExactOptimum e = exact_optimum(g, objective == "Y" ? Decision::Y : Decision::N);
    return py::make_tuple(e.value, order_of(e.witness));
  });

  m.def("mis_to_rebel", [](const Graph& h) { return mis_to_rebel(h).graph; });
}
