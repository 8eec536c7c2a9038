#include "rebel/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rebel/error.hpp"

namespace rebel {

namespace {

bool parse_index(const std::string& s, std::size_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

std::vector<std::string> identity_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = std::to_string(v);
  return labels;
}

std::unordered_map<std::string, NodeId> LabelledGraph::label_index() const {
  std::unordered_map<std::string, NodeId> index;
  for (std::size_t v = 0; v < labels.size(); ++v) index.emplace(labels[v], static_cast<NodeId>(v));
  return index;
}

RawEdgeList parse_edge_list(std::istream& in) {
  RawEdgeList raw;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t m = 0;
  std::vector<std::pair<std::string, std::string>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(strip_comment(line));
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra))
      throw InvalidInput("edge list line " + std::to_string(line_no) + ": expected two fields");
    if (!have_header) {
      if (!parse_index(a, raw.n) || !parse_index(b, m))
        throw InvalidInput("edge list line " + std::to_string(line_no) + ": bad header '" + line + "'");
      have_header = true;
      continue;
    }
    pairs.emplace_back(a, b);
  }
  if (!have_header) throw InvalidInput("edge list: missing 'n m' header");
  if (pairs.size() != m)
    throw InvalidInput("edge list: header declares " + std::to_string(m) + " edges, found " +
                       std::to_string(pairs.size()));

  bool numeric = true;
  for (const auto& [a, b] : pairs) {
    std::size_t x = 0, y = 0;
    if (!parse_index(a, x) || !parse_index(b, y) || x >= raw.n || y >= raw.n) {
      numeric = false;
      break;
    }
  }
  if (numeric) {
    raw.labels = identity_labels(raw.n);
    for (const auto& [a, b] : pairs) {
      std::size_t x = 0, y = 0;
      parse_index(a, x);
      parse_index(b, y);
      raw.edges.push_back({static_cast<NodeId>(x), static_cast<NodeId>(y)});
    }
    return raw;
  }

  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& label) {
    auto [it, fresh] = ids.emplace(label, static_cast<NodeId>(raw.labels.size()));
    if (fresh) raw.labels.push_back(label);
    return it->second;
  };
  for (const auto& [a, b] : pairs) raw.edges.push_back({intern(a), intern(b)});
  if (raw.labels.size() != raw.n)
    throw InvalidInput("edge list: header declares " + std::to_string(raw.n) +
                       " nodes but labels name " + std::to_string(raw.labels.size()));
  return raw;
}

LabelledGraph load_graph(std::istream& in) {
  RawEdgeList raw = parse_edge_list(in);
  LabelledGraph out;
  out.graph = Graph::from_edges(raw.n, raw.edges);
  out.labels = std::move(raw.labels);
  return out;
}

LabelledGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path.string() + "'");
  try {
    return load_graph(in);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << graph.node_count() << ' ' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace rebel
