#include "rebel/generators.hpp"

#include <random>
#include <sstream>
#include <vector>

#include "rebel/error.hpp"

namespace rebel::gen {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

// Top 53 bits of one engine draw mapped to [0, 1). Avoids the
// implementation-defined std distributions so output is platform-stable.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Graph star(std::size_t n) {
  require(n >= 2, "star requires n >= 2");
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n) {
  require(n >= 2, "complete requires n >= 2");
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph wheel(std::size_t n) {
  require(n >= 4, "wheel requires n >= 4");
  std::vector<Edge> edges;
  const auto rim = static_cast<NodeId>(n - 1);
  for (NodeId v = 1; v <= rim; ++v) {
    edges.push_back({0, v});
    edges.push_back({v, v == rim ? NodeId{1} : v + 1});
  }
  return Graph::from_edges(n, edges);
}

Graph triangle_chain(std::size_t k) {
  require(k >= 1, "triangle_chain requires k >= 1");
  std::vector<Edge> edges;
  for (NodeId i = 0; i < k; ++i) {
    NodeId a = 3 * i, b = a + 1, c = a + 2;
    edges.push_back({a, b});
    edges.push_back({a, c});
    edges.push_back({b, c});
    if (i + 1 < k) edges.push_back({c, c + 3});
  }
  return Graph::from_edges(3 * k, edges);
}

Graph path(std::size_t n) {
  require(n >= 2, "path requires n >= 2");
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.push_back({v, static_cast<NodeId>((v + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  require(n >= 2, "random_connected requires n >= 2");
  require(p > 0.0 && p <= 1.0, "random_connected requires 0 < p <= 1");
  // One stream per seed; rejected samples consume it, so nearby seeds never share draws.
  std::mt19937_64 rng(splitmix64(seed));
  for (int attempt = 0; attempt < kMaxConnectAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (unit_draw(rng) < p) edges.push_back({u, v});
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
  std::ostringstream msg;
  msg << "random_connected(" << n << ", " << p << ", seed=" << seed << "): no connected sample in "
      << kMaxConnectAttempts << " attempts";
  throw InvalidInput(msg.str());
}

Kind parse_kind(std::string_view name) {
  if (name == "star") return Kind::star;
  if (name == "complete") return Kind::complete;
  if (name == "wheel") return Kind::wheel;
  if (name == "triangle-chain" || name == "triangle_chain") return Kind::triangle_chain;
  if (name == "path") return Kind::path;
  if (name == "cycle") return Kind::cycle;
  if (name == "random" || name == "random_connected" || name == "random-connected")
    return Kind::random_connected;
  throw InvalidInput("unknown generator kind '" + std::string(name) + "'");
}

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::star: return "star";
    case Kind::complete: return "complete";
    case Kind::wheel: return "wheel";
    case Kind::triangle_chain: return "triangle-chain";
    case Kind::path: return "path";
    case Kind::cycle: return "cycle";
    case Kind::random_connected: return "random";
  }
  return "?";
}

Graph generate(const Params& params) {
  switch (params.kind) {
    case Kind::star: return star(params.size);
    case Kind::complete: return complete(params.size);
    case Kind::wheel: return wheel(params.size);
    case Kind::triangle_chain: return triangle_chain(params.size);
    case Kind::path: return path(params.size);
    case Kind::cycle: return cycle(params.size);
    case Kind::random_connected: return random_connected(params.size, params.p, params.seed);
  }
  throw InvalidInput("unknown generator kind");
}

std::string describe(const Params& params) {
  std::ostringstream out;
  out << kind_name(params.kind) << '-' << params.size;
  if (params.kind == Kind::random_connected) out << '-' << params.p << "-s" << params.seed;
  return out.str();
}

}  // namespace rebel::gen
