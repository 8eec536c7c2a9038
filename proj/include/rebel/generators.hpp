#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "rebel/graph.hpp"

namespace rebel::gen {

// Center 0, leaves 1..n-1.
Graph star(std::size_t n);
Graph complete(std::size_t n);
// Hub 0 joined to the cycle 1..n-1. Requires n >= 4.
Graph wheel(std::size_t n);
// k triangles {3i, 3i+1, 3i+2} linked by the path 3i+2 -- 3(i+1)+2.
Graph triangle_chain(std::size_t k);
Graph path(std::size_t n);
Graph cycle(std::size_t n);

// Erdos-Renyi G(n, p) resampled until connected. All attempts draw from one
// mt19937_64 seeded with splitmix64(seed); fails after kMaxConnectAttempts.
inline constexpr int kMaxConnectAttempts = 1000;
Graph random_connected(std::size_t n, double p, std::uint64_t seed);

std::uint64_t splitmix64(std::uint64_t x);

enum class Kind { star, complete, wheel, triangle_chain, path, cycle, random_connected };

struct Params {
  Kind kind = Kind::star;
  std::size_t size = 0;  // n, or the triangle count for triangle_chain
  double p = 0.0;
  std::uint64_t seed = 0;
};

Kind parse_kind(std::string_view name);
std::string_view kind_name(Kind kind);
Graph generate(const Params& params);
// Short stable identifier such as "star-6" or "random-30-0.2-s42".
std::string describe(const Params& params);

}  // namespace rebel::gen
