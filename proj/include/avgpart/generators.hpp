#pragma once

#include <cstdint>
#include <string_view>

#include "avgpart/graph.hpp"

namespace avgpart {

/// SplitMix64 (Steele, Lea, Flood): state advances by 0x9E3779B97F4A7C15,
/// output mixes with 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

Graph complete_graph(std::size_t n);

/// G(n, prob): pairs (u, v) with u < v are visited in lexicographic order and
/// each consumes one SplitMix64 draw x; the edge is kept iff x / 2^64 < prob.
/// prob must lie in [0, 1] with numerator and denominator below 2^63.
Graph gnp_graph(std::size_t n, const Rational& prob, std::uint64_t seed);

/// Clique on {0, .., s+t} joined to an independent set on the remaining
/// vertices. Needs positive integers s, t and n > s+t+1.
Graph sharp_graph(std::int64_t s, std::int64_t t, std::size_t n);

/// Vertices of `b` are shifted by |V(a)|.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Generator expressions: complete(n), gnp(n,prob[,seed]), sharp(s,t,n),
/// union(expr,expr). `default_seed` applies to gnp without a seed.
/// InvalidSpec on malformed input.
Graph generate(std::string_view spec, std::uint64_t default_seed = 0);

}  // namespace avgpart
