#pragma once

// Test-only reference computations. Everything here is written from the
// definitions by pair enumeration and must not call the library routines it
// is used to check.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "avgpart/graph.hpp"
#include "avgpart/relaxation.hpp"

namespace avgpart::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline std::vector<char> mask_of(std::size_t n, const VertexSet& xs) {
  std::vector<char> in(n, 0);
  for (Vertex v : xs) in[static_cast<std::size_t>(v)] = 1;
  return in;
}

/// ||X|| by enumerating all unordered pairs of X.
inline std::int64_t pair_edges(const Graph& g, const VertexSet& xs) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) count += g.adjacent(xs[i], xs[j]) ? 1 : 0;
  return count;
}

inline std::int64_t pair_cross(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::int64_t count = 0;
  for (Vertex u : a)
    for (Vertex v : b) count += g.adjacent(u, v) ? 1 : 0;
  return count;
}

struct NaiveObjectives {
  Rational f0, g0, f1, g1;
};

/// f0, g0, f1, g1 straight from their definitions with explicit s, t.
inline NaiveObjectives naive_objectives(const Graph& g, const Rational& s, const Rational& t,
                                        const std::vector<Rational>& x) {
  const std::size_t n = g.vertex_count();
  Rational inner = 0, outer = 0, mass = 0;
  for (std::size_t u = 0; u < n; ++u) {
    mass += x[u];
    for (std::size_t v = u + 1; v < n; ++v)
      if (g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
        inner += x[u] * x[v];
        outer += (1 - x[u]) * (1 - x[v]);
      }
  }
  const Rational co = Rational(static_cast<long>(n)) - mass;
  const Rational c = s + t + 1;
  const Rational p = (s + 1) / (s + t + 2);
  const Rational pb = (t + 1) / (s + t + 2);
  return {inner - s * mass, outer - t * co, inner - c * p * mass, outer - c * pb * co};
}

struct NaivePenalized {
  Rational f2, g2;
};

/// f2, g2 from the definitions; C is the fractional support of y.
inline NaivePenalized naive_penalized(const Graph& g, const Rational& s, const Rational& t,
                                      const std::vector<Rational>& y, const VertexSet& C,
                                      const std::vector<Rational>& x) {
  const NaiveObjectives base = naive_objectives(g, s, t, x);
  const Rational p = (s + 1) / (s + t + 2);
  const Rational pb = (t + 1) / (s + t + 2);
  Rational sx = 0, sy = 0, sx_co = 0, sy_co = 0, spread = 0;
  for (Vertex v : C) {
    const auto i = static_cast<std::size_t>(v);
    sx += x[i];
    sy += y[i];
    sx_co += 1 - x[i];
    sy_co += 1 - y[i];
    spread += x[i] - x[i] * x[i];
  }
  const Rational fa = sx - sy + pb;
  const Rational ga = sx_co - sy_co + p;
  return {base.f0 - fa * fa / 2 - spread / 2, base.g0 - ga * ga / 2 - spread / 2};
}

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph::build(n, edges);
}

/// Rational in [0,1] with denominator up to `max_den`; endpoints included.
inline Rational random_unit(std::mt19937_64& rng, long max_den = 12) {
  std::uniform_int_distribution<long> den_dist(1, max_den);
  const long den = den_dist(rng);
  std::uniform_int_distribution<long> num_dist(0, den);
  return q(num_dist(rng), den);
}

inline VertexSet random_subset(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  VertexSet out;
  for (std::size_t v = 0; v < n; ++v)
    if (coin(rng)) out.push_back(static_cast<Vertex>(v));
  return out;
}

/// Greedy clique grown from a random start vertex.
inline VertexSet random_clique(const Graph& g, std::mt19937_64& rng) {
  VertexSet order = g.vertices();
  std::shuffle(order.begin(), order.end(), rng);
  VertexSet clique;
  for (Vertex v : order) {
    bool ok = true;
    for (Vertex u : clique) ok = ok && g.adjacent(u, v);
    if (ok) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

}  // namespace avgpart::testing
