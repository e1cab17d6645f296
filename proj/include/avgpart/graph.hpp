#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "avgpart/rational.hpp"

namespace avgpart {

using Vertex = std::int32_t;
using VertexSet = std::vector<Vertex>;  // ascending, no duplicates

struct Edge {
  Vertex u;
  Vertex v;  // u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Subgraph;

/// Simple undirected graph on vertices 0..n-1. Immutable once built; all
/// queries are const and safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Rejects self-loops, repeated pairs (in either orientation) and ids
  /// outside [0, n).
  static Graph build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// Edges with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t min_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < vertex_count(); }

  /// All vertex ids 0..n-1.
  VertexSet vertices() const;

  /// G[X] with vertices renumbered 0..|X|-1 in ascending order of the
  /// original ids; `Subgraph::lift` maps local ids back.
  Subgraph induced(std::span<const Vertex> subset) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

class Subgraph {
 public:
  Subgraph(Graph graph, VertexSet parent_ids) : graph_(std::move(graph)), parent_ids_(std::move(parent_ids)) {}

  const Graph& graph() const { return graph_; }
  const VertexSet& parent_ids() const { return parent_ids_; }
  Vertex lift(Vertex local) const { return parent_ids_[static_cast<std::size_t>(local)]; }
  VertexSet lift(std::span<const Vertex> local) const;

 private:
  Graph graph_;
  VertexSet parent_ids_;
};

/// Sorted, deduplicated copy after checking every id is in range.
VertexSet normalize_set(const Graph& g, std::span<const Vertex> xs);

/// ||X||: edges with both ends in X.
std::int64_t induced_edge_count(const Graph& g, std::span<const Vertex> xs);

/// |E(A,B)|. A and B must be disjoint (OverlappingSets otherwise).
std::int64_t cross_edge_count(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

struct Surplus {
  Rational excess;  // ||X|| - c|X|
  Rational T;       // max(0, excess)
};

Surplus surplus(const Graph& g, std::span<const Vertex> xs, const Rational& c);

/// V(G) \ (A ∪ B), ascending.
VertexSet complement(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b = {});

}  // namespace avgpart
