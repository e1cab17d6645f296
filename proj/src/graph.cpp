#include "avgpart/graph.hpp"

#include <algorithm>
#include <string>

#include "avgpart/error.hpp"

namespace avgpart {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<char> membership(const Graph& g, std::span<const Vertex> xs) {
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : xs) {
    if (!g.contains(v)) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
    in[static_cast<std::size_t>(v)] = 1;
  }
  return in;
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  Graph g;
  g.adjacency_.assign(n, {});
  g.edges_.reserve(edge_list.size());
  for (auto [a, b] : edge_list) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw Error(ErrorKind::VertexOutOfRange, "edge " + pair_text(a, b) + " with n=" + std::to_string(n));
    if (a == b) throw Error(ErrorKind::SelfLoop, "edge " + pair_text(a, b));
    g.edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& x, const Edge& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) throw Error(ErrorKind::DuplicateEdge, "edge " + pair_text(dup->u, dup->v));
  for (const Edge& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  return g;
}

std::size_t Graph::min_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < adjacency_.size(); ++v)
    if (v == 0 || adjacency_[v].size() < best) best = adjacency_[v].size();
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

VertexSet Graph::vertices() const {
  VertexSet all(vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<Vertex>(v);
  return all;
}

Subgraph Graph::induced(std::span<const Vertex> subset) const {
  VertexSet ids = normalize_set(*this, subset);
  std::vector<Vertex> local(vertex_count(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) local[static_cast<std::size_t>(ids[i])] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const Edge& e : edges_) {
    Vertex a = local[static_cast<std::size_t>(e.u)];
    Vertex b = local[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.emplace_back(a, b);
  }
  Graph sub = Graph::build(ids.size(), kept);
  return Subgraph(std::move(sub), std::move(ids));
}

VertexSet Subgraph::lift(std::span<const Vertex> local) const {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(lift(v));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet normalize_set(const Graph& g, std::span<const Vertex> xs) {
  VertexSet out(xs.begin(), xs.end());
  for (Vertex v : out)
    if (!g.contains(v)) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t induced_edge_count(const Graph& g, std::span<const Vertex> xs) {
  const auto in = membership(g, xs);
  std::int64_t twice = 0;
  for (std::size_t v = 0; v < in.size(); ++v) {
    if (!in[v]) continue;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) twice += in[static_cast<std::size_t>(w)];
  }
  return twice / 2;
}

std::int64_t cross_edge_count(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  const auto in_a = membership(g, a);
  const auto in_b = membership(g, b);
  std::int64_t count = 0;
  for (std::size_t v = 0; v < in_a.size(); ++v) {
    if (!in_a[v]) continue;
    if (in_b[v]) throw Error(ErrorKind::OverlappingSets, "vertex " + std::to_string(v) + " in both sets");
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) count += in_b[static_cast<std::size_t>(w)];
  }
  return count;
}

Surplus surplus(const Graph& g, std::span<const Vertex> xs, const Rational& c) {
  const VertexSet set = normalize_set(g, xs);
  Rational excess = Rational(induced_edge_count(g, set)) - c * static_cast<long>(set.size());
  Rational T = rational_max(Rational(0), excess);
  return {std::move(excess), std::move(T)};
}

VertexSet complement(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  auto in = membership(g, a);
  for (Vertex v : b) {
    if (!g.contains(v)) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
    in[static_cast<std::size_t>(v)] = 1;
  }
  VertexSet out;
  for (std::size_t v = 0; v < in.size(); ++v)
    if (!in[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

}  // namespace avgpart
