#include <algorithm>

#include "avgpart/error.hpp"
#include "avgpart/generators.hpp"
#include "avgpart/oracle.hpp"
#include "avgpart/peel.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace avgpart;
using avgpart::testing::q;

namespace {

struct NaiveStep {
  Vertex vertex;
  std::int64_t degree;
  Rational T;
};

// The deletion rule recomputed from scratch at every step.
std::vector<NaiveStep> naive_peel(const Graph& g, const Rational& c, VertexSet& alive) {
  std::vector<NaiveStep> steps;
  alive = g.vertices();
  while (true) {
    const Rational excess = Rational(testing::pair_edges(g, alive)) - c * static_cast<long>(alive.size());
    const Rational T = excess > 0 ? excess : Rational(0);
    std::optional<std::pair<std::int64_t, Vertex>> best;
    for (Vertex v : alive) {
      std::int64_t d = 0;
      for (Vertex w : alive) d += g.adjacent(v, w) ? 1 : 0;
      if (!best || d < best->first) best = std::pair(d, v);
    }
    if (Rational(best->first) > c + T) break;
    steps.push_back({best->second, best->first, T});
    alive.erase(std::find(alive.begin(), alive.end(), best->second));
  }
  return steps;
}

Graph k8_with_pendant() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = u + 1; v < 8; ++v) edges.emplace_back(u, v);
  edges.emplace_back(0, 8);
  return Graph::build(9, edges);
}

}  // namespace

TEST_CASE("peel: K7 keeps everything") {
  const Graph k7 = complete_graph(7);
  const PeelResult r = peel(k7, make_params(q(1), q(1)));
  CHECK(r.surviving == k7.vertices());
  CHECK(r.trace.empty());
}

TEST_CASE("peel: K8 plus pendant drops the pendant then one clique vertex") {
  const Graph g = k8_with_pendant();
  const Params params = make_params(q(1), q(1));
  VertexSet naive_alive;
  const auto expected = naive_peel(g, params.c, naive_alive);
  REQUIRE(expected.size() == 2);
  CHECK(expected[0].vertex == 8);
  CHECK(expected[0].degree == 1);
  CHECK(expected[0].T == q(2));
  CHECK(expected[1].vertex == 0);
  CHECK(expected[1].degree == 7);
  CHECK(expected[1].T == q(4));

  const PeelResult r = peel(g, params);
  REQUIRE(r.trace.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(r.trace[i].vertex == expected[i].vertex);
    CHECK(r.trace[i].degree == expected[i].degree);
    CHECK(r.trace[i].T == expected[i].T);
  }
  CHECK(r.surviving == VertexSet{1, 2, 3, 4, 5, 6, 7});
  CHECK(induced_edge_count(g, r.surviving) == 21);
}

TEST_CASE("peel: two disjoint K7 are left alone") {
  const Graph g = disjoint_union(complete_graph(7), complete_graph(7));
  const PeelResult r = peel(g, make_params(q(1), q(1)));
  CHECK(r.trace.empty());
  CHECK(r.surviving.size() == 14);
}

TEST_CASE("peel: sparse input is rejected") {
  try {
    peel(complete_graph(4), make_params(q(1), q(1)));
    FAIL("expected HypothesisNotMet");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisNotMet);
  }
}

TEST_CASE("peel agrees with the naive rule and its trace replays") {
  std::mt19937_64 rng(5);
  const Rational grid[] = {q(3, 4), q(1), q(3, 2), q(2)};
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 6 + rng() % 18;
    const Graph g = testing::random_graph(n, 0.5 + 0.4 * static_cast<double>(rng() % 100) / 100.0, rng);
    const Rational s = grid[rng() % 4];
    const Rational t = grid[rng() % 4];
    const Params params = make_params(s, t);
    if (Rational(static_cast<long>(g.edge_count())) < params.c * static_cast<long>(n)) continue;
    ++checked;
    const PeelResult r = peel(g, params);
    VertexSet naive_alive;
    const auto naive = naive_peel(g, params.c, naive_alive);
    CHECK(r.surviving == naive_alive);
    REQUIRE(r.trace.size() == naive.size());

    // Replay: deleting the traced vertices in order reproduces the survivor and
    // every intermediate graph keeps ||V|| >= c|V|.
    VertexSet alive = g.vertices();
    for (const PeelStep& step : r.trace) {
      std::int64_t d = 0;
      for (Vertex w : alive) d += g.adjacent(step.vertex, w) ? 1 : 0;
      CHECK(d == step.degree);
      CHECK(Rational(step.degree) <= params.c + step.T);
      alive.erase(std::find(alive.begin(), alive.end(), step.vertex));
      CHECK(Rational(testing::pair_edges(g, alive)) >= params.c * static_cast<long>(alive.size()));
    }
    CHECK(alive == r.surviving);

    const Subgraph sub = g.induced(r.surviving);
    const Rational T = surplus(sub.graph(), sub.graph().vertices(), params.c).T;
    CHECK(Rational(static_cast<long>(sub.graph().min_degree())) > params.c + T);
    CHECK(T < params.s + params.t + 2);
    CHECK(Rational(static_cast<long>(r.surviving.size())) > params.s + params.t + 2 + T);
  }
  CHECK(checked > 50);
}

TEST_CASE("graphs with only sparse proper subsets lose nothing to peeling") {
  // A graph where every proper subset is sparse at c already has the degree
  // property, so the peeler must not delete anything.
  std::mt19937_64 rng(17);
  int seen = 0;
  for (int trial = 0; trial < 400 && seen < 10; ++trial) {
    const std::size_t n = 7 + rng() % 6;
    const Graph g = testing::random_graph(n, 0.85, rng);
    const Params params = make_params(q(1), q(1));
    if (Rational(static_cast<long>(g.edge_count())) < params.c * static_cast<long>(n)) continue;
    if (!oracle::all_subsets_sparse(g, params.c)) continue;
    ++seen;
    CHECK(peel(g, params).trace.empty());
  }
  CHECK(seen > 0);
}
