#include <variant>

#include "avgpart/error.hpp"
#include "avgpart/generators.hpp"
#include "avgpart/peel.hpp"
#include "avgpart/relaxation.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace avgpart;
using avgpart::testing::q;

namespace {

Graph path3() {
  const std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {1, 2}};
  return Graph::build(3, edges);
}

// Postconditions of a regular exchange-loop outcome, recomputed with the
// test-side reference evaluation.
void check_relaxed_point(const Graph& g, const Params& pr, const RelaxedPoint& point) {
  const std::vector<Rational>& y = point.y.values();
  const Rational T = surplus(g, g.vertices(), pr.c).T;
  CHECK(point.T == T);
  const auto obj = testing::naive_objectives(g, pr.s, pr.t, y);
  CHECK(obj.f1 >= pr.p * pr.p * T);
  CHECK(obj.g1 >= pr.p_bar * pr.p_bar * T);
  CHECK_FALSE(point.y.all_equal(0));
  CHECK_FALSE(point.y.all_equal(1));

  const VertexSet& C = point.support.members;
  CHECK(C == point.y.fractional_support());
  CHECK(testing::pair_edges(g, C) == static_cast<std::int64_t>(C.size() * (C.size() - (C.empty() ? 0 : 1)) / 2));
  CHECK(Rational(static_cast<long>(C.size())) < pr.N);

  Rational spread = 0;
  for (Vertex v : C) spread += y[static_cast<std::size_t>(v)] - y[static_cast<std::size_t>(v)] * y[static_cast<std::size_t>(v)];
  CHECK(spread < pr.N * pr.p * (1 - pr.p) + T * pr.p * (1 - pr.p) / (pr.s + pr.t + 2));

  Rational mass = 0;
  for (const Rational& v : y) mass += v;
  CHECK(mass >= 2 * pr.c * pr.p);
  CHECK(Rational(static_cast<long>(g.vertex_count())) - mass >= 2 * pr.c * pr.p_bar);

  if (!C.empty()) {
    CHECK(obj.f1 == pr.p * pr.p * T);
    std::vector<Rational> yc(y.size(), Rational(0));
    for (Vertex v : C) yc[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(v)];
    CHECK(testing::naive_objectives(g, pr.s, pr.t, yc).f1 <= pr.p * pr.p * T);
    for (Vertex v : C) {
      const ObjectiveGradient gr = objective_gradients(g, pr, point.y, v);
      CHECK(gr.df1 > 0);
      CHECK(gr.dg1 < 0);
    }
  }
  const std::size_t n = g.vertex_count();
  CHECK(point.iterations <= n * (n + 2));
}

}  // namespace

TEST_CASE("make_params") {
  const Params a = make_params(q(1), q(1));
  CHECK(a.p == q(1, 2));
  CHECK(a.p_bar == q(1, 2));
  CHECK(a.c == q(3));
  CHECK(a.N == q(7));
  CHECK(a.ceil_N == 7);
  CHECK_FALSE(a.swapped);

  const Params b = make_params(q(2), q(1));
  CHECK(b.swapped);
  CHECK(b.s == q(1));
  CHECK(b.t == q(2));
  CHECK(b.p == q(2, 5));
  CHECK(b.p_bar == q(3, 5));
  CHECK(b.c == q(4));
  CHECK(b.N == q(9));

  const Params c = make_params(q(3, 4), q(5, 4));
  CHECK(c.p + c.p_bar == q(1));
  CHECK(c.ceil_N == 7);

  for (auto [s, t] : {std::pair(q(0), q(1)), std::pair(q(1), q(-1, 2))}) {
    try {
      make_params(s, t);
      FAIL("expected NonPositiveParameter");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonPositiveParameter);
    }
  }
}

TEST_CASE("eval_objectives on K7") {
  const Graph k7 = complete_graph(7);
  const Params pr = make_params(q(1), q(1));

  const ObjectiveValues half = eval_objectives(k7, pr, FractionalAssignment::constant(7, q(1, 2)));
  CHECK(half.f1 == q(0));
  CHECK(half.g1 == q(0));

  const ObjectiveValues ones = eval_objectives(k7, pr, FractionalAssignment::constant(7, q(1)));
  CHECK(ones.f0 == q(14));
  CHECK(ones.g0 == q(0));

  const ObjectiveValues tri = eval_objectives(k7, pr, FractionalAssignment::indicator(7, VertexSet{0, 1, 2}));
  CHECK(tri.f0 == q(0));
  CHECK(tri.g0 == q(2));

  try {
    eval_objectives(k7, pr, FractionalAssignment::constant(6, q(0)));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("objective_gradients match finite differences") {
  // Every objective is affine in a single coordinate, so the unit difference
  // f(x + e_v) − f(x) (evaluated as a polynomial) is the exact partial.
  const auto unit_difference = [](const Graph& g, const Params& pr, std::vector<Rational> x, Vertex v) {
    const auto lo = testing::naive_objectives(g, pr.s, pr.t, x);
    x[static_cast<std::size_t>(v)] += 1;
    const auto hi = testing::naive_objectives(g, pr.s, pr.t, x);
    return std::pair<Rational, Rational>(hi.f1 - lo.f1, hi.g1 - lo.g1);
  };
  const Params pr = make_params(q(1), q(1));
  const Graph k7 = complete_graph(7);

  const auto half = FractionalAssignment::constant(7, q(1, 2));
  const auto fd_half = unit_difference(k7, pr, half.values(), 3);
  CHECK(fd_half.first == q(3, 2));
  CHECK(fd_half.second == q(-3, 2));
  const ObjectiveGradient g_half = objective_gradients(k7, pr, half, 3);
  CHECK(g_half.df1 == q(3, 2));
  CHECK(g_half.dg1 == q(-3, 2));

  const auto ones = FractionalAssignment::constant(7, q(1));
  const auto fd_ones = unit_difference(k7, pr, ones.values(), 0);
  CHECK(fd_ones.first == q(9, 2));
  CHECK(fd_ones.second == q(3, 2));
  const ObjectiveGradient g_ones = objective_gradients(k7, pr, ones, 0);
  CHECK(g_ones.df1 == q(9, 2));
  CHECK(g_ones.dg1 == q(3, 2));

  const Graph p = path3();
  const auto zero = FractionalAssignment::constant(3, q(0));
  const auto fd_zero = unit_difference(p, pr, zero.values(), 1);
  CHECK(fd_zero.first == q(-3, 2));
  CHECK(fd_zero.second == q(-1, 2));
  const ObjectiveGradient g_zero = objective_gradients(p, pr, zero, 1);
  CHECK(g_zero.df1 == q(-3, 2));
  CHECK(g_zero.dg1 == q(-1, 2));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const Graph g = testing::random_graph(n, 0.5, rng);
    const Params prr = make_params(q(1 + static_cast<long>(rng() % 5), 2), q(1 + static_cast<long>(rng() % 5), 3));
    std::vector<Rational> x;
    for (std::size_t i = 0; i < n; ++i) x.push_back(testing::random_unit(rng));
    const FractionalAssignment fx(x);
    const Vertex v = static_cast<Vertex>(rng() % n);
    const auto fd = unit_difference(g, prr, x, v);
    const ObjectiveGradient gr = objective_gradients(g, prr, fx, v);
    CHECK(gr.df1 == fd.first);
    CHECK(gr.dg1 == fd.second);
    const ObjectiveValues ev = eval_objectives(g, prr, fx);
    const auto nv = testing::naive_objectives(g, prr.s, prr.t, x);
    CHECK(ev.f0 == nv.f0);
    CHECK(ev.g0 == nv.g0);
    CHECK(ev.f1 == nv.f1);
    CHECK(ev.g1 == nv.g1);
    CHECK(ev.f0 - ev.f1 == (prr.c * prr.p - prr.s) * fx.sum());
    CHECK(ev.g0 - ev.g1 == (prr.c * prr.p_bar - prr.t) * (Rational(static_cast<long>(n)) - fx.sum()));
  }
}

TEST_CASE("joint ascent direction exists for any pair of gradients") {
  std::mt19937_64 rng(9);
  const auto pick = [&] { return q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)); };
  for (int trial = 0; trial < 2000; ++trial) {
    const Direction a{pick(), pick()};
    const Direction b = trial % 5 == 0 ? Direction(-2 * a.first, -2 * a.second) : Direction(pick(), pick());
    const Direction r = joint_ascent_direction(a, b);
    CHECK_FALSE((r.first == 0 && r.second == 0));
    CHECK(a.first * r.first + a.second * r.second >= 0);
    CHECK(b.first * r.first + b.second * r.second >= 0);
  }
}

TEST_CASE("step_to_boundary makes one coordinate integral") {
  FractionalAssignment x(std::vector<Rational>{q(1, 3), q(1, 2), q(1)});
  step_to_boundary(x, 0, 1, Direction(q(1), q(-1)));
  CHECK(x[0] == q(5, 6));
  CHECK(x[1] == q(0));
  CHECK(x[2] == q(1));
}

TEST_CASE("cliqueify: K7 at s=t=1 stops on the whole clique") {
  const Graph k7 = complete_graph(7);
  const CliqueifyOutcome out = cliqueify(k7, make_params(q(1), q(1)));
  REQUIRE(std::holds_alternative<BigClique>(out));
  const BigClique& big = std::get<BigClique>(out);
  CHECK(big.clique.members == k7.vertices());
  CHECK(big.T == q(0));
}

TEST_CASE("cliqueify: two disjoint K7 reach a clique support") {
  const Graph g = disjoint_union(complete_graph(7), complete_graph(7));
  const Params pr = make_params(q(1), q(1));
  const CliqueifyOutcome out = cliqueify(g, pr);
  REQUIRE(std::holds_alternative<RelaxedPoint>(out));
  const RelaxedPoint& point = std::get<RelaxedPoint>(out);
  CHECK(point.iterations > 1);
  check_relaxed_point(g, pr, point);
}

TEST_CASE("cliqueify: seeded G(12, 9/10) at s=1, t=3/2") {
  const Graph g = gnp_graph(12, q(9, 10), 1);
  const Params pr = make_params(q(1), q(3, 2));
  const PeelResult peeled = peel(g, pr);
  const Subgraph work = g.induced(peeled.surviving);
  const CliqueifyOutcome out = cliqueify(work.graph(), pr);
  if (const auto* point = std::get_if<RelaxedPoint>(&out)) {
    check_relaxed_point(work.graph(), pr, *point);
  } else {
    const BigClique& big = std::get<BigClique>(out);
    CHECK(is_clique(work.graph(), big.clique.members));
    CHECK(static_cast<std::int64_t>(big.clique.members.size()) >= pr.ceil_N);
  }
}

TEST_CASE("cliqueify postconditions on peeled random graphs") {
  std::mt19937_64 rng(21);
  const Rational grid[] = {q(3, 4), q(1), q(3, 2), q(5, 2)};
  int regular = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 8 + rng() % 20;
    const Graph g = testing::random_graph(n, 0.6 + 0.35 * static_cast<double>(rng() % 100) / 100.0, rng);
    const Params pr = make_params(grid[rng() % 4], grid[rng() % 4]);
    if (Rational(static_cast<long>(g.edge_count())) < pr.c * static_cast<long>(n)) continue;
    const Subgraph work = g.induced(peel(g, pr).surviving);
    const CliqueifyOutcome out = cliqueify(work.graph(), pr);
    if (const auto* point = std::get_if<RelaxedPoint>(&out)) {
      ++regular;
      check_relaxed_point(work.graph(), pr, *point);
    } else {
      const BigClique& big = std::get<BigClique>(out);
      CHECK(is_clique(work.graph(), big.clique.members));
      CHECK(static_cast<std::int64_t>(big.clique.members.size()) >= pr.ceil_N);
    }
  }
  CHECK(regular > 20);
}

TEST_CASE("cliqueify rejects an unpeeled graph") {
  const std::vector<std::pair<Vertex, Vertex>> extra{{0, 1}};
  const Graph g = disjoint_union(complete_graph(8), Graph::build(2, extra));
  try {
    cliqueify(g, make_params(q(1), q(1)));
    FAIL("expected HypothesisNotMet");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::HypothesisNotMet);
  }
}

TEST_CASE("f1 - g1 is monotone on peeled graphs") {
  std::mt19937_64 rng(33);
  int trials = 0;
  while (trials < 300) {
    const std::size_t n = 8 + rng() % 10;
    const Graph g = testing::random_graph(n, 0.8, rng);
    const Params pr = make_params(q(1), q(1));
    if (Rational(static_cast<long>(g.edge_count())) < pr.c * static_cast<long>(n)) continue;
    const Subgraph work = g.induced(peel(g, pr).surviving);
    const std::size_t m = work.graph().vertex_count();
    ++trials;
    std::vector<Rational> lo, hi;
    for (std::size_t i = 0; i < m; ++i) {
      Rational a = testing::random_unit(rng), b = testing::random_unit(rng);
      if (a > b) std::swap(a, b);
      lo.push_back(a);
      hi.push_back(b);
    }
    const auto at_lo = testing::naive_objectives(work.graph(), pr.s, pr.t, lo);
    const auto at_hi = testing::naive_objectives(work.graph(), pr.s, pr.t, hi);
    CHECK(at_hi.f1 - at_hi.g1 >= at_lo.f1 - at_lo.g1);
  }
}
