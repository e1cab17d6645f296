#include "avgpart/relaxation.hpp"

#include <algorithm>
#include <string>

#include "avgpart/error.hpp"

namespace avgpart {

Params make_params(const Rational& s, const Rational& t) {
  if (s <= 0 || t <= 0)
    throw Error(ErrorKind::NonPositiveParameter, "s=" + format_rational(s) + " t=" + format_rational(t));
  Params params;
  params.swapped = s > t;
  params.s = params.swapped ? t : s;
  params.t = params.swapped ? s : t;
  params.c = params.s + params.t + 1;
  params.p = (params.s + 1) / (params.s + params.t + 2);
  params.p_bar = (params.t + 1) / (params.s + params.t + 2);
  params.N = 2 * params.s + 2 * params.t + 3;
  params.ceil_N = ceil_to_int(params.N);
  return params;
}

// ---------------------------------------------------------------------------
// FractionalAssignment

namespace {

bool in_unit_interval(const Rational& q) { return q >= 0 && q <= 1; }

}  // namespace

FractionalAssignment::FractionalAssignment(std::vector<Rational> values) : values_(std::move(values)) {
  for (std::size_t v = 0; v < values_.size(); ++v)
    if (!in_unit_interval(values_[v]))
      throw Error(ErrorKind::InvalidInput, "coordinate " + std::to_string(v) + " = " + format_rational(values_[v]));
}

FractionalAssignment FractionalAssignment::constant(std::size_t n, const Rational& value) {
  return FractionalAssignment(std::vector<Rational>(n, value));
}

FractionalAssignment FractionalAssignment::indicator(std::size_t n, std::span<const Vertex> ones) {
  std::vector<Rational> values(n, Rational(0));
  for (Vertex v : ones) {
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
    values[static_cast<std::size_t>(v)] = 1;
  }
  return FractionalAssignment(std::move(values));
}

void FractionalAssignment::set(Vertex v, const Rational& value) {
  if (!in_unit_interval(value))
    throw Error(ErrorKind::InternalAssertion, "coordinate " + std::to_string(v) + " left [0,1]: " + format_rational(value));
  values_[static_cast<std::size_t>(v)] = value;
}

VertexSet FractionalAssignment::fractional_support() const {
  VertexSet fr;
  for (std::size_t v = 0; v < values_.size(); ++v)
    if (values_[v] > 0 && values_[v] < 1) fr.push_back(static_cast<Vertex>(v));
  return fr;
}

bool FractionalAssignment::all_equal(int value) const {
  return std::all_of(values_.begin(), values_.end(), [&](const Rational& q) { return q == value; });
}

Rational FractionalAssignment::sum() const {
  Rational total = 0;
  for (const Rational& q : values_) total += q;
  return total;
}

FractionalAssignment FractionalAssignment::restricted_to_support() const {
  FractionalAssignment out = *this;
  for (Rational& q : out.values_)
    if (q == 0 || q == 1) q = 0;
  return out;
}

VertexSet FractionalAssignment::ones() const {
  VertexSet out;
  for (std::size_t v = 0; v < values_.size(); ++v)
    if (values_[v] == 1) out.push_back(static_cast<Vertex>(v));
  return out;
}

// ---------------------------------------------------------------------------
// Objectives

namespace {

void check_dimension(const Graph& g, const FractionalAssignment& x) {
  if (x.size() != g.vertex_count())
    throw Error(ErrorKind::DimensionMismatch,
                "assignment has " + std::to_string(x.size()) + " coordinates, graph has " +
                    std::to_string(g.vertex_count()) + " vertices");
}

}  // namespace

ObjectiveValues eval_objectives(const Graph& g, const Params& params, const FractionalAssignment& x) {
  check_dimension(g, x);
  Rational inner = 0;  // Σ_E x_u x_v
  Rational outer = 0;  // Σ_E (1−x_u)(1−x_v)
  for (const Edge& e : g.edges()) {
    inner += x[e.u] * x[e.v];
    outer += (1 - x[e.u]) * (1 - x[e.v]);
  }
  const Rational mass = x.sum();
  const Rational co_mass = Rational(static_cast<long>(g.vertex_count())) - mass;
  ObjectiveValues out;
  out.f0 = inner - params.s * mass;
  out.g0 = outer - params.t * co_mass;
  out.f1 = inner - params.c * params.p * mass;
  out.g1 = outer - params.c * params.p_bar * co_mass;
  return out;
}

ObjectiveGradient objective_gradients(const Graph& g, const Params& params, const FractionalAssignment& x, Vertex v) {
  check_dimension(g, x);
  if (!g.contains(v)) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
  Rational near = 0;
  for (Vertex w : g.neighbors(v)) near += x[w];
  const Rational far = Rational(static_cast<long>(g.degree(v))) - near;  // Σ_{w~v} (1 − x_w)
  ObjectiveGradient grad{near - params.c * params.p, -far + params.c * params.p_bar};
  ensure(grad.df1 - grad.dg1 == Rational(static_cast<long>(g.degree(v))) - params.c,
         "df1 - dg1 != d(v) - c at vertex " + std::to_string(v));
  return grad;
}

bool is_clique(const Graph& g, std::span<const Vertex> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j] || !g.adjacent(xs[i], xs[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Planar moves

Direction joint_ascent_direction(const Direction& a, const Direction& b) {
  const auto dot = [](const Direction& x, const Direction& y) -> Rational { return x.first * y.first + x.second * y.second; };
  const auto rot = [](const Direction& x) { return Direction(-x.second, x.first); };
  const auto neg = [](const Direction& x) { return Direction(-x.first, -x.second); };
  const Direction candidates[] = {
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}, rot(a), neg(rot(a)), rot(b), neg(rot(b)),
  };
  for (const Direction& r : candidates) {
    if (r.first == 0 && r.second == 0) continue;
    if (dot(a, r) >= 0 && dot(b, r) >= 0) return r;
  }
  throw Error(ErrorKind::InternalAssertion, "no joint ascent direction in the plane");
}

void step_to_boundary(FractionalAssignment& x, Vertex u, Vertex v, const Direction& r) {
  ensure(x[u] > 0 && x[u] < 1 && x[v] > 0 && x[v] < 1, "planar move needs two fractional coordinates");
  std::optional<Rational> alpha;
  const auto limit = [&](const Rational& value, const Rational& dir) {
    if (dir == 0) return;
    Rational room = dir > 0 ? Rational((1 - value) / dir) : Rational(value / -dir);
    if (!alpha || room < *alpha) alpha = room;
  };
  limit(x[u], r.first);
  limit(x[v], r.second);
  ensure(alpha.has_value(), "planar move with zero direction");
  x.set(u, x[u] + *alpha * r.first);
  x.set(v, x[v] + *alpha * r.second);
}

// ---------------------------------------------------------------------------
// Exchange loop

namespace {

std::optional<std::pair<Vertex, Vertex>> first_nonadjacent_pair(const Graph& g, const VertexSet& fr) {
  for (std::size_t i = 0; i < fr.size(); ++i)
    for (std::size_t j = i + 1; j < fr.size(); ++j)
      if (!g.adjacent(fr[i], fr[j])) return std::pair(fr[i], fr[j]);
  return std::nullopt;
}

class ExchangeLoop {
 public:
  ExchangeLoop(const Graph& g, const Params& params)
      : g_(g), params_(params), y_(FractionalAssignment::constant(g.vertex_count(), params.p)) {
    const Rational c = params.c;
    const Surplus sur = surplus(g, g.vertices(), c);
    if (g.vertex_count() == 0 || sur.excess < 0)
      throw Error(ErrorKind::HypothesisNotMet, "relaxation needs a nonempty graph with ||V|| >= c|V|");
    T_ = sur.T;
    if (Rational(static_cast<long>(g.min_degree())) <= c + T_)
      throw Error(ErrorKind::HypothesisNotMet, "relaxation needs min degree > s+t+1+T (run the peeler first)");
    f_floor_ = params.p * params.p * T_;
    g_floor_ = params.p_bar * params.p_bar * T_;
  }

  CliqueifyOutcome run() {
    const std::size_t n = g_.vertex_count();
    const std::size_t cap = n * (n + 2);
    check_invariants();
    std::size_t iterations = 0;
    while (true) {
      ++iterations;
      ensure(iterations <= cap, "exchange loop exceeded |V|(|V|+2) iterations");
      const std::size_t fr_before = y_.fractional_support().size();
      const Rational mass_before = y_.sum();
      const Move move = step();
      if (move == Move::None) break;
      check_invariants();
      const std::size_t fr_after = y_.fractional_support().size();
      const Rational mass_after = y_.sum();
      ensure(fr_after < fr_before || (fr_after == fr_before && mass_after < mass_before),
             "exchange potential did not decrease");
      if (move == Move::Restrict) ensure(mass_before - mass_after >= 1, "support restriction dropped Σy by < 1");
    }
    return finish(iterations);
  }

 private:
  enum class Move { None, PairToBoundary, FixCoordinate, LowerF1, Restrict };

  Move step() {
    const VertexSet fr = y_.fractional_support();

    if (auto pair = first_nonadjacent_pair(g_, fr)) {
      auto [u, v] = *pair;
      const ObjectiveGradient gu = objective_gradients(g_, params_, y_, u);
      const ObjectiveGradient gv = objective_gradients(g_, params_, y_, v);
      const Direction r = joint_ascent_direction({gu.df1, gv.df1}, {gu.dg1, gv.dg1});
      step_to_boundary(y_, u, v, r);
      return Move::PairToBoundary;
    }

    for (Vertex v : fr) {
      const ObjectiveGradient gr = objective_gradients(g_, params_, y_, v);
      if (gr.df1 >= 0 && gr.dg1 >= 0) {
        y_.set(v, 1);
        return Move::FixCoordinate;
      }
      if (gr.df1 <= 0 && gr.dg1 <= 0) {
        y_.set(v, 0);
        return Move::FixCoordinate;
      }
    }

    const Rational f1 = eval_objectives(g_, params_, y_).f1;
    if (f1 > f_floor_ && !fr.empty()) {
      const Vertex v = fr.front();
      const ObjectiveGradient gr = objective_gradients(g_, params_, y_, v);
      ensure(gr.df1 > 0 && gr.dg1 < 0, "fractional vertex without opposite gradient signs");
      Rational drop = (f1 - f_floor_) / gr.df1;
      if (y_[v] < drop) drop = y_[v];
      y_.set(v, y_[v] - drop);
      return Move::LowerF1;
    }

    FractionalAssignment restricted = y_.restricted_to_support();
    if (eval_objectives(g_, params_, restricted).f1 > f_floor_) {
      ensure(!(restricted == y_), "restriction is a no-op yet raised f1");
      y_ = std::move(restricted);
      return Move::Restrict;
    }
    return Move::None;
  }

  void check_invariants() const {
    const ObjectiveValues obj = eval_objectives(g_, params_, y_);
    ensure(obj.f1 >= f_floor_, "f1(y) fell below p^2 T: " + format_rational(obj.f1));
    ensure(obj.g1 >= g_floor_, "g1(y) fell below pbar^2 T: " + format_rational(obj.g1));
    ensure(!y_.all_equal(0) && !y_.all_equal(1), "y reached the all-0 or all-1 vector");
  }

  CliqueifyOutcome finish(std::size_t iterations) const {
    const VertexSet support = y_.fractional_support();
    ensure(is_clique(g_, support), "fractional support is not a clique at termination");
    if (static_cast<std::int64_t>(support.size()) >= params_.ceil_N)
      return BigClique{CliqueSupport{support}, T_, iterations};

    const Params& pr = params_;
    const ObjectiveValues obj = eval_objectives(g_, pr, y_);
    // (1) is maintained by check_invariants.
    // (3)
    Rational spread = 0;
    for (Vertex v : support) spread += y_[v] - y_[v] * y_[v];
    const Rational spread_cap = pr.N * pr.p * (1 - pr.p) + T_ * pr.p * (1 - pr.p) / (pr.s + pr.t + 2);
    ensure(spread < spread_cap, "sum over C of y - y^2 = " + format_rational(spread) + " >= " + format_rational(spread_cap));
    // (4)
    const Rational mass = y_.sum();
    const Rational co_mass = Rational(static_cast<long>(g_.vertex_count())) - mass;
    ensure(mass >= 2 * pr.c * pr.p, "sum of y below 2(s+t+1)p");
    ensure(co_mass >= 2 * pr.c * pr.p_bar, "sum of 1-y below 2(s+t+1)pbar");
    if (!support.empty()) {
      ensure(obj.f1 == f_floor_, "f1(y) != p^2 T with nonempty support");
      ensure(eval_objectives(g_, pr, y_.restricted_to_support()).f1 <= f_floor_, "f1(y_C) > p^2 T");
      for (Vertex v : support) {
        const ObjectiveGradient gr = objective_gradients(g_, pr, y_, v);
        ensure(gr.df1 > 0 && gr.dg1 < 0, "terminal support vertex without df1 > 0 > dg1");
      }
    }
    return RelaxedPoint{y_, CliqueSupport{support}, T_, iterations};
  }

  const Graph& g_;
  const Params& params_;
  FractionalAssignment y_;
  Rational T_;
  Rational f_floor_;
  Rational g_floor_;
};

}  // namespace

CliqueifyOutcome cliqueify(const Graph& g, const Params& params) { return ExchangeLoop(g, params).run(); }

}  // namespace avgpart
