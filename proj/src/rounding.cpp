#include "avgpart/rounding.hpp"

#include <algorithm>
#include <string>

#include "avgpart/error.hpp"

namespace avgpart {

std::string_view to_string(Choice choice) {
  switch (choice) {
    case Choice::Plus: return "plus";
    case Choice::Minus: return "minus";
    case Choice::None: return "none";
  }
  return "none";
}

namespace {

void check_support(const Graph& g, const FractionalAssignment& y, const CliqueSupport& C) {
  if (y.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "y does not match the graph");
  if (y.fractional_support() != C.members) throw Error(ErrorKind::SupportMismatch, "C differs from fr(y)");
  if (!is_clique(g, C.members)) throw Error(ErrorKind::NotAClique, "support is not a clique");
}

Rational support_sum(const FractionalAssignment& x, const VertexSet& C) {
  Rational total = 0;
  for (Vertex v : C) total += x[v];
  return total;
}

PenalizedValues penalized_unchecked(const Graph& g, const Params& params, const Rational& y_on_C,
                                    const CliqueSupport& C, const FractionalAssignment& x) {
  const ObjectiveValues base = eval_objectives(g, params, x);
  const Rational shift = support_sum(x, C.members) - y_on_C;
  Rational spread = 0;
  for (Vertex v : C.members) spread += x[v] - x[v] * x[v];
  const Rational f_gap = shift + params.p_bar;
  const Rational g_gap = shift - params.p;
  return {base.f0 - f_gap * f_gap / 2 - spread / 2, base.g0 - g_gap * g_gap / 2 - spread / 2};
}

// Partial derivatives of f2, g2 in a support coordinate u (constant over C).
Direction penalized_gradient(const Graph& g, const Params& params, const Rational& y_on_C, const CliqueSupport& C,
                             const FractionalAssignment& x, Vertex u) {
  Rational near = 0;
  for (Vertex w : g.neighbors(u)) near += x[w];
  const Rational far = Rational(static_cast<long>(g.degree(u))) - near;
  const Rational shift = support_sum(x, C.members) - y_on_C;
  const Rational common = x[u] - Rational(1, 2);
  return {near - params.s - (shift + params.p_bar) + common, -far + params.t - (shift - params.p) + common};
}

}  // namespace

PenalizedValues eval_penalized(const Graph& g, const Params& params, const FractionalAssignment& y,
                               const CliqueSupport& C, const FractionalAssignment& x) {
  check_support(g, y, C);
  if (x.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "x does not match the graph");
  return penalized_unchecked(g, params, support_sum(y, C.members), C, x);
}

FractionalAssignment collapse_to_corner(const Graph& g, const Params& params, const FractionalAssignment& y,
                                        const CliqueSupport& C) {
  check_support(g, y, C);
  const Rational y_on_C = support_sum(y, C.members);
  FractionalAssignment z = y;
  PenalizedValues current = penalized_unchecked(g, params, y_on_C, C, z);
  while (true) {
    const VertexSet fr = z.fractional_support();
    if (fr.size() < 2) break;
    const Vertex u = fr[0];
    const Vertex v = fr[1];
    const Direction du = penalized_gradient(g, params, y_on_C, C, z, u);
    const Direction dv = penalized_gradient(g, params, y_on_C, C, z, v);
    const Direction r = joint_ascent_direction({du.first, dv.first}, {du.second, dv.second});
    step_to_boundary(z, u, v, r);
    const PenalizedValues next = penalized_unchecked(g, params, y_on_C, C, z);
    ensure(next.f2 >= current.f2 && next.g2 >= current.g2, "collapse move decreased f2 or g2");
    ensure(z.fractional_support().size() < fr.size(), "collapse move left both coordinates fractional");
    current = next;
  }
  for (std::size_t v = 0; v < z.size(); ++v) {
    const Vertex vv = static_cast<Vertex>(v);
    if (!std::binary_search(C.members.begin(), C.members.end(), vv))
      ensure(z[vv] == y[vv], "collapse changed a coordinate outside C");
  }
  return z;
}

RoundingResult select_integral(const Graph& g, const Params& params, const FractionalAssignment& y,
                               const CliqueSupport& C, const FractionalAssignment& z, const Rational& T) {
  check_support(g, y, C);
  if (z.size() != g.vertex_count()) throw Error(ErrorKind::DimensionMismatch, "z does not match the graph");
  const VertexSet z_support = z.fractional_support();
  if (z_support.size() > 1) throw Error(ErrorKind::InvalidInput, "z has more than one fractional coordinate");

  const Params& pr = params;
  const Rational n = static_cast<long>(g.vertex_count());
  const Rational st2 = pr.s + pr.t + 2;
  ensure(T >= 0 && T < st2, "T = " + format_rational(T) + " outside [0, s+t+2)");
  ensure(T == surplus(g, g.vertices(), pr.c).T, "T does not match the surplus of the working graph");

  RoundingCertificate cert;
  cert.T = T;
  const Rational spread_term = pr.p * (1 - pr.p) * T / (2 * pr.s + 2 * pr.t + 4);
  cert.x_bound = pr.p * pr.p * T - spread_term;
  cert.y_bound = pr.p_bar * pr.p_bar * T - spread_term;
  const Rational mass = y.sum();
  cert.a_margin = mass - pr.c * pr.p - Rational(1, 2);
  cert.b_margin = (n - mass) - pr.c * pr.p_bar - Rational(1, 2);

  ensure(cert.x_bound >= 0 && cert.y_bound >= 0, "X or Y negative");
  ensure(cert.a_margin >= pr.c * pr.p - Rational(1, 2) && pr.c * pr.p - Rational(1, 2) > 0, "A below (s+t+1)p - 1/2");
  ensure(cert.b_margin >= pr.c * pr.p_bar - Rational(1, 2) && pr.c * pr.p_bar - Rational(1, 2) > 0,
         "B below (s+t+1)pbar - 1/2");
  ensure(cert.a_margin + cert.b_margin == n - st2, "A + B != |V| - (s+t+2)");
  ensure(cert.a_margin + cert.b_margin >= T, "A + B < T");

  const Rational y_on_C = support_sum(y, C.members);
  const PenalizedValues at_y = penalized_unchecked(g, pr, y_on_C, C, y);
  const PenalizedValues at_z = penalized_unchecked(g, pr, y_on_C, C, z);
  ensure(at_z.f2 >= at_y.f2 && at_z.g2 >= at_y.g2, "f2/g2 at z below their values at y");
  const Rational f_floor = cert.x_bound + cert.a_margin * pr.p_bar;
  const Rational g_floor = cert.y_bound + cert.b_margin * pr.p;
  ensure(at_z.f2 >= f_floor && f_floor > 0, "f2(z) >= X + A pbar > 0 violated");
  ensure(at_z.g2 >= g_floor && g_floor > 0, "g2(z) >= Y + B p > 0 violated");
  ensure(at_z.f2 + at_z.g2 >= f_floor + g_floor, "f2(z) + g2(z) below X + Y + A pbar + B p");
  ensure(f_floor + g_floor >= T - Rational(7, 12), "X + Y + A pbar + B p < T - 7/12");

  const auto passes = [&](const FractionalAssignment& x, ObjectiveValues& obj) {
    obj = eval_objectives(g, pr, x);
    return !x.all_equal(0) && !x.all_equal(1) && obj.f0 >= 0 && obj.g0 >= 0 && obj.f0 + obj.g0 >= T - 1;
  };

  if (z_support.empty()) {
    ObjectiveValues obj;
    ensure(passes(z, obj), "integral z fails the acceptance test");
    cert.f0 = obj.f0;
    cert.g0 = obj.g0;
    return {z, cert};
  }

  const Vertex w = z_support.front();
  cert.pivot = w;
  Rational far_y = 0;
  Rational far_co = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Vertex vv = static_cast<Vertex>(v);
    if (vv == w || g.adjacent(w, vv)) continue;
    far_y += y[vv];
    far_co += 1 - y[vv];
  }
  cert.a_local = cert.a_margin - far_y;
  cert.b_local = cert.b_margin - far_co;
  ensure(*cert.a_local + *cert.b_local == Rational(static_cast<long>(g.degree(w))) + 1 - st2,
         "A' + B' != d(w) + 1 - (s+t+2)");
  ensure(*cert.a_local + *cert.b_local > T, "A' + B' <= T");

  FractionalAssignment plus = z;
  FractionalAssignment minus = z;
  plus.set(w, 1);
  minus.set(w, 0);
  const PenalizedValues at_plus = penalized_unchecked(g, pr, y_on_C, C, plus);
  const PenalizedValues at_minus = penalized_unchecked(g, pr, y_on_C, C, minus);
  ensure(at_plus.f2 - at_minus.f2 == *cert.a_local, "df2/dz_w != A'");
  ensure(at_plus.g2 - at_minus.g2 == -*cert.b_local, "dg2/dz_w != -B'");

  ObjectiveValues obj_plus;
  ObjectiveValues obj_minus;
  const bool plus_ok = passes(plus, obj_plus);
  const bool minus_ok = passes(minus, obj_minus);
  ensure(plus_ok || minus_ok, "neither rounding of the pivot passes the acceptance test");
  const bool take_plus = plus_ok && (!minus_ok || obj_plus.f0 + obj_plus.g0 >= obj_minus.f0 + obj_minus.g0);
  cert.chosen = take_plus ? Choice::Plus : Choice::Minus;
  const ObjectiveValues& obj = take_plus ? obj_plus : obj_minus;
  cert.f0 = obj.f0;
  cert.g0 = obj.g0;
  return {take_plus ? std::move(plus) : std::move(minus), cert};
}

}  // namespace avgpart
