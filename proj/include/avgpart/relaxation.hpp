#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "avgpart/graph.hpp"
#include "avgpart/rational.hpp"

namespace avgpart {

/// Derived constants of a run, always oriented so that s <= t.
struct Params {
  Rational s;
  Rational t;
  Rational c;       // s + t + 1
  Rational p;       // (s + 1) / (s + t + 2)
  Rational p_bar;   // (t + 1) / (s + t + 2)
  Rational N;       // 2s + 2t + 3, the clique-size threshold
  std::int64_t ceil_N = 0;
  bool swapped = false;  // caller passed s > t; internal (s, t) are exchanged
};

/// NonPositiveParameter unless s, t > 0.
Params make_params(const Rational& s, const Rational& t);

/// A point of [0,1]^V over the vertices of one graph.
class FractionalAssignment {
 public:
  FractionalAssignment() = default;
  /// Throws InvalidInput if any coordinate leaves [0,1].
  explicit FractionalAssignment(std::vector<Rational> values);
  static FractionalAssignment constant(std::size_t n, const Rational& value);
  /// Indicator vector of `ones`.
  static FractionalAssignment indicator(std::size_t n, std::span<const Vertex> ones);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
  const std::vector<Rational>& values() const { return values_; }
  /// Coordinates stay inside [0,1]; checked.
  void set(Vertex v, const Rational& value);

  /// fr(x): vertices with 0 < x_v < 1, ascending.
  VertexSet fractional_support() const;
  bool is_integral() const { return fractional_support().empty(); }
  bool all_equal(int value) const;
  Rational sum() const;
  /// x with every coordinate outside fr(x) set to 0.
  FractionalAssignment restricted_to_support() const;
  /// {v : x_v = 1}
  VertexSet ones() const;

  friend bool operator==(const FractionalAssignment&, const FractionalAssignment&) = default;

 private:
  std::vector<Rational> values_;
};

struct ObjectiveValues {
  Rational f0;
  Rational g0;
  Rational f1;
  Rational g1;
};

/// f0 = Σ_E x_u x_v − sΣx,           g0 = Σ_E (1−x_u)(1−x_v) − tΣ(1−x),
/// f1 = Σ_E x_u x_v − (s+t+1)pΣx,    g1 = Σ_E (1−x_u)(1−x_v) − (s+t+1)p̄Σ(1−x).
ObjectiveValues eval_objectives(const Graph& g, const Params& params, const FractionalAssignment& x);

struct ObjectiveGradient {
  Rational df1;
  Rational dg1;
};

/// Partial derivatives of f1 and g1 in coordinate v. df1 − dg1 = d(v) − c is
/// checked on every call.
ObjectiveGradient objective_gradients(const Graph& g, const Params& params, const FractionalAssignment& x, Vertex v);

struct CliqueSupport {
  VertexSet members;
};

bool is_clique(const Graph& g, std::span<const Vertex> xs);

/// Regular outcome of the exchange loop: the support of y is a clique
/// smaller than N and y carries the certified inequalities.
struct RelaxedPoint {
  FractionalAssignment y;
  CliqueSupport support;
  Rational T;
  std::size_t iterations = 0;
};

/// The loop stopped on a fractional support that is a clique of size >= ⌈N⌉.
struct BigClique {
  CliqueSupport clique;
  Rational T;
  std::size_t iterations = 0;
};

using CliqueifyOutcome = std::variant<RelaxedPoint, BigClique>;

CliqueifyOutcome cliqueify(const Graph& g, const Params& params);

// Planar helpers shared with the rounding stage.

using Direction = std::pair<Rational, Rational>;

/// A nonzero direction r with a·r >= 0 and b·r >= 0. Tries +e1, −e1, +e2,
/// −e2, ±rot(a), ±rot(b) in that order; some candidate always qualifies.
Direction joint_ascent_direction(const Direction& a, const Direction& b);

/// Moves (x_u, x_v) along r by the largest step that keeps both in [0,1].
/// Both coordinates must start strictly fractional.
void step_to_boundary(FractionalAssignment& x, Vertex u, Vertex v, const Direction& r);

}  // namespace avgpart
