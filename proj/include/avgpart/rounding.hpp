#pragma once

#include <optional>
#include <string_view>

#include "avgpart/graph.hpp"
#include "avgpart/relaxation.hpp"

namespace avgpart {

struct PenalizedValues {
  Rational f2;
  Rational g2;
};

/// f2(x) = f0(x) − (Σ_C x − Σ_C y + p̄)²/2 − Σ_C (x − x²)/2 and
/// g2(x) = g0(x) − (Σ_C (1−x) − Σ_C (1−y) + p)²/2 − Σ_C (x − x²)/2, the mirror
/// image of f2 under x ↦ 1 − x. Both are affine in the coordinates of C.
/// SupportMismatch if C != fr(y); NotAClique if C is not a clique.
PenalizedValues eval_penalized(const Graph& g, const Params& params, const FractionalAssignment& y,
                               const CliqueSupport& C, const FractionalAssignment& x);

/// Walks pairs of fractional C-coordinates to the cube boundary without
/// decreasing f2 or g2, until at most one fractional coordinate is left.
FractionalAssignment collapse_to_corner(const Graph& g, const Params& params, const FractionalAssignment& y,
                                        const CliqueSupport& C);

enum class Choice { Plus, Minus, None };

std::string_view to_string(Choice choice);

struct RoundingCertificate {
  Rational T;
  Rational x_bound;   // p²T − p(1−p)T/(2s+2t+4)
  Rational y_bound;   // p̄²T − p(1−p)T/(2s+2t+4)
  Rational a_margin;  // Σy − (s+t+1)p − 1/2
  Rational b_margin;  // Σ(1−y) − (s+t+1)p̄ − 1/2
  std::optional<Rational> a_local;  // a_margin − Σ_{v≠w, vw∉E} y_v
  std::optional<Rational> b_local;  // b_margin − Σ_{v≠w, vw∉E} (1 − y_v)
  std::optional<Vertex> pivot;
  Choice chosen = Choice::None;
  Rational f0;  // at the returned integral point
  Rational g0;
};

struct RoundingResult {
  FractionalAssignment xhat;
  RoundingCertificate cert;
};

/// Rounds the single remaining fractional coordinate of z (the pivot) up and
/// down and returns the candidate that is non-trivial with f0 >= 0, g0 >= 0
/// and f0 + g0 >= T − 1 (larger f0 + g0 wins, ties to rounding up).
/// Checks the margin chain f2(z) >= X + A p̄ > 0, g2(z) >= Y + B p > 0,
/// f2(z) + g2(z) >= T − 7/12 along the way; InternalAssertion on any miss.
RoundingResult select_integral(const Graph& g, const Params& params, const FractionalAssignment& y,
                               const CliqueSupport& C, const FractionalAssignment& z, const Rational& T);

}  // namespace avgpart
