#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avgpart/graph.hpp"
#include "avgpart/relaxation.hpp"
#include "avgpart/rounding.hpp"

namespace avgpart {

enum class SolvePath { SmallST, CliqueFallback, Rounding };
enum class MergeSide { A, B, None };

std::string_view to_string(SolvePath path);
std::string_view to_string(MergeSide side);

/// A partition (A, B) of V(G) with ||A|| - s|A| >= 0 and ||B|| - t|B| >= 0,
/// plus what is needed to audit how it was found. Vertex ids always refer to
/// the input graph.
struct PartitionWitness {
  VertexSet A;
  VertexSet B;
  SolvePath path = SolvePath::Rounding;
  Rational s_side;  // ||A|| - s|A|
  Rational t_side;  // ||B|| - t|B|
  VertexSet peeled;
  MergeSide merged_into = MergeSide::None;
  // Values are in the solver's internal orientation (s <= t); the pivot is
  // an input-graph id.
  std::optional<RoundingCertificate> cert;
  bool cert_swapped = false;
};

struct Violation {
  std::string name;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> failures;
};

struct Bipartition {
  VertexSet A;
  VertexSet B;
};

/// ||V|| >= (s+t+1)|V| on a nonempty graph.
bool meets_hypothesis(const Graph& g, const Rational& s, const Rational& t);

/// Direct split for min(s,t) <= 1/2: an edge {x, y} (x a minimum-degree
/// non-isolated vertex, y its smallest neighbor) goes to the side carrying
/// the smaller parameter (B on ties), everything else to the other side.
/// The resulting split is checked directly, so it may succeed below the
/// density threshold; HypothesisNotMet when it does not hold.
Bipartition small_split(const Graph& g, const Rational& s, const Rational& t);

/// Two disjoint cliques of sizes ⌈2s+1⌉ and ⌈2t+1⌉ carved from the clique C
/// (lowest ids first). CliqueTooSmall if |C| < ⌈2s+2t+3⌉.
Bipartition clique_split(const Graph& g, const Params& params, std::span<const Vertex> C);

/// The three strengthened conditions on disjoint nonempty A, B:
/// ||A|| - s|A| >= 0, ||B|| - t|B| >= 0 and their sum >= T(A ∪ B) - 1.
bool strengthened_conditions_hold(const Graph& g, const Params& params, const VertexSet& A, const VertexSet& B);

/// Adds the leftover vertices C = V \ (A ∪ B) to whichever side can absorb
/// them: A when |E(A,C)| + ||C|| >= s(|A|+|C|) - ||A||, otherwise B.
PartitionWitness merge_remainder(const Graph& g, const Params& params, const VertexSet& A, const VertexSet& B);

/// Full pipeline. HypothesisNotMet when ||V|| < (s+t+1)|V|.
PartitionWitness solve(const Graph& g, const Rational& s, const Rational& t);

/// Recomputes everything from G; recorded margins must match.
ValidationReport validate(const Graph& g, const Rational& s, const Rational& t, const PartitionWitness& w);

}  // namespace avgpart
