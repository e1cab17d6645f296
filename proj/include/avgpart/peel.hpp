#pragma once

#include <cstdint>
#include <vector>

#include "avgpart/graph.hpp"
#include "avgpart/relaxation.hpp"

namespace avgpart {

struct PeelStep {
  Vertex vertex;
  std::int64_t degree;  // degree in the graph it was removed from
  Rational T;           // surplus of that graph
};

struct PeelResult {
  VertexSet surviving;
  std::vector<PeelStep> trace;
};

/// Repeatedly removes the minimum-degree vertex (smallest id on ties) while
/// its degree is at most s+t+1+T of the current graph. Each removal keeps
/// ||V|| >= (s+t+1)|V|; on exit the survivor has min degree > s+t+1+T,
/// T < s+t+2 and more than s+t+2+T vertices (all checked).
///
/// HypothesisNotMet if G itself has ||V|| < (s+t+1)|V| or no vertices.
PeelResult peel(const Graph& g, const Params& params);

}  // namespace avgpart
