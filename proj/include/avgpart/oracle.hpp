#pragma once

#include <cstddef>
#include <optional>

#include "avgpart/assembler.hpp"
#include "avgpart/graph.hpp"

namespace avgpart::oracle {

inline constexpr std::size_t kPartitionCap = 24;
inline constexpr std::size_t kSubsetCap = 20;

/// Exhaustive search over the 2^n - 2 non-trivial splits, in binary counting
/// order of A's characteristic sequence (vertex 0 most significant). Returns
/// the first split with ||A|| >= s|A| and ||B|| >= t|B|. TooLarge above cap.
std::optional<Bipartition> brute_force_partition(const Graph& g, const Rational& s, const Rational& t,
                                                 std::size_t cap = kPartitionCap);

/// True iff every proper nonempty X has ||X|| - c|X| < 0. TooLarge above cap.
bool all_subsets_sparse(const Graph& g, const Rational& c, std::size_t cap = kSubsetCap);

}  // namespace avgpart::oracle
