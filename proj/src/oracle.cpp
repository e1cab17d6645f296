#include "avgpart/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "avgpart/error.hpp"

namespace avgpart::oracle {

namespace {

using Mask = std::uint64_t;

void check_cap(const Graph& g, std::size_t cap) {
  if (g.vertex_count() > cap || g.vertex_count() > 62)
    throw Error(ErrorKind::TooLarge, std::to_string(g.vertex_count()) + " vertices exceeds cap " + std::to_string(cap));
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> masks(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    masks[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    masks[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return masks;
}

std::int64_t edges_within(const std::vector<Mask>& nb, Mask set) {
  std::int64_t twice = 0;
  for (Mask rest = set; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    twice += std::popcount(nb[static_cast<std::size_t>(v)] & set);
  }
  return twice / 2;
}

}  // namespace

std::optional<Bipartition> brute_force_partition(const Graph& g, const Rational& s, const Rational& t,
                                                 std::size_t cap) {
  check_cap(g, cap);
  const std::size_t n = g.vertex_count();
  if (n < 2) return std::nullopt;
  const auto nb = neighbor_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  // Counter bit (n-1-v) is x_v, so counting order is lexicographic order.
  const auto to_mask = [&](Mask counter) {
    Mask m = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (counter >> (n - 1 - v) & 1) m |= Mask{1} << v;
    return m;
  };
  for (Mask counter = 1; counter < full; ++counter) {
    const Mask a = to_mask(counter);
    const Mask b = full & ~a;
    if (Rational(edges_within(nb, a)) < s * std::popcount(a)) continue;
    if (Rational(edges_within(nb, b)) < t * std::popcount(b)) continue;
    Bipartition out;
    for (std::size_t v = 0; v < n; ++v) (a >> v & 1 ? out.A : out.B).push_back(static_cast<Vertex>(v));
    return out;
  }
  return std::nullopt;
}

bool all_subsets_sparse(const Graph& g, const Rational& c, std::size_t cap) {
  check_cap(g, cap);
  const std::size_t n = g.vertex_count();
  const auto nb = neighbor_masks(g);
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask x = 1; x < full; ++x)
    if (Rational(edges_within(nb, x)) - c * std::popcount(x) >= 0) return false;
  return true;
}

}  // namespace avgpart::oracle
