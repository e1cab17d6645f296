#include "avgpart/peel.hpp"

#include <set>
#include <string>
#include <utility>

#include "avgpart/error.hpp"

namespace avgpart {

PeelResult peel(const Graph& g, const Params& params) {
  const Rational& c = params.c;
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error(ErrorKind::HypothesisNotMet, "empty graph");

  std::int64_t edges = static_cast<std::int64_t>(g.edge_count());
  std::int64_t alive_count = static_cast<std::int64_t>(n);
  const auto excess = [&]() -> Rational { return Rational(edges) - c * alive_count; };
  if (excess() < 0)
    throw Error(ErrorKind::HypothesisNotMet, "||V|| = " + std::to_string(edges) + " < (s+t+1)|V| = " +
                                                 format_rational(c * alive_count));

  std::vector<std::int64_t> degree(n);
  std::vector<char> alive(n, 1);
  std::set<std::pair<std::int64_t, Vertex>> queue;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = static_cast<std::int64_t>(g.degree(static_cast<Vertex>(v)));
    queue.emplace(degree[v], static_cast<Vertex>(v));
  }

  PeelResult result;
  while (true) {
    const Rational T = rational_max(Rational(0), excess());
    const auto [d, v] = *queue.begin();
    if (Rational(d) > c + T) break;
    result.trace.push_back({v, d, T});
    queue.erase(queue.begin());
    alive[static_cast<std::size_t>(v)] = 0;
    for (Vertex w : g.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (!alive[wi]) continue;
      queue.erase({degree[wi], w});
      queue.emplace(--degree[wi], w);
    }
    edges -= d;
    --alive_count;
    ensure(alive_count > 0 && excess() >= 0,
           "peeling vertex " + std::to_string(v) + " broke ||V|| >= (s+t+1)|V|");
  }

  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) result.surviving.push_back(static_cast<Vertex>(v));

  const Rational T = rational_max(Rational(0), excess());
  const Rational st2 = params.s + params.t + 2;
  ensure(Rational(queue.begin()->first) > c + T, "survivor min degree <= s+t+1+T");
  ensure(Rational(alive_count) > st2 + T, "survivor has <= s+t+2+T vertices");
  ensure(T < st2, "survivor surplus T = " + format_rational(T) + " >= s+t+2");
  return result;
}

}  // namespace avgpart
