#include "difference_constraints.hpp"

#include <algorithm>

namespace bondlat::detail {

FeasibilityResult solve_difference_constraints(std::size_t n, const std::vector<ConstraintEdge>& edges) {
  std::vector<std::int64_t> dist(n, 0);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pred(n, kNone);  // index into edges

  std::size_t last_relaxed = kNone;
  for (std::size_t round = 0; round <= n; ++round) {
    last_relaxed = kNone;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const ConstraintEdge& e = edges[i];
      if (dist[e.from] + e.weight < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.weight;
        pred[e.to] = i;
        last_relaxed = e.to;
      }
    }
    if (last_relaxed == kNone) break;
  }

  FeasibilityResult result;
  if (last_relaxed == kNone) {
    result.potential = std::move(dist);
    return result;
  }

  // A relaxation in round n means a negative cycle; walking n predecessors
  // from the relaxed node lands on it.
  std::size_t v = last_relaxed;
  for (std::size_t i = 0; i < n; ++i) v = edges[pred[v]].from;
  std::size_t start = v;
  do {
    const ConstraintEdge& e = edges[pred[v]];
    result.negative_cycle.push_back(e);
    v = e.from;
  } while (v != start);
  std::reverse(result.negative_cycle.begin(), result.negative_cycle.end());
  return result;
}

std::vector<std::vector<std::optional<std::int64_t>>> all_pairs_distances(
    std::size_t n, const std::vector<ConstraintEdge>& edges) {
  std::vector<std::vector<std::optional<std::int64_t>>> d(n, std::vector<std::optional<std::int64_t>>(n));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const ConstraintEdge& e : edges) {
    auto& cell = d[e.from][e.to];
    if (!cell || e.weight < *cell) cell = e.weight;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        std::int64_t via = *d[i][k] + *d[k][j];
        if (!d[i][j] || via < *d[i][j]) d[i][j] = via;
      }
    }
  }
  return d;
}

}  // namespace bondlat::detail
