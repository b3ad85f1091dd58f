#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bondlat::detail {

/// Constraint pi[to] - pi[from] <= weight. `arc` and `direction` record
/// which graph arc produced it and in which sense it is traversed.
struct ConstraintEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t weight = 0;
  std::size_t arc = 0;
  int direction = 1;
};

struct FeasibilityResult {
  std::optional<std::vector<std::int64_t>> potential;
  std::vector<ConstraintEdge> negative_cycle;  // in walk order when infeasible
};

/// Bellman-Ford from a virtual source joined to every node with weight 0.
FeasibilityResult solve_difference_constraints(std::size_t n, const std::vector<ConstraintEdge>& edges);

/// Floyd-Warshall shortest distances; nullopt for unreachable pairs.
/// Requires the system to be free of negative cycles.
std::vector<std::vector<std::optional<std::int64_t>>> all_pairs_distances(
    std::size_t n, const std::vector<ConstraintEdge>& edges);

}  // namespace bondlat::detail
