#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "bondlat/graph.hpp"

namespace bondlat {

/// Integer labeling of the arcs of a graph, indexed by arc index.
struct Bond {
  std::vector<std::int64_t> values;

  std::size_t size() const { return values.size(); }
  std::int64_t operator[](ArcIndex a) const { return values[a]; }

  friend auto operator<=>(const Bond&, const Bond&) = default;
};

/// Per-vertex push multiplicities measured from the lattice minimum,
/// indexed by vertex index. The forbidden vertex always holds 0.
struct PushCount {
  std::vector<std::int64_t> counts;

  friend auto operator<=>(const PushCount&, const PushCount&) = default;
};

/// Capacitated digraph with prescribed circular flow-differences.
///
/// The flow-difference targets are carried by a reference labeling: a bond x
/// belongs to the system when lower <= x <= upper and x agrees with the
/// reference on every cycle. The reference itself may violate the capacities.
class DeltaBondSystem {
 public:
  /// Throws InputError if lower > upper somewhere, sizes mismatch, the
  /// forbidden vertex is out of range, or the graph is disconnected.
  DeltaBondSystem(Multigraph graph, std::vector<std::int64_t> lower, std::vector<std::int64_t> upper,
                  Bond reference, VertexIndex forbidden);

  const Multigraph& graph() const { return graph_; }
  const std::vector<std::int64_t>& lower() const { return lower_; }
  const std::vector<std::int64_t>& upper() const { return upper_; }
  const Bond& reference() const { return reference_; }
  VertexIndex forbidden() const { return forbidden_; }

  /// Spanning tree and fundamental cycles used for every cycle check.
  const std::vector<ArcIndex>& tree() const { return tree_; }
  const std::vector<CycleVector>& cycles() const { return cycles_; }
  /// Target flow-difference on each fundamental cycle.
  const std::vector<std::int64_t>& cycle_targets() const { return targets_; }

 private:
  Multigraph graph_;
  std::vector<std::int64_t> lower_;
  std::vector<std::int64_t> upper_;
  Bond reference_;
  VertexIndex forbidden_;
  std::vector<ArcIndex> tree_;
  std::vector<CycleVector> cycles_;
  std::vector<std::int64_t> targets_;
};

/// Reference labeling that realizes the given flow-differences on the
/// fundamental cycles of g: tree arcs 0, each non-tree arc carries the
/// target of its own cycle. Missing non-tree arcs default to 0; keys that
/// are tree arcs raise InputError.
Bond reference_from_cycle_targets(const Multigraph& g, const std::map<ArcIndex, std::int64_t>& targets);

/// Signed sum of x along the walk. Throws InputError if x is too short.
std::int64_t flow_difference(const Bond& x, const CycleVector& cycle);

struct CapacityViolation {
  ArcIndex arc;
  std::int64_t value;
  std::int64_t lower;
  std::int64_t upper;
};

struct CycleViolation {
  std::size_t cycle;  // index into system.cycles()
  std::int64_t expected;
  std::int64_t actual;
};

struct BondReport {
  std::vector<CapacityViolation> capacity;
  std::vector<CycleViolation> cycles;

  bool valid() const { return capacity.empty() && cycles.empty(); }
};

BondReport is_delta_bond(const DeltaBondSystem& sys, const Bond& x);

/// Certificate that no bond exists: the cycle's prescribed flow-difference
/// lies outside the range [window_min, window_max] reachable within the
/// capacities.
struct Infeasibility {
  CycleVector cycle;
  std::int64_t target = 0;
  std::int64_t window_min = 0;
  std::int64_t window_max = 0;
};

Infeasibility make_infeasibility(const DeltaBondSystem& sys, CycleVector cycle);

std::variant<Bond, Infeasibility> find_initial_bond(const DeltaBondSystem& sys);

/// Throws InfeasibleError when the system has no bond.
Bond require_initial_bond(const DeltaBondSystem& sys);

/// Tight (min, max) of the value of each arc over all bonds.
std::vector<std::pair<std::int64_t, std::int64_t>> arc_value_ranges(const DeltaBondSystem& sys);
std::pair<std::int64_t, std::int64_t> arc_value_range(const DeltaBondSystem& sys, ArcIndex a);

/// Translation between bonds of a system and bonds of its reduction.
struct ContractionMap {
  std::vector<std::optional<ArcIndex>> reduced_arc;  // per original arc
  std::vector<std::int64_t> forced_value;            // meaningful where reduced_arc is empty
  std::vector<VertexIndex> vertex_class;             // original vertex -> reduced vertex

  Bond expand(const Bond& reduced) const;
  Bond restrict(const Bond& full) const;
};

struct Reduction {
  DeltaBondSystem system;
  ContractionMap map;
};

/// Contracts every rigid arc. Throws InfeasibleError for empty systems.
Reduction reduce(const DeltaBondSystem& sys);

/// True when no arc is rigid.
bool is_reduced(const DeltaBondSystem& sys);

/// +1 on the forward cut arcs of `inside`, -1 on the backward ones.
/// No validity check; throws InputError if the forbidden vertex is inside.
Bond push(const DeltaBondSystem& sys, const Bond& x, const std::vector<bool>& inside);
Bond push(const DeltaBondSystem& sys, const Bond& x, std::span<const VertexIndex> inside);
/// Inverse of push.
Bond push_down(const DeltaBondSystem& sys, const Bond& x, const std::vector<bool>& inside);
Bond push_down(const DeltaBondSystem& sys, const Bond& x, std::span<const VertexIndex> inside);

/// Strict slack on the cut: below upper on forward arcs, above lower on
/// backward arcs.
bool is_legal_push(const DeltaBondSystem& sys, const Bond& x, const std::vector<bool>& inside);
bool is_legal_push(const DeltaBondSystem& sys, const Bond& x, std::span<const VertexIndex> inside);
bool is_legal_push_down(const DeltaBondSystem& sys, const Bond& x, const std::vector<bool>& inside);
bool is_legal_push_down(const DeltaBondSystem& sys, const Bond& x, std::span<const VertexIndex> inside);

bool is_legal_vertex_push(const DeltaBondSystem& sys, const Bond& x, VertexIndex v);
bool is_legal_vertex_push_down(const DeltaBondSystem& sys, const Bond& x, VertexIndex v);
Bond vertex_push(const DeltaBondSystem& sys, const Bond& x, VertexIndex v);

/// Lattice minimum of a reduced system, found by pushing vertices down
/// until none can move.
Bond minimum_bond(const DeltaBondSystem& sys);
Bond maximum_bond(const DeltaBondSystem& sys);

/// The distributive lattice of bonds of a reduced system, in push-count
/// coordinates relative to its minimum.
class BondLattice {
 public:
  /// Throws InputError if the system is not reduced, InfeasibleError if empty.
  explicit BondLattice(DeltaBondSystem reduced);

  const DeltaBondSystem& system() const { return sys_; }
  const Bond& minimum() const { return minimum_; }

  /// Throws InputError if x is not a bond of this lattice.
  PushCount push_count(const Bond& x) const;
  Bond bond_from_push_count(const PushCount& counts) const;

  bool leq(const Bond& x, const Bond& y) const;
  Bond meet(const Bond& x, const Bond& y) const;
  Bond join(const Bond& x, const Bond& y) const;

 private:
  DeltaBondSystem sys_;
  Bond minimum_;
};

}  // namespace bondlat
