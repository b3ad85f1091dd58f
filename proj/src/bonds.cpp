#include "bondlat/bonds.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "bondlat/error.hpp"
#include "difference_constraints.hpp"
#include "union_find.hpp"

namespace bondlat {

DeltaBondSystem::DeltaBondSystem(Multigraph graph, std::vector<std::int64_t> lower,
                                 std::vector<std::int64_t> upper, Bond reference, VertexIndex forbidden)
    : graph_(std::move(graph)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      reference_(std::move(reference)),
      forbidden_(forbidden) {
  const std::size_t m = graph_.arc_count();
  if (lower_.size() != m || upper_.size() != m || reference_.size() != m) {
    throw InputError("capacities and reference must label every arc");
  }
  for (ArcIndex a = 0; a < m; ++a) {
    if (lower_[a] > upper_[a]) {
      throw InputError("arc '" + graph_.arc(a).id.str() + "' has lower capacity " + std::to_string(lower_[a]) +
                       " above upper capacity " + std::to_string(upper_[a]));
    }
  }
  if (forbidden_ >= graph_.vertex_count()) throw InputError("forbidden vertex out of range");
  tree_ = spanning_tree(graph_);  // throws on disconnected graphs
  cycles_ = fundamental_cycles(graph_, tree_);
  for (const CycleVector& c : cycles_) targets_.push_back(flow_difference(reference_, c));
}

Bond reference_from_cycle_targets(const Multigraph& g, const std::map<ArcIndex, std::int64_t>& targets) {
  auto tree = spanning_tree(g);
  std::vector<bool> in_tree(g.arc_count(), false);
  for (ArcIndex a : tree) in_tree[a] = true;
  Bond ref{std::vector<std::int64_t>(g.arc_count(), 0)};
  for (auto [arc, value] : targets) {
    if (arc >= g.arc_count()) throw InputError("cycle target for unknown arc");
    if (in_tree[arc]) {
      throw InputError("arc '" + g.arc(arc).id.str() + "' is a spanning-tree arc and closes no fundamental cycle");
    }
    ref.values[arc] = value;
  }
  return ref;
}

std::int64_t flow_difference(const Bond& x, const CycleVector& cycle) {
  std::int64_t sum = 0;
  for (const CycleStep& s : cycle.steps) {
    if (s.arc >= x.size()) throw InputError("bond has no value for arc index " + std::to_string(s.arc));
    sum += s.direction * x[s.arc];
  }
  return sum;
}

BondReport is_delta_bond(const DeltaBondSystem& sys, const Bond& x) {
  if (x.size() != sys.graph().arc_count()) throw InputError("bond must label every arc");
  BondReport report;
  for (ArcIndex a = 0; a < x.size(); ++a) {
    if (x[a] < sys.lower()[a] || x[a] > sys.upper()[a]) {
      report.capacity.push_back({a, x[a], sys.lower()[a], sys.upper()[a]});
    }
  }
  for (std::size_t c = 0; c < sys.cycles().size(); ++c) {
    std::int64_t actual = flow_difference(x, sys.cycles()[c]);
    if (actual != sys.cycle_targets()[c]) report.cycles.push_back({c, sys.cycle_targets()[c], actual});
  }
  return report;
}

namespace {

// Bonds are reference + (pi(tail) - pi(head)); the window
// lower - ref <= pi(tail) - pi(head) <= upper - ref becomes two edges.
std::vector<detail::ConstraintEdge> constraint_edges(const DeltaBondSystem& sys) {
  std::vector<detail::ConstraintEdge> edges;
  const Multigraph& g = sys.graph();
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    std::int64_t r = sys.reference()[a];
    edges.push_back({arc.head, arc.tail, sys.upper()[a] - r, a, -1});
    edges.push_back({arc.tail, arc.head, r - sys.lower()[a], a, +1});
  }
  return edges;
}

Bond bond_from_potential(const DeltaBondSystem& sys, const std::vector<std::int64_t>& pi) {
  const Multigraph& g = sys.graph();
  Bond x = sys.reference();
  for (ArcIndex a = 0; a < g.arc_count(); ++a) x.values[a] += pi[g.arc(a).tail] - pi[g.arc(a).head];
  return x;
}

}  // namespace

Infeasibility make_infeasibility(const DeltaBondSystem& sys, CycleVector cycle) {
  Infeasibility cert;
  cert.target = flow_difference(sys.reference(), cycle);
  for (const CycleStep& s : cycle.steps) {
    if (s.direction > 0) {
      cert.window_min += sys.lower()[s.arc];
      cert.window_max += sys.upper()[s.arc];
    } else {
      cert.window_min -= sys.upper()[s.arc];
      cert.window_max -= sys.lower()[s.arc];
    }
  }
  cert.cycle = std::move(cycle);
  return cert;
}

std::variant<Bond, Infeasibility> find_initial_bond(const DeltaBondSystem& sys) {
  auto result = detail::solve_difference_constraints(sys.graph().vertex_count(), constraint_edges(sys));
  if (result.potential) return bond_from_potential(sys, *result.potential);
  CycleVector cycle;
  for (const auto& e : result.negative_cycle) cycle.steps.push_back({e.arc, e.direction});
  Infeasibility cert = make_infeasibility(sys, cycle);
  if (cert.target >= cert.window_min) return cert;
  // Report the orientation in which the target overshoots the window.
  std::reverse(cycle.steps.begin(), cycle.steps.end());
  for (CycleStep& s : cycle.steps) s.direction = -s.direction;
  return make_infeasibility(sys, std::move(cycle));
}

Bond require_initial_bond(const DeltaBondSystem& sys) {
  auto found = find_initial_bond(sys);
  if (auto* bond = std::get_if<Bond>(&found)) return std::move(*bond);
  const auto& cert = std::get<Infeasibility>(found);
  throw InfeasibleError("system has no bond: a cycle of length " + std::to_string(cert.cycle.length()) +
                        " prescribes flow-difference " + std::to_string(cert.target) +
                        " outside its capacity window [" + std::to_string(cert.window_min) + ", " +
                        std::to_string(cert.window_max) + "]");
}

std::vector<std::pair<std::int64_t, std::int64_t>> arc_value_ranges(const DeltaBondSystem& sys) {
  require_initial_bond(sys);
  const Multigraph& g = sys.graph();
  auto dist = detail::all_pairs_distances(g.vertex_count(), constraint_edges(sys));
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    // Connected graphs give finite distances in both directions.
    std::int64_t r = sys.reference()[a];
    ranges.emplace_back(r - *dist[arc.tail][arc.head], r + *dist[arc.head][arc.tail]);
  }
  return ranges;
}

std::pair<std::int64_t, std::int64_t> arc_value_range(const DeltaBondSystem& sys, ArcIndex a) {
  if (a >= sys.graph().arc_count()) throw InputError("arc index out of range");
  return arc_value_ranges(sys)[a];
}

Bond ContractionMap::expand(const Bond& reduced) const {
  Bond full{std::vector<std::int64_t>(reduced_arc.size())};
  for (ArcIndex a = 0; a < reduced_arc.size(); ++a) {
    full.values[a] = reduced_arc[a] ? reduced.values.at(*reduced_arc[a]) : forced_value[a];
  }
  return full;
}

Bond ContractionMap::restrict(const Bond& full) const {
  if (full.size() != reduced_arc.size()) throw InputError("bond must label every arc");
  Bond reduced;
  for (ArcIndex a = 0; a < reduced_arc.size(); ++a) {
    if (!reduced_arc[a]) continue;
    if (reduced.values.size() <= *reduced_arc[a]) reduced.values.resize(*reduced_arc[a] + 1);
    reduced.values[*reduced_arc[a]] = full[a];
  }
  return reduced;
}

namespace {

// One round of contraction; rigid marks the arcs to contract.
Reduction contract(const DeltaBondSystem& sys, const Bond& feasible,
                   const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges) {
  const Multigraph& g = sys.graph();
  detail::UnionFind classes(g.vertex_count());
  std::vector<bool> rigid(g.arc_count());
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    rigid[a] = ranges[a].first == ranges[a].second;
    if (rigid[a]) classes.unite(g.arc(a).tail, g.arc(a).head);
  }

  std::vector<Id> vertex_ids;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (classes.find(v) == v) vertex_ids.push_back(g.vertex_id(v));
  }
  std::vector<ArcSpec> arcs;
  std::vector<std::int64_t> lower, upper;
  Bond reference;
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    if (rigid[a]) continue;
    const Arc& arc = g.arc(a);
    VertexIndex t = classes.find(arc.tail), h = classes.find(arc.head);
    // A free arc inside a rigid class would have its value fixed by the
    // cycle it closes there.
    if (t == h) throw std::logic_error("non-rigid arc became a loop during contraction");
    arcs.push_back({arc.id, g.vertex_id(t), g.vertex_id(h)});
    lower.push_back(sys.lower()[a]);
    upper.push_back(sys.upper()[a]);
    // Restricting a feasible bond carries the adjusted flow-differences.
    reference.values.push_back(feasible[a]);
  }
  Multigraph reduced_graph(std::move(vertex_ids), std::move(arcs));
  ContractionMap map;
  map.forced_value.assign(g.arc_count(), 0);
  map.reduced_arc.assign(g.arc_count(), std::nullopt);
  std::size_t next = 0;
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    if (rigid[a]) {
      map.forced_value[a] = ranges[a].first;
    } else {
      map.reduced_arc[a] = next++;  // survivors keep their relative id order
    }
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    map.vertex_class.push_back(reduced_graph.vertex_index(g.vertex_id(classes.find(v))));
  }
  VertexIndex forbidden = map.vertex_class[sys.forbidden()];
  return Reduction{DeltaBondSystem(std::move(reduced_graph), std::move(lower), std::move(upper),
                                   std::move(reference), forbidden),
                   std::move(map)};
}

ContractionMap compose(const ContractionMap& first, const ContractionMap& second) {
  ContractionMap out;
  out.forced_value = first.forced_value;
  out.reduced_arc.resize(first.reduced_arc.size());
  for (ArcIndex a = 0; a < first.reduced_arc.size(); ++a) {
    if (!first.reduced_arc[a]) continue;
    ArcIndex mid = *first.reduced_arc[a];
    out.reduced_arc[a] = second.reduced_arc[mid];
    if (!second.reduced_arc[mid]) out.forced_value[a] = second.forced_value[mid];
  }
  for (VertexIndex c : first.vertex_class) out.vertex_class.push_back(second.vertex_class[c]);
  return out;
}

bool any_rigid(const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges) {
  return std::any_of(ranges.begin(), ranges.end(), [](const auto& r) { return r.first == r.second; });
}

}  // namespace

Reduction reduce(const DeltaBondSystem& sys) {
  Bond feasible = require_initial_bond(sys);
  Reduction current = contract(sys, feasible, arc_value_ranges(sys));
  for (;;) {
    auto ranges = arc_value_ranges(current.system);
    if (!any_rigid(ranges)) return current;
    Bond next_feasible = require_initial_bond(current.system);
    Reduction next = contract(current.system, next_feasible, ranges);
    current = Reduction{std::move(next.system), compose(current.map, next.map)};
  }
}

bool is_reduced(const DeltaBondSystem& sys) { return !any_rigid(arc_value_ranges(sys)); }

namespace {

void require_pushable(const DeltaBondSystem& sys, const std::vector<bool>& inside) {
  if (inside.size() != sys.graph().vertex_count()) throw InputError("vertex set mask has wrong size");
  if (inside[sys.forbidden()]) {
    throw InputError("cannot push a set containing the forbidden vertex '" +
                     sys.graph().vertex_id(sys.forbidden()).str() + "'");
  }
}

std::vector<bool> mask_of(const DeltaBondSystem& sys, std::span<const VertexIndex> inside) {
  std::vector<bool> mask(sys.graph().vertex_count(), false);
  for (VertexIndex v : inside) mask.at(v) = true;
  return mask;
}

Bond shift(const DeltaBondSystem& sys, const Bond& x, const std::vector<bool>& inside, int sign) {
  require_pushable(sys, inside);
  VertexCut cut = vertex_cut(sys.graph(), inside);
  Bond y = x;
  for (ArcIndex a : cut.forward) y.values.at(a) += sign;
  for (ArcIndex a : cut.backward) y.values.at(a) -= sign;
  return y;
}

bool has_slack(const DeltaBondSystem& sys, const Bond& x, const std::vector<bool>& inside, int sign) {
  require_pushable(sys, inside);
  VertexCut cut = vertex_cut(sys.graph(), inside);
  const auto& up = sign > 0 ? sys.upper() : sys.lower();
  const auto& down = sign > 0 ? sys.lower() : sys.upper();
  auto room = [&](ArcIndex a, const std::vector<std::int64_t>& bound, int dir) {
    return dir * (bound[a] - x.values.at(a)) > 0;
  };
  for (ArcIndex a : cut.forward) {
    if (!room(a, up, sign)) return false;
  }
  for (ArcIndex a : cut.backward) {
    if (!room(a, down, -sign)) return false;
  }
  return true;
}

}  // namespace

Bond push(const DeltaBondSystem& sys, const Bond& x, const std::vector<bool>& inside) {
  return shift(sys, x, inside, +1);
}
Bond push(const DeltaBondSystem& sys, const Bond& x, std::span<const VertexIndex> inside) {
  return shift(sys, x, mask_of(sys, inside), +1);
}
Bond push_down(const DeltaBondSystem& sys, const Bond& x, const std::vector<bool>& inside) {
  return shift(sys, x, inside, -1);
}
Bond push_down(const DeltaBondSystem& sys, const Bond& x, std::span<const VertexIndex> inside) {
  return shift(sys, x, mask_of(sys, inside), -1);
}

bool is_legal_push(const DeltaBondSystem& sys, const Bond& x, const std::vector<bool>& inside) {
  return has_slack(sys, x, inside, +1);
}
bool is_legal_push(const DeltaBondSystem& sys, const Bond& x, std::span<const VertexIndex> inside) {
  return has_slack(sys, x, mask_of(sys, inside), +1);
}
bool is_legal_push_down(const DeltaBondSystem& sys, const Bond& x, const std::vector<bool>& inside) {
  return has_slack(sys, x, inside, -1);
}
bool is_legal_push_down(const DeltaBondSystem& sys, const Bond& x, std::span<const VertexIndex> inside) {
  return has_slack(sys, x, mask_of(sys, inside), -1);
}

// Single-vertex variants avoid building masks; they sit on the hot path of
// lattice enumeration.
bool is_legal_vertex_push(const DeltaBondSystem& sys, const Bond& x, VertexIndex v) {
  if (v == sys.forbidden()) return false;
  const Multigraph& g = sys.graph();
  for (ArcIndex a : g.out_arcs(v)) {
    if (!g.arc(a).is_loop() && x[a] >= sys.upper()[a]) return false;
  }
  for (ArcIndex a : g.in_arcs(v)) {
    if (!g.arc(a).is_loop() && x[a] <= sys.lower()[a]) return false;
  }
  return true;
}

bool is_legal_vertex_push_down(const DeltaBondSystem& sys, const Bond& x, VertexIndex v) {
  if (v == sys.forbidden()) return false;
  const Multigraph& g = sys.graph();
  for (ArcIndex a : g.out_arcs(v)) {
    if (!g.arc(a).is_loop() && x[a] <= sys.lower()[a]) return false;
  }
  for (ArcIndex a : g.in_arcs(v)) {
    if (!g.arc(a).is_loop() && x[a] >= sys.upper()[a]) return false;
  }
  return true;
}

Bond vertex_push(const DeltaBondSystem& sys, const Bond& x, VertexIndex v) {
  if (v == sys.forbidden()) throw InputError("cannot push the forbidden vertex");
  const Multigraph& g = sys.graph();
  Bond y = x;
  for (ArcIndex a : g.out_arcs(v)) {
    if (!g.arc(a).is_loop()) ++y.values[a];
  }
  for (ArcIndex a : g.in_arcs(v)) {
    if (!g.arc(a).is_loop()) --y.values[a];
  }
  return y;
}

namespace {

// Moves every vertex as far as its incident slack allows, sweeping until
// nothing moves. Each sweep step equals a run of single legal pushes.
Bond slide_to_extreme(const DeltaBondSystem& sys, Bond x, int sign) {
  const Multigraph& g = sys.graph();
  bool moved = true;
  while (moved) {
    moved = false;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (v == sys.forbidden()) continue;
      std::int64_t steps = std::numeric_limits<std::int64_t>::max();
      for (ArcIndex a : g.out_arcs(v)) {
        if (g.arc(a).is_loop()) continue;
        steps = std::min(steps, sign > 0 ? sys.upper()[a] - x[a] : x[a] - sys.lower()[a]);
      }
      for (ArcIndex a : g.in_arcs(v)) {
        if (g.arc(a).is_loop()) continue;
        steps = std::min(steps, sign > 0 ? x[a] - sys.lower()[a] : sys.upper()[a] - x[a]);
      }
      if (steps <= 0 || steps == std::numeric_limits<std::int64_t>::max()) continue;
      for (ArcIndex a : g.out_arcs(v)) {
        if (!g.arc(a).is_loop()) x.values[a] += sign * steps;
      }
      for (ArcIndex a : g.in_arcs(v)) {
        if (!g.arc(a).is_loop()) x.values[a] -= sign * steps;
      }
      moved = true;
    }
  }
  return x;
}

void require_reduced(const DeltaBondSystem& sys) {
  if (!is_reduced(sys)) throw InputError("system has rigid arcs; reduce it first");
}

}  // namespace

Bond minimum_bond(const DeltaBondSystem& sys) {
  Bond start = require_initial_bond(sys);
  require_reduced(sys);
  return slide_to_extreme(sys, std::move(start), -1);
}

Bond maximum_bond(const DeltaBondSystem& sys) {
  Bond start = require_initial_bond(sys);
  require_reduced(sys);
  return slide_to_extreme(sys, std::move(start), +1);
}

BondLattice::BondLattice(DeltaBondSystem reduced) : sys_(std::move(reduced)), minimum_(minimum_bond(sys_)) {}

PushCount BondLattice::push_count(const Bond& x) const {
  const Multigraph& g = sys_.graph();
  if (x.size() != g.arc_count()) throw InputError("bond must label every arc");
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> counts(n, 0);
  std::vector<bool> seen(n, false);
  std::queue<VertexIndex> queue;
  queue.push(sys_.forbidden());
  seen[sys_.forbidden()] = true;
  while (!queue.empty()) {
    VertexIndex v = queue.front();
    queue.pop();
    for (ArcIndex a : g.incident(v)) {
      const Arc& arc = g.arc(a);
      VertexIndex w = g.opposite(a, v);
      if (seen[w]) continue;
      std::int64_t diff = x[a] - minimum_[a];  // = count(tail) - count(head)
      counts[w] = arc.tail == v ? counts[v] - diff : counts[v] + diff;
      seen[w] = true;
      queue.push(w);
    }
  }
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    if (x[a] - minimum_[a] != counts[arc.tail] - counts[arc.head]) {
      throw InputError("labeling differs from the lattice minimum by more than a sum of vertex cuts; "
                       "it breaks the cycle condition at arc '" + arc.id.str() + "'");
    }
    if (x[a] < sys_.lower()[a] || x[a] > sys_.upper()[a]) {
      throw InputError("labeling violates the capacity of arc '" + arc.id.str() + "'");
    }
  }
  for (VertexIndex v = 0; v < n; ++v) {
    if (counts[v] < 0) throw std::logic_error("negative push count below the lattice minimum");
  }
  return PushCount{std::move(counts)};
}

Bond BondLattice::bond_from_push_count(const PushCount& pc) const {
  const Multigraph& g = sys_.graph();
  if (pc.counts.size() != g.vertex_count()) throw InputError("push count must cover every vertex");
  Bond x = minimum_;
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    x.values[a] += pc.counts[g.arc(a).tail] - pc.counts[g.arc(a).head];
  }
  return x;
}

bool BondLattice::leq(const Bond& x, const Bond& y) const {
  auto cx = push_count(x), cy = push_count(y);
  for (std::size_t v = 0; v < cx.counts.size(); ++v) {
    if (cx.counts[v] > cy.counts[v]) return false;
  }
  return true;
}

Bond BondLattice::meet(const Bond& x, const Bond& y) const {
  auto cx = push_count(x), cy = push_count(y);
  for (std::size_t v = 0; v < cx.counts.size(); ++v) cx.counts[v] = std::min(cx.counts[v], cy.counts[v]);
  return bond_from_push_count(cx);
}

Bond BondLattice::join(const Bond& x, const Bond& y) const {
  auto cx = push_count(x), cy = push_count(y);
  for (std::size_t v = 0; v < cx.counts.size(); ++v) cx.counts[v] = std::max(cx.counts[v], cy.counts[v]);
  return bond_from_push_count(cx);
}

}  // namespace bondlat
