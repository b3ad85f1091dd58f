#include "bondlat/instances.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <string>

#include "bondlat/error.hpp"

namespace bondlat {

std::int64_t oriented_flow_difference(const Multigraph& d, const Orientation& o, const CycleVector& cycle) {
  std::int64_t sum = 0;
  for (const CycleStep& s : cycle.steps) sum += o.flipped[s.arc] ? -s.direction : s.direction;
  return sum;
}

DeltaBondSystem encode_c_orientations(const Multigraph& d, const std::map<ArcIndex, std::int64_t>& c,
                                      VertexIndex forbidden) {
  auto tree = spanning_tree(d);
  auto cycles = fundamental_cycles(d, tree);
  for (const auto& entry : c) {
    if (std::binary_search(tree.begin(), tree.end(), entry.first))
      throw InputError("arc '" + d.arc(entry.first).id.str() + "' is a tree arc and closes no fundamental cycle");
  }
  Orientation none{std::vector<bool>(d.arc_count(), false)};
  std::map<ArcIndex, std::int64_t> delta;
  for (const auto& cycle : cycles) {
    ArcIndex e = cycle.steps.front().arc;
    auto it = c.find(e);
    if (it == c.end()) continue;
    // Flipping an arc on the cycle changes the count by two.
    std::int64_t diff = oriented_flow_difference(d, none, cycle) - it->second;
    if (diff % 2 != 0)
      throw InputError("cycle of arc '" + d.arc(e).id.str() + "': prescribed value " + std::to_string(it->second) +
                       " has the wrong parity for a cycle with " + std::to_string(cycle.length()) + " arcs");
    delta[e] = diff / 2;
  }
  Bond reference = reference_from_cycle_targets(d, delta);
  return DeltaBondSystem(d, std::vector<std::int64_t>(d.arc_count(), 0), std::vector<std::int64_t>(d.arc_count(), 1),
                         std::move(reference), forbidden);
}

Orientation decode_orientation(const Bond& x) {
  Orientation o;
  for (std::int64_t v : x.values) {
    if (v != 0 && v != 1) throw InputError("orientation bonds take values 0 and 1, got " + std::to_string(v));
    o.flipped.push_back(v == 1);
  }
  return o;
}

Bond encode_orientation(const Orientation& o) {
  Bond x;
  for (bool f : o.flipped) x.values.push_back(f ? 1 : 0);
  return x;
}

std::vector<std::int64_t> excess_of(const Multigraph& d, const std::vector<std::int64_t>& flow) {
  std::vector<std::int64_t> ex(d.vertex_count(), 0);
  for (ArcIndex a = 0; a < d.arc_count(); ++a) {
    ex[d.arc(a).head] += flow[a];
    ex[d.arc(a).tail] -= flow[a];
  }
  return ex;
}

namespace {

// Some integer flow with the given excesses, ignoring capacities: tree arcs
// carry what their subtree needs, the other arcs carry nothing.
std::vector<std::int64_t> flow_with_excess(const Multigraph& d, const std::vector<std::int64_t>& excess) {
  auto tree = spanning_tree(d);
  std::vector<std::vector<ArcIndex>> tree_arcs(d.vertex_count());
  for (ArcIndex a : tree) {
    tree_arcs[d.arc(a).tail].push_back(a);
    tree_arcs[d.arc(a).head].push_back(a);
  }
  // BFS order from vertex 0, then settle vertices leaves first.
  std::vector<std::optional<ArcIndex>> parent_arc(d.vertex_count());
  std::vector<bool> seen(d.vertex_count(), false);
  std::vector<VertexIndex> order{0};
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexIndex v = order[i];
    for (ArcIndex a : tree_arcs[v]) {
      VertexIndex w = d.opposite(a, v);
      if (seen[w]) continue;
      seen[w] = true;
      parent_arc[w] = a;
      order.push_back(w);
    }
  }
  std::vector<std::int64_t> flow(d.arc_count(), 0);
  std::vector<std::int64_t> current(d.vertex_count(), 0);  // inflow minus outflow so far
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexIndex v = *it;
    if (!parent_arc[v]) continue;
    ArcIndex a = *parent_arc[v];
    std::int64_t missing = excess[v] - current[v];
    flow[a] = d.arc(a).head == v ? missing : -missing;
    current[d.arc(a).head] += flow[a];
    current[d.arc(a).tail] -= flow[a];
  }
  return flow;
}

}  // namespace

FlowEncoding encode_flows(const FlowSpec& spec) {
  const Multigraph& d = spec.embedding.host();
  if (spec.lower.size() != d.arc_count() || spec.upper.size() != d.arc_count())
    throw InputError("flow capacities must list every arc");
  if (spec.excess.size() != d.vertex_count()) throw InputError("flow excesses must list every vertex");
  std::int64_t total = std::accumulate(spec.excess.begin(), spec.excess.end(), std::int64_t{0});
  if (total != 0)
    throw InfeasibleError("excesses sum to " + std::to_string(total) + "; every flow has total excess 0");

  PlanarDual dual = planar_dual(spec.embedding);
  if (spec.unbounded_face >= dual.faces.size())
    throw InputError("unbounded face " + std::to_string(spec.unbounded_face) + " out of range: the embedding has " +
                     std::to_string(dual.faces.size()) + " faces");
  // Bonds of the dual with the flow-differences of one such flow differ from
  // it by dual cuts, which are primal circulations.
  auto f0 = flow_with_excess(d, spec.excess);
  const std::size_t m = d.arc_count();
  std::vector<std::int64_t> lower(m), upper(m), reference(m);
  for (ArcIndex a = 0; a < m; ++a) {
    ArcIndex b = dual.dual_of_primal[a];
    lower[b] = spec.lower[a];
    upper[b] = spec.upper[a];
    reference[b] = f0[a];
  }
  Multigraph dual_graph = dual.graph;
  DeltaBondSystem sys(std::move(dual_graph), std::move(lower), std::move(upper), Bond{std::move(reference)},
                      spec.unbounded_face);
  return FlowEncoding{std::move(dual), std::move(sys)};
}

std::vector<std::int64_t> decode_flow(const FlowEncoding& enc, const Bond& x) {
  std::vector<std::int64_t> flow(enc.dual.dual_of_primal.size());
  for (ArcIndex a = 0; a < flow.size(); ++a) flow[a] = x[enc.dual.dual_of_primal[a]];
  return flow;
}

Bond encode_flow(const FlowEncoding& enc, const std::vector<std::int64_t>& flow) {
  Bond x{std::vector<std::int64_t>(flow.size())};
  for (ArcIndex a = 0; a < flow.size(); ++a) x.values[enc.dual.dual_of_primal[a]] = flow[a];
  return x;
}

std::vector<std::int64_t> out_degrees(const Multigraph& d, const Orientation& o) {
  std::vector<std::int64_t> deg(d.vertex_count(), 0);
  for (ArcIndex a = 0; a < d.arc_count(); ++a) {
    const Arc& arc = d.arc(a);
    ++deg[o.flipped[a] ? arc.head : arc.tail];
  }
  return deg;
}

AlphaEncoding encode_alpha(const AlphaSpec& spec) {
  const PlanarEmbedding& e = spec.embedding;
  const Multigraph& g = e.host();
  if (spec.alpha.size() != g.vertex_count()) throw InputError("alpha must list every vertex");
  std::int64_t total = std::accumulate(spec.alpha.begin(), spec.alpha.end(), std::int64_t{0});
  if (total != static_cast<std::int64_t>(g.arc_count()))
    throw InputError("alpha sums to " + std::to_string(total) + " but the graph has " + std::to_string(g.arc_count()) +
                     " edges");

  // Reference orientation: smaller endpoint to larger one.
  std::vector<ArcSpec> arcs;
  std::vector<bool> swap(g.arc_count(), false);
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    swap[a] = arc.head < arc.tail;
    VertexIndex t = swap[a] ? arc.head : arc.tail;
    VertexIndex h = swap[a] ? arc.tail : arc.head;
    arcs.push_back({arc.id, g.vertex_id(t), g.vertex_id(h)});
  }
  Multigraph d(g.vertex_ids(), std::move(arcs));
  std::vector<std::vector<Dart>> rotation(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    for (Dart dart : e.rotation(v)) {
      if (swap[dart.arc]) dart.end = dart.end == ArcEnd::tail ? ArcEnd::head : ArcEnd::tail;
      rotation[v].push_back(dart);
    }
  }
  PlanarEmbedding reference(std::move(d), std::move(rotation));

  // outdeg_X(v) = outdeg_D(v) + excess at v of the flip indicator.
  Orientation none{std::vector<bool>(g.arc_count(), false)};
  auto base = out_degrees(reference.host(), none);
  FlowSpec flows{reference, std::vector<std::int64_t>(g.arc_count(), 0), std::vector<std::int64_t>(g.arc_count(), 1),
                 {}, spec.unbounded_face};
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) flows.excess.push_back(spec.alpha[v] - base[v]);
  FlowEncoding enc = encode_flows(flows);
  return AlphaEncoding{std::move(reference), std::move(enc)};
}

Orientation decode_alpha(const AlphaEncoding& enc, const Bond& x) {
  return decode_orientation(Bond{decode_flow(enc.flows, x)});
}

Bond encode_alpha_orientation(const AlphaEncoding& enc, const Orientation& o) {
  return encode_flow(enc.flows, encode_orientation(o).values);
}

DeltaBondSystem encode_potentials(Multigraph d, std::vector<std::int64_t> lower, std::vector<std::int64_t> upper,
                                  VertexIndex v0) {
  const std::size_t m = d.arc_count();
  return DeltaBondSystem(std::move(d), std::move(lower), std::move(upper), Bond{std::vector<std::int64_t>(m, 0)}, v0);
}

std::vector<std::int64_t> potential_of(const DeltaBondSystem& sys, const Bond& x) {
  const Multigraph& g = sys.graph();
  std::vector<std::optional<std::int64_t>> pi(g.vertex_count());
  pi[sys.forbidden()] = 0;
  std::queue<VertexIndex> q;
  q.push(sys.forbidden());
  while (!q.empty()) {
    VertexIndex v = q.front();
    q.pop();
    for (ArcIndex a : g.incident(v)) {
      const Arc& arc = g.arc(a);
      VertexIndex w = g.opposite(a, v);
      std::int64_t value = arc.tail == v ? *pi[v] + x[a] : *pi[v] - x[a];
      if (!pi[w]) {
        pi[w] = value;
        q.push(w);
      } else if (*pi[w] != value) {
        throw InputError("labeling has nonzero flow-difference on a cycle through arc '" + arc.id.str() + "'");
      }
    }
  }
  std::vector<std::int64_t> out;
  for (auto& p : pi) out.push_back(*p);
  return out;
}

Bond bond_of_potential(const DeltaBondSystem& sys, const std::vector<std::int64_t>& pi) {
  const Multigraph& g = sys.graph();
  Bond x;
  for (const Arc& a : g.arcs()) x.values.push_back(pi[a.head] - pi[a.tail]);
  return x;
}

}  // namespace bondlat
