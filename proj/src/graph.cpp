#include "bondlat/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "bondlat/error.hpp"
#include "union_find.hpp"

namespace bondlat {

Multigraph::Multigraph(std::vector<Id> vertices, std::vector<ArcSpec> arcs) {
  if (vertices.empty()) throw InputError("graph has no vertices");
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) {
      throw InputError("duplicate vertex id '" + vertices[i].str() + "'");
    }
  }
  vertices_ = std::move(vertices);

  std::sort(arcs.begin(), arcs.end(), [](const ArcSpec& a, const ArcSpec& b) { return a.id < b.id; });
  arcs_.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i > 0 && arcs[i].id == arcs[i - 1].id) {
      throw InputError("duplicate arc id '" + arcs[i].id.str() + "'");
    }
    auto tail = find_vertex(arcs[i].tail);
    auto head = find_vertex(arcs[i].head);
    if (!tail || !head) {
      const Id& bad = !tail ? arcs[i].tail : arcs[i].head;
      throw InputError("arc '" + arcs[i].id.str() + "' references unknown vertex '" + bad.str() + "'");
    }
    arcs_.push_back(Arc{arcs[i].id, *tail, *head});
  }
  index();
}

Multigraph Multigraph::from_indices(std::size_t vertex_count,
                                    const std::vector<std::pair<VertexIndex, VertexIndex>>& arcs) {
  if (vertex_count == 0) throw InputError("graph has no vertices");
  Multigraph g;
  g.vertices_.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) g.vertices_.emplace_back(static_cast<std::int64_t>(v));
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    auto [t, h] = arcs[a];
    if (t >= vertex_count || h >= vertex_count) throw InputError("arc endpoint out of range");
    g.arcs_.push_back(Arc{Id(static_cast<std::int64_t>(a)), t, h});
  }
  g.index();
  return g;
}

void Multigraph::index() {
  const std::size_t n = vertices_.size();
  incident_.assign(n, {});
  out_.assign(n, {});
  in_.assign(n, {});
  for (ArcIndex a = 0; a < arcs_.size(); ++a) {
    const Arc& arc = arcs_[a];
    out_[arc.tail].push_back(a);
    in_[arc.head].push_back(a);
    incident_[arc.tail].push_back(a);
    if (!arc.is_loop()) incident_[arc.head].push_back(a);
  }
}

std::optional<VertexIndex> Multigraph::find_vertex(const Id& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || !(*it == id)) return std::nullopt;
  return static_cast<VertexIndex>(it - vertices_.begin());
}

std::optional<ArcIndex> Multigraph::find_arc(const Id& id) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), id,
                             [](const Arc& arc, const Id& key) { return arc.id < key; });
  if (it == arcs_.end() || !(it->id == id)) return std::nullopt;
  return static_cast<ArcIndex>(it - arcs_.begin());
}

VertexIndex Multigraph::vertex_index(const Id& id) const {
  auto v = find_vertex(id);
  if (!v) throw InputError("unknown vertex '" + id.str() + "'");
  return *v;
}

ArcIndex Multigraph::arc_index(const Id& id) const {
  auto a = find_arc(id);
  if (!a) throw InputError("unknown arc '" + id.str() + "'");
  return *a;
}

bool Multigraph::is_connected() const {
  std::size_t count = 0;
  connected_components(*this, &count);
  return count == 1;
}

std::vector<int> CycleVector::coefficients(std::size_t arc_count) const {
  std::vector<int> coeff(arc_count, 0);
  for (const CycleStep& s : steps) coeff.at(s.arc) += s.direction;
  return coeff;
}

std::vector<int> VertexCut::signs(std::size_t arc_count) const {
  std::vector<int> sign(arc_count, 0);
  for (ArcIndex a : forward) sign[a] = 1;
  for (ArcIndex a : backward) sign[a] = -1;
  return sign;
}

std::vector<ArcIndex> spanning_tree(const Multigraph& g) {
  detail::UnionFind uf(g.vertex_count());
  std::vector<ArcIndex> tree;
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    if (uf.unite(g.arc(a).tail, g.arc(a).head)) tree.push_back(a);
  }
  if (tree.size() + 1 != g.vertex_count()) {
    for (VertexIndex v = 1; v < g.vertex_count(); ++v) {
      if (uf.find(v) != uf.find(0)) {
        throw InputError("graph is disconnected: vertex '" + g.vertex_id(v).str() +
                         "' is unreachable from vertex '" + g.vertex_id(0).str() + "'");
      }
    }
  }
  return tree;
}

std::vector<CycleVector> fundamental_cycles(const Multigraph& g, std::span<const ArcIndex> tree) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> in_tree(g.arc_count(), false);
  for (ArcIndex a : tree) in_tree.at(a) = true;

  // Root the tree at vertex 0.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<ArcIndex> parent_arc(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false);
  std::queue<VertexIndex> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    VertexIndex v = queue.front();
    queue.pop();
    for (ArcIndex a : g.incident(v)) {
      if (!in_tree[a]) continue;
      VertexIndex w = g.opposite(a, v);
      if (seen[w]) continue;
      seen[w] = true;
      parent_arc[w] = a;
      depth[w] = depth[v] + 1;
      queue.push(w);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InputError("arc set is not a spanning tree");
  }
  auto parent = [&](VertexIndex v) { return g.opposite(parent_arc[v], v); };

  std::vector<CycleVector> cycles;
  for (ArcIndex e = 0; e < g.arc_count(); ++e) {
    if (in_tree[e]) continue;
    CycleVector cycle;
    cycle.steps.push_back({e, +1});
    // Walk head(e) -> lca -> tail(e).
    VertexIndex up = g.arc(e).head;
    VertexIndex down = g.arc(e).tail;
    std::vector<CycleStep> descent;
    while (up != down) {
      if (depth[up] >= depth[down]) {
        ArcIndex a = parent_arc[up];
        cycle.steps.push_back({a, g.arc(a).tail == up ? +1 : -1});
        up = parent(up);
      } else {
        ArcIndex a = parent_arc[down];
        descent.push_back({a, g.arc(a).head == down ? +1 : -1});
        down = parent(down);
      }
    }
    cycle.steps.insert(cycle.steps.end(), descent.rbegin(), descent.rend());
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

VertexCut vertex_cut(const Multigraph& g, const std::vector<bool>& inside) {
  if (inside.size() != g.vertex_count()) throw InputError("cut mask has wrong size");
  VertexCut cut;
  cut.inside = inside;
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    bool t = inside[g.arc(a).tail];
    bool h = inside[g.arc(a).head];
    if (t && !h) cut.forward.push_back(a);
    if (!t && h) cut.backward.push_back(a);
  }
  return cut;
}

VertexCut vertex_cut(const Multigraph& g, std::span<const VertexIndex> inside) {
  std::vector<bool> mask(g.vertex_count(), false);
  for (VertexIndex v : inside) mask.at(v) = true;
  return vertex_cut(g, mask);
}

std::vector<std::size_t> connected_components(const Multigraph& g, std::size_t* count) {
  detail::UnionFind uf(g.vertex_count());
  for (const Arc& arc : g.arcs()) uf.unite(arc.tail, arc.head);
  std::map<std::size_t, std::size_t> label_of_root;
  std::vector<std::size_t> label(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = label_of_root.try_emplace(uf.find(v), label_of_root.size());
    label[v] = it->second;
  }
  if (count) *count = label_of_root.size();
  return label;
}

std::vector<GraphComponent> split_components(const Multigraph& g) {
  std::size_t count = 0;
  auto label = connected_components(g, &count);
  std::vector<std::vector<Id>> vertex_ids(count);
  std::vector<std::vector<ArcSpec>> arc_specs(count);
  std::vector<GraphComponent> parts;
  std::vector<std::vector<VertexIndex>> members(count);
  std::vector<std::vector<ArcIndex>> arcs(count);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    vertex_ids[label[v]].push_back(g.vertex_id(v));
    members[label[v]].push_back(v);
  }
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    const Arc& arc = g.arc(a);
    std::size_t c = label[arc.tail];
    arc_specs[c].push_back({arc.id, g.vertex_id(arc.tail), g.vertex_id(arc.head)});
    arcs[c].push_back(a);
  }
  // Sub-multigraphs keep the relative id order, so indices map by position.
  for (std::size_t c = 0; c < count; ++c) {
    parts.push_back(GraphComponent{Multigraph(std::move(vertex_ids[c]), std::move(arc_specs[c])),
                                   std::move(members[c]), std::move(arcs[c])});
  }
  return parts;
}

}  // namespace bondlat
