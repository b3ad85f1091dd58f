#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bondlat/ids.hpp"

namespace bondlat {

using VertexIndex = std::size_t;
using ArcIndex = std::size_t;

struct Arc {
  Id id;
  VertexIndex tail = 0;
  VertexIndex head = 0;

  bool is_loop() const { return tail == head; }
};

/// Arc as written in input files, endpoints given by vertex name.
struct ArcSpec {
  Id id;
  Id tail;
  Id head;
};

/// Directed multigraph; parallel arcs and loops allowed.
///
/// Vertices and arcs are stored sorted by their natural id order, so index
/// order and id order coincide. Immutable after construction.
class Multigraph {
 public:
  Multigraph(std::vector<Id> vertices, std::vector<ArcSpec> arcs);

  /// Vertices named 0..n-1 and arcs named 0..m-1 in the given order.
  static Multigraph from_indices(std::size_t vertex_count,
                                 const std::vector<std::pair<VertexIndex, VertexIndex>>& arcs);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  const Id& vertex_id(VertexIndex v) const { return vertices_[v]; }
  const Arc& arc(ArcIndex a) const { return arcs_[a]; }
  const std::vector<Id>& vertex_ids() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  std::optional<VertexIndex> find_vertex(const Id& id) const;
  std::optional<ArcIndex> find_arc(const Id& id) const;
  VertexIndex vertex_index(const Id& id) const;  // throws InputError
  ArcIndex arc_index(const Id& id) const;        // throws InputError

  /// Arcs touching v in ascending index order; a loop is listed once.
  const std::vector<ArcIndex>& incident(VertexIndex v) const { return incident_[v]; }
  const std::vector<ArcIndex>& out_arcs(VertexIndex v) const { return out_[v]; }
  const std::vector<ArcIndex>& in_arcs(VertexIndex v) const { return in_[v]; }

  /// The endpoint of a opposite to v (v itself for loops).
  VertexIndex opposite(ArcIndex a, VertexIndex v) const {
    return arcs_[a].tail == v ? arcs_[a].head : arcs_[a].tail;
  }

  bool is_connected() const;

 private:
  Multigraph() = default;
  void index();

  std::vector<Id> vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcIndex>> incident_;
  std::vector<std::vector<ArcIndex>> out_;
  std::vector<std::vector<ArcIndex>> in_;
};

/// One traversed arc of a closed walk: +1 along the arc, -1 against it.
struct CycleStep {
  ArcIndex arc = 0;
  int direction = 1;

  friend bool operator==(const CycleStep&, const CycleStep&) = default;
};

/// Closed walk with a traversal direction. The coefficient of an arc is the
/// sum of its step directions, so it lies in {-1, 0, +1} for walks that use
/// each arc at most once per direction.
struct CycleVector {
  std::vector<CycleStep> steps;

  std::vector<int> coefficients(std::size_t arc_count) const;
  std::size_t length() const { return steps.size(); }

  friend bool operator==(const CycleVector&, const CycleVector&) = default;
};

/// Cut S[X] of a vertex set X: forward arcs leave X, backward arcs enter it.
struct VertexCut {
  std::vector<bool> inside;
  std::vector<ArcIndex> forward;
  std::vector<ArcIndex> backward;

  /// +1 on forward arcs, -1 on backward arcs, 0 elsewhere.
  std::vector<int> signs(std::size_t arc_count) const;
};

/// Spanning tree built by scanning arcs in ascending id order and keeping
/// each arc that joins two components. Returned sorted ascending.
/// Throws InputError naming an unreachable vertex if g is disconnected.
std::vector<ArcIndex> spanning_tree(const Multigraph& g);

/// One cycle per non-tree arc e, in ascending order of e: e traversed
/// forward, then the tree path from head(e) back to tail(e).
std::vector<CycleVector> fundamental_cycles(const Multigraph& g, std::span<const ArcIndex> tree);

VertexCut vertex_cut(const Multigraph& g, const std::vector<bool>& inside);
VertexCut vertex_cut(const Multigraph& g, std::span<const VertexIndex> inside);

/// Component label per vertex; labels are numbered in order of each
/// component's smallest vertex.
std::vector<std::size_t> connected_components(const Multigraph& g, std::size_t* count = nullptr);

/// Connected pieces of a graph with the index maps back to it.
struct GraphComponent {
  Multigraph graph;
  std::vector<VertexIndex> vertices;  // component vertex -> original vertex
  std::vector<ArcIndex> arcs;         // component arc -> original arc
};

std::vector<GraphComponent> split_components(const Multigraph& g);

}  // namespace bondlat
