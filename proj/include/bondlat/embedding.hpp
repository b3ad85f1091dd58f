#pragma once

#include <vector>

#include "bondlat/graph.hpp"

namespace bondlat {

enum class ArcEnd { tail, head };

/// One end of an arc, seen from the vertex it is attached to.
struct Dart {
  ArcIndex arc = 0;
  ArcEnd end = ArcEnd::tail;

  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Combinatorial embedding: a clockwise cyclic order of darts around every
/// vertex. Every dart of the host graph appears exactly once.
class PlanarEmbedding {
 public:
  PlanarEmbedding(Multigraph host, std::vector<std::vector<Dart>> rotation);

  /// Rotation listing the darts at each vertex in ascending arc order,
  /// tail end before head end for loops. Planar only for simple cases
  /// (cycles, trees, vertices of degree <= 3 need checking by the caller).
  static PlanarEmbedding with_sorted_rotation(Multigraph host);

  const Multigraph& host() const { return host_; }
  const std::vector<Dart>& rotation(VertexIndex v) const { return rotation_[v]; }

  VertexIndex vertex_of(Dart d) const {
    const Arc& a = host_.arc(d.arc);
    return d.end == ArcEnd::tail ? a.tail : a.head;
  }

  /// Dart following d clockwise around its vertex.
  Dart next_clockwise(Dart d) const;

 private:
  Multigraph host_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<std::size_t> position_;  // 2 * arc + end -> index in its rotation
};

/// Boundary walks of the faces. Starting from the least unused dart
/// (arc ascending, tail end first), a walk leaves along the dart and
/// continues with the clockwise successor of the arrival dart. Each face is
/// a closed walk: forward steps leave through the tail end.
///
/// Throws InputError if the host is disconnected, or if the rotation system
/// has positive genus (message carries the genus).
std::vector<CycleVector> faces(const PlanarEmbedding& e);

/// Genus from Euler's formula for a connected host.
int genus(const PlanarEmbedding& e);

/// Dual digraph: one vertex per face (named 0..F-1 in face order), one arc
/// per primal arc with the same id. The dual arc leaves the face whose
/// boundary walk traverses the primal arc forward and enters the face that
/// traverses it backward, so bridges become loops.
struct PlanarDual {
  Multigraph graph;
  std::vector<CycleVector> faces;
  std::vector<ArcIndex> dual_of_primal;
  std::vector<ArcIndex> primal_of_dual;
};

PlanarDual planar_dual(const PlanarEmbedding& e);

/// Embedding of the dual whose rotation at a face follows its boundary walk.
PlanarEmbedding dual_embedding(const PlanarEmbedding& e);

}  // namespace bondlat
