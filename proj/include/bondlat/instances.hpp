#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "bondlat/bonds.hpp"
#include "bondlat/embedding.hpp"
#include "bondlat/graph.hpp"

namespace bondlat {

/// Orientation of the underlying graph of a reference digraph: flipped[a]
/// says arc a is reversed.
struct Orientation {
  std::vector<bool> flipped;

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Forward minus backward arcs of the oriented graph along the cycle.
std::int64_t oriented_flow_difference(const Multigraph& d, const Orientation& o, const CycleVector& cycle);

// ------------------------------------------------------------ c-orientations

/// Bonds with capacities [0,1] whose value 1 marks a flipped arc. `c` holds
/// the prescribed flow-difference per fundamental cycle, keyed by the cycle's
/// non-tree arc; missing cycles keep the value of the reference digraph.
/// Throws InputError when c and the reference differ by an odd amount on a
/// cycle, or when a key is a tree arc.
DeltaBondSystem encode_c_orientations(const Multigraph& d, const std::map<ArcIndex, std::int64_t>& c,
                                      VertexIndex forbidden = 0);

/// Throws InputError unless every value is 0 or 1.
Orientation decode_orientation(const Bond& x);
Bond encode_orientation(const Orientation& o);

// ------------------------------------------------------------ flows

/// Flow problem on a plane digraph: excess[v] is the prescribed inflow
/// minus outflow at v.
struct FlowSpec {
  PlanarEmbedding embedding;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::vector<std::int64_t> excess;
  std::size_t unbounded_face = 0;
};

struct FlowEncoding {
  PlanarDual dual;
  DeltaBondSystem system;  // on dual.graph, forbidden = the unbounded face
};

/// Bonds of the dual system are the flows with the given excesses. Throws
/// InfeasibleError when the excesses do not sum to zero, InputError for a
/// bad face index or mismatched sizes.
FlowEncoding encode_flows(const FlowSpec& spec);

/// Inflow minus outflow per vertex.
std::vector<std::int64_t> excess_of(const Multigraph& d, const std::vector<std::int64_t>& flow);

/// Dual bond -> flow on the primal arcs, and back.
std::vector<std::int64_t> decode_flow(const FlowEncoding& enc, const Bond& x);
Bond encode_flow(const FlowEncoding& enc, const std::vector<std::int64_t>& flow);

// ------------------------------------------------------------ alpha-orientations

/// Plane graph given as an embedded digraph whose arc directions are
/// ignored; alpha is the wanted out-degree per vertex.
struct AlphaSpec {
  PlanarEmbedding embedding;
  std::vector<std::int64_t> alpha;
  std::size_t unbounded_face = 0;
};

struct AlphaEncoding {
  /// Every edge directed from its smaller to its larger endpoint (loops
  /// keep their direction).
  PlanarEmbedding reference;
  FlowEncoding flows;
};

/// Throws InputError if alpha does not sum to the number of edges.
AlphaEncoding encode_alpha(const AlphaSpec& spec);

/// Orientations relative to `reference`.
Orientation decode_alpha(const AlphaEncoding& enc, const Bond& x);
Bond encode_alpha_orientation(const AlphaEncoding& enc, const Orientation& o);

std::vector<std::int64_t> out_degrees(const Multigraph& d, const Orientation& o);

// ------------------------------------------------------------ potentials

/// System with zero flow-difference on every cycle: its bonds are the
/// differences pi(head) - pi(tail) of potentials with pi(v0) = 0.
DeltaBondSystem encode_potentials(Multigraph d, std::vector<std::int64_t> lower, std::vector<std::int64_t> upper,
                                  VertexIndex v0);

/// Signed sum of x along any path from the forbidden vertex. Throws
/// InputError if x has a nonzero flow-difference on some cycle.
std::vector<std::int64_t> potential_of(const DeltaBondSystem& sys, const Bond& x);
Bond bond_of_potential(const DeltaBondSystem& sys, const std::vector<std::int64_t>& pi);

}  // namespace bondlat
