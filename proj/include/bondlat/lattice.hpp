#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bondlat/bonds.hpp"
#include "bondlat/colored_digraph.hpp"
#include "bondlat/poset.hpp"

namespace bondlat {

struct Cover {
  std::size_t lower = 0;
  std::size_t upper = 0;
  VertexIndex color = 0;  // the pushed vertex

  friend bool operator==(const Cover&, const Cover&) = default;
};

/// Cover digraph of the bond lattice of a reduced system. Elements appear
/// rank by rank, each rank sorted lexicographically by value; covers are
/// sorted by (lower, upper).
struct CoverDigraph {
  std::vector<Bond> elements;
  std::vector<Cover> covers;
  std::vector<std::size_t> rank;  // per element

  ColoredDigraph colored() const;
  std::size_t find(const Bond& x) const;  // throws InputError if absent
};

inline constexpr std::size_t default_element_cap = 1'000'000;

/// Breadth-first closure of the minimum under legal vertex pushes. Throws
/// CapExceeded (with the number of elements found) once more than `cap`
/// elements appear.
CoverDigraph enumerate(const DeltaBondSystem& reduced, std::size_t cap = default_element_cap);

/// Color multiplicities along any path from the unique source, one row per
/// vertex and one column per color. Throws InputError if the digraph is
/// cyclic, has no unique source, or two paths to one vertex disagree.
std::vector<std::vector<std::int64_t>> gamma(const ColoredDigraph& d);

/// Elements with exactly one upper cover.
std::vector<std::size_t> meet_irreducibles(const ColoredDigraph& d);

/// For each color i on an arc leaving x, the largest y >= x whose i-th
/// gamma entry equals that of x. Throws InputError if such a largest
/// element is not unique. `order` must be the reachability order of d.
std::vector<std::size_t> minimal_representation(const ColoredDigraph& d, const FinitePoset& order,
                                                const std::vector<std::vector<std::int64_t>>& g, std::size_t x);

/// Colors every cover x < y of a finite upper locally distributive lattice
/// by the unique meet-irreducible above x but not above y. Colors are
/// element indices. Throws InputError naming a witness when the order is
/// not a lattice or not upper locally distributive.
ColoredDigraph canonical_uld_coloring(const FinitePoset& lattice);

}  // namespace bondlat
