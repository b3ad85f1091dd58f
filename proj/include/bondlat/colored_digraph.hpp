#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace bondlat {

struct ColoredArc {
  std::size_t tail = 0;
  std::size_t head = 0;
  std::size_t color = 0;

  friend bool operator==(const ColoredArc&, const ColoredArc&) = default;
};

/// Finite digraph on vertices 0..n-1 with one color token per arc.
/// Parallel arcs and loops are representable; the checker decides what
/// they mean.
struct ColoredDigraph {
  std::size_t vertex_count = 0;
  std::vector<ColoredArc> arcs;

  ColoredDigraph reversed() const;
  std::size_t color_count() const;  // 1 + largest color, 0 without arcs

  std::vector<std::vector<std::size_t>> out_arcs() const;
  std::vector<std::vector<std::size_t>> in_arcs() const;
};

/// Vertices in a topological order, or nothing if there is a directed cycle.
std::optional<std::vector<std::size_t>> topological_order(const ColoredDigraph& d);

/// Some directed cycle as a vertex sequence (first vertex not repeated),
/// empty for acyclic input.
std::vector<std::size_t> find_directed_cycle(const ColoredDigraph& d);

}  // namespace bondlat
