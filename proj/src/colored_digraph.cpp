#include "bondlat/colored_digraph.hpp"

#include <algorithm>

namespace bondlat {

ColoredDigraph ColoredDigraph::reversed() const {
  ColoredDigraph r{vertex_count, arcs};
  for (auto& a : r.arcs) std::swap(a.tail, a.head);
  return r;
}

std::size_t ColoredDigraph::color_count() const {
  std::size_t c = 0;
  for (const auto& a : arcs) c = std::max(c, a.color + 1);
  return c;
}

std::vector<std::vector<std::size_t>> ColoredDigraph::out_arcs() const {
  std::vector<std::vector<std::size_t>> out(vertex_count);
  for (std::size_t i = 0; i < arcs.size(); ++i) out[arcs[i].tail].push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> ColoredDigraph::in_arcs() const {
  std::vector<std::vector<std::size_t>> in(vertex_count);
  for (std::size_t i = 0; i < arcs.size(); ++i) in[arcs[i].head].push_back(i);
  return in;
}

std::optional<std::vector<std::size_t>> topological_order(const ColoredDigraph& d) {
  std::vector<std::size_t> indegree(d.vertex_count, 0);
  for (const auto& a : d.arcs) ++indegree[a.head];
  auto out = d.out_arcs();
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < d.vertex_count; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t a : out[order[i]]) {
      if (--indegree[d.arcs[a].head] == 0) order.push_back(d.arcs[a].head);
    }
  }
  if (order.size() != d.vertex_count) return std::nullopt;
  return order;
}

std::vector<std::size_t> find_directed_cycle(const ColoredDigraph& d) {
  enum : char { fresh, active, done };
  std::vector<char> state(d.vertex_count, fresh);
  std::vector<std::size_t> parent(d.vertex_count);
  auto out = d.out_arcs();
  for (std::size_t root = 0; root < d.vertex_count; ++root) {
    if (state[root] != fresh) continue;
    // Iterative DFS; next[v] is the position in out[v] still to explore.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    state[root] = active;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == out[v].size()) {
        state[v] = done;
        stack.pop_back();
        continue;
      }
      std::size_t w = d.arcs[out[v][next++]].head;
      if (state[w] == active) {
        std::vector<std::size_t> cycle{v};
        for (std::size_t u = v; u != w;) {
          u = parent[u];
          cycle.push_back(u);
        }
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (state[w] == fresh) {
        state[w] = active;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

}  // namespace bondlat
