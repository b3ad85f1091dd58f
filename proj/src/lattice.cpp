#include "bondlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "bondlat/error.hpp"
#include "bondlat/uld.hpp"

namespace bondlat {

namespace {

std::string list(const std::vector<std::size_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "}";
}

}  // namespace

ColoredDigraph CoverDigraph::colored() const {
  ColoredDigraph d{elements.size(), {}};
  for (const Cover& c : covers) d.arcs.push_back({c.lower, c.upper, c.color});
  return d;
}

std::size_t CoverDigraph::find(const Bond& x) const {
  auto it = std::find(elements.begin(), elements.end(), x);
  if (it == elements.end()) throw InputError("bond is not an element of the lattice");
  return static_cast<std::size_t>(it - elements.begin());
}

CoverDigraph enumerate(const DeltaBondSystem& reduced, std::size_t cap) {
  const std::size_t n = reduced.graph().vertex_count();
  CoverDigraph cd;
  std::map<Bond, std::size_t> index;
  auto admit = [&](Bond x, std::size_t rank) {
    if (cd.elements.size() >= cap) throw CapExceeded("lattice has more than " + std::to_string(cap) + " elements", cd.elements.size());
    index.emplace(x, cd.elements.size());
    cd.elements.push_back(std::move(x));
    cd.rank.push_back(rank);
  };
  admit(minimum_bond(reduced), 0);

  std::size_t layer_begin = 0;
  for (std::size_t rank = 1; layer_begin < cd.elements.size(); ++rank) {
    const std::size_t layer_end = cd.elements.size();
    std::map<Bond, std::vector<std::pair<std::size_t, VertexIndex>>> next;  // bond -> (lower, vertex)
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (VertexIndex v = 0; v < n; ++v) {
        if (v == reduced.forbidden() || !is_legal_vertex_push(reduced, cd.elements[i], v)) continue;
        next[vertex_push(reduced, cd.elements[i], v)].emplace_back(i, v);
      }
    }
    // std::map iterates in lexicographic order, which fixes the indices.
    for (auto& [bond, lowers] : next) {
      admit(bond, rank);
      for (auto [lower, v] : lowers) cd.covers.push_back({lower, cd.elements.size() - 1, v});
    }
    layer_begin = layer_end;
  }
  std::sort(cd.covers.begin(), cd.covers.end(),
            [](const Cover& a, const Cover& b) { return std::pair{a.lower, a.upper} < std::pair{b.lower, b.upper}; });
  return cd;
}

std::vector<std::vector<std::int64_t>> gamma(const ColoredDigraph& d) {
  auto order = topological_order(d);
  if (!order) throw InputError("colored digraph has a directed cycle");
  std::size_t sources = 0;
  std::vector<bool> has_in(d.vertex_count, false);
  for (const auto& a : d.arcs) has_in[a.head] = true;
  for (std::size_t v = 0; v < d.vertex_count; ++v) sources += has_in[v] ? 0 : 1;
  if (sources != 1) throw InputError("colored digraph has " + std::to_string(sources) + " sources, expected 1");

  const std::size_t colors = d.color_count();
  std::vector<std::optional<std::vector<std::int64_t>>> g(d.vertex_count);
  g[order->front()] = std::vector<std::int64_t>(colors, 0);
  auto out = d.out_arcs();
  for (std::size_t v : *order) {
    for (std::size_t a : out[v]) {
      auto candidate = *g[v];
      ++candidate[d.arcs[a].color];
      auto& target = g[d.arcs[a].head];
      if (!target) target = std::move(candidate);
      else if (*target != candidate)
        throw InputError("paths into vertex " + std::to_string(d.arcs[a].head) + " carry different color multisets");
    }
  }
  std::vector<std::vector<std::int64_t>> result;
  result.reserve(d.vertex_count);
  for (auto& row : g) result.push_back(std::move(*row));
  return result;
}

std::vector<std::size_t> meet_irreducibles(const ColoredDigraph& d) {
  std::vector<std::vector<std::size_t>> heads(d.vertex_count);
  for (const auto& a : d.arcs) heads[a.tail].push_back(a.head);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < d.vertex_count; ++v) {
    std::sort(heads[v].begin(), heads[v].end());
    heads[v].erase(std::unique(heads[v].begin(), heads[v].end()), heads[v].end());
    if (heads[v].size() == 1) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> minimal_representation(const ColoredDigraph& d, const FinitePoset& order,
                                                const std::vector<std::vector<std::int64_t>>& g, std::size_t x) {
  std::vector<std::size_t> colors;
  for (const auto& a : d.arcs)
    if (a.tail == x) colors.push_back(a.color);
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());

  std::vector<std::size_t> out;
  for (std::size_t c : colors) {
    std::vector<std::size_t> same;
    for (std::size_t y = 0; y < d.vertex_count; ++y)
      if (order.leq(x, y) && g[y][c] == g[x][c]) same.push_back(y);
    std::vector<std::size_t> maximal;
    for (std::size_t y : same)
      if (std::none_of(same.begin(), same.end(), [&](std::size_t z) { return order.less(y, z); }))
        maximal.push_back(y);
    if (maximal.size() != 1)
      throw InputError("color " + std::to_string(c) + " at element " + std::to_string(x) + " has maximal elements " +
                       list(maximal));
    out.push_back(maximal[0]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ColoredDigraph canonical_uld_coloring(const FinitePoset& lattice) {
  LatticeReport report = brute_uld(lattice, 0);
  if (!report.lattice) {
    if (lattice.size() == 0) throw InputError("empty order is not a lattice");
    if (report.missing_meet) {
      auto [a, b] = *report.missing_meet;
      throw InputError("not a lattice: elements " + std::to_string(a) + " and " + std::to_string(b) + " have no meet");
    }
    auto [a, b] = *report.missing_join;
    throw InputError("not a lattice: elements " + std::to_string(a) + " and " + std::to_string(b) + " have no join");
  }
  if (!report.uld.holds()) {
    const auto& f = *report.uld.failure;
    throw InputError("not upper locally distributive: element " + std::to_string(f.element) +
                     " has minimal representations " + list(f.first) + " and " + list(f.second));
  }
  auto above = meet_irreducibles_above(lattice);
  ColoredDigraph d{lattice.size(), {}};
  for (auto [x, y] : lattice.covers()) {
    std::vector<std::size_t> diff;
    std::set_difference(above[x].begin(), above[x].end(), above[y].begin(), above[y].end(), std::back_inserter(diff));
    if (diff.size() != 1)
      throw InputError("cover " + std::to_string(x) + " < " + std::to_string(y) + " separates meet-irreducibles " +
                       list(diff));
    d.arcs.push_back({x, y, diff[0]});
  }
  return d;
}

}  // namespace bondlat
