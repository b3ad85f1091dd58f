#include "bondlat/poset.hpp"

#include <algorithm>
#include <string>

#include "bondlat/colored_digraph.hpp"
#include "bondlat/error.hpp"

namespace bondlat {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq, std::vector<std::pair<std::size_t, std::size_t>> covers)
    : leq_(std::move(leq)), upper_(leq_.size()), lower_(leq_.size()), down_size_(leq_.size(), 0) {
  for (std::size_t a = 0; a < leq_.size(); ++a)
    for (std::size_t b = 0; b < leq_.size(); ++b)
      if (leq_[b][a]) ++down_size_[a];
  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  for (auto [a, b] : covers) {
    upper_[a].push_back(b);
    lower_[b].push_back(a);
  }
}

namespace {

// b covers a when a < b with nothing strictly between. Only the candidate
// pairs are tested.
std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(
    const std::vector<std::vector<bool>>& leq, const std::vector<std::vector<std::size_t>>& candidates) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < leq.size(); ++a) {
    for (std::size_t b : candidates[a]) {
      bool between = false;
      for (std::size_t c : candidates[a]) between = between || (c != b && leq[c][b]);
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

FinitePoset FinitePoset::from_arcs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  ColoredDigraph d{n, {}};
  for (auto [a, b] : arcs) {
    if (a >= n || b >= n) throw InputError("order arc (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
    if (a != b) d.arcs.push_back({a, b, 0});
  }
  auto order = topological_order(d);
  if (!order) throw InputError("order arcs contain a directed cycle");
  auto out = d.out_arcs();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    std::size_t v = *it;
    leq[v][v] = true;
    for (std::size_t a : out[v]) {
      const auto& row = leq[d.arcs[a].head];
      for (std::size_t w = 0; w < n; ++w)
        if (row[w]) leq[v][w] = true;
    }
  }
  // Every cover is an input arc, and an arc is a cover exactly when no
  // other out-neighbour of its tail lies below its head.
  std::vector<std::vector<std::size_t>> successors(n);
  for (const auto& a : d.arcs) successors[a.tail].push_back(a.head);
  for (auto& s : successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  auto covers = cover_pairs(leq, successors);
  return FinitePoset(std::move(leq), std::move(covers));
}

FinitePoset FinitePoset::from_relation(std::vector<std::vector<bool>> leq) {
  const std::size_t n = leq.size();
  for (const auto& row : leq)
    if (row.size() != n) throw InputError("order relation is not square");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) throw InputError("order relation is not reflexive at " + std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a])
        throw InputError("order relation is not antisymmetric at " + std::to_string(a) + ", " + std::to_string(b));
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c]) throw InputError("order relation is not transitive");
    }
  }
  std::vector<std::vector<std::size_t>> above(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && leq[a][b]) above[a].push_back(b);
  auto covers = cover_pairs(leq, above);
  return FinitePoset(std::move(leq), std::move(covers));
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b : upper_[a]) out.emplace_back(a, b);
  return out;
}

FinitePoset FinitePoset::dual() const {
  const std::size_t n = size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = leq_[b][a];
  std::vector<std::pair<std::size_t, std::size_t>> flipped;
  for (auto [a, b] : covers()) flipped.emplace_back(b, a);
  return FinitePoset(std::move(leq), std::move(flipped));
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (lower_[a].empty()) out.push_back(a);
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (upper_[a].empty()) out.push_back(a);
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_lower_bounds(std::span<const std::size_t> set) const {
  std::vector<std::size_t> bounds;
  for (std::size_t z = 0; z < size(); ++z) {
    bool below = true;
    for (std::size_t a : set) below = below && leq_[z][a];
    if (below) bounds.push_back(z);
  }
  std::vector<std::size_t> out;
  for (std::size_t z : bounds) {
    bool dominated = false;
    for (std::size_t w : bounds) dominated = dominated || less(z, w);
    if (!dominated) out.push_back(z);
  }
  return out;
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a, std::size_t b) const {
  // The meet, if any, is the lower bound with the largest down-set.
  std::optional<std::size_t> best;
  std::vector<std::size_t> bounds;
  for (std::size_t z = 0; z < size(); ++z) {
    if (!leq_[z][a] || !leq_[z][b]) continue;
    bounds.push_back(z);
    if (!best || down_size_[z] > down_size_[*best]) best = z;
  }
  for (std::size_t z : bounds)
    if (!leq_[z][*best]) return std::nullopt;
  return best;
}

std::optional<std::size_t> FinitePoset::join(std::size_t a, std::size_t b) const {
  std::optional<std::size_t> best;
  std::vector<std::size_t> bounds;
  for (std::size_t z = 0; z < size(); ++z) {
    if (!leq_[a][z] || !leq_[b][z]) continue;
    bounds.push_back(z);
    if (!best || down_size_[z] < down_size_[*best]) best = z;
  }
  if (!best) return std::nullopt;
  for (std::size_t z : bounds)
    if (!leq_[*best][z]) return std::nullopt;
  return best;
}

}  // namespace bondlat
