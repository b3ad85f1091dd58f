// Shared instances and brute-force oracles for the test suites. The oracles
// only use the Multigraph accessors; they never call the code under test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bondlat/bonds.hpp"
#include "bondlat/graph.hpp"

namespace fixtures {

using bondlat::ArcSpec;
using bondlat::Bond;
using bondlat::DeltaBondSystem;
using bondlat::Id;
using bondlat::Multigraph;

inline Id vid(std::int64_t v) { return Id(v); }
inline Id aid(const std::string& s) { return Id(s); }

/// a1=(1,2), a2=(2,3), a3=(3,1)
inline Multigraph triangle() {
  return Multigraph({vid(1), vid(2), vid(3)},
                    {{aid("a1"), vid(1), vid(2)}, {aid("a2"), vid(2), vid(3)}, {aid("a3"), vid(3), vid(1)}});
}

inline DeltaBondSystem triangle_system(std::int64_t lo, std::int64_t hi, std::vector<std::int64_t> ref,
                                       std::int64_t forbidden = 1) {
  Multigraph g = triangle();
  auto f = g.vertex_index(vid(forbidden));
  return DeltaBondSystem(std::move(g), {lo, lo, lo}, {hi, hi, hi}, Bond{std::move(ref)}, f);
}

/// a=(1,0), b=(2,0), caps [0,1], forbidden 0
inline DeltaBondSystem star_system() {
  Multigraph g({vid(0), vid(1), vid(2)}, {{aid("a"), vid(1), vid(0)}, {aid("b"), vid(2), vid(0)}});
  return DeltaBondSystem(std::move(g), {0, 0}, {1, 1}, Bond{{0, 0}}, 0);
}

/// Independent cycle-condition oracle: x - ref must be a potential
/// difference pi(tail) - pi(head). Solved by BFS over the underlying graph.
inline bool same_cycle_sums(const Multigraph& g, const std::vector<std::int64_t>& x,
                            const std::vector<std::int64_t>& ref) {
  const std::size_t n = g.vertex_count();
  std::vector<std::optional<std::int64_t>> pi(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (pi[root]) continue;
    pi[root] = 0;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (std::size_t a = 0; a < g.arc_count(); ++a) {
        const auto& arc = g.arc(a);
        std::int64_t d = x[a] - ref[a];
        if (arc.tail == v && !pi[arc.head]) {
          pi[arc.head] = *pi[v] - d;
          q.push(arc.head);
        } else if (arc.head == v && !pi[arc.tail]) {
          pi[arc.tail] = *pi[v] + d;
          q.push(arc.tail);
        }
      }
    }
  }
  for (std::size_t a = 0; a < g.arc_count(); ++a) {
    const auto& arc = g.arc(a);
    if (x[a] - ref[a] != *pi[arc.tail] - *pi[arc.head]) return false;
  }
  return true;
}

/// Calls f on every labeling in the capacity box.
inline void for_each_in_box(const std::vector<std::int64_t>& lo, const std::vector<std::int64_t>& hi,
                            const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> x = lo;
  const std::size_t m = lo.size();
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < m && x[i] == hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i == m) return;
    ++x[i];
  }
}

/// Every bond of the system by exhaustive search over the capacity box.
inline std::set<std::vector<std::int64_t>> brute_force_bonds(const DeltaBondSystem& sys) {
  std::set<std::vector<std::int64_t>> out;
  for_each_in_box(sys.lower(), sys.upper(), [&](const std::vector<std::int64_t>& x) {
    if (same_cycle_sums(sys.graph(), x, sys.reference().values)) out.insert(x);
  });
  return out;
}

struct RandomSystemOptions {
  std::size_t max_vertices = 5;
  std::size_t max_arcs = 8;
  std::int64_t min_cap = -2;
  std::int64_t max_cap = 2;
  bool feasible_reference = true;
};

/// Random connected multigraph (spanning tree plus extra arcs, loops and
/// parallels allowed) with random capacity windows. The reference is a
/// random point of the box when feasible_reference is set, otherwise a
/// random labeling that may lie outside it.
inline DeltaBondSystem random_system(std::mt19937& rng, const RandomSystemOptions& opt = {}) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const std::size_t n = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(opt.max_vertices)));
  const std::size_t min_arcs = n - 1;
  const std::size_t m = static_cast<std::size_t>(
      pick(static_cast<std::int64_t>(min_arcs), static_cast<std::int64_t>(std::max(min_arcs, opt.max_arcs))));
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t v = 1; v < n; ++v) {
    auto u = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(v) - 1));
    if (pick(0, 1)) arcs.emplace_back(u, v);
    else arcs.emplace_back(v, u);
  }
  while (arcs.size() < m) {
    arcs.emplace_back(pick(0, static_cast<std::int64_t>(n) - 1), pick(0, static_cast<std::int64_t>(n) - 1));
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  Multigraph g = Multigraph::from_indices(n, arcs);
  std::vector<std::int64_t> lo(m), hi(m), ref(m);
  for (std::size_t a = 0; a < m; ++a) {
    std::int64_t p = pick(opt.min_cap, opt.max_cap), q = pick(opt.min_cap, opt.max_cap);
    lo[a] = std::min(p, q);
    hi[a] = std::max(p, q);
    ref[a] = opt.feasible_reference ? pick(lo[a], hi[a]) : pick(opt.min_cap - 2, opt.max_cap + 2);
  }
  auto forbidden = static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(n) - 1));
  return DeltaBondSystem(std::move(g), std::move(lo), std::move(hi), Bond{std::move(ref)}, forbidden);
}


// ---------------------------------------------------------------- orders

using Relation = std::vector<std::vector<bool>>;
using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

/// Reflexive-transitive closure of arcs by repeated DFS.
inline Relation closure(std::size_t n, const Pairs& arcs) {
  Relation r(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    r[s][s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto [a, b] : arcs)
        if (a == v && !r[s][b]) {
          r[s][b] = true;
          stack.push_back(b);
        }
    }
  }
  return r;
}

/// Greatest element of the common lower bounds of `set`, if any.
inline std::optional<std::size_t> glb(const Relation& r, const std::vector<std::size_t>& set) {
  const std::size_t n = r.size();
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < n; ++z)
    if (std::all_of(set.begin(), set.end(), [&](std::size_t a) { return r[z][a]; })) lower.push_back(z);
  for (std::size_t z : lower)
    if (std::all_of(lower.begin(), lower.end(), [&](std::size_t w) { return r[w][z]; })) return z;
  return std::nullopt;
}

inline std::optional<std::size_t> lub(const Relation& r, const std::vector<std::size_t>& set) {
  const std::size_t n = r.size();
  Relation t(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = r[b][a];
  return glb(t, set);
}

/// Elements with exactly one upper cover, from the matrix alone.
inline std::vector<std::size_t> one_upper_cover(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t covers = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !r[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < n; ++c) between = between || (c != a && c != b && r[a][c] && r[c][b]);
      covers += between ? 0 : 1;
    }
    if (covers == 1) out.push_back(a);
  }
  return out;
}

/// Every element has exactly one inclusion-minimal set of meet-irreducibles
/// whose greatest lower bound it is. Scans all subsets.
inline bool unique_minimal_meet_sets(const Relation& r) {
  auto mi = one_upper_cover(r);
  const std::size_t k = mi.size();
  std::vector<std::vector<std::uint32_t>> reps(r.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::size_t> set;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1u) set.push_back(mi[i]);
    if (auto g = glb(r, set)) reps[*g].push_back(mask);
  }
  for (const auto& masks : reps) {
    std::size_t minimal = 0;
    for (auto m : masks)
      if (std::none_of(masks.begin(), masks.end(), [&](std::uint32_t o) { return o != m && (o & m) == o; })) ++minimal;
    if (minimal != 1) return false;
  }
  return true;
}

inline bool is_lattice(const Relation& r) {
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b)
      if (!glb(r, {a, b}) || !lub(r, {a, b})) return false;
  return !r.empty();
}

/// Hasse diagrams used across suites. Element 0 is the bottom where one exists.
inline Pairs chain(std::size_t n) {
  Pairs p;
  for (std::size_t i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
  return p;
}
inline Pairs boolean_square() { return {{0, 1}, {0, 2}, {1, 3}, {2, 3}}; }
inline Pairs m3() { return {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}; }
/// 0 < 1 < 2 < 4 and 0 < 3 < 4
inline Pairs n5() { return {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}; }

}  // namespace fixtures
