#include "bondlat/chip_firing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "bondlat/error.hpp"

namespace bondlat {

std::int64_t ChipArrangement::total() const { return std::accumulate(chips.begin(), chips.end(), std::int64_t{0}); }

namespace {

void check_vertex(const Multigraph& d, const ChipArrangement& s, VertexIndex v) {
  if (s.chips.size() != d.vertex_count())
    throw InputError("chip arrangement has " + std::to_string(s.chips.size()) + " entries for " +
                     std::to_string(d.vertex_count()) + " vertices");
  if (v >= d.vertex_count()) throw InputError("vertex index " + std::to_string(v) + " out of range");
}

}  // namespace

bool can_fire(const Multigraph& d, const ChipArrangement& s, VertexIndex v) {
  auto outdeg = static_cast<std::int64_t>(d.out_arcs(v).size());
  return outdeg > 0 && s.chips[v] >= outdeg;
}

ChipArrangement fire(const Multigraph& d, const ChipArrangement& s, VertexIndex v) {
  check_vertex(d, s, v);
  if (d.out_arcs(v).empty()) throw InputError("vertex '" + d.vertex_id(v).str() + "' has no out-arcs and cannot fire");
  if (!can_fire(d, s, v))
    throw InputError("vertex '" + d.vertex_id(v).str() + "' holds " + std::to_string(s.chips[v]) + " chips but has " +
                     std::to_string(d.out_arcs(v).size()) + " out-arcs");
  ChipArrangement t = s;
  for (ArcIndex a : d.out_arcs(v)) {
    --t.chips[v];
    ++t.chips[d.arc(a).head];
  }
  return t;
}

bool can_co_fire(const Multigraph& d, const ChipArrangement& s, VertexIndex v) {
  if (d.out_arcs(v).empty()) return false;
  std::map<VertexIndex, std::int64_t> need;
  for (ArcIndex a : d.out_arcs(v)) ++need[d.arc(a).head];
  return std::ranges::all_of(need, [&](const auto& e) { return s.chips[e.first] >= e.second; });
}

ChipArrangement co_fire(const Multigraph& d, const ChipArrangement& s, VertexIndex v) {
  check_vertex(d, s, v);
  if (!can_co_fire(d, s, v)) throw InputError("vertex '" + d.vertex_id(v).str() + "' cannot co-fire");
  ChipArrangement t = s;
  for (ArcIndex a : d.out_arcs(v)) {
    ++t.chips[v];
    --t.chips[d.arc(a).head];
  }
  return t;
}

const char* verdict_name(GameVerdict v) {
  switch (v) {
    case GameVerdict::finite: return "finite";
    case GameVerdict::infinite: return "infinite";
    case GameVerdict::cap_exceeded: return "cap exceeded";
  }
  return "?";
}

ColoredDigraph GameGraph::colored() const {
  ColoredDigraph d{states.size(), {}};
  for (const GameMove& m : moves) d.arcs.push_back({m.from, m.to, m.vertex});
  return d;
}

namespace {

void check_arrangement(const Multigraph& d, const ChipArrangement& s) {
  if (s.chips.size() != d.vertex_count())
    throw InputError("chip arrangement has " + std::to_string(s.chips.size()) + " entries for " +
                     std::to_string(d.vertex_count()) + " vertices");
  for (VertexIndex v = 0; v < s.chips.size(); ++v)
    if (s.chips[v] < 0) throw InputError("vertex '" + d.vertex_id(v).str() + "' has a negative chip count");
}

// BFS over states; `backward` adds co-fire moves. Returns false if stopped early.
bool explore(const Multigraph& d, const ChipArrangement& initial, std::size_t cap, std::optional<std::size_t> radius,
             bool backward, GameGraph& g) {
  std::map<ChipArrangement, std::size_t> index{{initial, 0}};
  std::vector<std::size_t> depth{0};
  std::set<GameMove> moves;
  g.states = {initial};
  bool stopped = false;
  auto visit = [&](const ChipArrangement& t, std::size_t from_depth) -> std::optional<std::size_t> {
    if (auto it = index.find(t); it != index.end()) return it->second;
    if (g.states.size() >= cap) {
      g.verdict = GameVerdict::cap_exceeded;
      stopped = true;
      return std::nullopt;
    }
    index.emplace(t, g.states.size());
    g.states.push_back(t);
    depth.push_back(from_depth + 1);
    return g.states.size() - 1;
  };
  for (std::size_t i = 0; i < g.states.size() && !stopped; ++i) {
    if (radius && depth[i] >= *radius) {
      // Anything still movable from here is beyond the radius.
      for (VertexIndex v = 0; v < d.vertex_count(); ++v) {
        if (can_fire(d, g.states[i], v) && !index.contains(fire(d, g.states[i], v))) stopped = true;
        if (backward && can_co_fire(d, g.states[i], v) && !index.contains(co_fire(d, g.states[i], v))) stopped = true;
      }
      if (stopped) break;
      continue;
    }
    for (VertexIndex v = 0; v < d.vertex_count() && !stopped; ++v) {
      if (can_fire(d, g.states[i], v)) {
        if (auto j = visit(fire(d, g.states[i], v), depth[i])) moves.insert({i, *j, v});
      }
      if (backward && can_co_fire(d, g.states[i], v)) {
        if (auto j = visit(co_fire(d, g.states[i], v), depth[i])) moves.insert({*j, i, v});
      }
    }
  }
  g.moves.assign(moves.begin(), moves.end());
  return !stopped;
}

}  // namespace

GameGraph build_cfg(const Multigraph& d, const ChipArrangement& initial, std::size_t cap) {
  check_arrangement(d, initial);
  GameGraph g;
  if (!explore(d, initial, cap, std::nullopt, false, g)) return g;
  g.cycle = find_directed_cycle(g.colored());
  g.verdict = g.cycle.empty() ? GameVerdict::finite : GameVerdict::infinite;
  return g;
}

GameCertificate certify_game(const Multigraph& d, const GameGraph& g) {
  if (g.verdict != GameVerdict::finite)
    throw InputError(std::string("only finite games can be certified; this one is ") + verdict_name(g.verdict));
  GameCertificate cert;
  ColoredDigraph cd = g.colored();
  cert.cover = certify_uld_cover(cd);

  auto out = cd.out_arcs();
  std::vector<std::size_t> sinks;
  for (std::size_t s = 0; s < g.states.size(); ++s)
    if (out[s].empty()) sinks.push_back(s);
  if (sinks.size() == 1) cert.terminal = sinks.front();

  // Every maximal sequence from s fires the same multiset iff the moves out
  // of s agree after adding the fired vertex, given they agree further down.
  auto order = topological_order(cd);
  if (!order) throw InputError("game graph marked finite has a cycle");
  cert.firing_counts.assign(g.states.size(), std::vector<std::int64_t>(d.vertex_count(), 0));
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    std::size_t s = *it;
    bool first = true;
    for (std::size_t a : out[s]) {
      const ColoredArc& arc = cd.arcs[a];
      auto counts = cert.firing_counts[arc.head];
      ++counts[arc.color];
      if (first) {
        cert.firing_counts[s] = std::move(counts);
        first = false;
      } else if (counts != cert.firing_counts[s] && !cert.multiset_conflict) {
        cert.multiset_conflict = s;
      }
    }
  }
  return cert;
}

CompleteGame build_ccfg(const Multigraph& d, const ChipArrangement& initial, std::size_t cap,
                        std::optional<std::size_t> radius) {
  check_arrangement(d, initial);
  CompleteGame g;
  g.complete = explore(d, initial, cap, radius, true, g.graph);
  return g;
}

FinitePoset ccfg_order(const CompleteGame& g) {
  if (!g.complete) throw InputError("the complete game was not fully explored; raise the cap or drop the radius");
  if (!find_directed_cycle(g.graph.colored()).empty())
    throw InputError("the complete game has a cycle of moves and is not a poset");
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const GameMove& m : g.graph.moves) arcs.emplace_back(m.from, m.to);
  return FinitePoset::from_arcs(g.graph.states.size(), arcs);
}

RepresentationReport check_ccfg_unique_minimal_rep(const CompleteGame& g) {
  return unique_meet_representations(ccfg_order(g));
}

}  // namespace bondlat
