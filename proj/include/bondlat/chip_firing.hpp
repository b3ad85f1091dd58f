#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "bondlat/colored_digraph.hpp"
#include "bondlat/graph.hpp"
#include "bondlat/poset.hpp"
#include "bondlat/uld.hpp"

namespace bondlat {

/// Chips per vertex, indexed like the graph's vertices.
struct ChipArrangement {
  std::vector<std::int64_t> chips;

  std::int64_t total() const;

  friend auto operator<=>(const ChipArrangement&, const ChipArrangement&) = default;
};

/// A vertex fires only if it has an out-arc and at least outdeg chips.
/// Loops count towards outdeg and hand their chip straight back.
bool can_fire(const Multigraph& d, const ChipArrangement& s, VertexIndex v);
ChipArrangement fire(const Multigraph& d, const ChipArrangement& s, VertexIndex v);  // throws InputError

/// Inverse of fire: v pulls one chip back along each out-arc. Legal when v
/// has an out-arc, every other out-neighbor w holds at least as many chips
/// as there are arcs v->w, and v holds at least its loop count.
bool can_co_fire(const Multigraph& d, const ChipArrangement& s, VertexIndex v);
ChipArrangement co_fire(const Multigraph& d, const ChipArrangement& s, VertexIndex v);  // throws InputError

/// fire(from, vertex) == to.
struct GameMove {
  std::size_t from = 0;
  std::size_t to = 0;
  VertexIndex vertex = 0;

  friend auto operator<=>(const GameMove&, const GameMove&) = default;
};

enum class GameVerdict { finite, infinite, cap_exceeded };
const char* verdict_name(GameVerdict v);

inline constexpr std::size_t default_state_cap = 100'000;

/// State space of a game; state 0 is the initial arrangement. States are in
/// discovery order, moves sorted.
struct GameGraph {
  std::vector<ChipArrangement> states;
  std::vector<GameMove> moves;
  GameVerdict verdict = GameVerdict::finite;
  std::vector<std::size_t> cycle;  // state cycle witnessing `infinite`

  /// Colors are the fired vertices.
  ColoredDigraph colored() const;
};

/// Every arrangement reachable by firing. Never throws on big games: more
/// than `cap` states gives the cap_exceeded verdict with what was found.
GameGraph build_cfg(const Multigraph& d, const ChipArrangement& initial, std::size_t cap = default_state_cap);

struct GameCertificate {
  CoverCertificate cover;
  std::optional<std::size_t> terminal;  // the unique state nobody can leave
  /// Per state, the vertex counts of the firing sequences to the end.
  std::vector<std::vector<std::int64_t>> firing_counts;
  /// First state with two maximal firing sequences of different multisets.
  std::optional<std::size_t> multiset_conflict;

  bool ok() const { return cover.ok() && terminal && !multiset_conflict; }
};

/// Throws InputError unless the game graph is finite.
GameCertificate certify_game(const Multigraph& d, const GameGraph& g);

/// Closure of the initial arrangement under fire and co-fire. Moves are
/// always stored in the firing direction.
struct CompleteGame {
  GameGraph graph;  // verdict is finite or cap_exceeded; cycles are not checked
  bool complete = true;  // false when the cap or the radius stopped exploration
};

/// `radius` bounds the number of moves from the initial arrangement.
CompleteGame build_ccfg(const Multigraph& d, const ChipArrangement& initial, std::size_t cap = default_state_cap,
                        std::optional<std::size_t> radius = std::nullopt);

/// The order of a fully explored, acyclic complete game (x <= y when y is
/// reached from x by firing). Throws InputError otherwise.
FinitePoset ccfg_order(const CompleteGame& g);

/// Unique minimal meet representations on the complete game's order.
RepresentationReport check_ccfg_unique_minimal_rep(const CompleteGame& g);

}  // namespace bondlat
