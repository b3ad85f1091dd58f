#include "doctest.h"
#include "fixtures.hpp"

#include "bondlat/chip_firing.hpp"
#include "bondlat/error.hpp"

using namespace bondlat;

namespace {

using Values = std::vector<std::int64_t>;
using Edges = std::vector<std::pair<VertexIndex, VertexIndex>>;

Multigraph digraph(std::size_t n, const Edges& arcs) { return Multigraph::from_indices(n, arcs); }

ChipArrangement chips(Values v) { return ChipArrangement{std::move(v)}; }

// Plays the game directly on an arc list, independent of the library.
struct Player {
  std::size_t n;
  Edges arcs;

  std::optional<Values> fire(const Values& s, VertexIndex v) const {
    std::int64_t outdeg = 0;
    for (auto [t, h] : arcs) outdeg += t == v;
    if (outdeg == 0 || s[v] < outdeg) return std::nullopt;
    Values r = s;
    for (auto [t, h] : arcs)
      if (t == v) {
        --r[v];
        ++r[h];
      }
    return r;
  }

  // True if some firing sequence from s revisits a state.
  bool cycles(const Values& s, std::set<Values>& on_path, std::set<Values>& done) const {
    if (done.contains(s)) return false;
    if (!on_path.insert(s).second) return true;
    for (VertexIndex v = 0; v < n; ++v)
      if (auto t = fire(s, v); t && cycles(*t, on_path, done)) return true;
    on_path.erase(s);
    done.insert(s);
    return false;
  }

  // Every maximal firing sequence from s: end state and vertex counts.
  void play(const Values& s, Values& counts, std::set<std::pair<Values, Values>>& ends, std::set<Values>& seen) const {
    seen.insert(s);
    bool moved = false;
    for (VertexIndex v = 0; v < n; ++v) {
      auto t = fire(s, v);
      if (!t) continue;
      moved = true;
      ++counts[v];
      play(*t, counts, ends, seen);
      --counts[v];
    }
    if (!moved) ends.insert({s, counts});
  }
};

Edges random_arcs(std::mt19937& rng, std::size_t n, std::size_t max_arcs) {
  Edges arcs;
  std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_arcs)(rng);
  for (std::size_t i = 0; i < m; ++i)
    arcs.emplace_back(std::uniform_int_distribution<VertexIndex>(0, n - 1)(rng),
                      std::uniform_int_distribution<VertexIndex>(0, n - 1)(rng));
  return arcs;
}

Values random_chips(std::mt19937& rng, std::size_t n, std::int64_t max_total) {
  Values s(n, 0);
  std::int64_t total = std::uniform_int_distribution<std::int64_t>(0, max_total)(rng);
  for (std::int64_t i = 0; i < total; ++i) ++s[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
  return s;
}

}  // namespace

TEST_CASE("fire") {
  Multigraph d = digraph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(fire(d, chips({2, 0, 0}), 0).chips == Values{0, 1, 1});
  CHECK_THROWS_AS(fire(d, chips({1, 0, 0}), 0), InputError);
  CHECK_THROWS_WITH_AS(fire(d, chips({0, 0, 5}), 2), doctest::Contains("no out-arcs"), InputError);
  SUBCASE("loop-only vertex") {
    Multigraph loop = digraph(1, {{0, 0}});
    CHECK(fire(loop, chips({1}), 0).chips == Values{1});
    CHECK_THROWS_AS(fire(loop, chips({0}), 0), InputError);
  }
}

TEST_CASE("co-fire") {
  Multigraph diamond = digraph(3, {{0, 2}, {1, 2}});
  CHECK(can_co_fire(diamond, chips({0, 1, 1}), 0));
  CHECK(co_fire(diamond, chips({0, 1, 1}), 0).chips == Values{1, 1, 0});
  CHECK(!can_co_fire(diamond, chips({0, 1, 1}), 2));  // no out-arcs
  CHECK(!can_co_fire(diamond, chips({0, 1, 0}), 0));
  SUBCASE("parallel arcs need one chip each") {
    Multigraph twice = digraph(2, {{0, 1}, {0, 1}});
    CHECK(!can_co_fire(twice, chips({0, 1}), 0));
    CHECK(co_fire(twice, chips({0, 2}), 0).chips == Values{2, 0});
  }
  SUBCASE("loops need their chip back") {
    Multigraph looped = digraph(2, {{0, 0}, {0, 1}});
    CHECK(!can_co_fire(looped, chips({0, 1}), 0));
    CHECK(co_fire(looped, chips({1, 1}), 0).chips == Values{2, 0});
  }
}

TEST_CASE("build_cfg") {
  SUBCASE("three-state chain") {
    Multigraph d = digraph(3, {{0, 1}, {0, 2}, {1, 2}});
    GameGraph g = build_cfg(d, chips({2, 0, 0}));
    CHECK(g.verdict == GameVerdict::finite);
    REQUIRE(g.states.size() == 3);
    CHECK(g.states[1].chips == Values{0, 1, 1});
    CHECK(g.states[2].chips == Values{0, 0, 2});
    CHECK(g.moves == std::vector<GameMove>{{0, 1, 0}, {1, 2, 1}});
    auto cert = certify_game(d, g);
    CHECK(cert.ok());
    CHECK(cert.terminal == 2u);
    CHECK(cert.firing_counts[0] == Values{1, 1, 0});
    CHECK(cert.firing_counts[1] == Values{0, 1, 0});
  }
  SUBCASE("two-cycle is infinite") {
    GameGraph g = build_cfg(digraph(2, {{0, 1}, {1, 0}}), chips({1, 0}));
    CHECK(g.verdict == GameVerdict::infinite);
    CHECK(g.states.size() == 2);
    CHECK(g.cycle.size() == 2);
    CHECK_THROWS_AS(certify_game(digraph(2, {{0, 1}, {1, 0}}), g), InputError);
  }
  SUBCASE("nothing fires") {
    Multigraph d = digraph(2, {{0, 1}});
    GameGraph g = build_cfg(d, chips({0, 3}));
    CHECK(g.verdict == GameVerdict::finite);
    CHECK(g.states.size() == 1);
    CHECK(certify_game(d, g).ok());
  }
  SUBCASE("diamond") {
    Multigraph d = digraph(3, {{0, 2}, {1, 2}});
    GameGraph g = build_cfg(d, chips({1, 1, 0}));
    std::set<Values> states;
    for (const auto& s : g.states) states.insert(s.chips);
    CHECK(states == std::set<Values>{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}, {0, 0, 2}});
    auto cert = certify_game(d, g);
    CHECK(cert.ok());
    CHECK(cert.firing_counts[0] == Values{1, 1, 0});
  }
  SUBCASE("loop fires forever") {
    GameGraph g = build_cfg(digraph(1, {{0, 0}}), chips({1}));
    CHECK(g.verdict == GameVerdict::infinite);
    CHECK(g.cycle == std::vector<std::size_t>{0});
  }
  SUBCASE("cap") {
    Multigraph d = digraph(3, {{0, 1}, {0, 2}, {1, 2}});
    GameGraph g = build_cfg(d, chips({2, 0, 0}), 2);
    CHECK(g.verdict == GameVerdict::cap_exceeded);
    CHECK(g.states.size() == 2);
  }
  SUBCASE("bad input") {
    CHECK_THROWS_AS(build_cfg(digraph(2, {{0, 1}}), chips({1})), InputError);
    CHECK_THROWS_AS(build_cfg(digraph(2, {{0, 1}}), chips({-1, 0})), InputError);
  }
}

TEST_CASE("property: finite games against exhaustive play") {
  std::mt19937 rng(59);
  int finite = 0, infinite = 0;
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    Edges arcs = random_arcs(rng, n, 6);
    Values s0 = random_chips(rng, n, 6);
    Multigraph d = digraph(n, arcs);
    GameGraph g = build_cfg(d, chips(s0));
    REQUIRE(g.verdict != GameVerdict::cap_exceeded);

    Player p{n, arcs};
    std::set<Values> on_path, done;
    bool terminated = !p.cycles(s0, on_path, done);
    std::set<Values> states;
    for (const auto& s : g.states) states.insert(s.chips);
    for (const auto& s : g.states) CHECK(s.total() == std::accumulate(s0.begin(), s0.end(), std::int64_t{0}));

    if (g.verdict == GameVerdict::infinite) {
      ++infinite;
      CHECK(!terminated);
      // The cycle is a real cycle of moves.
      auto cd = g.colored();
      for (std::size_t i = 0; i < g.cycle.size(); ++i) {
        std::size_t a = g.cycle[i], b = g.cycle[(i + 1) % g.cycle.size()];
        CHECK(std::ranges::any_of(cd.arcs, [&](const ColoredArc& arc) { return arc.tail == a && arc.head == b; }));
      }
      continue;
    }
    ++finite;
    REQUIRE(terminated);
    std::set<std::pair<Values, Values>> ends;
    std::set<Values> seen;
    Values counts(n, 0);
    p.play(s0, counts, ends, seen);
    CHECK(states == seen);
    // Unique end state and one multiset along every maximal sequence.
    CHECK(ends.size() == 1);
    auto cert = certify_game(d, g);
    CHECK(cert.cover.ok());
    CHECK(cert.ok());
    REQUIRE(cert.terminal);
    CHECK(g.states[*cert.terminal].chips == ends.begin()->first);
    CHECK(cert.firing_counts[0] == ends.begin()->second);
    // Every state's moves agree with direct play.
    for (const GameMove& m : g.moves) CHECK(p.fire(g.states[m.from].chips, m.vertex) == g.states[m.to].chips);
    // The colored order is a ULD lattice.
    REQUIRE(cert.cover.order);
    CHECK(brute_uld(*cert.cover.order).is_uld());
  }
  CHECK(finite >= 100);
  CHECK(infinite > 0);
}

TEST_CASE("complete games") {
  SUBCASE("diamond from the middle") {
    Multigraph d = digraph(3, {{0, 2}, {1, 2}});
    CompleteGame g = build_ccfg(d, chips({0, 1, 1}));
    CHECK(g.complete);
    std::set<Values> states;
    for (const auto& s : g.graph.states) states.insert(s.chips);
    CHECK(states.contains(Values{1, 1, 0}));
    CHECK(states.contains(Values{0, 0, 2}));
    CHECK(check_ccfg_unique_minimal_rep(g).holds());
  }
  SUBCASE("no arcs") {
    CompleteGame g = build_ccfg(digraph(2, {}), chips({0, 0}));
    CHECK(g.graph.states.size() == 1);
    CHECK(g.graph.moves.empty());
  }
  SUBCASE("radius stops exploration") {
    Multigraph d = digraph(3, {{0, 1}, {0, 2}, {1, 2}});
    CompleteGame g = build_ccfg(d, chips({0, 1, 1}), default_state_cap, 0);
    CHECK(!g.complete);
    CHECK_THROWS_WITH_AS(check_ccfg_unique_minimal_rep(g), doctest::Contains("not fully explored"), InputError);
    CHECK(build_ccfg(d, chips({0, 1, 1}), default_state_cap, 5).complete);
  }
  SUBCASE("cyclic complete game") {
    CompleteGame g = build_ccfg(digraph(2, {{0, 1}, {1, 0}}), chips({1, 0}));
    CHECK(g.complete);
    CHECK_THROWS_WITH_AS(check_ccfg_unique_minimal_rep(g), doctest::Contains("cycle"), InputError);
  }
}

TEST_CASE("property: complete games") {
  std::mt19937 rng(61);
  int checked = 0, lattices = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    Edges arcs = random_arcs(rng, n, 5);
    Values s0 = random_chips(rng, n, 5);
    Multigraph d = digraph(n, arcs);
    CompleteGame c = build_ccfg(d, chips(s0));
    REQUIRE(c.complete);
    const GameGraph& g = c.graph;

    std::map<Values, std::size_t> index;
    for (std::size_t i = 0; i < g.states.size(); ++i) index[g.states[i].chips] = i;
    for (const auto& s : g.states) {
      for (VertexIndex v = 0; v < n; ++v) {
        // co-fire undoes fire and the other way round.
        if (can_co_fire(d, s, v)) {
          auto t = co_fire(d, s, v);
          CHECK(can_fire(d, t, v));
          CHECK(fire(d, t, v) == s);
          CHECK(index.contains(t.chips));
        }
        if (can_fire(d, s, v)) {
          auto t = fire(d, s, v);
          CHECK(can_co_fire(d, t, v));
          CHECK(co_fire(d, t, v) == s);
        }
      }
    }

    GameGraph forward = build_cfg(d, chips(s0));
    if (forward.verdict != GameVerdict::finite) continue;
    bool acyclic = find_directed_cycle(g.colored()).empty();
    if (!acyclic) continue;
    // The forward game is the up-set of the initial state.
    FinitePoset order = ccfg_order(c);
    std::set<Values> up, reached;
    for (std::size_t i = 0; i < g.states.size(); ++i)
      if (order.leq(0, i)) up.insert(g.states[i].chips);
    for (const auto& s : forward.states) reached.insert(s.chips);
    CHECK(up == reached);

    auto report = check_ccfg_unique_minimal_rep(c);
    CHECK(report.holds());
    if (report.meet_irreducibles.size() <= 12)
      CHECK(report.holds() == fixtures::unique_minimal_meet_sets(order.relation()));
    if (fixtures::is_lattice(order.relation())) {
      ++lattices;
      CHECK(brute_uld(order).is_uld() == report.holds());
    }
    ++checked;
  }
  CHECK(checked > 50);
  CHECK(lattices > 0);
}
