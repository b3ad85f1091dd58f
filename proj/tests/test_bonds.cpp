#include "doctest.h"
#include "fixtures.hpp"

#include "bondlat/bonds.hpp"
#include "bondlat/error.hpp"

using namespace bondlat;
using fixtures::aid;
using fixtures::vid;

namespace {

using Values = std::vector<std::int64_t>;

std::vector<VertexIndex> at(const DeltaBondSystem& sys, std::initializer_list<std::int64_t> names) {
  std::vector<VertexIndex> out;
  for (auto n : names) out.push_back(sys.graph().vertex_index(vid(n)));
  return out;
}

// Order by reachability under legal single-vertex pushes, computed directly
// from the bond set.
bool reachable_by_pushes(const DeltaBondSystem& sys, const std::set<Values>& bonds, const Values& from,
                         const Values& to) {
  std::set<Values> seen{from};
  std::vector<Values> stack{from};
  while (!stack.empty()) {
    Values x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (VertexIndex v = 0; v < sys.graph().vertex_count(); ++v) {
      if (v == sys.forbidden()) continue;
      Values y = x;
      bool ok = true;
      for (ArcIndex a : sys.graph().incident(v)) {
        const Arc& arc = sys.graph().arc(a);
        if (arc.is_loop()) continue;
        y[a] += arc.tail == v ? 1 : -1;
        if (y[a] < sys.lower()[a] || y[a] > sys.upper()[a]) ok = false;
      }
      if (ok && bonds.contains(y) && seen.insert(y).second) stack.push_back(y);
    }
  }
  return false;
}

}  // namespace

TEST_CASE("flow difference") {
  Multigraph g = fixtures::triangle();
  auto cycles = fundamental_cycles(g, spanning_tree(g));
  CHECK(flow_difference(Bond{{1, 0, 0}}, cycles[0]) == 1);
  CHECK(flow_difference(Bond{{5, -3, 7}}, CycleVector{}) == 0);
  CycleVector parallel{{{1, +1}, {0, -1}}};
  CHECK(flow_difference(Bond{{1, 1}}, parallel) == 0);
  CHECK_THROWS_AS(flow_difference(Bond{{1}}, parallel), InputError);
}

TEST_CASE("system validation") {
  Multigraph g = fixtures::triangle();
  CHECK_THROWS_AS(DeltaBondSystem(g, {0, 2, 0}, {1, 1, 1}, Bond{{0, 0, 0}}, 0), InputError);
  CHECK_THROWS_AS(DeltaBondSystem(g, {0, 0}, {1, 1, 1}, Bond{{0, 0, 0}}, 0), InputError);
  CHECK_THROWS_AS(DeltaBondSystem(g, {0, 0, 0}, {1, 1, 1}, Bond{{0, 0, 0}}, 3), InputError);
  Multigraph split({vid(1), vid(2)}, {});
  CHECK_THROWS_AS(DeltaBondSystem(split, {}, {}, Bond{}, 0), InputError);
}

TEST_CASE("bond certification") {
  auto sys = fixtures::triangle_system(0, 1, {1, 0, 0});
  CHECK(is_delta_bond(sys, Bond{{0, 0, 1}}).valid());
  auto r = is_delta_bond(sys, Bond{{1, 1, 1}});
  CHECK(!r.valid());
  REQUIRE(r.cycles.size() == 1);
  CHECK(r.cycles[0].expected == 1);
  CHECK(r.cycles[0].actual == 3);
  CHECK(r.capacity.empty());
  r = is_delta_bond(sys, Bond{{2, 0, -1}});
  CHECK(r.capacity.size() == 2);
}

TEST_CASE("reference from cycle targets") {
  Multigraph g = fixtures::triangle();
  Bond ref = reference_from_cycle_targets(g, {{g.arc_index(aid("a3")), 4}});
  CHECK(ref.values == Values{0, 0, 4});
  CHECK(reference_from_cycle_targets(g, {}).values == Values{0, 0, 0});
  CHECK_THROWS_AS(reference_from_cycle_targets(g, {{0, 1}}), InputError);
}

TEST_CASE("initial bond") {
  SUBCASE("reference already feasible") {
    auto sys = fixtures::triangle_system(0, 1, {1, 0, 0});
    auto res = find_initial_bond(sys);
    REQUIRE(std::holds_alternative<Bond>(res));
    CHECK(is_delta_bond(sys, std::get<Bond>(res)).valid());
  }
  SUBCASE("target beyond the box") {
    auto sys = fixtures::triangle_system(0, 1, {4, 0, 0});
    auto res = find_initial_bond(sys);
    REQUIRE(std::holds_alternative<Infeasibility>(res));
    const auto& cert = std::get<Infeasibility>(res);
    CHECK(cert.target == 4);
    CHECK(cert.window_min == 0);
    CHECK(cert.window_max == 3);
    CHECK(cert.cycle.length() == 3);
    CHECK_THROWS_AS(require_initial_bond(sys), InfeasibleError);
  }
  SUBCASE("forced capacities") {
    auto sys = fixtures::triangle_system(0, 1, {1, 0, 0});
    DeltaBondSystem fixed(sys.graph(), {1, 0, 0}, {1, 0, 0}, Bond{{1, 0, 0}}, 0);
    CHECK(require_initial_bond(fixed).values == Values{1, 0, 0});
  }
  SUBCASE("loop outside its window") {
    Multigraph g({vid(1)}, {{aid("l"), vid(1), vid(1)}});
    DeltaBondSystem sys(g, {0}, {1}, Bond{{2}}, 0);
    auto res = find_initial_bond(sys);
    REQUIRE(std::holds_alternative<Infeasibility>(res));
    CHECK(std::get<Infeasibility>(res).target == 2);
  }
}

TEST_CASE("property: feasibility agrees with brute force") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    auto sys = fixtures::random_system(rng, {4, 6, -1, 2, false});
    auto bonds = fixtures::brute_force_bonds(sys);
    auto res = find_initial_bond(sys);
    if (bonds.empty()) {
      REQUIRE(std::holds_alternative<Infeasibility>(res));
      const auto& cert = std::get<Infeasibility>(res);
      // The certificate must be checkable on its own.
      std::int64_t lo = 0, hi = 0;
      for (const auto& s : cert.cycle.steps) {
        lo += s.direction > 0 ? sys.lower()[s.arc] : -sys.upper()[s.arc];
        hi += s.direction > 0 ? sys.upper()[s.arc] : -sys.lower()[s.arc];
      }
      CHECK(cert.window_min == lo);
      CHECK(cert.window_max == hi);
      CHECK(cert.target == flow_difference(sys.reference(), cert.cycle));
      CHECK((cert.target < lo || cert.target > hi));
    } else {
      REQUIRE(std::holds_alternative<Bond>(res));
      CHECK(bonds.contains(std::get<Bond>(res).values));
      auto ranges = arc_value_ranges(sys);
      for (ArcIndex a = 0; a < sys.graph().arc_count(); ++a) {
        std::int64_t lo = INT64_MAX, hi = INT64_MIN;
        for (const auto& x : bonds) {
          lo = std::min(lo, x[a]);
          hi = std::max(hi, x[a]);
        }
        CHECK(ranges[a] == std::pair{lo, hi});
      }
    }
  }
}

TEST_CASE("arc value ranges") {
  auto one = fixtures::triangle_system(0, 1, {1, 0, 0});
  for (ArcIndex a = 0; a < 3; ++a) CHECK(arc_value_range(one, a) == std::pair<std::int64_t, std::int64_t>{0, 1});
  auto three = fixtures::triangle_system(0, 1, {1, 1, 1});
  for (ArcIndex a = 0; a < 3; ++a) CHECK(arc_value_range(three, a) == std::pair<std::int64_t, std::int64_t>{1, 1});
  Multigraph path({vid(1), vid(2)}, {{aid("a"), vid(1), vid(2)}});
  DeltaBondSystem tree(path, {0}, {2}, Bond{{0}}, 0);
  CHECK(arc_value_range(tree, 0) == std::pair<std::int64_t, std::int64_t>{0, 2});
  CHECK_THROWS_AS(arc_value_ranges(fixtures::triangle_system(0, 1, {4, 0, 0})), InfeasibleError);
}

TEST_CASE("reduce") {
  SUBCASE("all rigid") {
    auto red = reduce(fixtures::triangle_system(0, 1, {1, 1, 1}));
    CHECK(red.system.graph().vertex_count() == 1);
    CHECK(red.system.graph().arc_count() == 0);
    CHECK(red.map.expand(Bond{}).values == Values{1, 1, 1});
  }
  SUBCASE("nothing rigid") {
    auto sys = fixtures::triangle_system(0, 1, {1, 0, 0});
    CHECK(is_reduced(sys));
    auto red = reduce(sys);
    CHECK(red.system.graph().arc_count() == 3);
    CHECK(red.system.graph().vertex_count() == 3);
  }
  SUBCASE("forced capacities") {
    Multigraph g = fixtures::triangle();
    DeltaBondSystem sys(g, {1, 0, 0}, {1, 0, 0}, Bond{{1, 0, 0}}, 1);
    auto red = reduce(sys);
    CHECK(red.system.graph().vertex_count() == 1);
    CHECK(red.map.expand(Bond{}).values == Values{1, 0, 0});
    CHECK(red.map.vertex_class[1] == red.system.forbidden());
  }
  SUBCASE("partial contraction keeps the rest") {
    // Arc a3 is rigid (caps [1,1]); a1, a2 are free but tied by the cycle.
    Multigraph g = fixtures::triangle();
    DeltaBondSystem sys(g, {0, 0, 1}, {1, 1, 1}, Bond{{1, 0, 1}}, 0);
    auto red = reduce(sys);
    CHECK(is_reduced(red.system));
    CHECK(red.system.graph().arc_count() == 2);
    CHECK(red.system.graph().vertex_count() == 2);
    CHECK(!red.map.reduced_arc[2]);
    CHECK(red.map.forced_value[2] == 1);
  }
  SUBCASE("infeasible") {
    CHECK_THROWS_AS(reduce(fixtures::triangle_system(0, 1, {4, 0, 0})), InfeasibleError);
  }
}

TEST_CASE("property: reduction is a bijection on bonds") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto sys = fixtures::random_system(rng, {5, 7, -1, 2, true});
    auto bonds = fixtures::brute_force_bonds(sys);
    REQUIRE(!bonds.empty());
    auto red = reduce(sys);
    CHECK(is_reduced(red.system));
    for (const auto& r : arc_value_ranges(red.system)) CHECK(r.first < r.second);
    auto reduced_bonds = fixtures::brute_force_bonds(red.system);
    CHECK(reduced_bonds.size() == bonds.size());
    std::set<Values> expanded;
    for (const auto& y : reduced_bonds) {
      Bond x = red.map.expand(Bond{y});
      expanded.insert(x.values);
      CHECK(red.map.restrict(x).values == y);
    }
    CHECK(expanded == bonds);
  }
}

TEST_CASE("push") {
  auto sys = fixtures::triangle_system(0, 1, {1, 0, 0});
  Bond x{{1, 0, 0}};
  auto two = at(sys, {2});
  auto three = at(sys, {3});
  CHECK(push(sys, x, two).values == Values{0, 1, 0});
  CHECK(push(sys, x, std::span<const VertexIndex>{}).values == x.values);
  CHECK(push(sys, push(sys, x, two), three).values == Values{0, 0, 1});
  CHECK(push_down(sys, push(sys, x, two), two).values == x.values);
  CHECK_THROWS_AS(push(sys, x, at(sys, {1})), InputError);
}

TEST_CASE("push legality") {
  auto sys = fixtures::triangle_system(0, 1, {1, 0, 0});
  Bond x{{1, 0, 0}};
  CHECK(is_legal_push(sys, x, at(sys, {2})));
  CHECK(!is_legal_push(sys, x, at(sys, {3})));
  CHECK(!is_legal_push_down(sys, x, at(sys, {2})));
  CHECK(is_legal_vertex_push(sys, x, sys.graph().vertex_index(vid(2))));

  Multigraph g = fixtures::triangle();
  DeltaBondSystem fixed(g, {1, 0, 0}, {1, 0, 0}, Bond{{1, 0, 0}}, 0);
  for (std::uint32_t mask = 1; mask < 8; ++mask) {
    if (mask & 1u) continue;
    std::vector<bool> inside{false, (mask & 2u) != 0, (mask & 4u) != 0};
    CHECK(!is_legal_push(fixed, Bond{{1, 0, 0}}, inside));
  }
}

TEST_CASE("property: pushes keep cycle sums; legal pushes keep bonds") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto sys = fixtures::random_system(rng, {5, 7, -1, 2, true});
    auto bonds = fixtures::brute_force_bonds(sys);
    const std::size_t n = sys.graph().vertex_count();
    for (const auto& values : bonds) {
      Bond x{values};
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (mask >> sys.forbidden() & 1u) continue;
        std::vector<bool> inside(n);
        for (std::size_t v = 0; v < n; ++v) inside[v] = (mask >> v) & 1u;
        Bond y = push(sys, x, inside);
        for (const auto& c : sys.cycles()) CHECK(flow_difference(y, c) == flow_difference(x, c));
        if (is_legal_push(sys, x, inside)) CHECK(is_delta_bond(sys, y).valid());
        if (is_legal_push_down(sys, x, inside)) CHECK(is_delta_bond(sys, push_down(sys, x, inside)).valid());
      }
    }
  }
}

TEST_CASE("minimum and maximum") {
  CHECK(minimum_bond(fixtures::triangle_system(0, 1, {0, 1, 0})).values == Values{1, 0, 0});
  CHECK(maximum_bond(fixtures::triangle_system(0, 1, {0, 1, 0})).values == Values{0, 0, 1});
  CHECK(minimum_bond(fixtures::star_system()).values == Values{0, 0});
  CHECK(maximum_bond(fixtures::star_system()).values == Values{1, 1});
  Multigraph lone({vid(1)}, {});
  CHECK(minimum_bond(DeltaBondSystem(lone, {}, {}, Bond{}, 0)).values.empty());
  CHECK_THROWS_AS(minimum_bond(fixtures::triangle_system(0, 1, {1, 1, 1})), InputError);
}

TEST_CASE("property: minimum is the unique push-minimal bond") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    auto sys = reduce(fixtures::random_system(rng, {5, 7, -1, 2, true})).system;
    auto bonds = fixtures::brute_force_bonds(sys);
    // Independent minimum: the bond from which every other bond is reachable.
    std::vector<Values> sources;
    for (const auto& x : bonds) {
      bool all = std::all_of(bonds.begin(), bonds.end(),
                             [&](const Values& y) { return reachable_by_pushes(sys, bonds, x, y); });
      if (all) sources.push_back(x);
    }
    REQUIRE(sources.size() == 1);
    CHECK(minimum_bond(sys).values == sources[0]);
    // Any order of push-downs ends there.
    for (const auto& start : bonds) {
      Values x = start;
      std::vector<VertexIndex> order(sys.graph().vertex_count());
      std::iota(order.begin(), order.end(), VertexIndex{0});
      std::shuffle(order.begin(), order.end(), rng);
      for (bool moved = true; moved;) {
        moved = false;
        for (VertexIndex v : order) {
          if (v == sys.forbidden()) continue;
          std::vector<VertexIndex> one{v};
          if (is_legal_push_down(sys, Bond{x}, one)) {
            x = push_down(sys, Bond{x}, one).values;
            moved = true;
          }
        }
      }
      CHECK(x == sources[0]);
    }
  }
}

TEST_CASE("push counts and order") {
  auto sys = fixtures::triangle_system(0, 1, {1, 0, 0});
  BondLattice lat(sys);
  CHECK(lat.minimum().values == Values{1, 0, 0});
  CHECK(lat.push_count(Bond{{1, 0, 0}}).counts == Values{0, 0, 0});
  CHECK(lat.push_count(Bond{{0, 1, 0}}).counts == Values{0, 1, 0});
  CHECK(lat.push_count(Bond{{0, 0, 1}}).counts == Values{0, 1, 1});
  CHECK_THROWS_AS(lat.push_count(Bond{{1, 1, 1}}), InputError);
  CHECK(lat.leq(Bond{{1, 0, 0}}, Bond{{0, 0, 1}}));
  CHECK(lat.leq(Bond{{0, 1, 0}}, Bond{{0, 1, 0}}));
  CHECK(lat.join(Bond{{1, 0, 0}}, Bond{{0, 1, 0}}).values == Values{0, 1, 0});

  BondLattice star(fixtures::star_system());
  CHECK(!star.leq(Bond{{1, 0}}, Bond{{0, 1}}));
  CHECK(!star.leq(Bond{{0, 1}}, Bond{{1, 0}}));
  CHECK(star.meet(Bond{{1, 0}}, Bond{{0, 1}}).values == Values{0, 0});
  CHECK(star.join(Bond{{1, 0}}, Bond{{0, 1}}).values == Values{1, 1});
  CHECK(star.meet(Bond{{1, 0}}, Bond{{1, 0}}).values == Values{1, 0});
  CHECK(star.bond_from_push_count(PushCount{{0, 1, 1}}).values == Values{1, 1});
}

TEST_CASE("property: push-count order, meet and join match brute force") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    auto sys = reduce(fixtures::random_system(rng, {5, 7, -1, 2, true})).system;
    auto bond_set = fixtures::brute_force_bonds(sys);
    std::vector<Values> bonds(bond_set.begin(), bond_set.end());
    BondLattice lat(sys);
    const std::size_t k = bonds.size();
    std::vector<std::vector<bool>> le(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        le[i][j] = reachable_by_pushes(sys, bond_set, bonds[i], bonds[j]);
        CHECK(lat.leq(Bond{bonds[i]}, Bond{bonds[j]}) == le[i][j]);
      }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        // Brute-force glb and lub from the order table.
        std::optional<std::size_t> glb, lub;
        for (std::size_t c = 0; c < k; ++c) {
          if (le[c][i] && le[c][j] && (!glb || le[*glb][c])) glb = c;
          if (le[i][c] && le[j][c] && (!lub || le[c][*lub])) lub = c;
        }
        REQUIRE(glb);
        REQUIRE(lub);
        Bond m = lat.meet(Bond{bonds[i]}, Bond{bonds[j]});
        Bond J = lat.join(Bond{bonds[i]}, Bond{bonds[j]});
        CHECK(m.values == bonds[*glb]);
        CHECK(J.values == bonds[*lub]);
        CHECK(bond_set.contains(m.values));
        for (std::size_t l = 0; l < k; ++l) {
          Bond lhs = lat.meet(Bond{bonds[i]}, lat.join(Bond{bonds[j]}, Bond{bonds[l]}));
          Bond rhs = lat.join(lat.meet(Bond{bonds[i]}, Bond{bonds[j]}), lat.meet(Bond{bonds[i]}, Bond{bonds[l]}));
          CHECK(lhs == rhs);
        }
        CHECK(lat.meet(Bond{bonds[i]}, J).values == bonds[i]);
      }
  }
}
