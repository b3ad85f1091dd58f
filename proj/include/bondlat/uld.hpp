#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "bondlat/colored_digraph.hpp"
#include "bondlat/poset.hpp"

namespace bondlat {

// ------------------------------------------------------------ U-coloring axioms

/// Two arcs out of one vertex to distinct heads with the same color.
struct U1Violation {
  std::size_t vertex;
  std::size_t first_arc;
  std::size_t second_arc;
};

/// A fork (v,u), (v,w) with u != w and no z closing it with swapped colors.
struct U2Violation {
  std::size_t vertex;
  std::size_t first_arc;
  std::size_t second_arc;
};

std::vector<U1Violation> check_U1(const ColoredDigraph& d);
std::vector<U2Violation> check_U2(const ColoredDigraph& d);

// ------------------------------------------------------------ cover certification

enum class CoverVerdict { uld, empty, cyclic, disconnected, no_unique_source, u1_violation, u2_violation };

std::string_view verdict_name(CoverVerdict v);

struct CoverCertificate {
  CoverVerdict verdict = CoverVerdict::empty;
  std::vector<std::size_t> sources;
  std::vector<std::size_t> cycle;              // when cyclic
  std::vector<std::size_t> unreached;          // when disconnected: vertices apart from vertex 0
  std::vector<U1Violation> u1;
  std::vector<U2Violation> u2;
  std::optional<FinitePoset> order;            // transitive closure when verdict is uld

  bool ok() const { return verdict == CoverVerdict::uld; }
};

/// Decides whether d is the cover digraph of an upper locally distributive
/// lattice with the given coloring as witness. Hypotheses are checked in
/// the order of the verdict enumeration and the first failure is reported.
CoverCertificate certify_uld_cover(const ColoredDigraph& d);

/// Same test on the reversed digraph: the lower locally distributive case.
CoverCertificate certify_lld_cover(const ColoredDigraph& d);

struct DistributivityCertificate {
  CoverCertificate upper;
  CoverCertificate lower;

  bool distributive() const { return upper.ok() && lower.ok(); }
};

/// Both orientations pass: the digraph is the cover graph of a
/// distributive lattice.
DistributivityCertificate certify_distributive_cover(const ColoredDigraph& d);

// ------------------------------------------------------------ path chasing

/// Parallel path obtained by replaying the completion axiom along a path.
struct ColorTrace {
  enum class Kind { parallel, absorbed, stuck };
  Kind kind = Kind::parallel;
  /// y_0 .. y_l; y_i sits above x_i via an arc colored like the start arc.
  std::vector<std::size_t> ys;
  std::size_t length = 0;  // l
  /// Where completion failed (kind == stuck): the fork at x_i.
  std::optional<U2Violation> fork;
};

/// Starting arc (x, y) and a directed path x = x_0 -> ... -> x_k given by
/// its arcs. Either every step completes (parallel, l = k), or the path
/// reaches y_i = x_{i+1} (absorbed, l = i: the arc x_i -> x_{i+1} carries
/// the start color). Throws InputError if the path does not start at x or
/// is not contiguous.
ColorTrace trace_color(const ColoredDigraph& d, std::size_t start_arc, const std::vector<std::size_t>& path);

// ------------------------------------------------------------ order-theoretic side

/// Element without a unique inclusion-minimal set of meet-irreducibles
/// representing it.
struct RepresentationFailure {
  enum class Kind {
    unrepresentable,  // every meet-irreducible above it also lies above the cover `other`
    not_unique,       // two distinct minimal sets (first, second)
    not_greatest,     // the minimal set also has `other` as a maximal lower bound
  };
  Kind kind = Kind::not_unique;
  std::size_t element = 0;
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  std::optional<std::size_t> other;
};

struct RepresentationReport {
  std::vector<std::size_t> meet_irreducibles;  // exactly one upper cover
  /// Minimal representing set per element (meaningful when holds()).
  std::vector<std::vector<std::size_t>> minimal_sets;
  std::optional<RepresentationFailure> failure;

  bool holds() const { return !failure; }
};

/// For every element s, looks for the unique inclusion-minimal set M of
/// meet-irreducibles with s the greatest lower bound of M. Works on any
/// finite poset; on lattices this is the defining property of upper local
/// distributivity. Polynomial: s is a maximal lower bound of M exactly when
/// no upper cover of s lies below all of M.
RepresentationReport unique_meet_representations(const FinitePoset& p);

/// Upper sets of meet-irreducibles: element -> sorted meet-irreducibles above it.
std::vector<std::vector<std::size_t>> meet_irreducibles_above(const FinitePoset& p);

struct LatticeReport {
  bool lattice = false;
  std::optional<std::array<std::size_t, 2>> missing_meet;
  std::optional<std::array<std::size_t, 2>> missing_join;
  RepresentationReport uld;  // meet side
  RepresentationReport lld;  // join side, on the dual order
  bool distributive = false;
  bool distributivity_by_triples = false;  // else inferred from uld && lld
  std::optional<std::array<std::size_t, 3>> distributivity_witness;

  bool is_uld() const { return lattice && uld.holds(); }
  bool is_lld() const { return lattice && lld.holds(); }
};

/// Exhaustive lattice check straight from the order. The distributive law
/// is tested on all triples while n^3 <= triple_limit.
LatticeReport brute_uld(const FinitePoset& p, std::size_t triple_limit = 10'000'000);

}  // namespace bondlat
