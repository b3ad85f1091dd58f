#include "bondlat/uld.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "bondlat/error.hpp"

namespace bondlat {

std::vector<U1Violation> check_U1(const ColoredDigraph& d) {
  std::vector<U1Violation> out;
  auto arcs_out = d.out_arcs();
  for (std::size_t v = 0; v < d.vertex_count; ++v) {
    const auto& arcs = arcs_out[v];
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        const auto& a = d.arcs[arcs[i]];
        const auto& b = d.arcs[arcs[j]];
        if (a.head != b.head && a.color == b.color) out.push_back({v, arcs[i], arcs[j]});
      }
  }
  return out;
}

std::vector<U2Violation> check_U2(const ColoredDigraph& d) {
  // heads[(u, c)] = sorted heads of arcs out of u with color c
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> heads;
  for (const auto& a : d.arcs) heads[{a.tail, a.color}].push_back(a.head);
  for (auto& [key, hs] : heads) std::sort(hs.begin(), hs.end());
  auto lookup = [&](std::size_t u, std::size_t c) -> const std::vector<std::size_t>* {
    auto it = heads.find({u, c});
    return it == heads.end() ? nullptr : &it->second;
  };

  std::vector<U2Violation> out;
  auto arcs_out = d.out_arcs();
  for (std::size_t v = 0; v < d.vertex_count; ++v) {
    const auto& arcs = arcs_out[v];
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (std::size_t j = i + 1; j < arcs.size(); ++j) {
        const auto& a = d.arcs[arcs[i]];
        const auto& b = d.arcs[arcs[j]];
        if (a.head == b.head) continue;
        // z with (a.head, z) colored like b and (b.head, z) colored like a
        const auto* from_u = lookup(a.head, b.color);
        const auto* from_w = lookup(b.head, a.color);
        bool closed = false;
        if (from_u && from_w) {
          std::vector<std::size_t> common;
          std::set_intersection(from_u->begin(), from_u->end(), from_w->begin(), from_w->end(),
                                std::back_inserter(common));
          closed = !common.empty();
        }
        if (!closed) out.push_back({v, arcs[i], arcs[j]});
      }
  }
  return out;
}

std::string_view verdict_name(CoverVerdict v) {
  switch (v) {
    case CoverVerdict::uld: return "uld";
    case CoverVerdict::empty: return "empty";
    case CoverVerdict::cyclic: return "cyclic";
    case CoverVerdict::disconnected: return "disconnected";
    case CoverVerdict::no_unique_source: return "no unique source";
    case CoverVerdict::u1_violation: return "U1 violation";
    case CoverVerdict::u2_violation: return "U2 violation";
  }
  return "unknown";
}

CoverCertificate certify_uld_cover(const ColoredDigraph& d) {
  CoverCertificate cert;
  if (d.vertex_count == 0) return cert;

  std::vector<std::size_t> indegree(d.vertex_count, 0);
  for (const auto& a : d.arcs) ++indegree[a.head];
  for (std::size_t v = 0; v < d.vertex_count; ++v)
    if (indegree[v] == 0) cert.sources.push_back(v);

  cert.cycle = find_directed_cycle(d);
  if (!cert.cycle.empty()) {
    cert.verdict = CoverVerdict::cyclic;
    return cert;
  }

  std::vector<std::vector<std::size_t>> nbr(d.vertex_count);
  for (const auto& a : d.arcs) {
    nbr[a.tail].push_back(a.head);
    nbr[a.head].push_back(a.tail);
  }
  std::vector<bool> seen(d.vertex_count, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : nbr[v])
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
  }
  for (std::size_t v = 0; v < d.vertex_count; ++v)
    if (!seen[v]) cert.unreached.push_back(v);
  if (!cert.unreached.empty()) {
    cert.verdict = CoverVerdict::disconnected;
    return cert;
  }

  if (cert.sources.size() != 1) {
    cert.verdict = CoverVerdict::no_unique_source;
    return cert;
  }
  cert.u1 = check_U1(d);
  if (!cert.u1.empty()) {
    cert.verdict = CoverVerdict::u1_violation;
    return cert;
  }
  cert.u2 = check_U2(d);
  if (!cert.u2.empty()) {
    cert.verdict = CoverVerdict::u2_violation;
    return cert;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& a : d.arcs) pairs.emplace_back(a.tail, a.head);
  cert.order = FinitePoset::from_arcs(d.vertex_count, pairs);
  cert.verdict = CoverVerdict::uld;
  return cert;
}

CoverCertificate certify_lld_cover(const ColoredDigraph& d) { return certify_uld_cover(d.reversed()); }

DistributivityCertificate certify_distributive_cover(const ColoredDigraph& d) {
  return {certify_uld_cover(d), certify_lld_cover(d)};
}

ColorTrace trace_color(const ColoredDigraph& d, std::size_t start_arc, const std::vector<std::size_t>& path) {
  if (start_arc >= d.arcs.size()) throw InputError("start arc out of range");
  const std::size_t color = d.arcs[start_arc].color;
  std::size_t x = d.arcs[start_arc].tail;
  for (std::size_t a : path) {
    if (a >= d.arcs.size() || d.arcs[a].tail != x) throw InputError("trace path is not a directed path from the start arc");
    x = d.arcs[a].head;
  }

  auto arcs_out = d.out_arcs();
  ColorTrace t;
  std::size_t side = start_arc;  // the arc (x_i, y_i)
  t.ys.push_back(d.arcs[start_arc].head);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const ColoredArc& step = d.arcs[path[i]];
    const std::size_t y = t.ys.back();
    if (y == step.head) {
      t.kind = ColorTrace::Kind::absorbed;
      t.length = i;
      return t;
    }
    // z: the head of the arc out of x_{i+1} with the start color; it must
    // also be reached from y_i by an arc colored like the path step.
    std::optional<std::size_t> closing;
    for (std::size_t b : arcs_out[step.head]) {
      const ColoredArc& cand = d.arcs[b];
      if (cand.color != color) continue;
      for (std::size_t e : arcs_out[y]) {
        if (d.arcs[e].head == cand.head && d.arcs[e].color == step.color) {
          closing = b;
          break;
        }
      }
      if (closing) break;
    }
    if (!closing) {
      t.kind = ColorTrace::Kind::stuck;
      t.length = i;
      t.fork = U2Violation{step.tail, side, path[i]};
      return t;
    }
    side = *closing;
    t.ys.push_back(d.arcs[side].head);
  }
  t.kind = ColorTrace::Kind::parallel;
  t.length = path.size();
  return t;
}

std::vector<std::vector<std::size_t>> meet_irreducibles_above(const FinitePoset& p) {
  std::vector<std::vector<std::size_t>> out(p.size());
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (p.upper_covers(m).size() != 1) continue;
    for (std::size_t s = 0; s < p.size(); ++s)
      if (p.leq(s, m)) out[s].push_back(m);
  }
  return out;
}

namespace {

bool hits_all(const std::vector<std::vector<std::size_t>>& family, const std::vector<std::size_t>& set) {
  return std::all_of(family.begin(), family.end(), [&](const std::vector<std::size_t>& h) {
    return std::any_of(h.begin(), h.end(), [&](std::size_t m) { return std::binary_search(set.begin(), set.end(), m); });
  });
}

std::vector<std::size_t> minimize(const std::vector<std::vector<std::size_t>>& family, std::vector<std::size_t> set) {
  for (std::size_t i = 0; i < set.size();) {
    auto trial = set;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (hits_all(family, trial)) set = std::move(trial);
    else ++i;
  }
  return set;
}

}  // namespace

RepresentationReport unique_meet_representations(const FinitePoset& p) {
  RepresentationReport rep;
  for (std::size_t m = 0; m < p.size(); ++m)
    if (p.upper_covers(m).size() == 1) rep.meet_irreducibles.push_back(m);
  auto above = meet_irreducibles_above(p);
  rep.minimal_sets.assign(p.size(), {});

  for (std::size_t s = 0; s < p.size(); ++s) {
    const auto& candidates = above[s];
    // For each upper cover y: the candidates not above y. A set has s as a
    // maximal lower bound iff it meets every one of these.
    std::vector<std::vector<std::size_t>> family;
    for (std::size_t y : p.upper_covers(s)) {
      std::vector<std::size_t> h;
      for (std::size_t m : candidates)
        if (!p.leq(y, m)) h.push_back(m);
      if (h.empty()) {
        rep.failure = RepresentationFailure{RepresentationFailure::Kind::unrepresentable, s, {}, {}, y};
        return rep;
      }
      family.push_back(std::move(h));
    }
    std::vector<std::size_t> essential;
    for (const auto& h : family)
      if (h.size() == 1) essential.push_back(h[0]);
    std::sort(essential.begin(), essential.end());
    essential.erase(std::unique(essential.begin(), essential.end()), essential.end());

    if (!hits_all(family, essential)) {
      // Every minimal set contains the essential ones, so a greedy minimum
      // has a further element r, and dropping r leads to another one.
      auto first = minimize(family, candidates);
      std::size_t r = 0;
      for (std::size_t m : first)
        if (!std::binary_search(essential.begin(), essential.end(), m)) {
          r = m;
          break;
        }
      std::vector<std::size_t> rest;
      for (std::size_t m : candidates)
        if (m != r) rest.push_back(m);
      auto second = minimize(family, rest);
      rep.failure = RepresentationFailure{RepresentationFailure::Kind::not_unique, s, first, second, std::nullopt};
      return rep;
    }
    auto bounds = p.maximal_lower_bounds(essential);
    if (bounds.size() != 1) {
      std::size_t other = bounds[0] == s ? bounds[1] : bounds[0];
      rep.failure = RepresentationFailure{RepresentationFailure::Kind::not_greatest, s, essential, {}, other};
      return rep;
    }
    rep.minimal_sets[s] = std::move(essential);
  }
  return rep;
}

LatticeReport brute_uld(const FinitePoset& p, std::size_t triple_limit) {
  LatticeReport r;
  const std::size_t n = p.size();
  r.uld = unique_meet_representations(p);
  r.lld = unique_meet_representations(p.dual());
  if (n == 0) return r;

  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n)), join = meet;
  r.lattice = true;
  for (std::size_t a = 0; a < n && r.lattice; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto m = p.meet(a, b);
      auto j = p.join(a, b);
      if (!m) r.missing_meet = std::array{a, b};
      if (!j) r.missing_join = std::array{a, b};
      if (!m || !j) {
        r.lattice = false;
        break;
      }
      meet[a][b] = meet[b][a] = *m;
      join[a][b] = join[b][a] = *j;
    }
  if (!r.lattice) return r;

  const double triples = static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(n);
  if (triples <= static_cast<double>(triple_limit)) {
    r.distributivity_by_triples = true;
    r.distributive = true;
    for (std::size_t x = 0; x < n && r.distributive; ++x)
      for (std::size_t y = 0; y < n && r.distributive; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          if (meet[x][join[y][z]] != join[meet[x][y]][meet[x][z]]) {
            r.distributive = false;
            r.distributivity_witness = std::array{x, y, z};
            break;
          }
        }
  } else {
    r.distributive = r.uld.holds() && r.lld.holds();
  }
  return r;
}

}  // namespace bondlat
