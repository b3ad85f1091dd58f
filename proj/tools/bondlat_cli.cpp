// bondlat: command-line front end for the Δ-bond library.
//
// Exit status: 0 success, 1 negative verdict (the verdict is still written),
// 2 malformed input or usage.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include "bondlat/bonds.hpp"
#include "bondlat/chip_firing.hpp"
#include "bondlat/error.hpp"
#include "bondlat/instances.hpp"
#include "bondlat/io.hpp"
#include "bondlat/lattice.hpp"
#include "bondlat/uld.hpp"

using namespace bondlat;

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string dot;
  std::optional<std::size_t> cap;
  std::string coords = "bond";
  std::optional<std::string> forbidden;
  std::optional<std::size_t> unbounded_face;
  bool ccfg = false;
  std::optional<std::size_t> radius;
};

struct Result {
  Json json;
  int status = 0;
  std::string dot;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

Json load(const Options& o) {
  Json j = read_json_file(o.input);
  if (!j.is_object()) throw ParseError("/", "expected an object");
  return j;
}

void apply_forbidden(const Options& o, Json& j, const char* key = "forbidden") {
  if (o.forbidden) j[key] = *o.forbidden;
}

Json bond_ranges(const DeltaBondSystem& sys) {
  const Multigraph& g = sys.graph();
  Json ranges = Json::object();
  Json rigid = Json::array();
  auto r = arc_value_ranges(sys);
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    ranges[g.arc(a).id.str()] = {r[a].first, r[a].second};
    if (r[a].first == r[a].second) rigid.push_back(id_to_json(g.arc(a).id));
  }
  return {{"ranges", ranges}, {"rigid_arcs", rigid}};
}

Result infeasible(const DeltaBondSystem& sys, const Infeasibility& inf) {
  return {{{"verdict", "infeasible"}, {"certificate", infeasibility_to_json(sys.graph(), inf)}}, 1, {}};
}

// ------------------------------------------------------------ systems

Result cmd_reduce(const Options& o) {
  Json j = load(o);
  apply_forbidden(o, j);
  DeltaBondSystem sys = system_from_json(j);
  auto found = find_initial_bond(sys);
  if (auto* inf = std::get_if<Infeasibility>(&found)) return infeasible(sys, *inf);
  Reduction r = reduce(sys);
  Json out = system_to_json(r.system);
  out["contraction"] = contraction_to_json(sys, r);
  return {out, 0, {}};
}

Result cmd_find_bond(const Options& o) {
  Json j = load(o);
  apply_forbidden(o, j);
  DeltaBondSystem sys = system_from_json(j);
  auto found = find_initial_bond(sys);
  if (auto* inf = std::get_if<Infeasibility>(&found)) return infeasible(sys, *inf);
  Json out = bond_ranges(sys);
  out["verdict"] = "feasible";
  out["bond"] = bond_to_json(sys.graph(), std::get<Bond>(found));
  return {out, 0, {}};
}

struct ComponentLattice {
  Json json;
  std::string dot;
  std::size_t count = 0;
};

// Enumerates one connected system into `out`. Returns a result only for a
// negative verdict.
std::optional<Result> lattice_of(const DeltaBondSystem& sys, const Options& o, bool certify, const std::string& name,
                                 ComponentLattice& out) {
  auto found = find_initial_bond(sys);
  if (auto* inf = std::get_if<Infeasibility>(&found)) return infeasible(sys, *inf);
  Reduction r = reduce(sys);
  std::size_t cap = o.cap.value_or(default_element_cap);
  CoverDigraph cd;
  try {
    cd = enumerate(r.system, cap);
  } catch (const CapExceeded& e) {
    return Result{{{"verdict", "cap exceeded"}, {"cap", cap}, {"partial_count", e.partial_count()}}, 1, {}};
  }
  out.count = cd.elements.size();
  out.json = cover_digraph_to_json(sys, r, cd);
  Coordinates coords = o.coords == "pushcount" ? Coordinates::pushcount : Coordinates::bond;
  if (!o.dot.empty()) out.dot = cover_digraph_to_dot(sys, r, cd, coords, name);
  if (certify) {
    ColoredDigraph d = cd.colored();
    auto both = certify_distributive_cover(d);
    Json cert = {{"uld", std::string(verdict_name(both.upper.verdict))},
                 {"lld", std::string(verdict_name(both.lower.verdict))},
                 {"distributive", both.distributive()}};
    if (both.upper.order) {
      LatticeReport report = brute_uld(*both.upper.order);
      cert["brute_force"] = {{"lattice", report.lattice},
                             {"uld", report.is_uld()},
                             {"lld", report.is_lld()},
                             {"distributive", report.distributive},
                             {"checked_on_all_triples", report.distributivity_by_triples}};
      if (!report.distributive) cert["distributive"] = false;
    }
    out.json["certificate"] = cert;
    if (!cert["distributive"].get<bool>()) return Result{out.json, 1, out.dot};
  }
  return std::nullopt;
}

Result enumerate_like(const Options& o, bool certify) {
  Json j = load(o);
  apply_forbidden(o, j);
  SystemData data = system_data_from_json(j);
  if (data.graph.is_connected()) {
    DeltaBondSystem sys(data.graph, data.lower, data.upper, data.reference, data.forbidden);
    ComponentLattice lat;
    if (auto stop = lattice_of(sys, o, certify, "lattice", lat)) return *stop;
    lat.json["verdict"] = "ok";
    return {lat.json, 0, lat.dot};
  }
  // Disconnected: the lattice is the product of the component lattices,
  // reported factor by factor.
  std::vector<GraphComponent> pieces;
  auto systems = split_system(data, &pieces);
  Json components = Json::array();
  Json factors = Json::array();
  std::string dot;
  std::uint64_t size = 1;
  bool overflow = false;
  for (std::size_t k = 0; k < systems.size(); ++k) {
    ComponentLattice lat;
    if (auto stop = lattice_of(systems[k], o, certify, "component_" + std::to_string(k), lat)) {
      stop->json["component"] = k;
      return *stop;
    }
    Json c = lat.json;
    Json vertices = Json::array(), arcs = Json::array();
    for (VertexIndex v : pieces[k].vertices) vertices.push_back(id_to_json(data.graph.vertex_id(v)));
    for (ArcIndex a : pieces[k].arcs) arcs.push_back(id_to_json(data.graph.arc(a).id));
    c["vertices"] = vertices;
    c["arcs"] = arcs;
    c["forbidden"] = id_to_json(systems[k].graph().vertex_id(systems[k].forbidden()));
    components.push_back(c);
    factors.push_back(lat.count);
    if (lat.count != 0 && size > std::numeric_limits<std::uint64_t>::max() / lat.count) overflow = true;
    if (!overflow) size *= lat.count;
    dot += lat.dot;
  }
  Json product = {{"factors", factors}};
  if (overflow)
    product["size_exceeds_64_bits"] = true;
  else
    product["size"] = size;
  return {{{"verdict", "ok"}, {"components", components}, {"product", product}}, 0, dot};
}

Result cmd_enumerate(const Options& o) { return enumerate_like(o, false); }
Result cmd_lattice(const Options& o) { return enumerate_like(o, true); }

Result lattice_query(const Options& o, const std::string& op) {
  Json j = load(o);
  apply_forbidden(o, j);
  DeltaBondSystem sys = system_from_json(j);
  const Multigraph& g = sys.graph();
  Bond x = bond_from_json(g, j.contains("x") ? j["x"] : Json(), "/x");
  Bond y = bond_from_json(g, j.contains("y") ? j["y"] : Json(), "/y");
  for (auto [b, where] : {std::pair{&x, "/x"}, std::pair{&y, "/y"}}) {
    BondReport rep = is_delta_bond(sys, *b);
    if (!rep.capacity.empty())
      throw ParseError(std::string(where) + "/" + g.arc(rep.capacity.front().arc).id.str(), "value outside capacities");
    if (!rep.cycles.empty()) throw ParseError(where, "wrong flow-difference on a cycle; not a bond of this system");
  }
  Reduction r = reduce(sys);
  BondLattice lat(r.system);
  Bond rx = r.map.restrict(x), ry = r.map.restrict(y);
  Json out = {{"x", bond_to_json(g, x)}, {"y", bond_to_json(g, y)}};
  if (op == "leq") {
    out["leq"] = lat.leq(rx, ry);
    out["geq"] = lat.leq(ry, rx);
  } else {
    Bond z = op == "meet" ? lat.meet(rx, ry) : lat.join(rx, ry);
    out[op] = bond_to_json(g, r.map.expand(z));
    out["push_count"] = vertex_map_to_json(r.system.graph(), lat.push_count(z).counts);
  }
  return {out, 0, {}};
}

// ------------------------------------------------------------ checker

Result cmd_check_uld(const Options& o) {
  ColoredInput in = colored_digraph_from_json(load(o));
  auto upper = certify_uld_cover(in.digraph);
  auto lower = certify_lld_cover(in.digraph);
  Json out = {{"verdict", std::string(verdict_name(upper.verdict))},
              {"uld", cover_certificate_to_json(in, upper)},
              {"lld", cover_certificate_to_json(in, lower)},
              {"distributive", upper.ok() && lower.ok()}};
  return {out, upper.ok() ? 0 : 1, {}};
}

Result cmd_check_poset(const Options& o) {
  PosetInput in = poset_from_json(load(o));
  LatticeReport r = brute_uld(in.poset);
  Json out = lattice_report_to_json(in.elements, r);
  out["verdict"] = !r.lattice ? "not a lattice" : r.is_uld() ? "uld" : "not uld";
  return {out, r.is_uld() ? 0 : 1, {}};
}

// ------------------------------------------------------------ encoders

Json feasibility(const DeltaBondSystem& sys, int& status) {
  auto found = find_initial_bond(sys);
  if (auto* inf = std::get_if<Infeasibility>(&found)) {
    status = 1;
    return {{"feasible", false}, {"certificate", infeasibility_to_json(sys.graph(), *inf)}};
  }
  return {{"feasible", true}};
}

Result encoded(const DeltaBondSystem& sys, Json decode) {
  Result r{system_to_json(sys), 0, {}};
  r.json["decode"] = std::move(decode);
  r.json["feasibility"] = feasibility(sys, r.status);
  return r;
}

Json faces_to_json(const PlanarDual& dual, const Multigraph& primal) {
  Json faces = Json::array();
  for (std::size_t f = 0; f < dual.faces.size(); ++f)
    faces.push_back({{"face", id_to_json(dual.graph.vertex_id(f))}, {"boundary", cycle_to_json(primal, dual.faces[f])}});
  return faces;
}

std::size_t unbounded_face(const Options& o, const Json& j) {
  if (o.unbounded_face) return *o.unbounded_face;
  if (j.contains("unbounded_face")) {
    const Json& f = j["unbounded_face"];
    if (!f.is_number_unsigned()) throw ParseError("/unbounded_face", "expected a face index");
    return f.get<std::size_t>();
  }
  return 0;
}

Result cmd_c_orient(const Options& o) {
  Json j = load(o);
  apply_forbidden(o, j);
  Multigraph d = graph_from_json(j);
  VertexIndex forbidden = 0;
  if (j.contains("forbidden")) {
    Id id = id_from_json(j["forbidden"], "/forbidden");
    auto v = d.find_vertex(id);
    if (!v) throw ParseError("/forbidden", "unknown vertex '" + id.str() + "'");
    forbidden = *v;
  }
  if (!j.contains("c")) throw ParseError("/", "missing field \"c\"");
  auto values = arc_map_from_json(d, j["c"], "/c", false);
  std::map<ArcIndex, std::int64_t> c;
  for (const auto& [key, value] : j["c"].items()) c[*d.find_arc(Id(key))] = values[*d.find_arc(Id(key))];
  if (!d.is_connected()) throw ParseError("/arcs", "graph is disconnected");
  DeltaBondSystem sys = [&] {
    try {
      return encode_c_orientations(d, c, forbidden);
    } catch (const InputError& e) {
      throw ParseError("/c", e.what());
    }
  }();
  Orientation none{std::vector<bool>(d.arc_count(), false)};
  Json cycles = Json::array();
  for (std::size_t i = 0; i < sys.cycles().size(); ++i) {
    const CycleVector& cyc = sys.cycles()[i];
    cycles.push_back({{"non_tree_arc", id_to_json(d.arc(cyc.steps.front().arc).id)},
                      {"cycle", cycle_to_json(d, cyc)},
                      {"c", oriented_flow_difference(d, none, cyc) - 2 * sys.cycle_targets()[i]}});
  }
  return encoded(sys, {{"kind", "c-orientation"},
                       {"value_1_means", "arc reversed relative to the input digraph"},
                       {"cycles", cycles}});
}

Result cmd_flows(const Options& o) {
  Json j = load(o);
  PlanarEmbedding e = embedding_from_json(j);
  const Multigraph& g = e.host();
  FlowSpec spec{e, arc_map_from_json(g, j.value("lower", Json()), "/lower", true),
                arc_map_from_json(g, j.value("upper", Json()), "/upper", true),
                j.contains("excess") ? vertex_map_from_json(g, j["excess"], "/excess", false)
                                     : std::vector<std::int64_t>(g.vertex_count(), 0),
                unbounded_face(o, j)};
  std::optional<FlowEncoding> enc;
  try {
    enc.emplace(encode_flows(spec));
  } catch (const InfeasibleError& err) {
    return {{{"verdict", "infeasible"}, {"reason", err.what()}}, 1, {}};
  }
  return encoded(enc->system, {{"kind", "flow"},
                               {"value_means", "flow on the primal arc with the same id"},
                               {"faces", faces_to_json(enc->dual, g)}});
}

Result cmd_alpha(const Options& o) {
  Json j = load(o);
  PlanarEmbedding e = embedding_from_json(j);
  const Multigraph& g = e.host();
  if (!j.contains("alpha")) throw ParseError("/", "missing field \"alpha\"");
  AlphaSpec spec{e, vertex_map_from_json(g, j["alpha"], "/alpha", true), unbounded_face(o, j)};
  AlphaEncoding enc = [&] {
    try {
      return encode_alpha(spec);
    } catch (const InfeasibleError&) {
      throw;
    } catch (const InputError& err) {
      throw ParseError("/alpha", err.what());
    }
  }();
  return encoded(enc.flows.system, {{"kind", "alpha-orientation"},
                                    {"reference_orientation", graph_to_json(enc.reference.host())["arcs"]},
                                    {"value_1_means", "the primal arc with the same id points against the reference"},
                                    {"faces", faces_to_json(enc.flows.dual, enc.reference.host())}});
}

Result cmd_potentials(const Options& o) {
  Json j = load(o);
  apply_forbidden(o, j, "v0");
  Multigraph g = graph_from_json(j);
  if (!g.is_connected()) throw ParseError("/arcs", "graph is disconnected");
  auto lower = arc_map_from_json(g, j.value("lower", Json()), "/lower", true);
  auto upper = arc_map_from_json(g, j.value("upper", Json()), "/upper", true);
  VertexIndex v0 = 0;
  if (j.contains("v0")) {
    Id id = id_from_json(j["v0"], "/v0");
    auto v = g.find_vertex(id);
    if (!v) throw ParseError("/v0", "unknown vertex '" + id.str() + "'");
    v0 = *v;
  }
  for (ArcIndex a = 0; a < g.arc_count(); ++a)
    if (lower[a] > upper[a]) throw ParseError("/lower/" + g.arc(a).id.str(), "lower exceeds upper");
  Id v0_id = g.vertex_id(v0);
  DeltaBondSystem sys = encode_potentials(std::move(g), std::move(lower), std::move(upper), v0);
  return encoded(sys, {{"kind", "potential"},
                       {"v0", id_to_json(v0_id)},
                       {"potential", "pi(v) = signed sum of bond values along any path from v0"},
                       {"order", "x <= y as bonds exactly when pi_x >= pi_y at every vertex"}});
}

// ------------------------------------------------------------ chip-firing

Result cmd_chipfire(const Options& o) {
  Json j = load(o);
  Multigraph d = graph_from_json(j);
  ChipArrangement start{j.contains("chips") ? vertex_map_from_json(d, j["chips"], "/chips", false)
                                            : std::vector<std::int64_t>(d.vertex_count(), 0)};
  for (VertexIndex v = 0; v < d.vertex_count(); ++v)
    if (start.chips[v] < 0) throw ParseError("/chips/" + d.vertex_id(v).str(), "negative chip count");
  std::size_t cap = o.cap.value_or(default_state_cap);

  if (o.ccfg) {
    CompleteGame c = build_ccfg(d, start, cap, o.radius);
    Json out = game_to_json(d, c.graph);
    out["complete"] = c.complete;
    Result r{out, 1, o.dot.empty() ? "" : game_to_dot(d, c.graph)};
    if (!c.complete) {
      r.json["verdict"] = "incomplete";
    } else if (!find_directed_cycle(c.graph.colored()).empty()) {
      r.json["verdict"] = "cyclic";
    } else {
      std::vector<Id> names;
      for (std::size_t i = 0; i < c.graph.states.size(); ++i) names.emplace_back(static_cast<std::int64_t>(i));
      RepresentationReport rep = check_ccfg_unique_minimal_rep(c);
      r.json["unique_minimal_representations"] = representation_report_to_json(names, rep);
      r.json["verdict"] = rep.holds() ? "holds" : "fails";
      r.status = rep.holds() ? 0 : 1;
    }
    return r;
  }

  GameGraph g = build_cfg(d, start, cap);
  Result r{game_to_json(d, g), 1, o.dot.empty() ? "" : game_to_dot(d, g)};
  if (g.verdict == GameVerdict::finite) {
    GameCertificate cert = certify_game(d, g);
    r.json["certificate"] = game_certificate_to_json(d, cert);
    r.status = cert.ok() ? 0 : 1;
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributive lattices of Δ-bonds: enumeration, certification and encoders"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    std::function<Result(const Options&)> run;
  };
  const Command commands[] = {
      {"reduce", "contract rigid arcs", cmd_reduce},
      {"find-bond", "find one bond or an infeasibility certificate", cmd_find_bond},
      {"enumerate", "enumerate the bond lattice", cmd_enumerate},
      {"lattice", "enumerate and certify distributivity", cmd_lattice},
      {"meet", "meet of bonds x and y", [](const Options& opt) { return lattice_query(opt, "meet"); }},
      {"join", "join of bonds x and y", [](const Options& opt) { return lattice_query(opt, "join"); }},
      {"leq", "compare bonds x and y", [](const Options& opt) { return lattice_query(opt, "leq"); }},
      {"check-uld", "check a colored digraph for the U-coloring axioms", cmd_check_uld},
      {"check-poset", "brute-force lattice, ULD and distributivity check", cmd_check_poset},
      {"c-orient", "encode c-orientations as a system", cmd_c_orient},
      {"flows", "encode flows of a plane digraph as a system on the dual", cmd_flows},
      {"alpha", "encode alpha-orientations of a plane graph", cmd_alpha},
      {"potentials", "encode bounded potentials as a system", cmd_potentials},
      {"chipfire", "explore a chip-firing game", cmd_chipfire},
  };
  std::function<Result(const Options&)> selected;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    std::string name = c.name;
    sub->add_option("-i,--input", o.input, "input JSON file")->required();
    sub->add_option("-o,--output", o.output, "output JSON file (default stdout)");
    if (name == "enumerate" || name == "lattice" || name == "chipfire") {
      sub->add_option("--cap", o.cap, name == "chipfire" ? "state cap (default 100000)" : "element cap (default 1000000)");
      sub->add_option("--dot", o.dot, "write a DOT drawing here");
    }
    if (name == "enumerate" || name == "lattice")
      sub->add_option("--coords", o.coords, "DOT node labels")->check(CLI::IsMember({"bond", "pushcount"}));
    if (name == "reduce" || name == "find-bond" || name == "enumerate" || name == "lattice" || name == "meet" ||
        name == "join" || name == "leq" || name == "c-orient" || name == "potentials")
      sub->add_option("--forbidden", o.forbidden, "forbidden vertex id (v0 for potentials)");
    if (name == "flows" || name == "alpha") sub->add_option("--unbounded-face", o.unbounded_face, "face index");
    if (name == "chipfire") {
      sub->add_flag("--ccfg", o.ccfg, "explore the complete game with co-firing");
      sub->add_option("--radius", o.radius, "with --ccfg: at most this many moves from the start");
    }
    sub->callback([&selected, run = c.run] { selected = run; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Result r = selected(o);
    write_text(o.output, dump_json(r.json));
    if (!o.dot.empty() && !r.dot.empty()) write_text(o.dot, r.dot);
    return r.status;
  } catch (const InfeasibleError& e) {
    write_text(o.output, dump_json({{"verdict", "infeasible"}, {"reason", e.what()}}));
    return 1;
  } catch (const InputError& e) {
    std::cerr << "bondlat: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "bondlat: " << e.what() << "\n";
    return 2;
  }
}
