#include "bondlat/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "bondlat/error.hpp"

namespace bondlat {

ParseError::ParseError(const std::string& where, const std::string& what)
    : InputError(where.empty() ? what : where + ": " + what), where_(where) {}

namespace {

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + escape_pointer(key); }
std::string child(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where.empty() ? "/" : where, "missing field \"" + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::int64_t integer_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<std::int64_t>();
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array");
  return j;
}

const Json& object_at(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where, "expected an object");
  return j;
}

VertexIndex vertex_from_json(const Multigraph& g, const Json& j, const std::string& where) {
  Id id = id_from_json(j, where);
  auto v = g.find_vertex(id);
  if (!v) throw ParseError(where, "unknown vertex '" + id.str() + "'");
  return *v;
}

ArcIndex arc_from_json(const Multigraph& g, const Json& j, const std::string& where) {
  Id id = id_from_json(j, where);
  auto a = g.find_arc(id);
  if (!a) throw ParseError(where, "unknown arc '" + id.str() + "'");
  return *a;
}

// Keyed integer map over ids listed by `find`.
template <class Find, class Name>
std::vector<std::int64_t> keyed_map(std::size_t size, const Json& j, const std::string& where, bool required,
                                    std::int64_t fallback, const char* what, Find find, Name name) {
  object_at(j, where);
  std::vector<std::int64_t> out(size, fallback);
  std::vector<bool> seen(size, false);
  for (const auto& [key, value] : j.items()) {
    auto index = find(Id(key));
    if (!index) throw ParseError(child(where, key), std::string("unknown ") + what + " '" + key + "'");
    out[*index] = integer_from_json(value, child(where, key));
    seen[*index] = true;
  }
  if (required) {
    for (std::size_t i = 0; i < size; ++i)
      if (!seen[i]) throw ParseError(where, std::string("missing value for ") + what + " '" + name(i) + "'");
  }
  return out;
}

Json ids_to_json(const std::vector<Id>& names, const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(id_to_json(names[i]));
  return out;
}

std::vector<Id> vertex_names(const Multigraph& g) { return g.vertex_ids(); }

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    // Drop the library's own "[json.exception...] parse error at ...: " prefix.
    if (auto pos = message.find("] "); pos != std::string::npos) message = message.substr(pos + 2);
    if (auto pos = message.find(": "); pos != std::string::npos && message.starts_with("parse error"))
      message = message.substr(pos + 2);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column), message);
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_json(text.str());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Id id_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Id(j.get<std::int64_t>());
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s.empty()) throw ParseError(where, "empty id");
    return Id(std::move(s));
  }
  throw ParseError(where, "expected an id (string or integer)");
}

Json id_to_json(const Id& id) {
  if (auto n = id.as_integer(); n && std::to_string(*n) == id.str()) return *n;
  return id.str();
}

// ------------------------------------------------------------ graphs

Multigraph graph_from_json(const Json& j) {
  const Json& vs = array_at(field(j, "vertices", ""), "/vertices");
  if (vs.empty()) throw ParseError("/vertices", "graph has no vertices");
  std::vector<Id> vertices;
  std::set<Id> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices.push_back(id_from_json(vs[i], child("/vertices", i)));
    if (!seen.insert(vertices.back()).second)
      throw ParseError(child("/vertices", i), "duplicate vertex '" + vertices.back().str() + "'");
  }
  std::vector<ArcSpec> arcs;
  std::set<Id> arc_ids;
  const Json& as = array_at(field(j, "arcs", ""), "/arcs");
  for (std::size_t i = 0; i < as.size(); ++i) {
    std::string where = child("/arcs", i);
    ArcSpec spec{id_from_json(field(as[i], "id", where), child(where, "id")),
                 id_from_json(field(as[i], "tail", where), child(where, "tail")),
                 id_from_json(field(as[i], "head", where), child(where, "head"))};
    if (!arc_ids.insert(spec.id).second) throw ParseError(child(where, "id"), "duplicate arc '" + spec.id.str() + "'");
    if (!seen.contains(spec.tail)) throw ParseError(child(where, "tail"), "unknown vertex '" + spec.tail.str() + "'");
    if (!seen.contains(spec.head)) throw ParseError(child(where, "head"), "unknown vertex '" + spec.head.str() + "'");
    arcs.push_back(std::move(spec));
  }
  return Multigraph(std::move(vertices), std::move(arcs));
}

Json graph_to_json(const Multigraph& g) {
  Json vertices = Json::array();
  for (const Id& v : g.vertex_ids()) vertices.push_back(id_to_json(v));
  Json arcs = Json::array();
  for (const Arc& a : g.arcs())
    arcs.push_back({{"id", id_to_json(a.id)}, {"tail", id_to_json(g.vertex_id(a.tail))},
                    {"head", id_to_json(g.vertex_id(a.head))}});
  return {{"vertices", vertices}, {"arcs", arcs}};
}

PlanarEmbedding embedding_from_json(const Json& j) {
  Multigraph g = graph_from_json(j);
  const Json* rot = optional_field(j, "rotation");
  if (!rot) return PlanarEmbedding::with_sorted_rotation(std::move(g));
  object_at(*rot, "/rotation");
  std::vector<std::vector<Dart>> rotation(g.vertex_count());
  std::vector<bool> listed(g.vertex_count(), false);
  for (const auto& [key, darts] : rot->items()) {
    std::string where = child("/rotation", key);
    auto v = g.find_vertex(Id(key));
    if (!v) throw ParseError(where, "unknown vertex '" + key + "'");
    listed[*v] = true;
    array_at(darts, where);
    for (std::size_t i = 0; i < darts.size(); ++i) {
      std::string at = child(where, i);
      ArcIndex a = arc_from_json(g, field(darts[i], "arc", at), child(at, "arc"));
      const Json& end = field(darts[i], "end", at);
      if (end != "tail" && end != "head") throw ParseError(child(at, "end"), "expected \"tail\" or \"head\"");
      rotation[*v].push_back({a, end == "tail" ? ArcEnd::tail : ArcEnd::head});
    }
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (!listed[v] && !g.incident(v).empty())
      throw ParseError("/rotation", "no rotation for vertex '" + g.vertex_id(v).str() + "'");
  try {
    return PlanarEmbedding(std::move(g), std::move(rotation));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError("/rotation", e.what());
  }
}

Json embedding_to_json(const PlanarEmbedding& e) {
  const Multigraph& g = e.host();
  Json j = graph_to_json(g);
  Json rot = Json::object();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    Json darts = Json::array();
    for (Dart d : e.rotation(v))
      darts.push_back({{"arc", id_to_json(g.arc(d.arc).id)}, {"end", d.end == ArcEnd::tail ? "tail" : "head"}});
    rot[g.vertex_id(v).str()] = darts;
  }
  j["rotation"] = rot;
  return j;
}

std::vector<std::int64_t> arc_map_from_json(const Multigraph& g, const Json& j, const std::string& where, bool required,
                                            std::int64_t fallback) {
  return keyed_map(
      g.arc_count(), j, where, required, fallback, "arc", [&](const Id& id) { return g.find_arc(id); },
      [&](std::size_t a) { return g.arc(a).id.str(); });
}

Json arc_map_to_json(const Multigraph& g, std::span<const std::int64_t> values) {
  Json out = Json::object();
  for (ArcIndex a = 0; a < g.arc_count(); ++a) out[g.arc(a).id.str()] = values[a];
  return out;
}

std::vector<std::int64_t> vertex_map_from_json(const Multigraph& g, const Json& j, const std::string& where,
                                               bool required, std::int64_t fallback) {
  return keyed_map(
      g.vertex_count(), j, where, required, fallback, "vertex", [&](const Id& id) { return g.find_vertex(id); },
      [&](std::size_t v) { return g.vertex_id(v).str(); });
}

Json vertex_map_to_json(const Multigraph& g, std::span<const std::int64_t> values) {
  Json out = Json::object();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) out[g.vertex_id(v).str()] = values[v];
  return out;
}

Json cycle_to_json(const Multigraph& g, const CycleVector& c) {
  Json out = Json::array();
  for (const CycleStep& s : c.steps) out.push_back({{"arc", id_to_json(g.arc(s.arc).id)}, {"direction", s.direction}});
  return out;
}

// ------------------------------------------------------------ systems

SystemData system_data_from_json(const Json& j) {
  Multigraph g = graph_from_json(j);
  auto lower = arc_map_from_json(g, field(j, "lower", ""), "/lower", true);
  auto upper = arc_map_from_json(g, field(j, "upper", ""), "/upper", true);
  for (ArcIndex a = 0; a < g.arc_count(); ++a)
    if (lower[a] > upper[a])
      throw ParseError(child("/lower", g.arc(a).id.str()), "lower capacity " + std::to_string(lower[a]) +
                                                               " exceeds upper capacity " + std::to_string(upper[a]));
  VertexIndex forbidden = 0;
  if (const Json* f = optional_field(j, "forbidden")) forbidden = vertex_from_json(g, *f, "/forbidden");

  const Json* ref = optional_field(j, "reference");
  const Json* delta = optional_field(j, "delta_on_fundamental_cycles");
  if (ref && delta) throw ParseError("/delta_on_fundamental_cycles", "give either \"reference\" or this, not both");
  Bond reference{std::vector<std::int64_t>(g.arc_count(), 0)};
  if (ref) {
    reference.values = arc_map_from_json(g, *ref, "/reference", false);
  } else if (delta) {
    auto targets = arc_map_from_json(g, *delta, "/delta_on_fundamental_cycles", false);
    std::set<ArcIndex> keyed;
    for (const auto& [key, value] : delta->items()) keyed.insert(*g.find_arc(Id(key)));
    // One spanning tree per component; the union is the tree of the graph.
    for (GraphComponent& piece : split_components(g)) {
      std::map<ArcIndex, std::int64_t> local;
      for (ArcIndex a = 0; a < piece.arcs.size(); ++a)
        if (keyed.contains(piece.arcs[a])) local[a] = targets[piece.arcs[a]];
      Bond r;
      try {
        r = reference_from_cycle_targets(piece.graph, local);
      } catch (const InputError& e) {
        throw ParseError("/delta_on_fundamental_cycles", e.what());
      }
      for (ArcIndex a = 0; a < piece.arcs.size(); ++a) reference.values[piece.arcs[a]] = r[a];
    }
  }
  return SystemData{std::move(g), std::move(lower), std::move(upper), std::move(reference), forbidden};
}

DeltaBondSystem system_from_json(const Json& j) {
  SystemData d = system_data_from_json(j);
  if (!d.graph.is_connected()) throw ParseError("/arcs", "graph is disconnected");
  return DeltaBondSystem(std::move(d.graph), std::move(d.lower), std::move(d.upper), std::move(d.reference),
                         d.forbidden);
}

std::vector<DeltaBondSystem> split_system(const SystemData& data, std::vector<GraphComponent>* pieces) {
  std::vector<DeltaBondSystem> out;
  auto parts = split_components(data.graph);
  for (const GraphComponent& part : parts) {
    std::vector<std::int64_t> lower, upper;
    Bond reference;
    for (ArcIndex a : part.arcs) {
      lower.push_back(data.lower[a]);
      upper.push_back(data.upper[a]);
      reference.values.push_back(data.reference[a]);
    }
    VertexIndex forbidden = 0;
    for (VertexIndex v = 0; v < part.vertices.size(); ++v)
      if (part.vertices[v] == data.forbidden) forbidden = v;
    out.emplace_back(part.graph, std::move(lower), std::move(upper), std::move(reference), forbidden);
  }
  if (pieces) *pieces = std::move(parts);
  return out;
}

Json system_to_json(const DeltaBondSystem& sys) {
  const Multigraph& g = sys.graph();
  Json j = graph_to_json(g);
  j["lower"] = arc_map_to_json(g, sys.lower());
  j["upper"] = arc_map_to_json(g, sys.upper());
  j["reference"] = arc_map_to_json(g, sys.reference().values);
  j["forbidden"] = id_to_json(g.vertex_id(sys.forbidden()));
  return j;
}

Bond bond_from_json(const Multigraph& g, const Json& j, const std::string& where) {
  return Bond{arc_map_from_json(g, j, where, true)};
}

Json bond_to_json(const Multigraph& g, const Bond& x) { return arc_map_to_json(g, x.values); }

Json infeasibility_to_json(const Multigraph& g, const Infeasibility& inf) {
  return {{"cycle", cycle_to_json(g, inf.cycle)},
          {"target", inf.target},
          {"window_min", inf.window_min},
          {"window_max", inf.window_max}};
}

Json contraction_to_json(const DeltaBondSystem& original, const Reduction& r) {
  const Multigraph& g = original.graph();
  const Multigraph& h = r.system.graph();
  Json rigid = Json::object();
  for (ArcIndex a = 0; a < g.arc_count(); ++a)
    if (!r.map.reduced_arc[a]) rigid[g.arc(a).id.str()] = r.map.forced_value[a];
  Json classes = Json::object();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    classes[g.vertex_id(v).str()] = id_to_json(h.vertex_id(r.map.vertex_class[v]));
  return {{"rigid_arcs", rigid}, {"vertex_classes", classes}};
}

// ------------------------------------------------------------ lattices

Json cover_digraph_to_json(const DeltaBondSystem& original, const Reduction& r, const CoverDigraph& cd) {
  const Multigraph& g = original.graph();
  const Multigraph& h = r.system.graph();
  BondLattice lattice(r.system);
  Json elements = Json::array();
  for (std::size_t i = 0; i < cd.elements.size(); ++i) {
    elements.push_back({{"index", i},
                        {"rank", cd.rank[i]},
                        {"bond", bond_to_json(g, r.map.expand(cd.elements[i]))},
                        {"push_count", vertex_map_to_json(h, lattice.push_count(cd.elements[i]).counts)}});
  }
  Json covers = Json::array();
  for (const Cover& c : cd.covers)
    covers.push_back({{"lower", c.lower}, {"upper", c.upper}, {"vertex", id_to_json(h.vertex_id(c.color))}});
  return {{"count", cd.elements.size()}, {"elements", elements}, {"covers", covers}};
}

std::string cover_digraph_to_dot(const DeltaBondSystem& original, const Reduction& r, const CoverDigraph& cd,
                                 Coordinates coords, const std::string& name) {
  const Multigraph& g = original.graph();
  const Multigraph& h = r.system.graph();
  std::optional<BondLattice> lattice;
  if (coords == Coordinates::pushcount) lattice.emplace(r.system);
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < cd.elements.size(); ++i) {
    std::string label;
    if (coords == Coordinates::bond) {
      Bond x = r.map.expand(cd.elements[i]);
      for (ArcIndex a = 0; a < g.arc_count(); ++a)
        label += (a ? " " : "") + g.arc(a).id.str() + "=" + std::to_string(x[a]);
    } else {
      auto counts = lattice->push_count(cd.elements[i]).counts;
      for (VertexIndex v = 0; v < h.vertex_count(); ++v)
        label += (v ? " " : "") + h.vertex_id(v).str() + ":" + std::to_string(counts[v]);
    }
    out << "  n" << i << " [label=" << dot_quote(label) << "];\n";
  }
  for (const Cover& c : cd.covers)
    out << "  n" << c.lower << " -> n" << c.upper << " [label=" << dot_quote(h.vertex_id(c.color).str())
        << ", colorscheme=set312, color=" << c.color % 12 + 1 << "];\n";
  out << "}\n";
  return out.str();
}

// ------------------------------------------------------------ checker

ColoredInput colored_digraph_from_json(const Json& j) {
  Multigraph g = graph_from_json(j);
  const Json& colors = object_at(field(j, "colors", ""), "/colors");
  std::vector<std::optional<Json>> token(g.arc_count());
  for (const auto& [key, value] : colors.items()) {
    auto a = g.find_arc(Id(key));
    if (!a) throw ParseError(child("/colors", key), "unknown arc '" + key + "'");
    if (!value.is_string() && !value.is_number_integer())
      throw ParseError(child("/colors", key), "expected a string or integer color");
    token[*a] = value;
  }
  std::map<Json, std::size_t> index;
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    if (!token[a]) throw ParseError("/colors", "no color for arc '" + g.arc(a).id.str() + "'");
    index.emplace(*token[a], 0);
  }
  ColoredInput in{std::move(g), {}, {}};
  for (auto& [name, i] : index) {
    i = in.color_names.size();
    in.color_names.push_back(name);
  }
  in.digraph.vertex_count = in.graph.vertex_count();
  for (ArcIndex a = 0; a < in.graph.arc_count(); ++a)
    in.digraph.arcs.push_back({in.graph.arc(a).tail, in.graph.arc(a).head, index.at(*token[a])});
  return in;
}

Json cover_certificate_to_json(const ColoredInput& in, const CoverCertificate& c) {
  auto names = vertex_names(in.graph);
  auto violation = [&](std::size_t vertex, std::size_t first, std::size_t second) {
    return Json{{"vertex", id_to_json(names[vertex])},
                {"arcs", {id_to_json(in.graph.arc(first).id), id_to_json(in.graph.arc(second).id)}},
                {"colors",
                 {in.color_names[in.digraph.arcs[first].color], in.color_names[in.digraph.arcs[second].color]}}};
  };
  Json j = {{"verdict", std::string(verdict_name(c.verdict))}, {"sources", ids_to_json(names, c.sources)}};
  if (!c.cycle.empty()) j["cycle"] = ids_to_json(names, c.cycle);
  if (!c.unreached.empty()) j["unreached"] = ids_to_json(names, c.unreached);
  if (!c.u1.empty()) {
    j["u1_violations"] = Json::array();
    for (const auto& v : c.u1) j["u1_violations"].push_back(violation(v.vertex, v.first_arc, v.second_arc));
  }
  if (!c.u2.empty()) {
    j["u2_violations"] = Json::array();
    for (const auto& v : c.u2) j["u2_violations"].push_back(violation(v.vertex, v.first_arc, v.second_arc));
  }
  return j;
}

PosetInput poset_from_json(const Json& j) {
  const Json& es = array_at(field(j, "elements", ""), "/elements");
  if (es.empty()) throw ParseError("/elements", "poset has no elements");
  std::vector<Id> elements;
  std::map<Id, std::size_t> index;
  for (std::size_t i = 0; i < es.size(); ++i) {
    elements.push_back(id_from_json(es[i], child("/elements", i)));
    if (!index.emplace(elements.back(), i).second)
      throw ParseError(child("/elements", i), "duplicate element '" + elements.back().str() + "'");
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  const Json& cs = array_at(field(j, "covers", ""), "/covers");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string where = child("/covers", i);
    if (!cs[i].is_array() || cs[i].size() != 2) throw ParseError(where, "expected a pair [lower, upper]");
    std::size_t ends[2];
    for (std::size_t k = 0; k < 2; ++k) {
      Id id = id_from_json(cs[i][k], child(where, k));
      auto it = index.find(id);
      if (it == index.end()) throw ParseError(child(where, k), "unknown element '" + id.str() + "'");
      ends[k] = it->second;
    }
    covers.emplace_back(ends[0], ends[1]);
  }
  try {
    return PosetInput{elements, FinitePoset::from_arcs(elements.size(), covers)};
  } catch (const InputError& e) {
    throw ParseError("/covers", e.what());
  }
}

Json representation_report_to_json(const std::vector<Id>& names, const RepresentationReport& r) {
  Json j = {{"holds", r.holds()}, {"meet_irreducibles", ids_to_json(names, r.meet_irreducibles)}};
  if (r.holds()) {
    Json sets = Json::object();
    for (std::size_t i = 0; i < r.minimal_sets.size(); ++i) sets[names[i].str()] = ids_to_json(names, r.minimal_sets[i]);
    j["minimal_sets"] = sets;
  } else {
    const RepresentationFailure& f = *r.failure;
    static constexpr const char* kinds[] = {"unrepresentable", "not unique", "not greatest"};
    Json fail = {{"kind", kinds[static_cast<int>(f.kind)]}, {"element", id_to_json(names[f.element])}};
    if (!f.first.empty() || f.kind != RepresentationFailure::Kind::unrepresentable)
      fail["first"] = ids_to_json(names, f.first);
    if (f.kind == RepresentationFailure::Kind::not_unique) fail["second"] = ids_to_json(names, f.second);
    if (f.other) fail["other"] = id_to_json(names[*f.other]);
    j["failure"] = fail;
  }
  return j;
}

Json lattice_report_to_json(const std::vector<Id>& names, const LatticeReport& r) {
  auto pair = [&](const std::array<std::size_t, 2>& p) { return ids_to_json(names, {p[0], p[1]}); };
  Json j = {{"lattice", r.lattice}};
  if (r.missing_meet) j["missing_meet"] = pair(*r.missing_meet);
  if (r.missing_join) j["missing_join"] = pair(*r.missing_join);
  if (r.lattice) {
    j["uld"] = r.is_uld();
    j["lld"] = r.is_lld();
    j["distributive"] = r.distributive;
    j["distributivity_checked_on_all_triples"] = r.distributivity_by_triples;
    if (r.distributivity_witness) {
      const auto& w = *r.distributivity_witness;
      j["distributivity_witness"] = ids_to_json(names, {w[0], w[1], w[2]});
    }
  }
  j["meet_representations"] = representation_report_to_json(names, r.uld);
  j["join_representations"] = representation_report_to_json(names, r.lld);
  return j;
}

// ------------------------------------------------------------ chip-firing

Json game_to_json(const Multigraph& d, const GameGraph& g) {
  Json states = Json::array();
  for (std::size_t i = 0; i < g.states.size(); ++i)
    states.push_back({{"index", i}, {"chips", vertex_map_to_json(d, g.states[i].chips)}});
  Json moves = Json::array();
  for (const GameMove& m : g.moves)
    moves.push_back({{"from", m.from}, {"to", m.to}, {"vertex", id_to_json(d.vertex_id(m.vertex))}});
  Json j = {{"verdict", verdict_name(g.verdict)}, {"states", states}, {"moves", moves}};
  if (!g.cycle.empty()) j["cycle"] = g.cycle;
  return j;
}

Json game_certificate_to_json(const Multigraph& d, const GameCertificate& c) {
  Json j = {{"verdict", std::string(verdict_name(c.cover.verdict))}, {"ok", c.ok()}};
  j["terminal"] = c.terminal ? Json(*c.terminal) : Json(nullptr);
  if (!c.firing_counts.empty()) j["firing_counts"] = vertex_map_to_json(d, c.firing_counts.front());
  j["multisets_agree"] = !c.multiset_conflict;
  if (c.multiset_conflict) j["multiset_conflict"] = *c.multiset_conflict;
  return j;
}

std::string game_to_dot(const Multigraph& d, const GameGraph& g) {
  std::ostringstream out;
  out << "digraph \"game\" {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    std::string label;
    for (VertexIndex v = 0; v < d.vertex_count(); ++v)
      label += (v ? " " : "") + d.vertex_id(v).str() + ":" + std::to_string(g.states[i].chips[v]);
    out << "  s" << i << " [label=" << dot_quote(label) << "];\n";
  }
  for (const GameMove& m : g.moves)
    out << "  s" << m.from << " -> s" << m.to << " [label=" << dot_quote(d.vertex_id(m.vertex).str())
        << ", colorscheme=set312, color=" << m.vertex % 12 + 1 << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace bondlat
