#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bondlat/bonds.hpp"
#include "bondlat/chip_firing.hpp"
#include "bondlat/colored_digraph.hpp"
#include "bondlat/embedding.hpp"
#include "bondlat/error.hpp"
#include "bondlat/graph.hpp"
#include "bondlat/lattice.hpp"
#include "bondlat/poset.hpp"
#include "bondlat/uld.hpp"

namespace bondlat {

using Json = nlohmann::json;

/// Malformed input file. `where` is "line L, column C" for syntax errors and
/// a JSON pointer such as "/arcs/2/tail" for content errors.
class ParseError : public InputError {
 public:
  ParseError(const std::string& where, const std::string& what);
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

Json parse_json(std::string_view text);
Json read_json_file(const std::filesystem::path& path);
/// Two-space indentation and a trailing newline; keys sorted.
std::string dump_json(const Json& j);

/// Ids are written as JSON numbers when they spell an integer.
Id id_from_json(const Json& j, const std::string& where);
Json id_to_json(const Id& id);

// ------------------------------------------------------------ graphs

/// {"vertices": [...], "arcs": [{"id", "tail", "head"}, ...]}
Multigraph graph_from_json(const Json& j);
Json graph_to_json(const Multigraph& g);

/// Graph plus "rotation": {vertex: [{"arc", "end"}, ...]} in clockwise
/// order. Without "rotation" the sorted rotation is used.
PlanarEmbedding embedding_from_json(const Json& j);
Json embedding_to_json(const PlanarEmbedding& e);

/// Arc-keyed and vertex-keyed integer maps. `required` demands every key.
std::vector<std::int64_t> arc_map_from_json(const Multigraph& g, const Json& j, const std::string& where, bool required,
                                            std::int64_t fallback = 0);
Json arc_map_to_json(const Multigraph& g, std::span<const std::int64_t> values);
std::vector<std::int64_t> vertex_map_from_json(const Multigraph& g, const Json& j, const std::string& where,
                                               bool required, std::int64_t fallback = 0);
Json vertex_map_to_json(const Multigraph& g, std::span<const std::int64_t> values);

Json cycle_to_json(const Multigraph& g, const CycleVector& c);

// ------------------------------------------------------------ systems

/// Graph plus "lower", "upper", "forbidden" and either "reference" or
/// "delta_on_fundamental_cycles". Unknown keys are ignored. The graph may be
/// disconnected; callers split it first (see split_system).
DeltaBondSystem system_from_json(const Json& j);
Json system_to_json(const DeltaBondSystem& sys);

/// Every field of a system file except the connectivity requirement.
struct SystemData {
  Multigraph graph;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  Bond reference;
  VertexIndex forbidden = 0;
};
SystemData system_data_from_json(const Json& j);

/// One system per connected component. The forbidden vertex stays where it
/// is; other components use their smallest vertex.
std::vector<DeltaBondSystem> split_system(const SystemData& data, std::vector<GraphComponent>* pieces = nullptr);

Bond bond_from_json(const Multigraph& g, const Json& j, const std::string& where);
Json bond_to_json(const Multigraph& g, const Bond& x);

Json infeasibility_to_json(const Multigraph& g, const Infeasibility& inf);
Json contraction_to_json(const DeltaBondSystem& original, const Reduction& r);

// ------------------------------------------------------------ lattices

enum class Coordinates { bond, pushcount };

/// Elements (full bonds and push counts), covers colored by vertex id, ranks.
Json cover_digraph_to_json(const DeltaBondSystem& original, const Reduction& r, const CoverDigraph& cd);

/// Hasse diagram drawn bottom to top; nodes labeled by bond values or push
/// counts, edges labeled by the pushed vertex.
std::string cover_digraph_to_dot(const DeltaBondSystem& original, const Reduction& r, const CoverDigraph& cd,
                                 Coordinates coords, const std::string& name = "lattice");

// ------------------------------------------------------------ checker

/// Graph plus "colors": {arc: scalar}. Color tokens are numbered in ascending
/// JSON value order; the names are returned alongside.
struct ColoredInput {
  Multigraph graph;
  ColoredDigraph digraph;
  std::vector<Json> color_names;
};
ColoredInput colored_digraph_from_json(const Json& j);

Json cover_certificate_to_json(const ColoredInput& in, const CoverCertificate& c);

/// {"elements": [...], "covers": [[lower, upper], ...]}
struct PosetInput {
  std::vector<Id> elements;
  FinitePoset poset;
};
PosetInput poset_from_json(const Json& j);

Json representation_report_to_json(const std::vector<Id>& names, const RepresentationReport& r);
Json lattice_report_to_json(const std::vector<Id>& names, const LatticeReport& r);

// ------------------------------------------------------------ chip-firing

Json game_to_json(const Multigraph& d, const GameGraph& g);
Json game_certificate_to_json(const Multigraph& d, const GameCertificate& c);
std::string game_to_dot(const Multigraph& d, const GameGraph& g);

}  // namespace bondlat
