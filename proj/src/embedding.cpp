#include "bondlat/embedding.hpp"

#include <string>

#include "bondlat/error.hpp"

namespace bondlat {
namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

std::size_t slot(Dart d) { return 2 * d.arc + (d.end == ArcEnd::head ? 1 : 0); }

Dart opposite_end(Dart d) { return {d.arc, d.end == ArcEnd::tail ? ArcEnd::head : ArcEnd::tail}; }

}  // namespace

PlanarEmbedding::PlanarEmbedding(Multigraph host, std::vector<std::vector<Dart>> rotation)
    : host_(std::move(host)), rotation_(std::move(rotation)) {
  if (rotation_.size() != host_.vertex_count()) {
    throw InputError("rotation system must list every vertex");
  }
  position_.assign(2 * host_.arc_count(), kUnset);
  for (VertexIndex v = 0; v < rotation_.size(); ++v) {
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      Dart d = rotation_[v][i];
      if (d.arc >= host_.arc_count()) throw InputError("rotation references unknown arc");
      const std::string where = "arc '" + host_.arc(d.arc).id.str() + "' " +
                                (d.end == ArcEnd::tail ? "tail" : "head");
      if (vertex_of(d) != v) {
        throw InputError("rotation of vertex '" + host_.vertex_id(v).str() + "' lists " + where +
                         ", which is attached elsewhere");
      }
      if (position_[slot(d)] != kUnset) throw InputError("rotation lists " + where + " twice");
      position_[slot(d)] = i;
    }
  }
  for (ArcIndex a = 0; a < host_.arc_count(); ++a) {
    for (ArcEnd end : {ArcEnd::tail, ArcEnd::head}) {
      if (position_[slot({a, end})] == kUnset) {
        throw InputError("rotation omits arc '" + host_.arc(a).id.str() + "' " +
                         (end == ArcEnd::tail ? "tail" : "head"));
      }
    }
  }
}

PlanarEmbedding PlanarEmbedding::with_sorted_rotation(Multigraph host) {
  std::vector<std::vector<Dart>> rotation(host.vertex_count());
  for (ArcIndex a = 0; a < host.arc_count(); ++a) {
    rotation[host.arc(a).tail].push_back({a, ArcEnd::tail});
    rotation[host.arc(a).head].push_back({a, ArcEnd::head});
  }
  return PlanarEmbedding(std::move(host), std::move(rotation));
}

Dart PlanarEmbedding::next_clockwise(Dart d) const {
  const auto& around = rotation_[vertex_of(d)];
  return around[(position_[slot(d)] + 1) % around.size()];
}

namespace {

std::vector<CycleVector> trace_faces(const PlanarEmbedding& e) {
  const Multigraph& g = e.host();
  std::vector<bool> used(2 * g.arc_count(), false);
  std::vector<CycleVector> result;
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    for (ArcEnd end : {ArcEnd::tail, ArcEnd::head}) {
      Dart start{a, end};
      if (used[slot(start)]) continue;
      CycleVector walk;
      Dart d = start;
      do {
        used[slot(d)] = true;
        walk.steps.push_back({d.arc, d.end == ArcEnd::tail ? +1 : -1});
        d = e.next_clockwise(opposite_end(d));
      } while (!(d == start));
      result.push_back(std::move(walk));
    }
  }
  if (g.arc_count() == 0) result.emplace_back();  // the lone vertex has one face
  return result;
}

int genus_from_counts(const Multigraph& g, std::size_t face_count) {
  long euler = static_cast<long>(g.vertex_count()) - static_cast<long>(g.arc_count()) +
               static_cast<long>(face_count);
  return static_cast<int>((2 - euler) / 2);
}

}  // namespace

int genus(const PlanarEmbedding& e) {
  if (!e.host().is_connected()) throw InputError("embedding host is disconnected");
  return genus_from_counts(e.host(), trace_faces(e).size());
}

std::vector<CycleVector> faces(const PlanarEmbedding& e) {
  if (!e.host().is_connected()) throw InputError("embedding host is disconnected");
  auto walks = trace_faces(e);
  int g = genus_from_counts(e.host(), walks.size());
  if (g != 0) {
    throw InputError("rotation system is not planar: genus " + std::to_string(g) + " (" +
                     std::to_string(walks.size()) + " faces)");
  }
  return walks;
}

PlanarDual planar_dual(const PlanarEmbedding& e) {
  const Multigraph& g = e.host();
  auto walks = faces(e);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> forward_face(g.arc_count(), kNone);
  std::vector<std::size_t> backward_face(g.arc_count(), kNone);
  for (std::size_t f = 0; f < walks.size(); ++f) {
    for (const CycleStep& s : walks[f].steps) {
      (s.direction > 0 ? forward_face : backward_face)[s.arc] = f;
    }
  }
  std::vector<Id> face_ids;
  for (std::size_t f = 0; f < walks.size(); ++f) face_ids.emplace_back(static_cast<std::int64_t>(f));
  std::vector<ArcSpec> arcs;
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    arcs.push_back({g.arc(a).id, face_ids[forward_face[a]], face_ids[backward_face[a]]});
  }
  PlanarDual dual{Multigraph(std::move(face_ids), std::move(arcs)), std::move(walks), {}, {}};
  // Dual arcs reuse the primal ids, hence the same index order.
  for (ArcIndex a = 0; a < g.arc_count(); ++a) {
    dual.dual_of_primal.push_back(a);
    dual.primal_of_dual.push_back(a);
  }
  return dual;
}

PlanarEmbedding dual_embedding(const PlanarEmbedding& e) {
  PlanarDual dual = planar_dual(e);
  std::vector<std::vector<Dart>> rotation(dual.faces.size());
  for (std::size_t f = 0; f < dual.faces.size(); ++f) {
    for (const CycleStep& s : dual.faces[f].steps) {
      rotation[f].push_back({dual.dual_of_primal[s.arc], s.direction > 0 ? ArcEnd::tail : ArcEnd::head});
    }
  }
  return PlanarEmbedding(std::move(dual.graph), std::move(rotation));
}

}  // namespace bondlat
