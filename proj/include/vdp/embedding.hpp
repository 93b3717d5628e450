#pragma once

#include <utility>
#include <vector>

#include "vdp/planar_graph.hpp"

namespace vdp {

struct Embedding {
  std::vector<std::vector<Dart>> faces;  // each face as its cycle of darts, face on the left
  std::vector<FaceId> face_of;           // per dart

  int num_faces() const { return static_cast<int>(faces.size()); }
  FaceId left_face(ArcId a) const { return face_of[forward_dart(a)]; }
  FaceId right_face(ArcId a) const { return face_of[reverse_dart(a)]; }
};

// Traces all faces of the rotation system and checks Euler's formula.
// A rotation system that is not planar produces the wrong face count.
inline Embedding build_embedding(const PlanarGraph& g) {
  require(g.connected(), ErrorCode::disconnected, "graph is not connected");
  Embedding emb;
  emb.face_of.assign(g.num_darts(), -1);
  for (Dart start = 0; start < g.num_darts(); ++start) {
    if (emb.face_of[start] >= 0) continue;
    FaceId f = emb.num_faces();
    std::vector<Dart> cycle;
    Dart d = start;
    do {
      emb.face_of[d] = f;
      cycle.push_back(d);
      d = g.face_next(d);
    } while (d != start);
    emb.faces.push_back(std::move(cycle));
  }
  int64_t euler = int64_t(g.num_vertices()) - g.num_arcs() + emb.num_faces();
  if (g.num_vertices() > 0 && euler != 2)
    fail(ErrorCode::euler_violation,
         "rotation system is not planar: V-E+F = " + std::to_string(euler));
  return emb;
}

// Dual graph: one vertex per face, one edge per arc. The canonical oriented
// dual edge of arc a crosses a from right to left, i.e. runs from
// right_face(a) to left_face(a); traversing it the other way crosses the
// reverse dart right to left.
struct DualGraph {
  int num_faces = 0;
  std::vector<std::pair<FaceId, FaceId>> edge;  // per arc: (right_face, left_face)
  std::vector<std::vector<ArcId>> incident;     // per face: incident arcs (self-loop listed once)

  FaceId other(ArcId a, FaceId f) const { return edge[a].first == f ? edge[a].second : edge[a].first; }
};

inline DualGraph build_dual(const Embedding& emb, const PlanarGraph& g) {
  DualGraph dual;
  dual.num_faces = emb.num_faces();
  dual.edge.resize(g.num_arcs());
  dual.incident.resize(dual.num_faces);
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    FaceId r = emb.right_face(a), l = emb.left_face(a);
    dual.edge[a] = {r, l};
    dual.incident[r].push_back(a);
    if (l != r) dual.incident[l].push_back(a);
  }
  return dual;
}

// Dual dart crossing primal dart d from its right to its left:
// runs from the face of opposite(d) to the face of d.
inline std::pair<FaceId, FaceId> dual_dart(const Embedding& emb, Dart d) {
  return {emb.face_of[opposite(d)], emb.face_of[d]};
}

}  // namespace vdp
