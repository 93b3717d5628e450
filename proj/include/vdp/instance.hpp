#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vdp/embedding.hpp"
#include "vdp/planar_graph.hpp"

namespace vdp {

// Faces are designated by an arc side rather than a face index: face indices
// depend on traversal order, arc sides do not.
struct FaceRef {
  ArcId arc = 0;
  bool right = false;  // false: face left of the arc, true: face right of it
  bool operator==(const FaceRef&) const = default;
};

struct Instance {
  PlanarGraph graph;
  FaceRef face_s;
  FaceRef face_t;
  std::vector<std::pair<VertexId, VertexId>> pairs;  // (s_i, t_i)

  int k() const { return static_cast<int>(pairs.size()); }
  bool operator==(const Instance&) const = default;
};

// Instance after validation and pipeline transformations. `graph` may differ
// from the input graph (leaf pruning, pendant terminals); `arc_to_input`
// projects its arcs back to input arc ids (-1 for added arcs) and
// `pair_to_input` tracks terminal reindexing.
struct CheckedInstance {
  PlanarGraph graph;
  Embedding emb;
  FaceId face_s = -1;
  FaceId face_t = -1;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<ArcId> arc_to_input;
  std::vector<int> pair_to_input;
  bool pendants_attached = false;
  std::vector<ArcId> pendant_s, pendant_t;  // per pair, once pendants are attached

  int k() const { return static_cast<int>(pairs.size()); }
};

inline FaceId resolve_face(const Embedding& emb, FaceRef ref, int num_arcs) {
  require(ref.arc >= 0 && ref.arc < num_arcs, ErrorCode::bad_params,
          "face designator references missing arc " + std::to_string(ref.arc));
  return ref.right ? emb.right_face(ref.arc) : emb.left_face(ref.arc);
}

inline std::vector<char> vertices_on_face(const PlanarGraph& g, const Embedding& emb, FaceId f) {
  std::vector<char> on(g.num_vertices(), 0);
  for (Dart d : emb.faces[f]) on[g.tail(d)] = 1;
  return on;
}

inline CheckedInstance validate_instance(const Instance& inst) {
  CheckedInstance ci;
  ci.graph = inst.graph;
  ci.emb = build_embedding(ci.graph);
  ci.face_s = resolve_face(ci.emb, inst.face_s, ci.graph.num_arcs());
  ci.face_t = resolve_face(ci.emb, inst.face_t, ci.graph.num_arcs());
  require(ci.face_s != ci.face_t, ErrorCode::same_face, "faces s and t coincide");
  auto on_s = vertices_on_face(ci.graph, ci.emb, ci.face_s);
  auto on_t = vertices_on_face(ci.graph, ci.emb, ci.face_t);
  for (int i = 0; i < inst.k(); ++i) {
    auto [s, t] = inst.pairs[i];
    require(s >= 0 && s < ci.graph.num_vertices() && t >= 0 && t < ci.graph.num_vertices(),
            ErrorCode::bad_params, "terminal pair " + std::to_string(i) + " references missing vertex");
    require(on_s[s], ErrorCode::terminal_not_on_face,
            "terminal s_" + std::to_string(i + 1) + " is not incident with face s");
    require(on_t[t], ErrorCode::terminal_not_on_face,
            "terminal t_" + std::to_string(i + 1) + " is not incident with face t");
  }
  ci.pairs = inst.pairs;
  ci.arc_to_input.resize(ci.graph.num_arcs());
  for (ArcId a = 0; a < ci.graph.num_arcs(); ++a) ci.arc_to_input[a] = a;
  ci.pair_to_input.resize(inst.k());
  for (int i = 0; i < inst.k(); ++i) ci.pair_to_input[i] = i;
  return ci;
}

inline Instance mirrored(const Instance& inst) {
  Instance m;
  m.graph = mirrored(inst.graph);
  // Reversing rotations swaps the left and right side of every arc.
  m.face_s = {inst.face_s.arc, !inst.face_s.right};
  m.face_t = {inst.face_t.arc, !inst.face_t.right};
  m.pairs = inst.pairs;
  return m;
}

}  // namespace vdp
