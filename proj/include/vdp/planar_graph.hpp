#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vdp/errors.hpp"

namespace vdp {

using VertexId = int32_t;
using ArcId = int32_t;
using FaceId = int32_t;

// A dart is one of the two traversal directions of an arc: 2*arc for the
// forward direction (src -> dst), 2*arc+1 for the reverse. Rotation lists
// store, per vertex, the darts leaving that vertex in clockwise plane order;
// this is the same thing as the vertex's arc-ends, each oriented outward
// ("out" end of an arc <-> its forward dart, "in" end <-> its reverse dart).
using Dart = int32_t;

inline constexpr Dart forward_dart(ArcId a) { return 2 * a; }
inline constexpr Dart reverse_dart(ArcId a) { return 2 * a + 1; }
inline constexpr Dart opposite(Dart d) { return d ^ 1; }
inline constexpr ArcId arc_of(Dart d) { return d >> 1; }
inline constexpr bool is_forward(Dart d) { return (d & 1) == 0; }

struct Arc {
  VertexId src = 0;
  VertexId dst = 0;
  int64_t length = 0;
  bool operator==(const Arc&) const = default;
};

class PlanarGraph {
public:
  PlanarGraph() = default;

  // Validates structure: no self-loops, nonnegative lengths, and every dart
  // present exactly once in the rotation of its tail vertex.
  PlanarGraph(std::vector<Arc> arcs, std::vector<std::vector<Dart>> rotation)
      : arcs_(std::move(arcs)), rot_(std::move(rotation)) {
    const int n = static_cast<int>(rot_.size());
    const int m = static_cast<int>(arcs_.size());
    for (ArcId a = 0; a < m; ++a) {
      const Arc& arc = arcs_[a];
      require(arc.src >= 0 && arc.src < n && arc.dst >= 0 && arc.dst < n,
              ErrorCode::malformed_rotation, "arc " + std::to_string(a) + " references missing vertex");
      require(arc.src != arc.dst, ErrorCode::self_loop,
              "self-loop at vertex " + std::to_string(arc.src));
      require(arc.length >= 0, ErrorCode::negative_length,
              "negative length on arc " + std::to_string(a));
    }
    rot_pos_.assign(2 * m, -1);
    for (VertexId v = 0; v < n; ++v) {
      for (size_t i = 0; i < rot_[v].size(); ++i) {
        Dart d = rot_[v][i];
        require(d >= 0 && d < 2 * m, ErrorCode::malformed_rotation,
                "rotation of vertex " + std::to_string(v) + " references missing arc-end");
        require(rot_pos_[d] < 0, ErrorCode::malformed_rotation,
                "duplicated arc-end in rotations (arc " + std::to_string(arc_of(d)) + ")");
        require(tail(d) == v, ErrorCode::malformed_rotation,
                "arc-end of arc " + std::to_string(arc_of(d)) + " listed at wrong vertex");
        rot_pos_[d] = static_cast<int32_t>(i);
      }
    }
    for (Dart d = 0; d < 2 * m; ++d)
      require(rot_pos_[d] >= 0, ErrorCode::malformed_rotation,
              "arc-end of arc " + std::to_string(arc_of(d)) + " missing from rotations");
  }

  int num_vertices() const { return static_cast<int>(rot_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  int num_darts() const { return 2 * num_arcs(); }

  const Arc& arc(ArcId a) const { return arcs_[a]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int64_t length(ArcId a) const { return arcs_[a].length; }

  VertexId tail(Dart d) const { return is_forward(d) ? arcs_[arc_of(d)].src : arcs_[arc_of(d)].dst; }
  VertexId head(Dart d) const { return is_forward(d) ? arcs_[arc_of(d)].dst : arcs_[arc_of(d)].src; }

  const std::vector<Dart>& rotation(VertexId v) const { return rot_[v]; }
  const std::vector<std::vector<Dart>>& rotations() const { return rot_; }
  int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }

  // Face-traversal rule (fixes the global chirality convention): after
  // arriving at head(d) through dart d, the face continues with the arc-end
  // immediately after opposite(d) in the clockwise rotation, oriented
  // outward. With clockwise rotations this traces every face with the face
  // on the LEFT of each dart.
  Dart face_next(Dart d) const {
    VertexId v = head(d);
    Dart e = opposite(d);
    const auto& r = rot_[v];
    size_t i = static_cast<size_t>(rot_pos_[e]) + 1;
    if (i == r.size()) i = 0;
    return r[i];
  }

  bool connected() const {
    if (num_vertices() == 0) return true;
    std::vector<char> seen(num_vertices(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (Dart d : rot_[v]) {
        VertexId w = head(d);
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == num_vertices();
  }

  bool operator==(const PlanarGraph& o) const { return arcs_ == o.arcs_ && rot_ == o.rot_; }

private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<Dart>> rot_;
  std::vector<int32_t> rot_pos_;
};

// Mirror image: reversing every rotation list flips the orientation of the
// plane. Solutions of mirrored instances have the same optimal cost.
inline PlanarGraph mirrored(const PlanarGraph& g) {
  std::vector<std::vector<Dart>> rot = g.rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return PlanarGraph(g.arcs(), std::move(rot));
}

}  // namespace vdp
