#pragma once

#include <optional>
#include <random>
#include <vector>

#include "vdp/flow.hpp"
#include "vdp/gadget.hpp"
#include "vdp/instance.hpp"
#include "vdp/winding.hpp"

namespace vdptest {

using namespace vdp;

// Square on v1..v4 with two parallel v1->v3 routes:
//   a0: v1->v2 (1), a1: v2->v3 (2), a2: v1->v4 (3), a3: v4->v3 (4).
// s is the inner face, t the outer; k=1 connects v1 to v3.
inline Instance square_instance() {
  std::vector<Arc> arcs{{0, 1, 1}, {1, 2, 2}, {0, 3, 3}, {3, 2, 4}};
  std::vector<std::vector<Dart>> rot{
      {forward_dart(2), forward_dart(0)},
      {reverse_dart(0), forward_dart(1)},
      {reverse_dart(1), reverse_dart(3)},
      {forward_dart(3), reverse_dart(2)},
  };
  Instance inst;
  inst.graph = PlanarGraph(std::move(arcs), std::move(rot));
  inst.face_s = {0, false};
  inst.face_t = {0, true};
  inst.pairs = {{0, 2}};
  return inst;
}

inline Instance square_instance_k2(bool crossing) {
  Instance inst = square_instance();
  inst.pairs = crossing ? std::vector<std::pair<VertexId, VertexId>>{{0, 2}, {1, 3}}
                        : std::vector<std::pair<VertexId, VertexId>>{{0, 3}, {1, 2}};
  return inst;
}

// Directed 4-cycle v1->v2->v3->v4->v1.
inline PlanarGraph directed_cycle4() {
  std::vector<Arc> arcs{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}};
  std::vector<std::vector<Dart>> rot{
      {reverse_dart(3), forward_dart(0)},
      {reverse_dart(0), forward_dart(1)},
      {reverse_dart(1), forward_dart(2)},
      {forward_dart(3), reverse_dart(2)},
  };
  return PlanarGraph(std::move(arcs), std::move(rot));
}

// Planar K4; with `corrupt` one rotation is reversed, which breaks Euler.
inline PlanarGraph k4_graph(bool corrupt) {
  std::vector<Arc> arcs{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {0, 3, 1}, {1, 3, 1}, {2, 3, 1}};
  std::vector<std::vector<Dart>> rot{
      {forward_dart(2), forward_dart(3), forward_dart(0)},
      {reverse_dart(0), forward_dart(4), forward_dart(1)},
      {reverse_dart(1), forward_dart(5), reverse_dart(2)},
      {reverse_dart(4), reverse_dart(3), reverse_dart(5)},
  };
  if (corrupt) std::reverse(rot[3].begin(), rot[3].end());
  return PlanarGraph(std::move(arcs), std::move(rot));
}

// Two vertices joined by three parallel arcs; three faces.
inline PlanarGraph theta_graph() {
  std::vector<Arc> arcs{{0, 1, 1}, {0, 1, 1}, {0, 1, 1}};
  std::vector<std::vector<Dart>> rot{
      {forward_dart(0), forward_dart(1), forward_dart(2)},
      {reverse_dart(2), reverse_dart(1), reverse_dart(0)},
  };
  return PlanarGraph(std::move(arcs), std::move(rot));
}

inline PlanarGraph single_arc_graph() {
  return PlanarGraph({{0, 1, 5}}, {{forward_dart(0)}, {reverse_dart(0)}});
}

// Nested squares joined by one spoke, k=4, radial pairing. Arc ids place the
// first dual BFS crossing between s_3 and s_4 and the last between t_1 and
// t_2, so m = m_s - m_t = 3 - 1 = 2.
inline Instance annulus_m2_instance() {
  std::vector<Arc> arcs{
      {2, 3, 1},  // 0: inner a2->a3  (first crossing of U)
      {0, 1, 1},  // 1: inner a0->a1
      {1, 2, 1},  // 2: inner a1->a2
      {3, 0, 1},  // 3: inner a3->a0
      {4, 5, 1},  // 4: outer b0->b1  (last crossing of U)
      {5, 6, 1},  // 5: outer b1->b2
      {6, 7, 1},  // 6: outer b2->b3
      {7, 4, 1},  // 7: outer b3->b0
      {0, 4, 1},  // 8: spoke a0->b0
  };
  std::vector<std::vector<Dart>> rot{
      {forward_dart(1), reverse_dart(3), forward_dart(8)},
      {forward_dart(2), reverse_dart(1)},
      {forward_dart(0), reverse_dart(2)},
      {reverse_dart(0), forward_dart(3)},
      {forward_dart(4), reverse_dart(8), reverse_dart(7)},
      {forward_dart(5), reverse_dart(4)},
      {forward_dart(6), reverse_dart(5)},
      {reverse_dart(6), forward_dart(7)},
  };
  Instance inst;
  inst.graph = PlanarGraph(std::move(arcs), std::move(rot));
  inst.face_s = {0, true};
  inst.face_t = {4, false};
  inst.pairs = {{0, 4}, {1, 5}, {2, 6}, {3, 7}};
  return inst;
}

// Directed 6-cycle with a pairing whose clockwise orders cannot be aligned.
inline Instance hexagon_order_infeasible() {
  std::vector<Arc> arcs;
  std::vector<std::vector<Dart>> rot(6);
  for (int i = 0; i < 6; ++i) arcs.push_back({i, (i + 1) % 6, 1});
  for (int i = 0; i < 6; ++i)
    rot[i] = {forward_dart(i), reverse_dart((i + 5) % 6)};
  Instance inst;
  inst.graph = PlanarGraph(std::move(arcs), std::move(rot));
  inst.face_s = {0, true};
  inst.face_t = {0, false};
  inst.pairs = {{0, 3}, {1, 5}, {2, 4}};
  return inst;
}

// validate -> prune -> pendants -> order -> rings -> winding system.
struct Pipeline {
  CheckedInstance ci;
  RingGraph rg;
  WindingSystem ws;
};

inline std::optional<Pipeline> run_pipeline(const Instance& inst, uint64_t seed_u = 0) {
  CheckedInstance ci = prune_leaves(validate_instance(inst));
  ci = attach_pendants(ci);
  auto ordered = order_terminals(ci);
  if (!ordered) return std::nullopt;
  Pipeline p{*ordered, {}, {}};
  p.rg = build_ring_graph(p.ci);
  p.ws = build_winding_system(p.rg, seed_u);
  return p;
}

// Random closed walk in (W, A u A^-1): a walk returning to its start vertex.
inline std::vector<Dart> random_closed_walk(const PlanarGraph& g, std::mt19937_64& rng,
                                            int max_len = 64) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    VertexId start = static_cast<VertexId>(rng() % g.num_vertices());
    std::vector<Dart> walk;
    VertexId v = start;
    for (int step = 0; step < max_len; ++step) {
      const auto& out = g.rotation(v);
      Dart d = out[rng() % out.size()];
      walk.push_back(d);
      v = g.head(d);
      if (v == start && !walk.empty()) return walk;
    }
  }
  return {};
}

// Random directed circuit (no vertex repeats) in (W, A u A^-1).
inline std::vector<Dart> random_circuit(const PlanarGraph& g, std::mt19937_64& rng,
                                        int max_len = 256) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Dart> walk;
    std::vector<int> pos(g.num_vertices(), -1);
    VertexId v = static_cast<VertexId>(rng() % g.num_vertices());
    pos[v] = 0;
    for (int step = 0; step < max_len; ++step) {
      const auto& out = g.rotation(v);
      Dart d = out[rng() % out.size()];
      VertexId w = g.head(d);
      if (pos[w] >= 0) {
        walk.push_back(d);
        return std::vector<Dart>(walk.begin() + pos[w], walk.end());
      }
      walk.push_back(d);
      v = w;
      pos[w] = static_cast<int>(walk.size());
    }
  }
  return {};
}

inline int64_t walk_length(const std::vector<int64_t>& kappa, const std::vector<Dart>& walk) {
  int64_t len = 0;
  for (Dart d : walk) len = checked_add(len, dart_length(kappa, d));
  return len;
}

}  // namespace vdptest
