#pragma once

#include <numeric>
#include <queue>
#include <random>
#include <span>
#include <vector>

#include "vdp/gadget.hpp"

namespace vdp {

// Winding bookkeeping for flows in D. U is a fixed dual path from s* to t*;
// u(a) is +1 when a crosses U from left to right, -1 when from right to
// left, 0 otherwise. The winding number of a flow x is u'x; it counts how
// often the flow wraps the annulus between s and t.
struct WindingSystem {
  std::vector<int8_t> u;          // per D-arc
  std::vector<Dart> crossings;    // darts crossed by U, in order from s* to t*
  int k = 0;
  int m_s = 0, m_t = 0;           // 0-based: U enters between terminal m and m+1
  int64_t m = 0;                  // m_s - m_t

  int64_t u_of_dart(Dart d) const {
    int8_t v = u[arc_of(d)];
    return is_forward(d) ? v : -v;
  }
  int64_t winding_of_darts(std::span<const Dart> walk) const {
    int64_t w = 0;
    for (Dart d : walk) w += u_of_dart(d);
    return w;
  }
  int64_t winding_of_arcs(std::span<const ArcId> arcs) const {
    int64_t w = 0;
    for (ArcId a : arcs) w += u[a];
    return w;
  }
};

// Locates the terminal immediately preceding `target` in the clockwise walk
// around the face. `markers[i]` is the boundary dart marking terminal i.
inline int preceding_terminal(const std::vector<Dart>& cw_cycle,
                              const std::vector<Dart>& markers, Dart target) {
  int last_terminal = -1;
  // Two sweeps so a terminal wrapping around the cycle end is seen.
  for (int sweep = 0; sweep < 2; ++sweep) {
    for (Dart d : cw_cycle) {
      for (size_t i = 0; i < markers.size(); ++i)
        if (markers[i] == d) last_terminal = static_cast<int>(i);
      if (d == target && sweep == 1) return last_terminal;
    }
  }
  fail(ErrorCode::invariant, "crossing dart not found on face boundary");
}

// Builds the winding system: U is chosen by breadth-first search in the dual
// graph of D from s* to t*, scanning dual edges in arc-id order (or in a
// seed-permuted order, used to test that optima do not depend on the choice
// of U).
inline WindingSystem build_winding_system(const RingGraph& rg, uint64_t seed_u = 0) {
  const PlanarGraph& g = rg.d;
  const Embedding& emb = rg.emb;
  DualGraph dual = build_dual(emb, g);

  std::vector<int> rank(g.num_arcs());
  std::iota(rank.begin(), rank.end(), 0);
  if (seed_u != 0) {
    std::mt19937_64 rng(seed_u);
    for (int i = g.num_arcs() - 1; i > 0; --i) {
      int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
      std::swap(rank[i], rank[j]);
    }
  }
  for (auto& inc : dual.incident)
    std::sort(inc.begin(), inc.end(), [&](ArcId a, ArcId b) { return rank[a] < rank[b]; });

  std::vector<ArcId> parent_arc(dual.num_faces, -1);
  std::vector<FaceId> parent_face(dual.num_faces, -1);
  std::vector<char> seen(dual.num_faces, 0);
  std::queue<FaceId> bfs;
  bfs.push(rg.face_s);
  seen[rg.face_s] = 1;
  while (!bfs.empty() && !seen[rg.face_t]) {
    FaceId f = bfs.front();
    bfs.pop();
    for (ArcId a : dual.incident[f]) {
      FaceId o = dual.other(a, f);
      if (o == f || seen[o]) continue;
      seen[o] = 1;
      parent_arc[o] = a;
      parent_face[o] = f;
      bfs.push(o);
    }
  }
  require(seen[rg.face_t], ErrorCode::invariant, "dual graph is not connected");

  WindingSystem ws;
  ws.k = rg.k;
  ws.u.assign(g.num_arcs(), 0);
  for (FaceId f = rg.face_t; f != rg.face_s; f = parent_face[f]) {
    ArcId a = parent_arc[f];
    // U crosses arc a moving from parent_face[f] into f. The dart it crosses
    // right to left is the one with parent_face on its right.
    Dart d = emb.face_of[forward_dart(a)] == f ? forward_dart(a) : reverse_dart(a);
    require(emb.face_of[opposite(d)] == parent_face[f] && emb.face_of[d] == f,
            ErrorCode::invariant, "dual BFS produced an inconsistent crossing");
    ws.crossings.push_back(d);
    ws.u[a] = is_forward(d) ? int8_t{1} : int8_t{-1};
  }
  std::reverse(ws.crossings.begin(), ws.crossings.end());

  // m_s and m_t: where U leaves s and enters t relative to the clockwise
  // terminal order. The marker of a terminal is the boundary dart leaving it.
  {
    std::vector<Dart> markers(rg.k);
    for (int i = 0; i < rg.k; ++i) markers[i] = forward_dart(rg.src_arc[i]);
    auto cw = clockwise_cycle(emb, rg.face_s, false);
    ws.m_s = preceding_terminal(cw, markers, opposite(ws.crossings.front()));
  }
  {
    std::vector<Dart> markers(rg.k);
    for (int i = 0; i < rg.k; ++i) markers[i] = reverse_dart(rg.dst_arc[i]);
    auto cw = clockwise_cycle(emb, rg.face_t, true);
    ws.m_t = preceding_terminal(cw, markers, ws.crossings.back());
  }
  ws.m = ws.m_s - ws.m_t;
  return ws;
}

}  // namespace vdp
