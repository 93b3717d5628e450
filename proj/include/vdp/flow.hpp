#pragma once

#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "vdp/winding.hpp"

namespace vdp {

// 0/1 flow on the arcs of D with cached value and winding number. Flow
// conservation holds at every non-terminal vertex; by the degree-3 property
// the support is a set of vertex-disjoint (s,t)-paths and circuits.
struct IntegerFlow {
  std::vector<uint8_t> x;
  int64_t value = 0;
  int64_t winding = 0;
};

// Exact per-arc length function; the antisymmetric extension to reversed
// arcs is realized by dart_length below.
using LengthFn = std::vector<int64_t>;

inline IntegerFlow zero_flow(const RingGraph& rg) {
  IntegerFlow f;
  f.x.assign(rg.d.num_arcs(), 0);
  return f;
}

// The residual graph D_x keeps arcs with x=0 and reverses arcs with x=1,
// negating their length and winding contribution.
inline bool residual_has(const IntegerFlow& f, Dart d) {
  return f.x[arc_of(d)] == (is_forward(d) ? 0 : 1);
}

// kappa is a per-arc length function, implicitly antisymmetric on reversed
// arcs: kappa(a^-1) = -kappa(a).
inline int64_t dart_length(const LengthFn& kappa, Dart d) {
  return is_forward(d) ? kappa[arc_of(d)] : -kappa[arc_of(d)];
}

// kappa is "nonnegative on D_x" when every residual dart has nonnegative
// length.
inline bool nonnegative_on_residual(const RingGraph& rg, const IntegerFlow& f,
                                    const LengthFn& kappa) {
  for (ArcId a = 0; a < rg.d.num_arcs(); ++a) {
    if (f.x[a] == 0 ? kappa[a] < 0 : kappa[a] > 0) return false;
  }
  return true;
}

inline int64_t flow_cost(const RingGraph& rg, const IntegerFlow& f) {
  int64_t c = 0;
  for (ArcId a = 0; a < rg.d.num_arcs(); ++a)
    if (f.x[a]) c = checked_add(c, rg.d.length(a));
  return c;
}

namespace detail {

// Shortest-path tree of the residual graph from a virtual super-source
// attached to every s'_i by a zero-length arc. Binary-heap Dijkstra with
// ties broken by vertex id.
struct DijkstraResult {
  std::vector<int64_t> dist;
  std::vector<Dart> parent;
  int64_t max_finite = 0;
  bool any_unreachable = false;
};

inline DijkstraResult residual_dijkstra(const RingGraph& rg, const IntegerFlow& f,
                                        const LengthFn& kappa) {
  constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
  const PlanarGraph& g = rg.d;
  DijkstraResult res;
  res.dist.assign(g.num_vertices(), kInf);
  res.parent.assign(g.num_vertices(), -1);
  using Item = std::pair<int64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (int i = 0; i < rg.k; ++i) {
    VertexId s = rg.src_term[i];
    if (res.dist[s] != 0) {
      res.dist[s] = 0;
      heap.push({0, s});
    }
  }
  while (!heap.empty()) {
    auto [dv, v] = heap.top();
    heap.pop();
    if (dv != res.dist[v]) continue;
    for (Dart d : rg.out_darts_all[v]) {
      if (!residual_has(f, d)) continue;
      int64_t len = dart_length(kappa, d);
      require(len >= 0, ErrorCode::potential_violation,
              "length function negative on residual arc");
      VertexId w = g.head(d);
      int64_t nd = checked_add(dv, len);
      if (nd < res.dist[w]) {
        res.dist[w] = nd;
        res.parent[w] = d;
        heap.push({nd, w});
      }
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (res.dist[v] == kInf)
      res.any_unreachable = true;
    else if (res.dist[v] > res.max_finite)
      res.max_finite = res.dist[v];
  }
  return res;
}

}  // namespace detail

// One augmentation step: route one more unit along a shortest residual
// (s,t)-path and reweight kappa by the Dijkstra potentials so it stays
// nonnegative on the new residual graph and zero along the path. The new
// kappa agrees with the old one on every closed walk. Returns false when no
// residual (s,t)-path exists, i.e. the flow value is maximal.
inline bool augment_once(const RingGraph& rg, const WindingSystem& ws, IntegerFlow& f,
                         LengthFn& kappa) {
  const PlanarGraph& g = rg.d;
  require(nonnegative_on_residual(rg, f, kappa), ErrorCode::potential_violation,
          "augment_once requires kappa nonnegative on the residual graph");
  auto dij = detail::residual_dijkstra(rg, f, kappa);

  int best = -1;
  for (int i = 0; i < rg.k; ++i) {
    if (f.x[rg.dst_arc[i]]) continue;  // already carries a unit into t'_i
    VertexId t = rg.dst_term[i];
    if (dij.dist[t] == std::numeric_limits<int64_t>::max()) continue;
    if (best < 0 || dij.dist[t] < dij.dist[rg.dst_term[best]]) best = i;
  }
  if (best < 0) return false;

  // Unreachable vertices take the largest finite distance; arcs between two
  // unreachable endpoints keep their length, and nonnegativity is re-checked
  // below.
  auto potential = [&](VertexId v) {
    return dij.dist[v] == std::numeric_limits<int64_t>::max() ? dij.max_finite : dij.dist[v];
  };
  for (ArcId a = 0; a < g.num_arcs(); ++a)
    kappa[a] = checked_add(kappa[a], checked_sub(potential(g.arc(a).src), potential(g.arc(a).dst)));

  for (VertexId v = rg.dst_term[best]; dij.parent[v] >= 0; v = g.tail(dij.parent[v])) {
    Dart d = dij.parent[v];
    f.x[arc_of(d)] = is_forward(d) ? 1 : 0;
    f.winding += ws.u_of_dart(d);
    require(kappa[arc_of(d)] == 0, ErrorCode::invariant,
            "reduced length nonzero on the augmenting path");
  }
  f.value += 1;
  require(nonnegative_on_residual(rg, f, kappa), ErrorCode::invariant,
          "kappa not nonnegative on the residual graph after augmentation");
  return true;
}

struct MaxFlowOutcome {
  IntegerFlow flow;
  LengthFn kappa;  // agrees with lambda on closed walks, nonnegative on D_x
};

// Successive shortest augmentations from the zero flow. Returns nullopt when
// the maximum value is below k; otherwise the result is a minimum-cost
// k-flow with respect to the arc lengths of D.
inline std::optional<MaxFlowOutcome> max_value_flow(const RingGraph& rg, const WindingSystem& ws) {
  MaxFlowOutcome out;
  out.flow = zero_flow(rg);
  out.kappa.resize(rg.d.num_arcs());
  for (ArcId a = 0; a < rg.d.num_arcs(); ++a) out.kappa[a] = rg.d.length(a);
  for (int p = 0; p < rg.k; ++p) {
    if (!augment_once(rg, ws, out.flow, out.kappa)) return std::nullopt;
    require(out.flow.value == p + 1, ErrorCode::invariant, "flow value did not increase by one");
  }
  return out;
}

// Paths and circuits of an integer flow's support. Each interior vertex
// carries at most one unit, so successors are unique.
struct Decomposition {
  std::vector<std::vector<ArcId>> paths;  // D-arc sequences, one per unit of value
  std::vector<int> src_pair, dst_pair;    // which s'_i / t'_j each path connects
  std::vector<std::vector<ArcId>> circuits;
};

inline Decomposition decompose_flow(const RingGraph& rg, const IntegerFlow& f) {
  const PlanarGraph& g = rg.d;
  std::vector<ArcId> out_arc(g.num_vertices(), -1);
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (!f.x[a]) continue;
    require(out_arc[g.arc(a).src] < 0, ErrorCode::invariant, "two flow arcs leave one vertex");
    out_arc[g.arc(a).src] = a;
  }
  std::vector<int> pair_of_terminal(g.num_vertices(), -1);
  for (int i = 0; i < rg.k; ++i) pair_of_terminal[rg.dst_term[i]] = i;

  Decomposition dec;
  std::vector<char> used(g.num_arcs(), 0);
  for (int i = 0; i < rg.k; ++i) {
    VertexId v = rg.src_term[i];
    if (out_arc[v] < 0) continue;
    std::vector<ArcId> path;
    while (out_arc[v] >= 0) {
      ArcId a = out_arc[v];
      require(!used[a], ErrorCode::invariant, "flow decomposition revisits an arc");
      used[a] = 1;
      path.push_back(a);
      v = g.arc(a).dst;
    }
    require(pair_of_terminal[v] >= 0, ErrorCode::invariant, "flow path ends off the terminals");
    dec.paths.push_back(std::move(path));
    dec.src_pair.push_back(i);
    dec.dst_pair.push_back(pair_of_terminal[v]);
  }
  for (ArcId a0 = 0; a0 < g.num_arcs(); ++a0) {
    if (!f.x[a0] || used[a0]) continue;
    std::vector<ArcId> circuit;
    ArcId a = a0;
    do {
      used[a] = 1;
      circuit.push_back(a);
      a = out_arc[g.arc(a).dst];
      require(a >= 0, ErrorCode::invariant, "flow conservation broken in decomposition");
    } while (a != a0);
    dec.circuits.push_back(std::move(circuit));
  }
  return dec;
}

// Removes every circuit from the flow's support. For flows of positive value
// circuits have winding number zero, so value and winding are unchanged and
// the cost cannot increase. Returns the removed cost.
inline int64_t strip_circuits(const RingGraph& rg, const WindingSystem& ws, IntegerFlow& f) {
  Decomposition dec = decompose_flow(rg, f);
  int64_t removed = 0;
  for (const auto& circuit : dec.circuits) {
    if (f.value > 0)
      require(ws.winding_of_arcs(circuit) == 0, ErrorCode::invariant,
              "support circuit of a positive-value flow has nonzero winding");
    for (ArcId a : circuit) {
      f.x[a] = 0;
      f.winding -= ws.u[a];
      removed = checked_add(removed, rg.d.length(a));
    }
  }
  return removed;
}

}  // namespace vdp
