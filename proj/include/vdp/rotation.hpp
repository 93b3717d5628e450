#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "vdp/eps_value.hpp"
#include "vdp/flow.hpp"

namespace vdp {

// Flow in the dual graph H* used to rotate the winding number: capacities of
// oriented dual edges are the residual lengths of the primal darts they
// cross, perturbed by one epsilon each so the minimum cut is inclusion-
// minimal; non-residual orientations get infinite capacity.
struct DualFlow {
  std::vector<EpsValue> phi_rl;  // flow on the dual dart right(a) -> left(a), per arc
  std::vector<EpsValue> phi_lr;  // flow on the dual dart left(a) -> right(a)
  EpsValue value;
};

struct WindingCircuit {
  std::vector<Dart> circuit;  // residual darts of the winding-(+-1) circuit, in traversal order
  DualFlow flow;
};

namespace detail {

// Dinic blocking-flow over EpsValue capacities. Edges come in (genuine,
// shadow) pairs at indices (2i, 2i+1).
struct DualNet {
  struct Edge {
    int to = 0;
    bool infinite = false;
    EpsValue cap;
    EpsValue flow;
    Dart dart = -1;       // primal residual/non-residual dart this genuine edge crosses
    bool genuine = false;
  };
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> adj;

  void add(int from, int to, bool infinite, EpsValue cap, Dart dart) {
    adj[from].push_back(static_cast<int>(edges.size()));
    edges.push_back({to, infinite, cap, {}, dart, true});
    adj[to].push_back(static_cast<int>(edges.size()));
    edges.push_back({from, false, {}, {}, dart, false});
  }
  bool has_residual(int e) const {
    const Edge& ed = edges[e];
    if (ed.genuine) return ed.infinite || ed.flow < ed.cap;
    return edges[e ^ 1].flow.positive();
  }
  EpsValue residual(int e) const {
    const Edge& ed = edges[e];
    if (ed.genuine) return ed.infinite ? EpsValue::infinity() : ed.cap - ed.flow;
    return edges[e ^ 1].flow;
  }
  void push(int e, const EpsValue& amount) {
    if (edges[e].genuine)
      edges[e].flow += amount;
    else
      edges[e ^ 1].flow -= amount;
  }
};

struct Dinic {
  DualNet& net;
  int t;
  std::vector<int> level, ptr;

  bool bfs(int s) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    q.push(s);
    level[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : net.adj[v]) {
        if (!net.has_residual(e) || level[net.edges[e].to] >= 0) continue;
        level[net.edges[e].to] = level[v] + 1;
        q.push(net.edges[e].to);
      }
    }
    return level[t] >= 0;
  }

  // Returns the amount pushed; zero when v is a dead end. Every augmenting
  // path contains a finite-residual edge, so the amount at t is finite.
  EpsValue dfs(int v, EpsValue limit) {
    if (v == t) {
      require(!limit.inf, ErrorCode::invariant, "augmenting path with unbounded capacity");
      return limit;
    }
    for (int& i = ptr[v]; i < static_cast<int>(net.adj[v].size()); ++i) {
      int e = net.adj[v][i];
      int to = net.edges[e].to;
      if (!net.has_residual(e) || level[to] != level[v] + 1) continue;
      EpsValue r = net.residual(e);
      EpsValue pushed = dfs(to, r < limit ? r : limit);
      if (pushed.positive()) {
        net.push(e, pushed);
        return pushed;
      }
    }
    level[v] = -1;
    return {};
  }
};

inline EpsValue dinic_max_flow(DualNet& net, int s, int t) {
  EpsValue total;
  Dinic dinic{net, t, std::vector<int>(net.n), std::vector<int>(net.n)};
  while (dinic.bfs(s)) {
    std::fill(dinic.ptr.begin(), dinic.ptr.end(), 0);
    for (;;) {
      EpsValue pushed = dinic.dfs(s, EpsValue::infinity());
      if (!pushed.positive()) break;
      total += pushed;
    }
  }
  return total;
}

}  // namespace detail

// Finds a minimum-length circuit of winding number `direction` in the
// residual graph D_x, via a maximum flow between s* and t* in the dual:
// inclusion-minimal minimum cuts correspond to such circuits. Returns
// nullopt when every dual cut needs a non-residual edge, i.e. the flow
// already has extreme winding among k-flows. Direction -1 runs the same
// construction with all arc orientations reversed.
inline std::optional<WindingCircuit> min_winding_circuit(const RingGraph& rg,
                                                         const WindingSystem& ws,
                                                         const IntegerFlow& f,
                                                         const LengthFn& kappa,
                                                         int direction) {
  require(direction == 1 || direction == -1, ErrorCode::bad_params, "direction must be +-1");
  require(nonnegative_on_residual(rg, f, kappa), ErrorCode::potential_violation,
          "min_winding_circuit requires kappa nonnegative on the residual graph");
  const PlanarGraph& g = rg.d;
  const Embedding& emb = rg.emb;

  detail::DualNet net;
  net.n = emb.num_faces();
  net.adj.resize(net.n);
  // One genuine edge per dart. For direction +1 the dual dart of dart d runs
  // from face(opposite(d)) to face(d); reversing all arcs flips it.
  for (Dart d = 0; d < g.num_darts(); ++d) {
    FaceId from = emb.face_of[opposite(d)], to = emb.face_of[d];
    if (direction < 0) std::swap(from, to);
    if (residual_has(f, d))
      net.add(from, to, false, {dart_length(kappa, d), 1, false}, d);
    else
      net.add(from, to, true, {}, d);
  }

  // If t* is reachable from s* through infinite edges alone, no finite cut
  // exists and the winding cannot move further in this direction.
  {
    std::vector<char> seen(net.n, 0);
    std::vector<int> stack{rg.face_s};
    seen[rg.face_s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : net.adj[v]) {
        const auto& ed = net.edges[e];
        if (!ed.genuine || !ed.infinite || seen[ed.to]) continue;
        seen[ed.to] = 1;
        stack.push_back(ed.to);
      }
    }
    if (seen[rg.face_t]) return std::nullopt;
  }

  EpsValue value = detail::dinic_max_flow(net, rg.face_s, rg.face_t);

  // Source side of the minimum cut.
  std::vector<char> src_side(net.n, 0);
  {
    std::vector<int> stack{rg.face_s};
    src_side[rg.face_s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : net.adj[v]) {
        if (!net.has_residual(e) || src_side[net.edges[e].to]) continue;
        src_side[net.edges[e].to] = 1;
        stack.push_back(net.edges[e].to);
      }
    }
    require(!src_side[rg.face_t], ErrorCode::invariant, "dual max flow left t* reachable");
  }

  // Cut edges carry the darts of the circuit set X; max-flow value must
  // equal the cut capacity exactly.
  EpsValue cut_value;
  std::vector<Dart> cut_darts;
  for (size_t e = 0; e < net.edges.size(); e += 2) {
    const auto& ed = net.edges[e];
    int from = net.edges[e ^ 1].to;
    if (!src_side[from] || src_side[ed.to]) continue;
    require(!ed.infinite, ErrorCode::invariant, "minimum cut uses a non-residual edge");
    require(ed.flow == ed.cap, ErrorCode::invariant, "cut edge not saturated");
    cut_value += ed.cap;
    cut_darts.push_back(ed.dart);
  }
  require(cut_value == value, ErrorCode::invariant, "max-flow value differs from min-cut value");

  // X decomposes into vertex-disjoint circuits; exactly one has winding
  // `direction`, the rest have winding zero.
  std::vector<ArcId> out_of(g.num_vertices(), -1);
  auto world = [&](Dart d) { return direction > 0 ? d : opposite(d); };
  for (Dart d : cut_darts) {
    Dart w = world(d);
    require(out_of[g.tail(w)] < 0, ErrorCode::invariant, "cut circuits are not vertex-disjoint");
    out_of[g.tail(w)] = w;
  }
  std::optional<std::vector<Dart>> result;
  std::vector<char> visited(g.num_vertices(), 0);
  for (Dart d0 : cut_darts) {
    Dart w0 = world(d0);
    if (visited[g.tail(w0)]) continue;
    std::vector<Dart> circuit;
    Dart w = w0;
    do {
      visited[g.tail(w)] = 1;
      circuit.push_back(direction > 0 ? w : opposite(w));
      Dart next = out_of[g.head(w)];
      require(next >= 0, ErrorCode::invariant, "cut set does not close into circuits");
      w = next;
    } while (w != w0);
    if (direction < 0) std::reverse(circuit.begin(), circuit.end());
    int64_t wind = ws.winding_of_darts(circuit);
    if (wind == direction) {
      require(!result.has_value(), ErrorCode::invariant,
              "minimal cut produced two circuits of winding one");
      result = std::move(circuit);
    } else {
      require(wind == 0, ErrorCode::invariant, "cut circuit with unexpected winding");
    }
  }
  require(result.has_value(), ErrorCode::invariant, "minimal cut contains no winding-one circuit");

  WindingCircuit wc;
  wc.circuit = std::move(*result);
  wc.flow.value = value;
  wc.flow.phi_rl.assign(g.num_arcs(), {});
  wc.flow.phi_lr.assign(g.num_arcs(), {});
  for (size_t e = 0; e < net.edges.size(); e += 2) {
    const auto& ed = net.edges[e];
    require(EpsValue{} <= ed.flow, ErrorCode::invariant, "negative dual flow");
    // Which dual dart does this edge occupy? For +1 it is the dual dart of
    // ed.dart; reversed for -1. The dual dart of a forward dart is
    // right->left.
    bool rl = is_forward(ed.dart) == (direction > 0);
    if (rl)
      wc.flow.phi_rl[arc_of(ed.dart)] += ed.flow;
    else
      wc.flow.phi_lr[arc_of(ed.dart)] += ed.flow;
  }
  return wc;
}

// Rotates the flow: x' = x + z^gamma for a minimum-length residual circuit
// gamma of winding `direction`, and updates kappa from the dual flow so that
// it stays nonnegative on the new residual graph, zero along gamma, and
// agrees with the old kappa on every closed walk of winding zero. Returns
// false when the winding cannot move further.
inline bool rotate_once(const RingGraph& rg, const WindingSystem& ws, IntegerFlow& f,
                        LengthFn& kappa, int direction) {
  auto wc = min_winding_circuit(rg, ws, f, kappa, direction);
  if (!wc) return false;
  const PlanarGraph& g = rg.d;
  // kappa'(a) = kappa(a) - dir * (phi(a*) - phi(a*^-1)): with the arcs
  // reversed the capacity edges sit on the opposite dual darts, so the
  // update flips sign with the direction.
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    int64_t delta = checked_sub(wc->flow.phi_rl[a].real, wc->flow.phi_lr[a].real);
    kappa[a] = direction > 0 ? checked_sub(kappa[a], delta) : checked_add(kappa[a], delta);
  }
  int64_t value_before = f.value;
  for (Dart d : wc->circuit) {
    require(residual_has(f, d), ErrorCode::invariant, "rotation circuit uses a non-residual dart");
    f.x[arc_of(d)] = is_forward(d) ? 1 : 0;
    f.winding += ws.u_of_dart(d);
    require(kappa[arc_of(d)] == 0, ErrorCode::invariant,
            "reduced length nonzero along the rotation circuit");
  }
  require(f.value == value_before, ErrorCode::invariant, "rotation changed the flow value");
  require(nonnegative_on_residual(rg, f, kappa), ErrorCode::invariant,
          "kappa not nonnegative on the residual graph after rotation");
  return true;
}

}  // namespace vdp
