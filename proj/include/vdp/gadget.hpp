#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vdp/instance.hpp"

namespace vdp {

// Clockwise boundary cycle of a face. Face traces carry the face on the left,
// which runs counterclockwise in the drawing for every face except the outer
// one; t is declared the outer face, so clockwise order is trace order for t
// and reversed trace order for every other face.
inline std::vector<Dart> clockwise_cycle(const Embedding& emb, FaceId f, bool is_outer) {
  std::vector<Dart> cyc = emb.faces[f];
  if (!is_outer) std::reverse(cyc.begin(), cyc.end());
  return cyc;
}

// Removes non-terminal degree-1 vertices iteratively. They cannot lie on any
// terminal path, and the ring gadget requires degree >= 2.
inline CheckedInstance prune_leaves(const CheckedInstance& ci) {
  const PlanarGraph& g = ci.graph;
  std::vector<char> is_terminal(g.num_vertices(), 0);
  for (auto [s, t] : ci.pairs) {
    is_terminal[s] = 1;
    is_terminal[t] = 1;
  }
  std::vector<int> deg(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
  std::vector<char> dead_vertex(g.num_vertices(), 0), dead_arc(g.num_arcs(), 0);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (deg[v] == 1 && !is_terminal[v]) queue.push_back(v);
  bool any = false;
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    if (dead_vertex[v] || deg[v] != 1) continue;
    Dart live = -1;
    for (Dart d : g.rotation(v))
      if (!dead_arc[arc_of(d)]) live = d;
    if (live < 0) continue;
    dead_vertex[v] = 1;
    dead_arc[arc_of(live)] = 1;
    any = true;
    VertexId w = g.head(live);
    if (--deg[w] == 1 && !is_terminal[w]) queue.push_back(w);
  }
  if (!any) return ci;

  std::vector<VertexId> vmap(g.num_vertices(), -1);
  int nv = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!dead_vertex[v]) vmap[v] = nv++;
  std::vector<ArcId> amap(g.num_arcs(), -1);
  std::vector<Arc> arcs;
  std::vector<ArcId> arc_to_input;
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (dead_arc[a]) continue;
    amap[a] = static_cast<ArcId>(arcs.size());
    arcs.push_back({vmap[g.arc(a).src], vmap[g.arc(a).dst], g.arc(a).length});
    arc_to_input.push_back(ci.arc_to_input[a]);
  }
  std::vector<std::vector<Dart>> rot(nv);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (dead_vertex[v]) continue;
    for (Dart d : g.rotation(v))
      if (!dead_arc[arc_of(d)]) rot[vmap[v]].push_back(2 * amap[arc_of(d)] + (d & 1));
  }
  // Face identity survives through a representative dart on a live arc.
  auto live_dart_on = [&](FaceId f) -> Dart {
    for (Dart d : ci.emb.faces[f])
      if (!dead_arc[arc_of(d)]) return 2 * amap[arc_of(d)] + (d & 1);
    fail(ErrorCode::invariant, "designated face lost all arcs during pruning");
  };
  Dart rep_s = live_dart_on(ci.face_s), rep_t = live_dart_on(ci.face_t);

  CheckedInstance out;
  out.graph = PlanarGraph(std::move(arcs), std::move(rot));
  out.emb = build_embedding(out.graph);
  out.face_s = out.emb.face_of[rep_s];
  out.face_t = out.emb.face_of[rep_t];
  out.pairs.reserve(ci.pairs.size());
  for (auto [s, t] : ci.pairs) out.pairs.push_back({vmap[s], vmap[t]});
  out.arc_to_input = std::move(arc_to_input);
  out.pair_to_input = ci.pair_to_input;
  return out;
}

// Attaches a degree-1 pendant terminal s'_i inside face s with a zero-length
// arc (s'_i, s_i), and symmetrically t'_i inside t; the pendants replace the
// original vertices as terminals. The new arc-end is inserted at the corner
// of the designated face at the vertex's first occurrence in face-trace
// order, stacked so that the clockwise order of pendants around the face
// matches pair order.
inline CheckedInstance attach_pendants(const CheckedInstance& ci) {
  require(!ci.pendants_attached, ErrorCode::bad_params, "pendants already attached");
  const PlanarGraph& g = ci.graph;
  std::vector<Arc> arcs = g.arcs();
  std::vector<std::vector<Dart>> rot = g.rotations();
  int nv = g.num_vertices();

  auto corner_end = [&](FaceId f, VertexId v) -> Dart {
    for (Dart d : ci.emb.faces[f])
      if (g.head(d) == v) return opposite(d);
    fail(ErrorCode::invariant, "terminal vertex not found on its face");
  };
  auto insert_after = [&](VertexId v, Dart anchor, Dart new_dart) {
    auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), anchor);
    r.insert(it + 1, new_dart);
  };

  CheckedInstance out;
  out.pairs.resize(ci.k());
  out.pendant_s.resize(ci.k());
  out.pendant_t.resize(ci.k());
  std::map<std::pair<VertexId, Dart>, Dart> last_at_corner;  // t side stacks after previous pendant
  Dart rep_s = ci.emb.faces[ci.face_s].empty() ? -1 : ci.emb.faces[ci.face_s][0];
  Dart rep_t = ci.emb.faces[ci.face_t].empty() ? -1 : ci.emb.faces[ci.face_t][0];

  for (int i = 0; i < ci.k(); ++i) {
    auto [sv, tv] = ci.pairs[i];
    {  // s'_i -> s_i, embedded inside s
      ArcId a = static_cast<ArcId>(arcs.size());
      VertexId pv = nv++;
      arcs.push_back({pv, sv, 0});
      rot.push_back({forward_dart(a)});
      insert_after(sv, corner_end(ci.face_s, sv), reverse_dart(a));
      out.pendant_s[i] = a;
      out.pairs[i].first = pv;
    }
    {  // t_i -> t'_i, embedded inside t
      ArcId a = static_cast<ArcId>(arcs.size());
      VertexId pv = nv++;
      arcs.push_back({tv, pv, 0});
      rot.push_back({reverse_dart(a)});
      Dart corner = corner_end(ci.face_t, tv);
      auto key = std::make_pair(tv, corner);
      auto it = last_at_corner.find(key);
      Dart anchor = it == last_at_corner.end() ? corner : it->second;
      insert_after(tv, anchor, forward_dart(a));
      last_at_corner[key] = forward_dart(a);
      out.pendant_t[i] = a;
      out.pairs[i].second = pv;
    }
  }

  out.graph = PlanarGraph(std::move(arcs), std::move(rot));
  out.emb = build_embedding(out.graph);
  out.face_s = rep_s >= 0 ? out.emb.face_of[rep_s] : -1;
  out.face_t = rep_t >= 0 ? out.emb.face_of[rep_t] : -1;
  out.arc_to_input = ci.arc_to_input;
  out.arc_to_input.resize(out.graph.num_arcs(), -1);
  out.pair_to_input = ci.pair_to_input;
  out.pendants_attached = true;
  return out;
}

// Pair indices in the clockwise order their terminals appear around a face.
inline std::vector<int> terminal_order(const PlanarGraph& g, const Embedding& emb, FaceId f,
                                       bool is_outer,
                                       const std::vector<VertexId>& terminal_of_pair) {
  std::vector<int> pair_of_vertex(g.num_vertices(), -1);
  for (size_t i = 0; i < terminal_of_pair.size(); ++i) pair_of_vertex[terminal_of_pair[i]] = static_cast<int>(i);
  std::vector<int> order;
  for (Dart d : clockwise_cycle(emb, f, is_outer)) {
    int p = pair_of_vertex[g.tail(d)];
    if (p >= 0) order.push_back(p);
  }
  require(order.size() == terminal_of_pair.size(), ErrorCode::invariant,
          "pendant terminal missing from face boundary");
  return order;
}

// Cyclically reindexes pairs so that s_1..s_k and t_1..t_k are both in
// clockwise order under the same pairing. Returns nullopt when no reindexing
// achieves this; no vertex-disjoint linkage exists in that case.
inline std::optional<CheckedInstance> order_terminals(const CheckedInstance& ci) {
  require(ci.pendants_attached, ErrorCode::bad_params, "order_terminals requires pendants");
  int k = ci.k();
  if (k <= 1) return ci;
  std::vector<VertexId> s_term(k), t_term(k);
  for (int i = 0; i < k; ++i) {
    s_term[i] = ci.pairs[i].first;
    t_term[i] = ci.pairs[i].second;
  }
  std::vector<int> sigma = terminal_order(ci.graph, ci.emb, ci.face_s, false, s_term);
  std::vector<int> tau = terminal_order(ci.graph, ci.emb, ci.face_t, true, t_term);

  int offset = -1;
  for (int p = 0; p < k; ++p)
    if (tau[p] == sigma[0]) offset = p;
  require(offset >= 0, ErrorCode::invariant, "terminal order scan failed");
  for (int j = 0; j < k; ++j)
    if (tau[(offset + j) % k] != sigma[j]) return std::nullopt;
  // Anchor at the original first pair so already-clockwise inputs keep
  // their indexing.
  std::rotate(sigma.begin(), std::find(sigma.begin(), sigma.end(), 0), sigma.end());

  CheckedInstance out = ci;
  for (int j = 0; j < k; ++j) {
    int old = sigma[j];
    out.pairs[j] = ci.pairs[old];
    out.pendant_s[j] = ci.pendant_s[old];
    out.pendant_t[j] = ci.pendant_t[old];
    out.pair_to_input[j] = ci.pair_to_input[old];
  }
  return out;
}

struct ArcProvenance {
  ArcId orig = -1;          // arc of the pendant-augmented graph, or
  VertexId ring_vertex = -1;  // the vertex whose ring this zero-length arc belongs to
};

// The transformed graph D: every non-terminal vertex of degree d replaced by
// a clockwise ring of d vertices joined by d zero-length arcs. Non-terminal
// vertices of D have degree exactly three, so arc-disjoint paths in D are
// automatically vertex-disjoint.
struct RingGraph {
  PlanarGraph d;
  Embedding emb;
  FaceId face_s = -1, face_t = -1;
  std::vector<ArcProvenance> prov;       // per D-arc
  std::vector<VertexId> src_term, dst_term;  // s'_i, t'_i as D-vertices
  std::vector<ArcId> src_arc, dst_arc;       // their pendant arcs in D
  int k = 0;
  int g_num_vertices = 0;
  std::vector<std::vector<Dart>> out_darts_all;  // per D-vertex, darts leaving it (= rotation)

  int64_t length(ArcId a) const { return d.length(a); }
};

inline RingGraph build_ring_graph(const CheckedInstance& ci) {
  require(ci.pendants_attached, ErrorCode::bad_params, "build_ring_graph requires pendants");
  require(ci.k() >= 1, ErrorCode::bad_params, "build_ring_graph requires k >= 1");
  const PlanarGraph& g = ci.graph;
  std::vector<char> is_terminal(g.num_vertices(), 0);
  for (int i = 0; i < ci.k(); ++i) {
    is_terminal[ci.pairs[i].first] = 1;
    is_terminal[ci.pairs[i].second] = 1;
  }

  // D-vertex ids: rings first (one vertex per arc-end, in rotation order),
  // then the terminals.
  std::vector<int> base(g.num_vertices(), -1);
  int nd = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (is_terminal[v]) continue;
    require(g.degree(v) >= 2, ErrorCode::invariant, "non-terminal vertex of degree < 2 in gadget");
    base[v] = nd;
    nd += g.degree(v);
  }
  std::vector<int> term_vertex(g.num_vertices(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (is_terminal[v]) term_vertex[v] = nd++;

  // Attachment point of a dart's tail end.
  std::vector<int> attach(g.num_darts(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& r = g.rotation(v);
    for (size_t j = 0; j < r.size(); ++j)
      attach[r[j]] = is_terminal[v] ? term_vertex[v] : base[v] + static_cast<int>(j);
  }

  RingGraph rg;
  std::vector<Arc> arcs(g.num_arcs());
  rg.prov.resize(g.num_arcs());
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    arcs[a] = {attach[forward_dart(a)], attach[reverse_dart(a)], g.length(a)};
    rg.prov[a] = {a, -1};
  }
  std::vector<std::vector<ArcId>> ring_arc(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (is_terminal[v]) continue;
    int d = g.degree(v);
    ring_arc[v].resize(d);
    for (int j = 0; j < d; ++j) {
      ring_arc[v][j] = static_cast<ArcId>(arcs.size());
      arcs.push_back({base[v] + j, base[v] + (j + 1) % d, 0});
      rg.prov.push_back({-1, v});
    }
  }

  std::vector<std::vector<Dart>> rot(nd);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& r = g.rotation(v);
    int d = g.degree(v);
    if (is_terminal[v]) {
      rot[term_vertex[v]] = {r[0]};
      continue;
    }
    for (int j = 0; j < d; ++j) {
      // Clockwise around a ring vertex: the original end, then the outgoing
      // ring arc, then the incoming ring arc.
      rot[base[v] + j] = {r[j], forward_dart(ring_arc[v][j]),
                          reverse_dart(ring_arc[v][(j + d - 1) % d])};
    }
  }

  Dart rep_s = forward_dart(ci.pendant_s[0]);
  Dart rep_t = forward_dart(ci.pendant_t[0]);
  rg.d = PlanarGraph(std::move(arcs), std::move(rot));
  rg.emb = build_embedding(rg.d);
  rg.face_s = rg.emb.face_of[rep_s];
  rg.face_t = rg.emb.face_of[rep_t];
  rg.k = ci.k();
  rg.g_num_vertices = g.num_vertices();
  rg.src_term.resize(rg.k);
  rg.dst_term.resize(rg.k);
  rg.src_arc = ci.pendant_s;
  rg.dst_arc = ci.pendant_t;
  for (int i = 0; i < rg.k; ++i) {
    rg.src_term[i] = rg.d.arc(ci.pendant_s[i]).src;
    rg.dst_term[i] = rg.d.arc(ci.pendant_t[i]).dst;
  }
  for (VertexId w = 0; w < rg.d.num_vertices(); ++w) {
    bool term = false;
    for (int i = 0; i < rg.k; ++i)
      if (rg.src_term[i] == w || rg.dst_term[i] == w) term = true;
    require(term ? rg.d.degree(w) == 1 : rg.d.degree(w) == 3, ErrorCode::invariant,
            "gadget degree property violated at D-vertex " + std::to_string(w));
  }
  rg.out_darts_all = rg.d.rotations();
  return rg;
}

struct SolutionG {
  std::vector<std::vector<ArcId>> paths;  // input arc ids; path i runs s -> t
  std::vector<int> source_pair;           // input pair index of the path's source
  std::vector<int> target_pair;           // input pair index of the terminal it reaches
  int64_t total_length = 0;

  int k() const { return static_cast<int>(paths.size()); }
  bool identity_pairing() const {
    for (size_t i = 0; i < paths.size(); ++i)
      if (source_pair[i] != target_pair[i]) return false;
    return true;
  }
};

// Contracts rings and pendants of k vertex-disjoint (s'_i, t'_j)-paths in D
// back to walks in the input graph, removes loops, and checks pairwise
// vertex-disjointness. `removed_length` reports the total input length
// dropped by loop removal (zero on optimal solver output).
inline SolutionG project_solution(const Instance& input, const RingGraph& rg,
                                  const CheckedInstance& ci,
                                  const std::vector<std::vector<ArcId>>& d_paths,
                                  const std::vector<int>& src_pair,
                                  const std::vector<int>& dst_pair,
                                  int64_t* removed_length = nullptr) {
  std::vector<char> used_d_vertex(rg.d.num_vertices(), 0);
  for (const auto& p : d_paths) {
    for (size_t j = 0; j < p.size(); ++j) {
      VertexId v = rg.d.arc(p[j]).src;
      require(!used_d_vertex[v], ErrorCode::not_disjoint, "D-paths share a vertex");
      used_d_vertex[v] = 1;
      if (j + 1 == p.size()) {
        VertexId w = rg.d.arc(p[j]).dst;
        require(!used_d_vertex[w], ErrorCode::not_disjoint, "D-paths share a vertex");
        used_d_vertex[w] = 1;
      }
    }
  }

  SolutionG sol;
  int64_t removed_total = 0;
  std::vector<char> used_vertex(input.graph.num_vertices(), 0);
  std::vector<int> order(d_paths.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return ci.pair_to_input[src_pair[a]] < ci.pair_to_input[src_pair[b]];
  });

  for (int idx : order) {
    std::vector<ArcId> walk;
    for (ArcId da : d_paths[idx]) {
      const ArcProvenance& pr = rg.prov[da];
      if (pr.orig < 0) continue;                      // ring arc: a vertex visit
      ArcId in = ci.arc_to_input[pr.orig];
      if (in < 0) continue;                           // pendant arc
      walk.push_back(in);
    }
    int in_pair = ci.pair_to_input[src_pair[idx]];
    VertexId start = input.pairs[in_pair].first;
    // Loop removal: cut the walk back to the previous visit whenever a
    // vertex repeats.
    std::vector<ArcId> stack_arcs;
    std::vector<VertexId> stack_vs{start};
    std::vector<int> pos(input.graph.num_vertices(), -1);
    pos[start] = 0;
    for (ArcId a : walk) {
      require(input.graph.arc(a).src == stack_vs.back(), ErrorCode::invariant,
              "projected walk does not chain in the input graph");
      VertexId w = input.graph.arc(a).dst;
      if (pos[w] >= 0) {
        while (static_cast<int>(stack_vs.size()) - 1 > pos[w]) {
          pos[stack_vs.back()] = -1;
          stack_vs.pop_back();
          removed_total = checked_add(removed_total, input.graph.length(stack_arcs.back()));
          stack_arcs.pop_back();
        }
      } else {
        stack_arcs.push_back(a);
        stack_vs.push_back(w);
        pos[w] = static_cast<int>(stack_vs.size()) - 1;
      }
    }
    require(stack_vs.back() == input.pairs[ci.pair_to_input[dst_pair[idx]]].second,
            ErrorCode::invariant, "projected path ends at the wrong terminal");
    for (VertexId v : stack_vs) {
      require(!used_vertex[v], ErrorCode::not_disjoint,
              "projected paths share vertex " + std::to_string(v));
      used_vertex[v] = 1;
    }
    for (ArcId a : stack_arcs) sol.total_length = checked_add(sol.total_length, input.graph.length(a));
    sol.paths.push_back(std::move(stack_arcs));
    sol.source_pair.push_back(in_pair);
    sol.target_pair.push_back(ci.pair_to_input[dst_pair[idx]]);
  }
  if (removed_length) *removed_length = removed_total;
  return sol;
}

}  // namespace vdp
