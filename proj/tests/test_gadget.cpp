#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "vdp/gadget.hpp"

using namespace vdp;
using namespace vdptest;

namespace {

// Any (not shortest) arc path between two D-vertices, avoiding used arcs.
bool find_arc_path(const PlanarGraph& g, VertexId from, VertexId to, std::vector<char>& used_arc,
                   std::vector<ArcId>& out) {
  std::vector<std::vector<ArcId>> adj(g.num_vertices());
  for (ArcId a = 0; a < g.num_arcs(); ++a) adj[g.arc(a).src].push_back(a);
  std::vector<ArcId> via(g.num_vertices(), -1);
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (ArcId a : adj[v]) {
      if (used_arc[a] || seen[g.arc(a).dst]) continue;
      seen[g.arc(a).dst] = 1;
      via[g.arc(a).dst] = a;
      stack.push_back(g.arc(a).dst);
    }
  }
  if (!seen[to]) return false;
  for (VertexId v = to; via[v] >= 0; v = g.arc(via[v]).src) out.push_back(via[v]);
  std::reverse(out.begin(), out.end());
  for (ArcId a : out) used_arc[a] = 1;
  return true;
}

}  // namespace

TEST_CASE("attach_pendants on the square: one pendant per side, placed at the face corner") {
  CheckedInstance ci = validate_instance(square_instance());
  CheckedInstance aug = attach_pendants(ci);
  CHECK(aug.graph.num_vertices() == 6);
  CHECK(aug.graph.num_arcs() == 6);
  CHECK(aug.graph.degree(0) == 3);  // v1 gained the s-pendant end
  CHECK(aug.graph.degree(2) == 3);  // v3 gained the t-pendant end
  // s-pendant end sits between the two boundary ends of s at v1.
  const auto& rot_v1 = aug.graph.rotation(0);
  REQUIRE(rot_v1.size() == 3);
  CHECK(rot_v1[0] == forward_dart(2));
  CHECK(rot_v1[1] == reverse_dart(aug.pendant_s[0]));
  CHECK(rot_v1[2] == forward_dart(0));
  const auto& rot_v3 = aug.graph.rotation(2);
  REQUIRE(rot_v3.size() == 3);
  CHECK(rot_v3[0] == reverse_dart(1));
  CHECK(rot_v3[1] == reverse_dart(3));
  CHECK(rot_v3[2] == forward_dart(aug.pendant_t[0]));
  // Pendant arcs have length zero and the terminals were replaced.
  CHECK(aug.graph.length(aug.pendant_s[0]) == 0);
  CHECK(aug.graph.length(aug.pendant_t[0]) == 0);
  CHECK(aug.pairs[0].first == 4);
  CHECK(aug.pairs[0].second == 5);
  CHECK(aug.graph.degree(4) == 1);
  CHECK(aug.graph.degree(5) == 1);
  // Faces of s and t survive, two darts longer each.
  CHECK(aug.emb.num_faces() == ci.emb.num_faces());
  CHECK(aug.emb.faces[aug.face_s].size() == ci.emb.faces[ci.face_s].size() + 2);
  CHECK(aug.emb.faces[aug.face_t].size() == ci.emb.faces[ci.face_t].size() + 2);
}

TEST_CASE("attach_pendants with k=0 changes nothing") {
  Instance inst = square_instance();
  inst.pairs.clear();
  CheckedInstance aug = attach_pendants(validate_instance(inst));
  CHECK(aug.graph.num_vertices() == 4);
  CHECK(aug.graph.num_arcs() == 4);
}

TEST_CASE("a vertex serving two pairs gets two pendants adjacent in rotation") {
  Instance inst = square_instance();
  inst.pairs = {{0, 2}, {0, 3}};  // v1 is s_1 and s_2
  CheckedInstance aug = attach_pendants(validate_instance(inst));
  const auto& rot_v1 = aug.graph.rotation(0);
  REQUIRE(rot_v1.size() == 4);
  // Clockwise order of the pendants matches pair order: pair 0 then pair 1.
  CHECK(rot_v1[1] == reverse_dart(aug.pendant_s[1]));
  CHECK(rot_v1[2] == reverse_dart(aug.pendant_s[0]));
  // Clockwise around the inner face s is reversed trace order, so the
  // clockwise terminal order is pair 0, pair 1.
  std::vector<VertexId> s_term{aug.pairs[0].first, aug.pairs[1].first};
  auto order = terminal_order(aug.graph, aug.emb, aug.face_s, false, s_term);
  CHECK(order == std::vector<int>{0, 1});
}

TEST_CASE("order_terminals: k=1 always identity") {
  auto p = run_pipeline(square_instance());
  REQUIRE(p.has_value());
  CHECK(p->ci.pair_to_input == std::vector<int>{0});
}

TEST_CASE("order_terminals: aligned k=4 annulus keeps the identity indexing") {
  CheckedInstance ci = attach_pendants(validate_instance(annulus_m2_instance()));
  auto ordered = order_terminals(ci);
  REQUIRE(ordered.has_value());
  CHECK(ordered->pair_to_input == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("order_terminals: rotated pairing is accepted and renormalized") {
  Instance inst = annulus_m2_instance();
  std::rotate(inst.pairs.begin(), inst.pairs.begin() + 2, inst.pairs.end());
  CheckedInstance ci = attach_pendants(validate_instance(inst));
  auto ordered = order_terminals(ci);
  REQUIRE(ordered.has_value());
  // Pair 0 of the rotated input stays pair 0; the cyclic order follows s.
  CHECK(ordered->pair_to_input[0] == 0);
  std::set<int> seen(ordered->pair_to_input.begin(), ordered->pair_to_input.end());
  CHECK(seen.size() == 4);
}

TEST_CASE("order_terminals: crossing k=3 pairing on a hexagon is infeasible") {
  CheckedInstance ci = attach_pendants(validate_instance(hexagon_order_infeasible()));
  CHECK(!order_terminals(ci).has_value());
}

TEST_CASE("ring graph of the square: counts, degrees, zero-length clockwise rings") {
  auto p = run_pipeline(square_instance());
  REQUIRE(p.has_value());
  const RingGraph& rg = p->rg;
  // |W| = 2k + sum of degrees over ringed vertices = 2 + (3+2+3+2).
  CHECK(rg.d.num_vertices() == 12);
  CHECK(rg.d.num_arcs() == 16);
  int ring_arcs = 0;
  for (ArcId a = 0; a < rg.d.num_arcs(); ++a) {
    if (rg.prov[a].ring_vertex >= 0) {
      ++ring_arcs;
      CHECK(rg.d.length(a) == 0);
    } else {
      CHECK(rg.prov[a].orig >= 0);
    }
  }
  CHECK(ring_arcs == 10);
  // Each ring is a single directed cycle of length = degree.
  std::map<VertexId, std::vector<ArcId>> rings;
  for (ArcId a = 0; a < rg.d.num_arcs(); ++a)
    if (rg.prov[a].ring_vertex >= 0) rings[rg.prov[a].ring_vertex].push_back(a);
  for (const auto& [v, ring] : rings) {
    std::map<VertexId, VertexId> next;
    for (ArcId a : ring) next[rg.d.arc(a).src] = rg.d.arc(a).dst;
    CHECK(next.size() == ring.size());
    VertexId start = rg.d.arc(ring[0]).src, cur = start;
    size_t steps = 0;
    do {
      cur = next.at(cur);
      ++steps;
    } while (cur != start && steps <= ring.size());
    CHECK(steps == ring.size());
  }
}

TEST_CASE("arc-disjoint paths in D are vertex-disjoint") {
  auto p = run_pipeline(square_instance_k2(false));
  REQUIRE(p.has_value());
  const RingGraph& rg = p->rg;
  std::vector<char> used_arc(rg.d.num_arcs(), 0);
  std::vector<std::vector<ArcId>> paths(2);
  REQUIRE(find_arc_path(rg.d, rg.src_term[0], rg.dst_term[0], used_arc, paths[0]));
  REQUIRE(find_arc_path(rg.d, rg.src_term[1], rg.dst_term[1], used_arc, paths[1]));
  std::set<VertexId> seen;
  for (const auto& path : paths) {
    for (size_t j = 0; j < path.size(); ++j) {
      VertexId v = rg.d.arc(path[j]).src;
      CHECK(!seen.count(v));
      seen.insert(v);
    }
  }
}

TEST_CASE("project_solution contracts rings and pendants back to input arcs") {
  Instance inst = square_instance();
  auto p = run_pipeline(inst);
  REQUIRE(p.has_value());
  const RingGraph& rg = p->rg;
  std::vector<char> used_arc(rg.d.num_arcs(), 0);
  std::vector<ArcId> d_path;
  REQUIRE(find_arc_path(rg.d, rg.src_term[0], rg.dst_term[0], used_arc, d_path));
  SolutionG sol = project_solution(inst, rg, p->ci, {d_path}, {0}, {0});
  REQUIRE(sol.paths.size() == 1);
  // The path uses original arcs only and connects v1 to v3.
  REQUIRE(!sol.paths[0].empty());
  CHECK(inst.graph.arc(sol.paths[0].front()).src == 0);
  CHECK(inst.graph.arc(sol.paths[0].back()).dst == 2);
  int64_t len = 0;
  for (ArcId a : sol.paths[0]) len += inst.graph.length(a);
  CHECK(len == sol.total_length);
}

TEST_CASE("project_solution rejects overlapping D-paths") {
  Instance inst = square_instance();
  auto p = run_pipeline(inst);
  REQUIRE(p.has_value());
  std::vector<char> used_arc(p->rg.d.num_arcs(), 0);
  std::vector<ArcId> d_path;
  REQUIRE(find_arc_path(p->rg.d, p->rg.src_term[0], p->rg.dst_term[0], used_arc, d_path));
  CHECK_THROWS_AS(project_solution(inst, p->rg, p->ci, {d_path, d_path}, {0, 0}, {0, 0}), Error);
}

TEST_CASE("prune_leaves removes dangling chains and keeps arc ids projectable") {
  // Square plus a chain v2 -> v5 -> v6 hanging in the outer face.
  std::vector<Arc> arcs{{0, 1, 1}, {1, 2, 2}, {0, 3, 3}, {3, 2, 4}, {1, 4, 7}, {4, 5, 7}};
  std::vector<std::vector<Dart>> rot{
      {forward_dart(2), forward_dart(0)},
      {reverse_dart(0), forward_dart(1), forward_dart(4)},
      {reverse_dart(1), reverse_dart(3)},
      {forward_dart(3), reverse_dart(2)},
      {reverse_dart(4), forward_dart(5)},
      {reverse_dart(5)},
  };
  Instance inst;
  inst.graph = PlanarGraph(std::move(arcs), std::move(rot));
  inst.face_s = {0, false};
  inst.face_t = {0, true};
  inst.pairs = {{0, 2}};
  CheckedInstance ci = prune_leaves(validate_instance(inst));
  CHECK(ci.graph.num_vertices() == 4);
  CHECK(ci.graph.num_arcs() == 4);
  CHECK(ci.arc_to_input == std::vector<ArcId>{0, 1, 2, 3});
  CHECK(ci.face_s != ci.face_t);
}
