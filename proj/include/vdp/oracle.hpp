#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vdp/gadget.hpp"
#include "vdp/winding.hpp"

namespace vdp {

// Desk-scale exhaustive ground truth. Everything here is deliberately
// independent of the flow and rotation machinery: plain backtracking over
// the input graph (or over D for the mu table).

inline constexpr int kOracleMaxVertices = 40;
inline constexpr int kOracleMaxPairs = 4;

struct BruteForceResult {
  bool feasible = false;
  int64_t total = 0;
  std::vector<std::vector<ArcId>> paths;  // witness, one per pair in pair order
};

inline void oracle_guard(int num_vertices, int k) {
  require(num_vertices <= kOracleMaxVertices && k <= kOracleMaxPairs, ErrorCode::too_large,
          "instance exceeds the oracle size guard");
}

// Minimum total length of k pairwise vertex-disjoint (s_i, t_i)-paths, by
// exhaustive backtracking with cost pruning: pairs in index order, arcs in
// id order.
inline BruteForceResult brute_force_optimum(const Instance& inst) {
  oracle_guard(inst.graph.num_vertices(), inst.k());
  const PlanarGraph& g = inst.graph;
  std::vector<std::vector<ArcId>> out(g.num_vertices());
  for (ArcId a = 0; a < g.num_arcs(); ++a) out[g.arc(a).src].push_back(a);

  BruteForceResult best;
  std::vector<char> used(g.num_vertices(), 0);
  std::vector<std::vector<ArcId>> current(inst.k());

  auto search = [&](auto&& self, int pair, int64_t total) -> void {
    if (best.feasible && total >= best.total) return;
    if (pair == inst.k()) {
      best.feasible = true;
      best.total = total;
      best.paths = current;
      return;
    }
    auto [s, t] = inst.pairs[pair];
    if (used[s]) return;
    auto extend = [&](auto&& ext, VertexId v, int64_t len) -> void {
      if (best.feasible && len >= best.total) return;
      if (v == t) {
        self(self, pair + 1, len);
        return;
      }
      for (ArcId a : out[v]) {
        VertexId w = g.arc(a).dst;
        if (used[w]) continue;
        used[w] = 1;
        current[pair].push_back(a);
        ext(ext, w, checked_add(len, g.length(a)));
        current[pair].pop_back();
        used[w] = 0;
      }
    };
    used[s] = 1;
    if (!used[t] || s == t) extend(extend, s, total);
    used[s] = 0;
  };
  search(search, 0, 0);
  return best;
}

// mu_w: minimal cost of an integer k-flow in D with winding number w, per
// bucket over all w. Finite support is a contiguous interval and mu is
// convex on it.
struct MuTable {
  std::map<int64_t, int64_t> mu;

  bool contiguous() const {
    if (mu.empty()) return true;
    int64_t expect = mu.begin()->first;
    for (const auto& [w, c] : mu)
      if (w != expect++) return false;
    return true;
  }
  bool convex() const {
    for (const auto& [w, c] : mu) {
      auto lo = mu.find(w - 1), hi = mu.find(w + 1);
      if (lo == mu.end() || hi == mu.end()) continue;
      if (2 * c > checked_add(lo->second, hi->second)) return false;
    }
    return true;
  }
  std::optional<int64_t> min_over_congruent(int64_t m, int64_t k) const {
    std::optional<int64_t> best;
    for (const auto& [w, c] : mu)
      if (((w - m) % k + k) % k == 0 && (!best || c < *best)) best = c;
    return best;
  }
};

// Enumerates every set of k vertex-disjoint (s', t')-paths in D (pairings
// free) and buckets cost by winding. Support circuits never lower a bucket,
// so path systems determine the table exactly.
inline MuTable mu_table(const RingGraph& rg, const WindingSystem& ws) {
  oracle_guard(rg.g_num_vertices, rg.k);
  const PlanarGraph& g = rg.d;
  std::vector<std::vector<ArcId>> out(g.num_vertices());
  for (ArcId a = 0; a < g.num_arcs(); ++a) out[g.arc(a).src].push_back(a);
  std::vector<char> used(g.num_vertices(), 0);
  std::vector<char> terminal_taken(rg.k, 0);
  std::vector<int> pair_of_terminal(g.num_vertices(), -1);
  for (int j = 0; j < rg.k; ++j) pair_of_terminal[rg.dst_term[j]] = j;

  MuTable table;
  auto search = [&](auto&& self, int pair, int64_t cost, int64_t winding) -> void {
    if (pair == rg.k) {
      auto it = table.mu.find(winding);
      if (it == table.mu.end() || cost < it->second) table.mu[winding] = cost;
      return;
    }
    auto extend = [&](auto&& ext, VertexId v, int64_t cost_here, int64_t wind_here) -> void {
      int j = pair_of_terminal[v];
      if (j >= 0) {
        if (terminal_taken[j]) return;
        terminal_taken[j] = 1;
        self(self, pair + 1, cost_here, wind_here);
        terminal_taken[j] = 0;
        return;
      }
      for (ArcId a : out[v]) {
        VertexId w = g.arc(a).dst;
        if (used[w]) continue;
        used[w] = 1;
        ext(ext, w, checked_add(cost_here, g.length(a)), wind_here + ws.u[a]);
        used[w] = 0;
      }
    };
    VertexId s = rg.src_term[pair];
    used[s] = 1;
    extend(extend, s, cost, winding);
    used[s] = 0;
  };
  search(search, 0, 0, 0);
  return table;
}

struct VerificationReport {
  bool disjoint = true;
  bool pairing_ok = true;
  bool length_ok = true;
  int64_t total = 0;
  std::vector<std::string> failures;

  bool ok() const { return disjoint && pairing_ok && length_ok && failures.empty(); }
};

// Pure structural check of a solution against its instance: vertex
// disjointness, endpoint pairing, arc adjacency and existence, and the
// total-length arithmetic.
inline VerificationReport verify_solution(const Instance& inst, const SolutionG& sol) {
  VerificationReport rep;
  const PlanarGraph& g = inst.graph;
  auto complain = [&](const std::string& msg) { rep.failures.push_back(msg); };

  if (sol.k() != inst.k() || static_cast<int>(sol.source_pair.size()) != sol.k() ||
      static_cast<int>(sol.target_pair.size()) != sol.k()) {
    rep.pairing_ok = false;
    complain("solution does not have one path per terminal pair");
    return rep;
  }
  std::vector<int> src_seen(inst.k(), 0), dst_seen(inst.k(), 0);
  std::vector<char> used(g.num_vertices(), 0);
  for (int i = 0; i < sol.k(); ++i) {
    int sp = sol.source_pair[i], tp = sol.target_pair[i];
    if (sp < 0 || sp >= inst.k() || tp < 0 || tp >= inst.k()) {
      rep.pairing_ok = false;
      complain("path " + std::to_string(i) + " references a missing pair");
      continue;
    }
    ++src_seen[sp];
    ++dst_seen[tp];
    VertexId v = inst.pairs[sp].first;
    bool chain_ok = true;
    std::vector<VertexId> visited{v};
    for (ArcId a : sol.paths[i]) {
      if (a < 0 || a >= g.num_arcs()) {
        complain("path " + std::to_string(i) + " uses missing arc " + std::to_string(a));
        chain_ok = false;
        break;
      }
      if (g.arc(a).src != v) {
        complain("path " + std::to_string(i) + " does not chain at arc " + std::to_string(a));
        chain_ok = false;
        break;
      }
      v = g.arc(a).dst;
      visited.push_back(v);
      rep.total = checked_add(rep.total, g.length(a));
    }
    if (chain_ok && v != inst.pairs[tp].second) {
      rep.pairing_ok = false;
      complain("path " + std::to_string(i) + " ends at the wrong terminal");
    }
    for (VertexId w : visited) {
      if (used[w]) {
        rep.disjoint = false;
        complain("vertex " + std::to_string(w) + " used by two paths");
      }
      used[w] = 1;
    }
  }
  for (int i = 0; i < inst.k(); ++i) {
    if (src_seen[i] != 1 || dst_seen[i] != 1) {
      rep.pairing_ok = false;
      complain("pair " + std::to_string(i) + " not connected exactly once");
    }
  }
  if (rep.total != sol.total_length) {
    rep.length_ok = false;
    complain("declared total length differs from the arc lengths");
  }
  return rep;
}

}  // namespace vdp
