#pragma once

#include <optional>
#include <string>

#include "vdp/flow.hpp"
#include "vdp/rotation.hpp"

namespace vdp {

enum class SolveStatus { optimal, infeasible };
enum class InfeasibleReason { none, order, max_flow, winding };

inline const char* to_string(InfeasibleReason r) {
  switch (r) {
    case InfeasibleReason::order: return "order";
    case InfeasibleReason::max_flow: return "max_flow";
    case InfeasibleReason::winding: return "winding";
    default: return "none";
  }
}

struct SolveOptions {
  std::optional<int64_t> fixed_winding;  // solve for this exact winding number
  uint64_t seed_u = 0;                   // varies the BFS tie-breaking for U
};

struct SolveStats {
  int k = 0;
  int64_t m = 0;
  int64_t w0 = 0;             // winding of the first minimum-cost k-flow
  int64_t final_winding = 0;  // winding of the returned flow
  int rotations = 0;
  uint64_t seed_u = 0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  InfeasibleReason reason = InfeasibleReason::none;
  std::optional<SolutionG> solution;
  SolveStats stats;

  bool optimal() const { return status == SolveStatus::optimal; }
};

namespace detail {

struct Candidate {
  IntegerFlow flow;
  LengthFn kappa;
  int rotations = 0;
};

// Rotates `steps` times in `direction`; nullopt when blocked before done.
inline std::optional<Candidate> rotate_to(const RingGraph& rg, const WindingSystem& ws,
                                          Candidate c, int direction, int64_t steps) {
  for (int64_t i = 0; i < steps; ++i) {
    if (!rotate_once(rg, ws, c.flow, c.kappa, direction)) return std::nullopt;
    c.rotations += 1;
  }
  return c;
}

}  // namespace detail

// Full pipeline: validate, prune, attach pendants, reindex terminals
// clockwise, build the ring graph and winding system, find a minimum-cost
// k-flow by successive shortest augmentations, then rotate its winding to
// the nearest values compatible with the terminal pairing (or to the
// requested fixed winding) and project the cheaper flow back to paths.
inline SolveResult solve(const Instance& inst, const SolveOptions& opts = {}) {
  SolveResult res;
  res.stats.k = inst.k();
  res.stats.seed_u = opts.seed_u;

  CheckedInstance ci = validate_instance(inst);
  if (inst.k() == 0) {
    res.status = SolveStatus::optimal;
    res.solution = SolutionG{};
    return res;
  }
  ci = prune_leaves(ci);
  ci = attach_pendants(ci);
  auto ordered = order_terminals(ci);
  const bool two_face = !opts.fixed_winding.has_value();
  if (ordered) {
    ci = *ordered;
  } else if (two_face) {
    res.reason = InfeasibleReason::order;
    return res;
  }
  // Fixed-winding mode tolerates an incompatible clockwise order: the
  // winding alone determines which terminals get connected.

  RingGraph rg = build_ring_graph(ci);
  WindingSystem ws = build_winding_system(rg, opts.seed_u);
  res.stats.m = ws.m;

  auto mf = max_value_flow(rg, ws);
  if (!mf) {
    res.reason = InfeasibleReason::max_flow;
    return res;
  }
  int64_t w0 = mf->flow.winding;
  res.stats.w0 = w0;

  std::optional<detail::Candidate> chosen;
  if (two_face) {
    const int64_t k = rg.k;
    int64_t r = ((w0 - ws.m) % k + k) % k;
    if (r == 0) {
      chosen = detail::Candidate{std::move(mf->flow), std::move(mf->kappa), 0};
    } else {
      detail::Candidate base{mf->flow, mf->kappa, 0};
      auto down = detail::rotate_to(rg, ws, base, -1, r);
      auto up = detail::rotate_to(rg, ws, std::move(base), +1, k - r);
      if (down && up)
        chosen = flow_cost(rg, down->flow) <= flow_cost(rg, up->flow) ? std::move(down)
                                                                      : std::move(up);
      else
        chosen = down ? std::move(down) : std::move(up);
      if (!chosen) {
        res.reason = InfeasibleReason::winding;
        return res;
      }
    }
  } else {
    int64_t target = *opts.fixed_winding;
    detail::Candidate base{std::move(mf->flow), std::move(mf->kappa), 0};
    int direction = target >= w0 ? +1 : -1;
    int64_t steps = target >= w0 ? target - w0 : w0 - target;
    chosen = detail::rotate_to(rg, ws, std::move(base), direction, steps);
    if (!chosen) {
      res.reason = InfeasibleReason::winding;
      return res;
    }
  }

  strip_circuits(rg, ws, chosen->flow);
  res.stats.rotations = chosen->rotations;
  res.stats.final_winding = chosen->flow.winding;
  Decomposition dec = decompose_flow(rg, chosen->flow);
  require(static_cast<int>(dec.paths.size()) == rg.k && dec.circuits.empty(),
          ErrorCode::invariant, "stripped flow is not exactly k paths");
  if (two_face) {
    require((chosen->flow.winding - ws.m) % rg.k == 0, ErrorCode::invariant,
            "returned winding incompatible with the pairing");
    for (size_t i = 0; i < dec.paths.size(); ++i)
      require(dec.src_pair[i] == dec.dst_pair[i], ErrorCode::invariant,
              "paths do not connect the required pairs");
  }
  int64_t removed = 0;
  SolutionG sol = project_solution(inst, rg, ci, dec.paths, dec.src_pair, dec.dst_pair, &removed);
  require(removed == 0, ErrorCode::invariant, "loop removal changed an optimal total length");
  require(sol.total_length == flow_cost(rg, chosen->flow), ErrorCode::invariant,
          "projection changed the total length");
  res.status = SolveStatus::optimal;
  res.solution = std::move(sol);
  return res;
}

}  // namespace vdp
