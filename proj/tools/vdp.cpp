// Command-line front end: solve, oracle, verify, gen, render.
// Exit codes: 0 success/optimal, 2 infeasible, 1 error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vdp/generate.hpp"
#include "vdp/io.hpp"
#include "vdp/oracle.hpp"
#include "vdp/render.hpp"
#include "vdp/solve.hpp"

namespace {

int cmd_solve(const std::string& in, const std::string& out, std::optional<int64_t> fixed_w,
              uint64_t seed_u) {
  vdp::Instance inst = vdp::load_instance(in);
  vdp::SolveOptions opts;
  opts.fixed_winding = fixed_w;
  opts.seed_u = seed_u;
  vdp::SolveResult res = vdp::solve(inst, opts);
  std::string doc = vdp::dump(vdp::solution_to_json(vdp::to_solution_file(res)));
  if (out.empty())
    std::cout << doc;
  else
    vdp::write_file(out, doc);
  if (!res.optimal()) {
    std::cerr << "infeasible: " << vdp::to_string(res.reason) << "\n";
    return 2;
  }
  std::cerr << "optimal: total length " << res.solution->total_length << "\n";
  return 0;
}

int cmd_oracle(const std::string& in) {
  vdp::Instance inst = vdp::load_instance(in);
  vdp::BruteForceResult bf = vdp::brute_force_optimum(inst);
  if (bf.feasible)
    std::cout << "optimal " << bf.total << "\n";
  else
    std::cout << "infeasible\n";
  if (inst.k() >= 1) {
    vdp::CheckedInstance ci = vdp::prune_leaves(vdp::validate_instance(inst));
    ci = vdp::attach_pendants(ci);
    if (auto ordered = vdp::order_terminals(ci)) ci = *ordered;
    vdp::RingGraph rg = vdp::build_ring_graph(ci);
    vdp::WindingSystem ws = vdp::build_winding_system(rg);
    vdp::MuTable table = vdp::mu_table(rg, ws);
    std::cout << "m " << ws.m << "\n";
    for (const auto& [w, mu] : table.mu) std::cout << "mu[" << w << "] = " << mu << "\n";
  }
  return bf.feasible ? 0 : 2;
}

int cmd_verify(const std::string& in, const std::string& sol_path) {
  vdp::Instance inst = vdp::load_instance(in);
  vdp::SolutionFile sf = vdp::load_solution(sol_path);
  if (sf.status != vdp::SolveStatus::optimal) {
    std::cout << "solution file is infeasible; nothing to verify\n";
    return 0;
  }
  vdp::VerificationReport rep = vdp::verify_solution(inst, sf.solution);
  std::cout << "disjoint: " << (rep.disjoint ? "ok" : "FAIL") << "\n"
            << "pairing:  " << (rep.pairing_ok ? "ok" : "FAIL") << "\n"
            << "length:   " << (rep.length_ok ? "ok" : "FAIL") << " (total " << rep.total << ")\n";
  for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest vertex-disjoint paths between two faces of a planar graph"};
  app.require_subcommand(1);

  std::string in_path, out_path, sol_path;
  int64_t fixed_w = 0;
  bool has_fixed = false;
  uint64_t seed_u = 0;

  auto* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("input", in_path, "instance file")->required();
  solve->add_option("-o,--output", out_path, "write the solution here (default stdout)");
  auto* fw = solve->add_option("--fixed-winding", fixed_w, "require this exact winding number");
  solve->add_option("--seed-u", seed_u, "tie-breaking seed for the dual path U");

  auto* oracle = app.add_subcommand("oracle", "brute-force optimum and mu-table dump");
  oracle->add_option("input", in_path, "instance file")->required();

  auto* verify = app.add_subcommand("verify", "check a solution file against its instance");
  verify->add_option("input", in_path, "instance file")->required();
  verify->add_option("solution", sol_path, "solution file")->required();

  vdp::GridParams gp;
  auto* gen = app.add_subcommand("gen", "generate a seeded grid instance");
  gen->add_option("--rows", gp.rows, "grid rows")->required();
  gen->add_option("--cols", gp.cols, "grid columns")->required();
  gen->add_option("-k,--pairs", gp.k, "number of terminal pairs")->required();
  gen->add_option("--seed", gp.seed, "random seed");
  gen->add_option("--len-min", gp.len_min, "minimum arc length");
  gen->add_option("--len-max", gp.len_max, "maximum arc length");
  gen->add_option("-o,--output", out_path, "write the instance here (default stdout)");

  auto* render = app.add_subcommand("render", "render an instance (and solution) as SVG");
  render->add_option("input", in_path, "instance file")->required();
  render->add_option("solution", sol_path, "solution file (optional)");
  render->add_option("-o,--output", out_path, "output SVG file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(solve)) {
      has_fixed = fw->count() > 0;
      return cmd_solve(in_path, out_path,
                       has_fixed ? std::optional<int64_t>(fixed_w) : std::nullopt, seed_u);
    }
    if (app.got_subcommand(oracle)) return cmd_oracle(in_path);
    if (app.got_subcommand(verify)) return cmd_verify(in_path, sol_path);
    if (app.got_subcommand(gen)) {
      vdp::Instance inst = vdp::generate_grid_instance(gp);
      std::string doc = vdp::dump(vdp::instance_to_json(inst));
      if (out_path.empty())
        std::cout << doc;
      else
        vdp::write_file(out_path, doc);
      return 0;
    }
    if (app.got_subcommand(render)) {
      vdp::Instance inst = vdp::load_instance(in_path);
      std::optional<vdp::SolutionFile> sf;
      if (!sol_path.empty()) sf = vdp::load_solution(sol_path);
      const vdp::SolutionG* sol =
          sf && sf->status == vdp::SolveStatus::optimal ? &sf->solution : nullptr;
      vdp::write_file(out_path, vdp::render_svg(inst, sol));
      return 0;
    }
  } catch (const vdp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
