#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "vdp/eps_value.hpp"
#include "vdp/generate.hpp"
#include "vdp/oracle.hpp"
#include "vdp/rotation.hpp"

using namespace vdp;
using namespace vdptest;

TEST_CASE("EpsValue: lexicographic order, infinity on top, componentwise ring ops") {
  EpsValue a{3, 0, false}, b{3, 1, false}, c{4, -100, false};
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a < c);
  CHECK(EpsValue::infinity() > c);
  CHECK(!(EpsValue::infinity() < EpsValue::infinity()));
  CHECK(a + b == EpsValue{6, 1, false});
  CHECK(c - a == EpsValue{1, -100, false});
  CHECK((a + EpsValue::infinity()).inf);
  CHECK_THROWS_AS(a - EpsValue::infinity(), Error);
  CHECK(EpsValue{0, 1, false}.positive());
  CHECK(!EpsValue{0, 0, false}.positive());
  CHECK(EpsValue{0, -1, false} < EpsValue{});
}

TEST_CASE("min_winding_circuit on the square: the residual circuit costs 4") {
  auto p = run_pipeline(square_instance());
  REQUIRE(p.has_value());
  auto mf = max_value_flow(p->rg, p->ws);
  REQUIRE(mf.has_value());
  auto wc = min_winding_circuit(p->rg, p->ws, mf->flow, mf->kappa, +1);
  REQUIRE(wc.has_value());
  // kappa-length of gamma equals its lambda-length 3+4-1-2 = 4 because
  // kappa agrees with lambda on closed walks.
  int64_t kappa_len = 0, lambda_len = 0;
  for (Dart d : wc->circuit) {
    kappa_len += dart_length(mf->kappa, d);
    lambda_len += is_forward(d) ? p->rg.d.length(arc_of(d)) : -p->rg.d.length(arc_of(d));
  }
  CHECK(kappa_len == 4);
  CHECK(lambda_len == 4);
  CHECK(p->ws.winding_of_darts(wc->circuit) == 1);
  CHECK(wc->flow.value.real == 4);
  // Duality: removing the dual darts crossed by gamma separates s* from t*.
  std::set<std::pair<FaceId, FaceId>> cut;
  for (Dart d : wc->circuit) cut.insert(dual_dart(p->rg.emb, d));
  std::vector<char> seen(p->rg.emb.num_faces(), 0);
  std::vector<FaceId> stack{p->rg.face_s};
  seen[p->rg.face_s] = 1;
  while (!stack.empty()) {
    FaceId f = stack.back();
    stack.pop_back();
    for (Dart d = 0; d < p->rg.d.num_darts(); ++d) {
      auto dd = dual_dart(p->rg.emb, d);
      if (dd.first != f || seen[dd.second] || cut.count(dd)) continue;
      seen[dd.second] = 1;
      stack.push_back(dd.second);
    }
  }
  CHECK(!seen[p->rg.face_t]);
}

TEST_CASE("rotate_once +1 on the square moves to the v1->v4->v3 flow of cost 7") {
  auto p = run_pipeline(square_instance());
  REQUIRE(p.has_value());
  auto mf = max_value_flow(p->rg, p->ws);
  REQUIRE(mf.has_value());
  IntegerFlow f = mf->flow;
  std::vector<int64_t> kappa = mf->kappa;
  REQUIRE(rotate_once(p->rg, p->ws, f, kappa, +1));
  CHECK(f.value == 1);
  CHECK(f.winding == mf->flow.winding + 1);
  CHECK(f.x[0] == 0);
  CHECK(f.x[1] == 0);
  CHECK(f.x[2] == 1);
  CHECK(f.x[3] == 1);
  CHECK(flow_cost(p->rg, f) == 7);

  SUBCASE("rotating back restores the original cost and winding") {
    REQUIRE(rotate_once(p->rg, p->ws, f, kappa, -1));
    CHECK(f.winding == mf->flow.winding);
    CHECK(flow_cost(p->rg, f) == 3);
  }
  SUBCASE("beyond the support the rotation blocks") {
    CHECK(!rotate_once(p->rg, p->ws, f, kappa, +1));
  }
}

TEST_CASE("direction -1 mirrors direction +1 on the square") {
  auto p = run_pipeline(square_instance());
  REQUIRE(p.has_value());
  auto mf = max_value_flow(p->rg, p->ws);
  REQUIRE(mf.has_value());
  // w0 = -1 is already the minimum winding: rotating down blocks.
  IntegerFlow f = mf->flow;
  std::vector<int64_t> kappa = mf->kappa;
  CHECK(!rotate_once(p->rg, p->ws, f, kappa, -1));
  CHECK(f.x == mf->flow.x);
}

TEST_CASE("all-zero lengths: the cut is minimum cardinality and kappa stays zero") {
  Instance inst = square_instance();
  std::vector<Arc> arcs = inst.graph.arcs();
  for (Arc& a : arcs) a.length = 0;
  inst.graph = PlanarGraph(std::move(arcs), inst.graph.rotations());
  auto p = run_pipeline(inst);
  REQUIRE(p.has_value());
  auto mf = max_value_flow(p->rg, p->ws);
  REQUIRE(mf.has_value());
  auto wc = min_winding_circuit(p->rg, p->ws, mf->flow, mf->kappa, +1);
  REQUIRE(wc.has_value());
  CHECK(wc->flow.value.real == 0);
  // The epsilon part counts cut edges; the cut is exactly the circuit.
  CHECK(wc->flow.value.eps == static_cast<int64_t>(wc->circuit.size()));
  IntegerFlow f = mf->flow;
  std::vector<int64_t> kappa = mf->kappa;
  REQUIRE(rotate_once(p->rg, p->ws, f, kappa, +1));
  for (int64_t v : kappa) CHECK(v == 0);
}

TEST_CASE("rotation invariants on a seeded grid, both directions") {
  Instance inst = generate_grid_instance({4, 4, 3, 1234, 0, 9});
  auto p = run_pipeline(inst);
  REQUIRE(p.has_value());
  auto mf = max_value_flow(p->rg, p->ws);
  REQUIRE(mf.has_value());
  std::mt19937_64 rng(3);
  for (int direction : {+1, -1}) {
    IntegerFlow f = mf->flow;
    std::vector<int64_t> kappa = mf->kappa;
    for (int step = 0; step < 2; ++step) {
      std::vector<int64_t> kappa_before = kappa;
      int64_t w_before = f.winding;
      int64_t v_before = f.value;
      if (!rotate_once(p->rg, p->ws, f, kappa, direction)) break;
      CHECK(f.value == v_before);
      CHECK(f.winding == w_before + direction);
      CHECK(nonnegative_on_residual(p->rg, f, kappa));
      // kappa' ~ kappa: equal lengths on closed walks of winding zero.
      int checked = 0;
      while (checked < 100) {
        auto walk = random_closed_walk(p->rg.d, rng);
        REQUIRE(!walk.empty());
        if (p->ws.winding_of_darts(walk) != 0) continue;
        ++checked;
        CHECK(walk_length(kappa_before, walk) == walk_length(kappa, walk));
      }
    }
  }
}

TEST_CASE("after j rotations from the minimum-cost k-flow the cost is exactly mu[w0 +- j]") {
  for (uint64_t seed : {8u, 44u, 123u}) {
    Instance inst = generate_grid_instance({3, 3, 2, seed, 0, 9});
    auto p = run_pipeline(inst);
    REQUIRE(p.has_value());
    auto mf = max_value_flow(p->rg, p->ws);
    if (!mf) continue;
    MuTable table = mu_table(p->rg, p->ws);
    REQUIRE(table.mu.at(mf->flow.winding) == flow_cost(p->rg, mf->flow));
    for (int direction : {+1, -1}) {
      IntegerFlow f = mf->flow;
      LengthFn kappa = mf->kappa;
      while (rotate_once(p->rg, p->ws, f, kappa, direction)) {
        REQUIRE(table.mu.count(f.winding));
        CHECK(table.mu.at(f.winding) == flow_cost(p->rg, f));
      }
      // Blocked exactly at the end of the feasible interval.
      int64_t extreme = direction > 0 ? table.mu.rbegin()->first : table.mu.begin()->first;
      CHECK(f.winding == extreme);
    }
  }
}

TEST_CASE("a full clockwise turn costs the mu-gap: rotate +1 then -1 round trip on a grid") {
  Instance inst = generate_grid_instance({3, 3, 2, 77, 1, 9});
  auto p = run_pipeline(inst);
  REQUIRE(p.has_value());
  auto mf = max_value_flow(p->rg, p->ws);
  REQUIRE(mf.has_value());
  IntegerFlow f = mf->flow;
  std::vector<int64_t> kappa = mf->kappa;
  int64_t base_cost = flow_cost(p->rg, f);
  if (rotate_once(p->rg, p->ws, f, kappa, +1)) {
    REQUIRE(rotate_once(p->rg, p->ws, f, kappa, -1));
    CHECK(f.winding == mf->flow.winding);
    CHECK(flow_cost(p->rg, f) == base_cost);
  }
}
