#pragma once

#include <random>
#include <vector>

#include "vdp/instance.hpp"

namespace vdp {

// Seeded benchmark instances: a rows x cols grid with every edge expanded to
// two oppositely directed arcs, a cell near the center as the inner face s,
// the outer face as t, and terminals in clockwise order on both. All draws
// go through explicit modulo so files are byte-stable across platforms.
struct GridParams {
  int rows = 2;
  int cols = 2;
  int k = 1;
  uint64_t seed = 0;
  int64_t len_min = 0;
  int64_t len_max = 9;
};

inline Instance generate_grid_instance(const GridParams& p) {
  require(p.rows >= 2 && p.cols >= 2, ErrorCode::bad_params, "grid needs rows, cols >= 2");
  require(p.k >= 0 && p.k <= std::min(p.rows, p.cols), ErrorCode::bad_params,
          "k must be at most min(rows, cols)");
  require(p.k <= 4, ErrorCode::bad_params, "a grid cell has four corners; k must be at most 4");
  require(0 <= p.len_min && p.len_min <= p.len_max, ErrorCode::bad_params, "bad length range");

  auto vid = [&](int r, int c) { return r * p.cols + c; };
  struct Und {
    VertexId a, b;
  };
  std::vector<Und> edges;
  std::vector<std::vector<int>> right_edge(p.rows, std::vector<int>(p.cols, -1));
  std::vector<std::vector<int>> down_edge(p.rows, std::vector<int>(p.cols, -1));
  for (int r = 0; r < p.rows; ++r)
    for (int c = 0; c < p.cols; ++c) {
      if (c + 1 < p.cols) {
        right_edge[r][c] = static_cast<int>(edges.size());
        edges.push_back({vid(r, c), vid(r, c + 1)});
      }
      if (r + 1 < p.rows) {
        down_edge[r][c] = static_cast<int>(edges.size());
        edges.push_back({vid(r, c), vid(r + 1, c)});
      }
    }
  const int m = static_cast<int>(edges.size());

  std::mt19937_64 rng(p.seed);
  auto draw_len = [&]() {
    return p.len_min + static_cast<int64_t>(rng() % static_cast<uint64_t>(p.len_max - p.len_min + 1));
  };
  std::vector<Arc> arcs(2 * m);
  for (int e = 0; e < m; ++e) arcs[e] = {edges[e].a, edges[e].b, 0};
  for (int e = 0; e < m; ++e) arcs[m + e] = {edges[e].b, edges[e].a, 0};
  for (int a = 0; a < 2 * m; ++a) arcs[a].length = draw_len();

  // Clockwise rotation (rows drawn downward): up, right, down, left; each
  // undirected slot holds the incoming arc-end then the outgoing one.
  std::vector<std::vector<Dart>> rot(p.rows * p.cols);
  for (int r = 0; r < p.rows; ++r)
    for (int c = 0; c < p.cols; ++c) {
      VertexId v = vid(r, c);
      auto slot = [&](int e) {
        if (edges[e].a == v) {
          rot[v].push_back(reverse_dart(e + m));
          rot[v].push_back(forward_dart(e));
        } else {
          rot[v].push_back(reverse_dart(e));
          rot[v].push_back(forward_dart(e + m));
        }
      };
      if (r > 0) slot(down_edge[r - 1][c]);
      if (c + 1 < p.cols) slot(right_edge[r][c]);
      if (r + 1 < p.rows) slot(down_edge[r][c]);
      if (c > 0) slot(right_edge[r][c - 1]);
    }

  Instance inst;
  inst.graph = PlanarGraph(std::move(arcs), std::move(rot));
  // s: the cell at (cr, cc), right of its top edge's westbound traversal.
  // t: the outer face, right of the top-left edge's reversed copy (the
  // forward darts of a doubled edge bound the two-gon between the copies).
  int cr = (p.rows - 2) / 2, cc = (p.cols - 2) / 2;
  inst.face_s = {right_edge[cr][cc], true};
  inst.face_t = {m + right_edge[0][0], true};

  std::vector<VertexId> corners{vid(cr, cc), vid(cr, cc + 1), vid(cr + 1, cc + 1),
                                vid(cr + 1, cc)};
  std::vector<VertexId> boundary;
  for (int c = 0; c < p.cols; ++c) boundary.push_back(vid(0, c));
  for (int r = 1; r < p.rows; ++r) boundary.push_back(vid(r, p.cols - 1));
  for (int c = p.cols - 2; c >= 0; --c) boundary.push_back(vid(p.rows - 1, c));
  for (int r = p.rows - 2; r >= 1; --r) boundary.push_back(vid(r, 0));
  const int L = static_cast<int>(boundary.size());
  int start = static_cast<int>(rng() % static_cast<uint64_t>(L));
  for (int i = 0; i < p.k; ++i) {
    VertexId t = boundary[(start + static_cast<int>(int64_t(i) * L / p.k)) % L];
    inst.pairs.push_back({corners[i], t});
  }
  return inst;
}

}  // namespace vdp
