#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "vdp/gadget.hpp"
#include "vdp/instance.hpp"

namespace vdp {

// Planar drawing straight from the rotation system: the outer face (t) is
// pinned to a circle in its boundary order and every other vertex relaxes to
// the barycenter of its neighbors. Coordinates are cosmetic; nothing in the
// solver depends on them.
inline std::string render_svg(const Instance& inst, const SolutionG* sol = nullptr) {
  CheckedInstance ci = validate_instance(inst);
  const PlanarGraph& g = ci.graph;
  const double W = 840, H = 840, R = 380, cx = W / 2, cy = H / 2;

  std::vector<VertexId> outer;
  {
    std::vector<char> seen(g.num_vertices(), 0);
    for (Dart d : ci.emb.faces[ci.face_t]) {
      VertexId v = g.tail(d);
      if (!seen[v]) {
        seen[v] = 1;
        outer.push_back(v);
      }
    }
  }
  std::vector<double> x(g.num_vertices(), cx), y(g.num_vertices(), cy);
  std::vector<char> fixed(g.num_vertices(), 0);
  for (size_t i = 0; i < outer.size(); ++i) {
    double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(outer.size());
    x[outer[i]] = cx + R * std::cos(ang);
    y[outer[i]] = cy + R * std::sin(ang);
    fixed[outer[i]] = 1;
  }
  int iters = 200 + 30 * static_cast<int>(std::sqrt(double(g.num_vertices())));
  for (int it = 0; it < iters; ++it) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (fixed[v] || g.degree(v) == 0) continue;
      double sx = 0, sy = 0;
      for (Dart d : g.rotation(v)) {
        sx += x[g.head(d)];
        sy += y[g.head(d)];
      }
      x[v] = sx / g.degree(v);
      y[v] = sy / g.degree(v);
    }
  }

  static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#17becf", "#e377c2", "#bcbd22"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const Arc& a : g.arcs())
    svg << "<line x1=\"" << x[a.src] << "\" y1=\"" << y[a.src] << "\" x2=\"" << x[a.dst]
        << "\" y2=\"" << y[a.dst] << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  if (sol) {
    for (size_t i = 0; i < sol->paths.size(); ++i) {
      const char* color = palette[i % 8];
      for (ArcId a : sol->paths[i])
        svg << "<line x1=\"" << x[g.arc(a).src] << "\" y1=\"" << y[g.arc(a).src] << "\" x2=\""
            << x[g.arc(a).dst] << "\" y2=\"" << y[g.arc(a).dst] << "\" stroke=\"" << color
            << "\" stroke-width=\"4\" stroke-linecap=\"round\"/>\n";
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    svg << "<circle cx=\"" << x[v] << "\" cy=\"" << y[v] << "\" r=\"3\" fill=\"#333333\"/>\n";
  for (int i = 0; i < inst.k(); ++i) {
    auto [s, t] = inst.pairs[i];
    svg << "<text x=\"" << x[s] + 6 << "\" y=\"" << y[s] - 6 << "\" font-size=\"14\">s"
        << i + 1 << "</text>\n";
    svg << "<text x=\"" << x[t] + 6 << "\" y=\"" << y[t] - 6 << "\" font-size=\"14\">t"
        << i + 1 << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace vdp
