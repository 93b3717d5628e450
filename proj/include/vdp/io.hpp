#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "vdp/instance.hpp"
#include "vdp/solve.hpp"

namespace vdp {

using Json = nlohmann::ordered_json;

inline constexpr int kFileVersion = 1;

// Instance files are a single JSON document. Directed instances list arcs
// and per-vertex clockwise rotations of arc-ends [arc, "out"|"in"];
// undirected instances list edges once, rotations are plain edge-id lists,
// and parsing expands every edge into two oppositely directed arcs (edge i
// becomes arcs i and m+i).

namespace detail {

inline Json face_ref_json(const FaceRef& f) {
  return Json::array({f.arc, f.right ? "right" : "left"});
}

inline FaceRef face_ref_from(const Json& j) {
  require(j.is_array() && j.size() == 2, ErrorCode::parse_error, "face designator must be [arc, side]");
  std::string side = j[1].get<std::string>();
  require(side == "left" || side == "right", ErrorCode::parse_error,
          "face side must be \"left\" or \"right\"");
  return {j[0].get<ArcId>(), side == "right"};
}

}  // namespace detail

inline Json instance_to_json(const Instance& inst, bool directed = true) {
  require(directed, ErrorCode::bad_params, "only directed instances are serialized");
  Json j;
  j["version"] = kFileVersion;
  j["directed"] = true;
  Json verts = Json::array();
  for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
    Json rot = Json::array();
    for (Dart d : inst.graph.rotation(v))
      rot.push_back(Json::array({arc_of(d), is_forward(d) ? "out" : "in"}));
    verts.push_back(Json{{"rotation", std::move(rot)}});
  }
  j["vertices"] = std::move(verts);
  Json arcs = Json::array();
  for (const Arc& a : inst.graph.arcs())
    arcs.push_back(Json{{"src", a.src}, {"dst", a.dst}, {"length", a.length}});
  j["arcs"] = std::move(arcs);
  j["face_s"] = detail::face_ref_json(inst.face_s);
  j["face_t"] = detail::face_ref_json(inst.face_t);
  Json terms = Json::array();
  for (auto [s, t] : inst.pairs) terms.push_back(Json::array({s, t}));
  j["terminals"] = std::move(terms);
  return j;
}

inline Instance instance_from_json(const Json& j) {
  try {
    require(j.at("version").get<int>() == kFileVersion, ErrorCode::parse_error,
            "unsupported instance file version");
    bool directed = j.at("directed").get<bool>();
    const Json& jarcs = j.at("arcs");
    const Json& jverts = j.at("vertices");
    int n = static_cast<int>(jverts.size());
    int m = static_cast<int>(jarcs.size());

    std::vector<Arc> arcs;
    std::vector<std::vector<Dart>> rot(n);
    if (directed) {
      for (const Json& ja : jarcs)
        arcs.push_back({ja.at("src").get<VertexId>(), ja.at("dst").get<VertexId>(),
                        ja.at("length").get<int64_t>()});
      for (VertexId v = 0; v < n; ++v) {
        for (const Json& je : jverts[v].at("rotation")) {
          require(je.is_array() && je.size() == 2, ErrorCode::parse_error,
                  "rotation entries must be [arc, \"out\"|\"in\"]");
          ArcId a = je[0].get<ArcId>();
          std::string end = je[1].get<std::string>();
          require(end == "out" || end == "in", ErrorCode::parse_error, "bad arc-end tag");
          require(a >= 0 && a < m, ErrorCode::parse_error, "rotation references missing arc");
          rot[v].push_back(end == "out" ? forward_dart(a) : reverse_dart(a));
        }
      }
    } else {
      // Edge i expands to arc i (as listed) and arc m+i (reversed); the two
      // new arc-ends replace the edge-end slot as (incoming, outgoing).
      for (const Json& ja : jarcs)
        arcs.push_back({ja.at("src").get<VertexId>(), ja.at("dst").get<VertexId>(),
                        ja.at("length").get<int64_t>()});
      for (int e = 0; e < m; ++e)
        arcs.push_back({arcs[e].dst, arcs[e].src, arcs[e].length});
      for (VertexId v = 0; v < n; ++v) {
        for (const Json& je : jverts[v].at("rotation")) {
          require(je.is_number_integer(), ErrorCode::parse_error,
                  "undirected rotation entries must be edge ids");
          ArcId e = je.get<ArcId>();
          require(e >= 0 && e < m, ErrorCode::parse_error, "rotation references missing edge");
          require(arcs[e].src == v || arcs[e].dst == v, ErrorCode::parse_error,
                  "rotation lists edge not incident with its vertex");
          if (arcs[e].src == v) {
            rot[v].push_back(reverse_dart(e + m));  // incoming copy
            rot[v].push_back(forward_dart(e));      // outgoing copy
          } else {
            rot[v].push_back(reverse_dart(e));
            rot[v].push_back(forward_dart(e + m));
          }
        }
      }
    }

    Instance inst;
    inst.graph = PlanarGraph(std::move(arcs), std::move(rot));
    inst.face_s = detail::face_ref_from(j.at("face_s"));
    inst.face_t = detail::face_ref_from(j.at("face_t"));
    for (const Json& jt : j.at("terminals")) {
      require(jt.is_array() && jt.size() == 2, ErrorCode::parse_error,
              "terminal entries must be [s_i, t_i]");
      inst.pairs.push_back({jt[0].get<VertexId>(), jt[1].get<VertexId>()});
    }
    return inst;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("malformed instance file: ") + e.what());
  }
}

struct SolutionFile {
  SolveStatus status = SolveStatus::infeasible;
  InfeasibleReason reason = InfeasibleReason::none;
  SolutionG solution;
  SolveStats stats;

  bool operator==(const SolutionFile& o) const {
    return status == o.status && reason == o.reason && solution.paths == o.solution.paths &&
           solution.source_pair == o.solution.source_pair &&
           solution.target_pair == o.solution.target_pair &&
           solution.total_length == o.solution.total_length && stats.m == o.stats.m &&
           stats.w0 == o.stats.w0 && stats.final_winding == o.stats.final_winding &&
           stats.rotations == o.stats.rotations && stats.seed_u == o.stats.seed_u &&
           stats.k == o.stats.k;
  }
};

inline SolutionFile to_solution_file(const SolveResult& res) {
  SolutionFile f;
  f.status = res.status;
  f.reason = res.reason;
  if (res.solution) f.solution = *res.solution;
  f.stats = res.stats;
  return f;
}

inline Json solution_to_json(const SolutionFile& sf) {
  Json j;
  j["version"] = kFileVersion;
  j["status"] = sf.status == SolveStatus::optimal ? "optimal" : "infeasible";
  if (sf.status == SolveStatus::infeasible) {
    j["reason"] = to_string(sf.reason);
  } else {
    j["total_length"] = sf.solution.total_length;
    Json paths = Json::array();
    for (const auto& p : sf.solution.paths) paths.push_back(p);
    j["paths"] = std::move(paths);
    j["source_pairs"] = sf.solution.source_pair;
    j["pairing"] = sf.solution.target_pair;
  }
  j["metadata"] = Json{{"k", sf.stats.k},
                       {"seed_u", sf.stats.seed_u},
                       {"m", sf.stats.m},
                       {"w0", sf.stats.w0},
                       {"winding", sf.stats.final_winding},
                       {"rotations", sf.stats.rotations}};
  return j;
}

inline SolutionFile solution_from_json(const Json& j) {
  try {
    require(j.at("version").get<int>() == kFileVersion, ErrorCode::parse_error,
            "unsupported solution file version");
    SolutionFile sf;
    std::string status = j.at("status").get<std::string>();
    require(status == "optimal" || status == "infeasible", ErrorCode::parse_error,
            "solution status must be optimal or infeasible");
    sf.status = status == "optimal" ? SolveStatus::optimal : SolveStatus::infeasible;
    if (sf.status == SolveStatus::infeasible) {
      std::string reason = j.value("reason", "none");
      if (reason == "order") sf.reason = InfeasibleReason::order;
      else if (reason == "max_flow") sf.reason = InfeasibleReason::max_flow;
      else if (reason == "winding") sf.reason = InfeasibleReason::winding;
    } else {
      sf.solution.total_length = j.at("total_length").get<int64_t>();
      for (const Json& jp : j.at("paths"))
        sf.solution.paths.push_back(jp.get<std::vector<ArcId>>());
      sf.solution.source_pair = j.at("source_pairs").get<std::vector<int>>();
      sf.solution.target_pair = j.at("pairing").get<std::vector<int>>();
    }
    const Json& md = j.at("metadata");
    sf.stats.k = md.at("k").get<int>();
    sf.stats.seed_u = md.at("seed_u").get<uint64_t>();
    sf.stats.m = md.at("m").get<int64_t>();
    sf.stats.w0 = md.at("w0").get<int64_t>();
    sf.stats.final_winding = md.at("winding").get<int64_t>();
    sf.stats.rotations = md.at("rotations").get<int>();
    return sf;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, std::string("malformed solution file: ") + e.what());
  }
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::io_error, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse_error, path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorCode::io_error, "cannot write " + path);
  out << content;
}

inline Instance load_instance(const std::string& path) {
  return instance_from_json(load_json_file(path));
}

inline SolutionFile load_solution(const std::string& path) {
  return solution_from_json(load_json_file(path));
}

}  // namespace vdp
