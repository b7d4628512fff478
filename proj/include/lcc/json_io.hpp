#pragma once

#include <json.hpp>

#include "lcc/cover.hpp"
#include "lcc/graph.hpp"
#include "lcc/ng_bounds.hpp"

namespace lcc {

inline nlohmann::json to_json(VertexSet s) {
  nlohmann::json arr = nlohmann::json::array();
  for (int v : s) arr.push_back(v);
  return arr;
}

inline nlohmann::json to_json(const CliqueCover& cover) {
  nlohmann::json cliques = nlohmann::json::array();
  for (const Clique& c : cover.cliques) cliques.push_back(to_json(c.members));
  return {{"cliques", cliques}, {"valency", cover.valency}, {"max_valency", max_valency(cover)}};
}

inline nlohmann::json to_json(const CliquePartition& p) {
  nlohmann::json cliques = nlohmann::json::array();
  for (const Clique& c : p.cliques) cliques.push_back(to_json(c.members));
  return {{"cliques", cliques}, {"sigma", p.sigma}};
}

inline nlohmann::json to_json(const Graph& g, const CoverCertificate& cert) {
  nlohmann::json out{{"graph6", emit_graph6(g)},
                     {"method", std::string(bound_kind_name(cert.kind))},
                     {"bound", cert.bound},
                     {"cover", to_json(cert.cover)},
                     {"verdict", cert.verdict}};
  if (cert.kind == BoundKind::local_alpha) out["vertex_bounds"] = cert.vertex_bounds;
  return out;
}

inline nlohmann::json to_json(const TrianglePacking& p) {
  nlohmann::json triangles = nlohmann::json::array();
  for (const ColoredTriangle& t : p.triangles)
    triangles.push_back({{"vertices", {t.a, t.b, t.c}},
                         {"color", t.color == TriangleColor::original ? "original" : "complement"}});
  return {{"triangles", triangles}, {"k", p.k}, {"m", p.m}};
}

inline nlohmann::json to_json(const NearRegularVerdict& v) {
  return {{"graph6", v.graph6},   {"bound", "near-regular"},
          {"k", v.k},             {"lcc", v.lcc_g},
          {"lcc_complement", v.lcc_complement},
          {"bound_g", v.bound_g}, {"bound_complement", v.bound_complement},
          {"conj1_holds", v.conj1_holds}, {"holds", v.holds}};
}

inline nlohmann::json to_json(const RatioBoundVerdict& v) {
  return {{"graph6", v.graph6},
          {"bound", "ratio"},
          {"lhs_num", v.lhs_num},
          {"lhs_den", v.lhs_den},
          {"rhs", v.rhs},
          {"inequality_holds", v.inequality_holds},
          {"equality", v.equality},
          {"witness", {{"complete_graph", v.is_complete_graph}, {"star", v.is_star}}},
          {"holds", v.holds}};
}

inline nlohmann::json to_json(const AlphaChiVerdict& v) {
  return {{"graph6", v.graph6},
          {"bound", "alpha-chi"},
          {"lhs", v.lhs},
          {"rhs", v.rhs},
          {"inequality_holds", v.inequality_holds},
          {"equality", v.equality},
          {"witness", {{"qualifying_vertex", v.qualifying_vertex}}},
          {"holds", v.holds}};
}

inline nlohmann::json to_json(const CorollaryAlphaVerdict& v) {
  return {{"graph6", v.graph6},
          {"bound", "corollary-alpha"},
          {"lcc", v.lcc},
          {"alpha_local", v.alpha_local},
          {"alpha", v.alpha},
          {"local_holds", v.local_holds},
          {"global_holds", v.global_holds},
          {"local_equality", v.local_equality},
          {"global_equality", v.global_equality},
          {"holds", v.holds}};
}

}  // namespace lcc
