#pragma once

// JSON views of the analysis results. Every top-level document carries
// "schema": 1. Key order is alphabetical (nlohmann::json default), so output
// is byte-stable across runs.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "p2fi/aut_structure.hpp"
#include "p2fi/configuration.hpp"
#include "p2fi/connectivity.hpp"
#include "p2fi/graph6.hpp"
#include "p2fi/survey.hpp"
#include "p2fi/two_factors.hpp"

namespace p2fi {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Json profile_json(const OrderProfile& p) {
  Json j = Json::object();
  for (auto [order, count] : p) j[std::to_string(order)] = count;
  return j;
}

inline Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

/// Exactly matching_count, cycle_counts, status.
inline Json to_json(const TwoFactorReport& r) {
  return Json{{"matching_count", r.matching_count}, {"cycle_counts", r.cycle_counts}, {"status", to_string(r.status)}};
}

inline Json properties_json(const Graph& g) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["graph6"] = graph6_encode(g);
  j["order"] = g.order();
  j["size"] = g.size();
  j["cubic"] = is_cubic(g);
  j["connected"] = is_connected(g);
  j["bipartite"] = bipartition(g).has_value();
  j["girth"] = optional_json(girth(g));
  const bool cubic_connected = is_cubic(g) && is_connected(g);
  j["essentially_4_edge_connected"] =
      cubic_connected ? Json(is_essentially_4_edge_connected(g)) : Json(nullptr);
  j["cyclic_edge_connectivity"] =
      is_connected(g) && g.order() <= 64 ? optional_json(cyclic_edge_connectivity(g).value) : Json(nullptr);
  j["aut_order"] = automorphism_group(g).order();
  return j;
}

/// Vertex index and label for each vertex.
inline Json label_table_json(const Graph& g) {
  Json j = Json::array();
  for (int v = 0; v < g.order(); ++v) j.push_back({{"vertex", v}, {"label", g.label(v)}});
  return j;
}

inline Json to_json(const AutStructure& s) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["order"] = s.order;
  j["m_projection_order"] = s.projected_order;
  Json k;
  k["order"] = s.k.order();
  k["subgroup"] = s.k_is_subgroup;
  k["normal"] = s.k_normal;
  k["abelian"] = s.k_abelian;
  k["profile"] = profile_json(s.k_profile);
  k["z3_x_z3"] = s.k_iso_z3_z3;
  k["z9"] = s.k_iso_z9;
  k["regular_on_m"] = s.k_regular_on_m;
  j["k"] = k;
  Json h;
  h["order"] = s.h.order();
  h["normal"] = s.h_normal;
  h["abelian"] = s.h_abelian;
  h["profile"] = profile_json(s.h_profile);
  h["d4_x_z2"] = s.h_iso_d4_z2;
  j["h"] = h;
  j["semidirect"] = {{"holds", s.semidirect.holds()},
                     {"normal", s.semidirect.normal},
                     {"trivial_intersection", s.semidirect.trivial_intersection},
                     {"orders_multiply", s.semidirect.orders_multiply}};
  Json m;
  m["e"] = edge_json(s.marked_edges.e);
  for (const auto& f : s.marked_edges.f) m["f"].push_back(edge_json(f));
  for (const auto& e : s.marked_edges.m) m["m"].push_back(edge_json(e));
  m["stabilizer_orders"] = s.stabilizer_orders;
  m["stabilizers_conjugate"] = s.stabilizers_conjugate;
  m["any_stabilizer_normal"] = s.any_stabilizer_normal;
  m["e_orbit_size"] = s.e_orbit_size;
  j["m"] = m;
  auto perm = [](const std::optional<Permutation>& p) { return p ? Json(p->to_string()) : Json(nullptr); };
  j["elements"] = {{"sigma0", perm(s.sigma0)}, {"sigma1", perm(s.sigma1)}, {"tau", perm(s.tau)},
                   {"rho", perm(s.rho)},       {"delta", perm(s.delta)}};
  j["sigma_pair_generates_k"] = s.sigma_pair_generates_k;
  j["delta_rho_dihedral"] = s.delta_rho_dihedral;
  j["named_elements_relabeling"] = perm(s.literal_relabeling);
  return j;
}

inline Json to_json(const SurveyRow& r, bool with_members = true) {
  Json j;
  j["class_id"] = r.class_id;
  j["size"] = r.size;
  j["aut_order"] = r.aut_order;
  j["representative"] = r.representative;
  j["diagonal"] = r.diagonal;
  j["diagonal_count"] = r.diagonal_count;
  if (with_members) {
    Json members = Json::array();
    for (int rank : r.members) members.push_back(spec_from_rank(rank).to_string());
    j["members"] = members;
  }
  if (r.p2fi_status) j["p2fi_status"] = to_string(*r.p2fi_status);
  return j;
}

inline Json to_json(const Survey& s) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["total"] = s.total();
  j["class_count"] = s.rows.size();
  j["rows"] = Json::array();
  for (const auto& r : s.rows) j["rows"].push_back(to_json(r));
  const auto d = diagonal_report(s);
  Json alphas = Json::array();
  for (const auto& a : d.alphas) alphas.push_back(BridgeSpec::format_perm(a));
  j["diagonal_144"] = {{"alphas", alphas},
                       {"subgroup", d.subgroup},
                       {"dihedral", d.dihedral},
                       {"conjugate_to_rows_I_II", d.conjugate_to_table1},
                       {"equals_rows_I_II", d.equals_table1}};
  return j;
}

inline Json to_json(const RefutationReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["order"] = r.order;
  j["size"] = r.size;
  j["cubic"] = r.cubic;
  j["bipartite"] = r.bipartite;
  j["girth"] = optional_json(r.girth);
  j["essentially_4_edge_connected"] = r.essentially_4_edge_connected;
  j["cyclic_edge_connectivity"] = optional_json(r.cyclic_connectivity);
  j["pseudo_2_factor_isomorphic"] = r.two_factors.pseudo_2_factor_isomorphic();
  j["two_factors"] = to_json(r.two_factors);
  j["isomorphic_to"] = {{"k33", r.iso_k33}, {"heawood", r.iso_heawood}, {"pappus", r.iso_pappus}};
  j["refutes"] = r.holds();
  return j;
}

inline Json configuration_json(const Configuration& c) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json points = Json::array();
  for (int p = 0; p < c.num_points(); ++p) points.push_back(c.point_name(p));
  j["points"] = points;
  Json lines = Json::array();
  for (int l = 0; l < c.num_lines(); ++l) {
    Json pts = Json::array();
    for (int p : c.line(l)) pts.push_back(c.point_name(p));
    lines.push_back({{"name", c.line_name(l)}, {"points", pts}});
  }
  j["lines"] = lines;
  return j;
}

}  // namespace p2fi
