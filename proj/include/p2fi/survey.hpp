#pragma once

// Census of the 576 eight-bridge joins by isomorphism class, the refutation
// checks on the order-144 graph, and the partition of S4 used to index the
// diagonal joins.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "p2fi/canon.hpp"
#include "p2fi/connectivity.hpp"
#include "p2fi/goedgebeur.hpp"
#include "p2fi/perm_group.hpp"
#include "p2fi/two_factors.hpp"

namespace p2fi {

struct SurveyOptions {
  bool p2fi = false;
  unsigned threads = 0;
};

struct SurveyRow {
  int class_id = 0;  // 1-based, in row order
  std::size_t size = 0;
  std::uint64_t aut_order = 0;
  std::string representative;  // canonical certificate
  bool diagonal = false;
  std::size_t diagonal_count = 0;
  std::vector<int> members;  // spec ranks, ascending
  std::optional<ParityStatus> p2fi_status;
};

struct Survey {
  std::vector<SurveyRow> rows;
  std::vector<BridgeScan> scan;  // by rank

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& r : rows) t += r.size;
    return t;
  }
};

/// Groups all joins by certificate. Row order: aut order descending, then
/// size ascending, then certificate.
inline Survey run_survey(const SurveyOptions& options = {}) {
  Survey s;
  s.scan = scan_bridges(false, options.threads);
  std::map<std::string, SurveyRow> by_cert;
  for (const auto& b : s.scan) {
    auto& row = by_cert[b.certificate];
    if (row.members.empty()) {
      row.representative = b.certificate;
      row.aut_order = b.aut_order;
    } else if (row.aut_order != b.aut_order) {
      throw StructuralError("isomorphic joins report different automorphism orders");
    }
    row.members.push_back(b.rank);
    ++row.size;
    if (b.spec.alpha == b.spec.beta) {
      row.diagonal = true;
      ++row.diagonal_count;
    }
  }
  for (auto& [cert, row] : by_cert) s.rows.push_back(std::move(row));
  std::sort(s.rows.begin(), s.rows.end(), [](const SurveyRow& a, const SurveyRow& b) {
    return std::tuple(b.aut_order, a.size, a.representative) < std::tuple(a.aut_order, b.size, b.representative);
  });
  for (std::size_t i = 0; i < s.rows.size(); ++i) s.rows[i].class_id = static_cast<int>(i + 1);

  if (options.p2fi) {
    // one representative per class suffices: the status is an isomorphism invariant
    parallel_for(static_cast<int>(s.rows.size()), options.threads, [&](int i) {
      auto& row = s.rows[static_cast<std::size_t>(i)];
      row.p2fi_status = pseudo_2fi(bridge_join(spec_from_rank(row.members.front())).graph()).status;
    });
  }
  if (s.total() != static_cast<std::size_t>(kBridgeCount)) throw StructuralError("survey does not cover every spec");
  return s;
}

/// The row holding the order-144 graph.
inline const SurveyRow& goedgebeur_row(const Survey& s) {
  for (const auto& r : s.rows)
    if (r.aut_order == 144) return r;
  throw StructuralError("no class with 144 automorphisms");
}

struct RefutationReport {
  int order = 0;
  int size = 0;
  bool cubic = false;
  bool bipartite = false;
  std::optional<int> girth;
  bool essentially_4_edge_connected = false;
  std::optional<int> cyclic_connectivity;
  TwoFactorReport two_factors;
  bool iso_k33 = false;
  bool iso_heawood = false;
  bool iso_pappus = false;

  bool holds() const {
    return cubic && bipartite && essentially_4_edge_connected && two_factors.pseudo_2_factor_isomorphic() &&
           !iso_k33 && !iso_heawood && !iso_pappus;
  }
};

inline RefutationReport refutation_report(const Graph& g) {
  RefutationReport r;
  r.order = g.order();
  r.size = g.size();
  r.cubic = is_cubic(g);
  r.bipartite = bipartition(g).has_value();
  r.girth = girth(g);
  r.essentially_4_edge_connected = r.cubic && is_connected(g) && is_essentially_4_edge_connected(g);
  if (is_connected(g) && g.order() <= 64) r.cyclic_connectivity = cyclic_edge_connectivity(g).value;
  if (r.cubic) r.two_factors = pseudo_2fi(g);
  r.iso_k33 = are_isomorphic(g, complete_bipartite(3, 3));
  r.iso_heawood = are_isomorphic(g, heawood());
  r.iso_pappus = are_isomorphic(g, pappus());
  return r;
}

/// Builds the order-144 join and checks it against the conjecture's hypotheses.
/// Throws StructuralError when any check fails.
inline RefutationReport refutation_check() {
  auto gg = identify_goedgebeur();
  auto r = refutation_report(gg.graph());
  if (!r.holds()) throw StructuralError("order-144 join does not refute the conjecture");
  return r;
}

// ---------------------------------------------------------------------------
// Partition of S4
// ---------------------------------------------------------------------------

using Table1Row = std::array<Permutation, 4>;

inline std::array<Table1Row, 6> table1_rows() {
  static const std::array<std::array<const char*, 4>, 6> text{{
      {"id", "(02)", "(13)", "(02)(13)"},
      {"(01)(23)", "(0123)", "(0321)", "(03)(12)"},
      {"(01)", "(012)", "(031)", "(0312)"},
      {"(23)", "(023)", "(132)", "(0213)"},
      {"(03)", "(032)", "(013)", "(0132)"},
      {"(12)", "(021)", "(123)", "(0231)"},
  }};
  std::array<Table1Row, 6> rows;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 4; ++c) rows[r][c] = Permutation::parse_cycles(4, text[r][c]);
  return rows;
}

inline const char* table1_row_name(std::size_t row) {
  static constexpr std::array<const char*, 6> names{"I", "II", "III", "IV", "V", "VI"};
  return names.at(row);
}

struct Table1Report {
  std::array<Table1Row, 6> rows;
  bool partitions_s4 = false;
  bool first_two_rows_subgroup = false;   // order 8
  bool first_two_rows_dihedral = false;
  bool first_row_klein = false;           // every non-identity element an involution
  bool first_row_normal = false;          // recorded, expected false

  bool holds() const { return partitions_s4 && first_two_rows_subgroup && first_two_rows_dihedral && first_row_klein; }
};

inline Table1Report table1_partition() {
  Table1Report r;
  r.rows = table1_rows();
  std::set<Permutation> seen;
  bool disjoint = true;
  for (const auto& row : r.rows)
    for (const auto& p : row)
      if (!seen.insert(p).second) disjoint = false;
  r.partitions_s4 = disjoint && seen.size() == 24;

  std::vector<Permutation> upper(r.rows[0].begin(), r.rows[0].end());
  upper.insert(upper.end(), r.rows[1].begin(), r.rows[1].end());
  PermGroup closed(4, upper);
  r.first_two_rows_subgroup = closed.order() == 8;
  r.first_two_rows_dihedral = r.first_two_rows_subgroup && groups_isomorphic(closed, dihedral_group(4));

  std::vector<Permutation> klein(r.rows[0].begin(), r.rows[0].end());
  r.first_row_klein = std::all_of(klein.begin(), klein.end(), [](const Permutation& p) { return p.order() <= 2; }) &&
                      PermGroup(4, klein).order() == 4;
  r.first_row_normal = is_normal(PermGroup(4, klein), symmetric_group(4));
  return r;
}

/// The alphas of diagonal specs (alpha = beta) landing in the order-144 class,
/// and how they sit inside S4.
struct DiagonalReport {
  std::vector<Permutation> alphas;
  bool subgroup = false;  // closed, order 8
  bool dihedral = false;
  bool conjugate_to_table1 = false;  // some conjugate equals rows I and II
  bool equals_table1 = false;        // literally rows I and II
};

inline DiagonalReport diagonal_report(const Survey& s) {
  DiagonalReport d;
  const auto& row = goedgebeur_row(s);
  for (int rank : row.members) {
    auto spec = spec_from_rank(rank);
    if (spec.alpha == spec.beta) d.alphas.push_back(spec.alpha);
  }
  if (d.alphas.empty()) return d;
  PermGroup g(4, d.alphas);
  d.subgroup = g.order() == 8 && d.alphas.size() == 8;
  d.dihedral = d.subgroup && groups_isomorphic(g, dihedral_group(4));
  auto rows = table1_rows();
  std::vector<Permutation> upper(rows[0].begin(), rows[0].end());
  upper.insert(upper.end(), rows[1].begin(), rows[1].end());
  PermGroup t(4, upper);
  d.equals_table1 = std::set<Permutation>(d.alphas.begin(), d.alphas.end()) ==
                    std::set<Permutation>(upper.begin(), upper.end());
  d.conjugate_to_table1 = d.subgroup && conjugating_element(symmetric_group(4), g, t).has_value();
  return d;
}

}  // namespace p2fi
