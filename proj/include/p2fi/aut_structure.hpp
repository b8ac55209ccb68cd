#pragma once

// Structure of the automorphism group of a joined Levi graph, read through
// its action on the nine marked edges M = {e, f_0..f_3, m_0..m_3}.
//
// K is taken as the set of elements of 3-power order (a subgroup exactly
// when the Sylow 3-subgroup is normal), H as the setwise stabilizer of e.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "p2fi/canon.hpp"
#include "p2fi/construction.hpp"
#include "p2fi/perm_group.hpp"

namespace p2fi {

/// Index of each marked edge in the M-action: e = 0, f_i = 1 + i, m_i = 5 + i.
namespace marked {
inline constexpr int kE = 0;
inline constexpr int f(int i) { return 1 + i; }
inline constexpr int m(int i) { return 5 + i; }

/// The named automorphisms as permutations of M in the index order above.
inline Permutation sigma0() { return Permutation::from_cycles(9, {{kE, m(0), m(2)}, {m(1), f(3), f(0)}, {m(3), f(2), f(1)}}); }
inline Permutation sigma1() { return Permutation::from_cycles(9, {{kE, f(1), f(3)}, {f(0), m(0), m(3)}, {f(2), m(1), m(2)}}); }
inline Permutation delta() { return Permutation::from_cycles(9, {{f(0), f(2)}, {m(0), m(1)}, {m(2), m(3)}}); }
inline Permutation rho() { return Permutation::from_cycles(9, {{f(0), f(1), f(2), f(3)}, {m(0), m(1), m(2), m(3)}}); }
}  // namespace marked

struct AutStructure {
  std::uint64_t order = 0;
  PermGroup aut;
  MarkedEdges marked_edges;
  std::vector<Permutation> projection;  // M-action of each element of aut, same order
  std::size_t projected_order = 0;

  PermGroup k;  // elements of 3-power order
  PermGroup h;  // stabilizer of e
  bool k_is_subgroup = false;
  bool k_normal = false;
  bool h_normal = false;
  OrderProfile k_profile;
  OrderProfile h_profile;
  bool k_abelian = false;
  bool h_abelian = false;
  bool k_iso_z3_z3 = false;
  bool k_iso_z9 = false;
  bool h_iso_d4_z2 = false;
  SemidirectReport semidirect;

  std::vector<std::size_t> stabilizer_orders;  // one per M-edge
  bool stabilizers_conjugate = false;
  bool any_stabilizer_normal = false;
  std::size_t e_orbit_size = 0;
  bool k_regular_on_m = false;

  std::optional<Permutation> sigma0, sigma1, tau, rho, delta;  // vertex permutations
  bool sigma_pair_generates_k = false;
  bool delta_rho_dihedral = false;
  std::optional<Permutation> literal_relabeling;  // reference M index -> ours
};

namespace detail {
inline bool swaps_sides(const Permutation& g, const LeviGraph& levi) {
  for (int v = 0; v < levi.graph.order(); ++v)
    if (levi.colours[g(v)] == levi.colours[v]) return false;
  return true;
}

inline bool fixes_e_with_pattern(const Permutation& p, const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& ok) {
  if (p(marked::kE) != marked::kE) return false;
  std::vector<int> f_cycles, m_cycles;  // cycle lengths inside each class
  for (const auto& c : p.cycles()) {
    if (c.front() == marked::kE) continue;
    bool in_f = c.front() >= marked::f(0) && c.front() <= marked::f(3);
    for (int x : c)
      if ((x >= marked::f(0) && x <= marked::f(3)) != in_f) return false;
    (in_f ? f_cycles : m_cycles).push_back(static_cast<int>(c.size()));
  }
  std::sort(f_cycles.begin(), f_cycles.end());
  std::sort(m_cycles.begin(), m_cycles.end());
  return ok(f_cycles, m_cycles);
}
}  // namespace detail

inline AutStructure analyze_automorphisms(const BridgeGraph& bg) {
  AutStructure s;
  const Graph& g = bg.graph();
  auto aut = automorphism_group(g);
  s.order = aut.order();
  s.aut = aut.group();
  if (s.aut.order() != s.order) throw StructuralError("automorphism closure disagrees with orbit product");
  s.marked_edges = marked_edges(bg);
  const auto medges = s.marked_edges.all();

  std::set<Permutation> image;
  for (const auto& a : s.aut.elements()) {
    auto p = edge_action(a, medges);
    if (!p) throw StructuralError("marked edge set is not invariant under the automorphism group");
    image.insert(*p);
    s.projection.push_back(*p);
  }
  s.projected_order = image.size();

  // K and H
  std::vector<Permutation> three_power;
  for (const auto& a : s.aut.elements()) {
    auto o = a.order();
    while (o % 3 == 0) o /= 3;
    if (o == 1) three_power.push_back(a);
  }
  PermGroup k_closure(g.order(), three_power);
  s.k_is_subgroup = k_closure.order() == three_power.size();
  s.k = PermGroup::from_elements(static_cast<std::size_t>(g.order()), three_power);
  s.h = stabilizer(s.aut, s.marked_edges.e.u, s.marked_edges.e.v);
  s.k_normal = s.k_is_subgroup && is_normal(s.k, s.aut);
  s.h_normal = is_normal(s.h, s.aut);
  s.k_profile = order_profile(s.k);
  s.h_profile = order_profile(s.h);
  s.k_abelian = is_abelian(s.k);
  s.h_abelian = is_abelian(s.h);
  if (s.k.order() <= 200) {
    s.k_iso_z3_z3 = groups_isomorphic(s.k, direct_product(cyclic_group(3), cyclic_group(3)));
    s.k_iso_z9 = groups_isomorphic(s.k, cyclic_group(9));
  }
  if (s.h.order() <= 200) s.h_iso_d4_z2 = groups_isomorphic(s.h, direct_product(dihedral_group(4), cyclic_group(2)));
  if (s.k_is_subgroup) s.semidirect = semidirect_certificate(s.aut, s.k, s.h);

  // Stabilizers of the nine marked edges.
  std::vector<PermGroup> stabs;
  for (const auto& e : medges) {
    stabs.push_back(stabilizer(s.aut, e.u, e.v));
    s.stabilizer_orders.push_back(stabs.back().order());
    if (is_normal(stabs.back(), s.aut)) s.any_stabilizer_normal = true;
  }
  s.stabilizers_conjugate = true;
  for (std::size_t i = 1; i < stabs.size(); ++i)
    if (!conjugating_element(s.aut, stabs[0], stabs[i])) s.stabilizers_conjugate = false;

  std::set<int> orbit;
  for (const auto& p : s.projection) orbit.insert(p(marked::kE));
  s.e_orbit_size = orbit.size();
  {
    std::set<int> k_orbit;
    bool fixed_point_free = true;
    for (const auto& a : s.k.elements()) {
      auto p = *edge_action(a, medges);
      k_orbit.insert(p(marked::kE));
      if (!a.is_identity() && p.cycle_type() != std::vector<int>{3, 3, 3}) fixed_point_free = false;
    }
    s.k_regular_on_m = k_orbit.size() == 9 && s.k.order() == 9 && fixed_point_free;
  }

  // sigma_0, sigma_1: two generators of K of M-cycle type 3+3+3.
  for (const auto& a : s.k.elements()) {
    if (a.is_identity() || edge_action(a, medges)->cycle_type() != std::vector<int>{3, 3, 3}) continue;
    if (!s.sigma0) {
      s.sigma0 = a;
    } else if (!PermGroup(a.degree(), {*s.sigma0}).contains(a)) {
      s.sigma1 = a;
      break;
    }
  }
  if (s.sigma0 && s.sigma1) {
    PermGroup gen(static_cast<std::size_t>(g.order()), {*s.sigma0, *s.sigma1});
    s.sigma_pair_generates_k = gen.order() == 9 && s.k_is_subgroup && gen.order() == s.k.order();
  }

  // tau: swaps the bipartition, fixes every marked edge setwise.
  for (std::size_t i = 0; i < s.aut.elements().size(); ++i)
    if (s.projection[i].is_identity() && detail::swaps_sides(s.aut.elements()[i], bg.levi)) {
      s.tau = s.aut.elements()[i];
      break;
    }

  // rho (e fixed, 4-cycles on f and on m) and delta (e fixed, involution with
  // one f-transposition and two m-transpositions) generating a D_4 on M.
  auto is_rho = [](const Permutation& p) {
    return detail::fixes_e_with_pattern(p, [](const auto& f, const auto& m) {
      return f == std::vector<int>{4} && m == std::vector<int>{4};
    });
  };
  auto is_delta = [](const Permutation& p) {
    return detail::fixes_e_with_pattern(p, [](const auto& f, const auto& m) {
      return f == std::vector<int>{1, 1, 2} && m == std::vector<int>{2, 2};
    });
  };
  const auto d4 = dihedral_group(4);
  for (std::size_t i = 0; i < s.projection.size() && !s.delta_rho_dihedral; ++i) {
    if (!is_rho(s.projection[i])) continue;
    for (std::size_t j = 0; j < s.projection.size(); ++j) {
      if (!is_delta(s.projection[j])) continue;
      PermGroup dr(9, {s.projection[j], s.projection[i]});
      if (dr.order() == 8 && groups_isomorphic(dr, d4)) {
        s.rho = s.aut.elements()[i];
        s.delta = s.aut.elements()[j];
        s.delta_rho_dihedral = true;
        break;
      }
    }
  }

  // Is there a relabelling of M (e fixed, f's among f's, m's among m's)
  // under which the four named permutations all lie in the projected group?
  const std::array<Permutation, 4> named{marked::sigma0(), marked::sigma1(), marked::delta(), marked::rho()};
  std::vector<int> fp{0, 1, 2, 3};
  do {
    std::vector<int> mp{0, 1, 2, 3};
    do {
      std::vector<int> img(9);
      img[marked::kE] = marked::kE;
      for (int i = 0; i < 4; ++i) {
        img[marked::f(i)] = marked::f(fp[i]);
        img[marked::m(i)] = marked::m(mp[i]);
      }
      Permutation pi(img);
      Permutation pinv = pi.inverse();
      bool all = std::all_of(named.begin(), named.end(),
                             [&](const Permutation& x) { return image.count(pi * x * pinv) > 0; });
      if (all) s.literal_relabeling = pi;
    } while (!s.literal_relabeling && std::next_permutation(mp.begin(), mp.end()));
  } while (!s.literal_relabeling && std::next_permutation(fp.begin(), fp.end()));

  return s;
}

}  // namespace p2fi
