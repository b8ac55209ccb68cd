#pragma once

// Small finite permutation groups given by generators. Elements are
// materialized lazily by breadth-first closure; every query works on the
// explicit element list, which is adequate for orders in the hundreds.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "p2fi/error.hpp"
#include "p2fi/permutation.hpp"

namespace p2fi {

class PermGroup {
 public:
  static constexpr std::size_t kMaxOrder = 1'000'000;

  PermGroup() = default;

  PermGroup(std::size_t degree, std::vector<Permutation> generators)
      : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      if (g.degree() != degree_) throw ConstructionError("generator degree mismatch");
  }

  /// Group generated by an explicit element list (closure computed eagerly).
  static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements) {
    PermGroup g(degree, elements);
    g.materialize();
    return g;
  }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Sorted element list; computed on first use. Throws ResourceError past kMaxOrder.
  const std::vector<Permutation>& elements() const {
    materialize();
    return *elements_;
  }

  std::size_t order() const { return elements().size(); }

  bool contains(const Permutation& p) const {
    const auto& els = elements();
    return std::binary_search(els.begin(), els.end(), p);
  }

  Permutation identity() const { return Permutation(degree_); }

  /// Orbit of a point, sorted.
  std::vector<int> orbit(int point) const {
    std::vector<char> seen(degree_, 0);
    std::vector<int> out{point}, stack{point};
    seen[point] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const auto& g : generators_) {
        int y = g(x);
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
          stack.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void materialize() const {
    if (elements_) return;
    std::unordered_set<Permutation, PermutationHash> seen;
    std::vector<Permutation> out;
    std::queue<Permutation> frontier;
    Permutation id(degree_);
    seen.insert(id);
    out.push_back(id);
    frontier.push(id);
    while (!frontier.empty()) {
      Permutation x = std::move(frontier.front());
      frontier.pop();
      for (const auto& g : generators_) {
        Permutation y = x * g;
        if (seen.insert(y).second) {
          if (seen.size() > kMaxOrder)
            throw ResourceError("group closure exceeded " + std::to_string(kMaxOrder) + " elements");
          out.push_back(y);
          frontier.push(std::move(y));
        }
      }
    }
    std::sort(out.begin(), out.end());
    elements_ = std::make_shared<const std::vector<Permutation>>(std::move(out));
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  mutable std::shared_ptr<const std::vector<Permutation>> elements_;
};

inline PermGroup closure(std::size_t degree, std::vector<Permutation> generators) {
  PermGroup g(degree, std::move(generators));
  (void)g.elements();
  return g;
}

inline bool is_subgroup(const PermGroup& sub, const PermGroup& group) {
  if (sub.degree() != group.degree()) return false;
  for (const auto& s : sub.generators())
    if (!group.contains(s)) return false;
  return true;
}

namespace detail {
inline void require_subgroup(const PermGroup& sub, const PermGroup& group, const char* what) {
  if (!is_subgroup(sub, group)) throw PreconditionError(std::string(what) + " is not a subgroup");
}
}  // namespace detail

/// True iff g s g^-1 lies in `sub` for all generators g of `group`, s of `sub`.
inline bool is_normal(const PermGroup& sub, const PermGroup& group) {
  detail::require_subgroup(sub, group, "normality candidate");
  for (const auto& g : group.generators()) {
    Permutation gi = g.inverse();
    for (const auto& s : sub.generators())
      if (!sub.contains(g * s * gi)) return false;
  }
  return true;
}

/// Subgroup of elements satisfying `keep` (which must define a subgroup).
inline PermGroup filter_subgroup(const PermGroup& group,
                                 const std::function<bool(const Permutation&)>& keep) {
  std::vector<Permutation> els;
  for (const auto& g : group.elements())
    if (keep(g)) els.push_back(g);
  return PermGroup::from_elements(group.degree(), std::move(els));
}

/// Pointwise stabilizer of a point.
inline PermGroup stabilizer(const PermGroup& group, int point) {
  if (point < 0 || static_cast<std::size_t>(point) >= group.degree())
    throw PreconditionError("stabilizer point out of range");
  return filter_subgroup(group, [point](const Permutation& g) { return g(point) == point; });
}

/// Setwise stabilizer of an unordered pair.
inline PermGroup stabilizer(const PermGroup& group, int a, int b) {
  if (a < 0 || b < 0 || static_cast<std::size_t>(std::max(a, b)) >= group.degree())
    throw PreconditionError("stabilizer pair out of range");
  return filter_subgroup(group, [a, b](const Permutation& g) {
    return (g(a) == a && g(b) == b) || (g(a) == b && g(b) == a);
  });
}

/// Element order -> number of elements of that order.
using OrderProfile = std::map<std::size_t, std::size_t>;

inline OrderProfile order_profile(const PermGroup& group) {
  OrderProfile p;
  for (const auto& g : group.elements()) ++p[g.order()];
  return p;
}

inline bool is_abelian(const PermGroup& group) {
  const auto& gens = group.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

inline PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  return filter_subgroup(a, [&b](const Permutation& g) { return b.contains(g); });
}

/// Subgroup generated by a list of elements of `group`.
inline PermGroup subgroup(const PermGroup& group, std::vector<Permutation> gens) {
  PermGroup s(group.degree(), std::move(gens));
  detail::require_subgroup(s, group, "generated set");
  return s;
}

inline PermGroup conjugate(const PermGroup& sub, const Permutation& g) {
  Permutation gi = g.inverse();
  std::vector<Permutation> gens;
  for (const auto& s : sub.generators()) gens.push_back(g * s * gi);
  return PermGroup(sub.degree(), std::move(gens));
}

/// Some g in `group` with g A g^-1 = B, if any.
inline std::optional<Permutation> conjugating_element(const PermGroup& group, const PermGroup& a,
                                                      const PermGroup& b) {
  if (a.order() != b.order()) return std::nullopt;
  for (const auto& g : group.elements()) {
    Permutation gi = g.inverse();
    bool ok = true;
    for (const auto& s : a.generators())
      if (!b.contains(g * s * gi)) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return std::nullopt;
}

/// Greedy generating set drawn from `group.generators()` with redundant ones dropped.
inline std::vector<Permutation> reduced_generators(const PermGroup& group) {
  std::vector<Permutation> gens;
  std::size_t current = 1;
  for (const auto& g : group.generators()) {
    if (g.is_identity()) continue;
    auto trial = gens;
    trial.push_back(g);
    std::size_t ord = PermGroup(group.degree(), trial).order();
    if (ord > current) {
      gens = std::move(trial);
      current = ord;
    }
  }
  return gens;
}

/// Exact isomorphism test for small groups: backtrack over images of a
/// reduced generating set of A, pruned by element orders, checking that the
/// word map is a well-defined injective homomorphism.
inline bool groups_isomorphic(const PermGroup& a, const PermGroup& b) {
  constexpr std::size_t kGuard = 200;
  if (a.order() > kGuard || b.order() > kGuard)
    throw ResourceError("groups_isomorphic supports orders up to 200");
  if (a.order() != b.order()) return false;
  if (order_profile(a) != order_profile(b)) return false;
  if (is_abelian(a) != is_abelian(b)) return false;

  const auto gens = reduced_generators(a);
  if (gens.empty()) return true;
  std::vector<std::vector<Permutation>> candidates;
  for (const auto& g : gens) {
    std::vector<Permutation> c;
    for (const auto& h : b.elements())
      if (h.order() == g.order()) c.push_back(h);
    candidates.push_back(std::move(c));
  }

  // Builds phi on <gens[0..k)> by BFS over words; fails on inconsistency or collision.
  auto consistent = [&](const std::vector<Permutation>& images, std::size_t k) {
    std::map<Permutation, Permutation> phi;
    std::map<Permutation, Permutation> inv;
    Permutation ida(a.degree()), idb(b.degree());
    phi.emplace(ida, idb);
    inv.emplace(idb, ida);
    std::queue<Permutation> q;
    q.push(ida);
    while (!q.empty()) {
      Permutation x = q.front();
      q.pop();
      const Permutation fx = phi.at(x);
      for (std::size_t i = 0; i < k; ++i) {
        Permutation y = x * gens[i];
        Permutation fy = fx * images[i];
        auto it = phi.find(y);
        if (it != phi.end()) {
          if (it->second != fy) return false;
          continue;
        }
        if (inv.count(fy)) return false;
        phi.emplace(y, fy);
        inv.emplace(fy, y);
        q.push(y);
      }
    }
    return true;
  };

  std::vector<Permutation> images(gens.size());
  std::function<bool(std::size_t)> assign = [&](std::size_t k) -> bool {
    if (k == gens.size()) return true;
    for (const auto& c : candidates[k]) {
      images[k] = c;
      if (consistent(images, k + 1) && assign(k + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

struct SemidirectReport {
  bool normal = false;
  bool trivial_intersection = false;
  bool orders_multiply = false;
  std::size_t group_order = 0;
  std::size_t normal_order = 0;
  std::size_t complement_order = 0;

  bool holds() const { return normal && trivial_intersection && orders_multiply; }
};

/// Certifies G = K ⋊ H: K normal in G, K ∩ H trivial, |K||H| = |G|.
inline SemidirectReport semidirect_certificate(const PermGroup& group, const PermGroup& normal,
                                               const PermGroup& complement) {
  detail::require_subgroup(normal, group, "normal factor");
  detail::require_subgroup(complement, group, "complement");
  SemidirectReport r;
  r.group_order = group.order();
  r.normal_order = normal.order();
  r.complement_order = complement.order();
  r.normal = is_normal(normal, group);
  r.trivial_intersection = intersection(normal, complement).order() == 1;
  r.orders_multiply = r.normal_order * r.complement_order == r.group_order;
  return r;
}

// ---------------------------------------------------------------------------
// Model groups
// ---------------------------------------------------------------------------

inline PermGroup cyclic_group(std::size_t n) {
  std::vector<int> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<int>((i + 1) % n);
  return PermGroup(n, {Permutation(img)});
}

inline PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup(n, {});
  std::vector<int> cyc(n), swap(n);
  for (std::size_t i = 0; i < n; ++i) {
    cyc[i] = static_cast<int>((i + 1) % n);
    swap[i] = static_cast<int>(i);
  }
  std::swap(swap[0], swap[1]);
  return PermGroup(n, {Permutation(cyc), Permutation(swap)});
}

/// Symmetries of a regular n-gon (order 2n).
inline PermGroup dihedral_group(std::size_t n) {
  std::vector<int> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<int>((i + 1) % n);
    refl[i] = static_cast<int>((n - i) % n);
  }
  return PermGroup(n, {Permutation(rot), Permutation(refl)});
}

/// A × B acting on the disjoint union of their point sets.
inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = i < a.degree() ? g(static_cast<int>(i)) : static_cast<int>(i);
    gens.emplace_back(img);
  }
  for (const auto& g : b.generators()) {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = i < a.degree()
                   ? static_cast<int>(i)
                   : static_cast<int>(a.degree()) + g(static_cast<int>(i - a.degree()));
    gens.emplace_back(img);
  }
  return PermGroup(n, std::move(gens));
}

}  // namespace p2fi
