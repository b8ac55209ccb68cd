#pragma once

// Canonical labeling, isomorphism and automorphism groups for small
// (optionally vertex-coloured) graphs.
//
// Search tree: nodes are ordered partitions refined to equitability by
// splitting each cell on the multiset of neighbour cells. A node's children
// individualize each vertex of the first largest non-singleton cell. Leaves
// are discrete partitions, i.e. vertex orders.
//
// Automorphisms come from a stabilizer chain along the leftmost path
// (base v_1..v_k): for each level, every vertex of the target cell is tried
// as an image of v_i and an equivalent leaf is searched for. Orbit products
// give |Aut| exactly. The canonical form is then the least relabelled edge
// list over all leaves, with sibling subtrees skipped when a known
// automorphism fixing the current prefix maps one child to another.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "p2fi/graph.hpp"
#include "p2fi/graph6.hpp"
#include "p2fi/perm_group.hpp"
#include "p2fi/permutation.hpp"

namespace p2fi {

/// Canonically relabelled graph. `labeling[v]` is v's canonical position.
struct CanonicalForm {
  EdgeList edges;
  std::string certificate;
  std::vector<Vertex> labeling;
};

struct AutomorphismGroup {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Vertex> base;
  std::vector<std::size_t> orbit_sizes;

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (auto s : orbit_sizes) r *= s;
    return r;
  }
  PermGroup group() const { return PermGroup(degree, generators); }
};

namespace detail {

struct Partition {
  std::vector<std::vector<Vertex>> cells;
  std::vector<int> cell_of;

  bool discrete() const { return cells.size() == cell_of.size(); }

  void index() {
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c]) cell_of[v] = static_cast<int>(c);
  }
};

class Refiner {
 public:
  Refiner(const Graph& g, std::span<const int> colours) : g_(g) {
    if (!colours.empty() && colours.size() != static_cast<std::size_t>(g.order()))
      throw PreconditionError("colour vector size does not match vertex count");
    colours_.assign(colours.begin(), colours.end());
  }

  Partition initial() const {
    Partition p;
    const int n = g_.order();
    p.cell_of.assign(static_cast<std::size_t>(n), 0);
    if (n == 0) return p;
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto colour = [&](Vertex v) { return colours_.empty() ? 0 : colours_[v]; };
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return colour(a) < colour(b); });
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i == 0 || colour(order[i]) != colour(order[i - 1])) p.cells.emplace_back();
      p.cells.back().push_back(order[i]);
    }
    p.index();
    refine(p);
    return p;
  }

  /// Splits cells by neighbour-cell multisets until stable.
  void refine(Partition& p) const {
    std::vector<std::pair<std::vector<int>, Vertex>> keyed;
    while (true) {
      bool split = false;
      std::vector<std::vector<Vertex>> next;
      next.reserve(p.cells.size() * 2);
      for (const auto& cell : p.cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        keyed.clear();
        for (Vertex v : cell) keyed.emplace_back(signature(p, v), v);
        std::sort(keyed.begin(), keyed.end());
        next.emplace_back();
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i > 0 && keyed[i].first != keyed[i - 1].first) {
            next.emplace_back();
            split = true;
          }
          next.back().push_back(keyed[i].second);
        }
      }
      p.cells = std::move(next);
      p.index();
      if (!split) return;
    }
  }

  Partition individualize(const Partition& p, Vertex v) const {
    Partition q;
    q.cell_of = p.cell_of;
    q.cells.reserve(p.cells.size() + 1);
    for (const auto& cell : p.cells) {
      if (cell.size() > 1 && std::find(cell.begin(), cell.end(), v) != cell.end()) {
        q.cells.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex x : cell)
          if (x != v) rest.push_back(x);
        q.cells.push_back(std::move(rest));
      } else {
        q.cells.push_back(cell);
      }
    }
    q.index();
    refine(q);
    return q;
  }

  /// Quotient description: cell sizes and the neighbour-cell multiset of each cell.
  std::vector<int> invariant(const Partition& p) const {
    std::vector<int> out;
    for (const auto& cell : p.cells) {
      out.push_back(static_cast<int>(cell.size()));
      auto sig = signature(p, cell.front());
      out.push_back(static_cast<int>(sig.size()));
      out.insert(out.end(), sig.begin(), sig.end());
    }
    return out;
  }

  static int target_cell(const Partition& p) {
    int best = -1;
    std::size_t size = 1;
    for (std::size_t c = 0; c < p.cells.size(); ++c)
      if (p.cells[c].size() > size) {
        size = p.cells[c].size();
        best = static_cast<int>(c);
      }
    return best;
  }

  const Graph& graph() const { return g_; }
  int colour(Vertex v) const { return colours_.empty() ? 0 : colours_[v]; }
  bool coloured() const { return !colours_.empty(); }

 private:
  std::vector<int> signature(const Partition& p, Vertex v) const {
    std::vector<int> s;
    s.reserve(static_cast<std::size_t>(g_.degree(v)));
    for (Vertex w : g_.neighbors(v)) s.push_back(p.cell_of[w]);
    std::sort(s.begin(), s.end());
    return s;
  }

  const Graph& g_;
  std::vector<int> colours_;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

class Search {
 public:
  Search(const Graph& g, std::span<const int> colours) : refiner_(g, colours) {}

  AutomorphismGroup automorphisms() {
    build_first_path();
    AutomorphismGroup out;
    out.degree = static_cast<std::size_t>(refiner_.graph().order());
    out.base = base_;
    out.orbit_sizes.assign(base_.size(), 1);
    std::vector<std::size_t> level_of_gen;

    for (std::size_t lvl = base_.size(); lvl-- > 0;) {
      const auto& cell = path_[lvl].cells[static_cast<std::size_t>(targets_[lvl])];
      auto orbit_of_base = [&]() {
        UnionFind uf(out.degree);
        for (std::size_t k = 0; k < gens_.size(); ++k)
          if (level_of_gen[k] >= lvl)
            for (std::size_t x = 0; x < out.degree; ++x) uf.unite(static_cast<int>(x), gens_[k](static_cast<int>(x)));
        return uf;
      };
      UnionFind uf = orbit_of_base();
      for (Vertex w : cell) {
        if (w == base_[lvl] || uf.find(w) == uf.find(base_[lvl])) continue;
        auto found = find_automorphism(lvl, w);
        if (!found) continue;
        gens_.push_back(std::move(*found));
        level_of_gen.push_back(lvl);
        uf = orbit_of_base();
      }
      std::size_t size = 0;
      for (Vertex w : cell)
        if (uf.find(w) == uf.find(base_[lvl])) ++size;
      out.orbit_sizes[lvl] = size;
    }
    out.generators = gens_;
    return out;
  }

  CanonicalForm canonical() {
    if (path_.empty()) automorphisms();
    best_.reset();
    std::vector<Vertex> prefix;
    explore(path_.front(), prefix);
    CanonicalForm cf;
    cf.labeling = best_labeling_;
    cf.edges = *best_;
    Graph relabeled(refiner_.graph().order(), cf.edges);
    cf.certificate = graph6_encode(relabeled);
    if (refiner_.coloured()) {
      std::vector<int> by_position(cf.labeling.size());
      for (std::size_t v = 0; v < cf.labeling.size(); ++v)
        by_position[cf.labeling[v]] = refiner_.colour(static_cast<Vertex>(v));
      cf.certificate += ";c";
      for (int c : by_position) cf.certificate += ":" + std::to_string(c);
    }
    return cf;
  }

 private:
  void build_first_path() {
    path_.clear();
    base_.clear();
    targets_.clear();
    path_.push_back(refiner_.initial());
    while (!path_.back().discrete()) {
      int t = Refiner::target_cell(path_.back());
      Vertex v = path_.back().cells[static_cast<std::size_t>(t)].front();
      targets_.push_back(t);
      base_.push_back(v);
      path_.push_back(refiner_.individualize(path_.back(), v));
    }
    for (const auto& p : path_) invariants_.push_back(refiner_.invariant(p));
  }

  std::optional<Permutation> find_automorphism(std::size_t lvl, Vertex w) {
    Partition child = refiner_.individualize(path_[lvl], w);
    if (refiner_.invariant(child) != invariants_[lvl + 1]) return std::nullopt;
    return descend(lvl + 1, child);
  }

  std::optional<Permutation> descend(std::size_t lvl, const Partition& p) {
    if (lvl == base_.size()) {
      const Partition& leaf = path_.back();
      std::vector<int> img(leaf.cell_of.size());
      for (std::size_t c = 0; c < leaf.cells.size(); ++c) img[leaf.cells[c].front()] = p.cells[c].front();
      const Graph& g = refiner_.graph();
      for (const auto& e : g.edges())
        if (!g.has_edge(img[e.u], img[e.v])) return std::nullopt;
      return Permutation(std::move(img));
    }
    for (Vertex x : p.cells[static_cast<std::size_t>(targets_[lvl])]) {
      Partition child = refiner_.individualize(p, x);
      if (refiner_.invariant(child) != invariants_[lvl + 1]) continue;
      if (auto r = descend(lvl + 1, child)) return r;
    }
    return std::nullopt;
  }

  void explore(const Partition& p, std::vector<Vertex>& prefix) {
    if (p.discrete()) {
      leaf(p);
      return;
    }
    const int t = Refiner::target_cell(p);
    const std::size_t n = p.cell_of.size();
    UnionFind uf(n);
    for (const auto& g : gens_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex x) { return g(x) == x; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < n; ++x) uf.unite(static_cast<int>(x), g(static_cast<int>(x)));
    }
    std::vector<int> done;
    for (Vertex w : p.cells[static_cast<std::size_t>(t)]) {
      int root = uf.find(w);
      if (std::find(done.begin(), done.end(), root) != done.end()) continue;
      done.push_back(root);
      prefix.push_back(w);
      explore(refiner_.individualize(p, w), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const Partition& p) {
    std::vector<Vertex> lab(p.cell_of.size());
    for (std::size_t c = 0; c < p.cells.size(); ++c) lab[p.cells[c].front()] = static_cast<Vertex>(c);
    EdgeList edges;
    const auto& src = refiner_.graph().edges();
    edges.reserve(src.size());
    for (const auto& e : src) edges.emplace_back(lab[e.u], lab[e.v]);
    std::sort(edges.begin(), edges.end());
    if (!best_ || edges < *best_) {
      best_ = std::move(edges);
      best_labeling_ = std::move(lab);
    }
  }

  Refiner refiner_;
  std::vector<Partition> path_;
  std::vector<std::vector<int>> invariants_;
  std::vector<Vertex> base_;
  std::vector<int> targets_;
  std::vector<Permutation> gens_;
  std::optional<EdgeList> best_;
  std::vector<Vertex> best_labeling_;
};

}  // namespace detail

/// Automorphism group generators plus exact order. With `colours`, only
/// colour-preserving automorphisms are counted.
inline AutomorphismGroup automorphism_group(const Graph& g, std::span<const int> colours = {}) {
  detail::Search s(g, colours);
  return s.automorphisms();
}

inline CanonicalForm canonical_form(const Graph& g, std::span<const int> colours = {}) {
  detail::Search s(g, colours);
  return s.canonical();
}

/// Both the canonical form and the automorphism group from one search.
inline std::pair<CanonicalForm, AutomorphismGroup> canonical_form_and_group(
    const Graph& g, std::span<const int> colours = {}) {
  detail::Search s(g, colours);
  auto aut = s.automorphisms();
  return {s.canonical(), std::move(aut)};
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != static_cast<std::size_t>(g.order())) return false;
  for (const auto& e : g.edges())
    if (!g.has_edge(p(e.u), p(e.v))) return false;
  return true;
}

/// Vertex bijection a -> b preserving edges (and colours when given), if one
/// exists. The returned map is checked edge by edge.
inline std::optional<std::vector<Vertex>> isomorphism(const Graph& a, const Graph& b,
                                                      std::span<const int> colours_a = {},
                                                      std::span<const int> colours_b = {}) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (colours_a.empty() != colours_b.empty()) return std::nullopt;
  auto ca = canonical_form(a, colours_a);
  auto cb = canonical_form(b, colours_b);
  if (ca.certificate != cb.certificate) return std::nullopt;
  std::vector<Vertex> from_position(cb.labeling.size());
  for (std::size_t v = 0; v < cb.labeling.size(); ++v) from_position[cb.labeling[v]] = static_cast<Vertex>(v);
  std::vector<Vertex> map(ca.labeling.size());
  for (std::size_t v = 0; v < ca.labeling.size(); ++v) map[v] = from_position[ca.labeling[v]];
  for (const auto& e : a.edges())
    if (!b.has_edge(map[e.u], map[e.v]))
      throw StructuralError("canonical certificates agree but the induced map is not an isomorphism");
  for (std::size_t v = 0; v < map.size() && !colours_a.empty(); ++v)
    if (colours_a[v] != colours_b[map[v]])
      throw StructuralError("canonical certificates agree but the induced map breaks colours");
  return map;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) { return isomorphism(a, b).has_value(); }

}  // namespace p2fi
