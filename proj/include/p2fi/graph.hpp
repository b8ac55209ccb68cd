#pragma once

// Immutable simple undirected graph on dense vertex indices, plus the small
// structural queries (degree regularity, bipartition, girth, connectivity)
// and the standard constructors used as reference objects.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "p2fi/error.hpp"

namespace p2fi {

using Vertex = int;

/// Unordered vertex pair stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr bool shares_endpoint(const Edge& o) const {
    return touches(o.u) || touches(o.v);
  }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Duplicate pairs collapse; loops and
  /// out-of-range endpoints throw ConstructionError.
  Graph(int n, std::span<const std::pair<int, int>> pairs,
        std::vector<std::string> labels = {})
      : n_(n), labels_(std::move(labels)) {
    if (n < 0) throw ConstructionError("negative vertex count");
    edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw ConstructionError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                                "} out of range for n=" + std::to_string(n));
      if (a == b) throw ConstructionError("loop at vertex " + std::to_string(a));
      edges_.emplace_back(a, b);
    }
    finish();
  }

  Graph(int n, const EdgeList& edges, std::vector<std::string> labels = {})
      : n_(n), edges_(edges), labels_(std::move(labels)) {
    if (n < 0) throw ConstructionError("negative vertex count");
    for (const auto& e : edges_) {
      if (e.u < 0 || e.v >= n)
        throw ConstructionError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                "} out of range for n=" + std::to_string(n));
      if (e.u == e.v) throw ConstructionError("loop at vertex " + std::to_string(e.u));
    }
    finish();
  }

  static Graph build(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<std::pair<int, int>> v(pairs);
    return Graph(n, std::span<const std::pair<int, int>>(v));
  }

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const EdgeList& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }

  /// Index of edge {a,b} in edges(), or -1.
  std::ptrdiff_t edge_index(Vertex a, Vertex b) const {
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return it - edges_.begin();
  }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const {
    if (labels_.empty()) return std::to_string(v);
    return labels_[static_cast<std::size_t>(v)];
  }
  Graph with_labels(std::vector<std::string> labels) const {
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
      throw ConstructionError("label table size does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
  }

  /// The graph with vertex v renamed to perm[v]. Labels follow their vertices.
  Graph relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_))
      throw ConstructionError("relabeling has wrong length");
    EdgeList out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(perm[e.u], perm[e.v]);
    std::vector<std::string> labels;
    if (!labels_.empty()) {
      labels.resize(labels_.size());
      for (int v = 0; v < n_; ++v) labels[perm[v]] = labels_[v];
    }
    return Graph(n_, out, std::move(labels));
  }

  /// The graph with the listed edges removed (vertex set unchanged).
  Graph without_edges(std::span<const Edge> removed) const {
    EdgeList keep;
    keep.reserve(edges_.size());
    for (const auto& e : edges_)
      if (std::find(removed.begin(), removed.end(), e) == removed.end()) keep.push_back(e);
    return Graph(n_, keep, labels_);
  }

  // Labels are a side table: equality is (n, edge set) only.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void finish() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n_))
      throw ConstructionError("label table size does not match vertex count");
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  int n_ = 0;
  EdgeList edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
};

/// Two disjoint vertex classes with every edge crossing.
struct Bipartition {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
};

inline bool is_regular(const Graph& g, int k) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

inline bool is_cubic(const Graph& g) { return is_regular(g, 3); }

/// Connected components as a per-vertex component id; returns the count.
inline int component_ids(const Graph& g, std::vector<int>& comp) {
  comp.assign(static_cast<std::size_t>(g.order()), -1);
  int count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  return count;
}

inline bool is_connected(const Graph& g) {
  std::vector<int> comp;
  return component_ids(g, comp) <= 1;
}

/// Two-colouring by BFS; side A holds colour 0 (which contains the smallest
/// vertex of each component).
inline std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          q.push(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition bp;
  for (Vertex v = 0; v < g.order(); ++v) (colour[v] == 0 ? bp.side_a : bp.side_b).push_back(v);
  return bp;
}

/// BFS distances from `source`; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : g.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  return dist;
}

/// All-pairs distance matrix (row-major, -1 = unreachable).
inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

/// Length of a shortest cycle, or nullopt for forests. A BFS from every
/// vertex; a non-tree edge {x,y} closes a walk of length d(x)+d(y)+1 which
/// contains a cycle no longer than that, and the shortest cycle is found
/// exactly from any of its own vertices.
inline std::optional<int> girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::queue<Vertex> q;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    q = {};
    q.push(s);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

// ---------------------------------------------------------------------------
// Standard constructions
// ---------------------------------------------------------------------------

inline Graph empty_graph(int n) { return Graph(n, EdgeList{}); }

inline Graph cycle_graph(int n) {
  if (n < 3) throw ConstructionError("cycle needs at least 3 vertices");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

/// K_{a,b} with side {0..a-1} and side {a..a+b-1}.
inline Graph complete_bipartite(int a, int b) {
  EdgeList e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

/// Cubic graph from LCF notation: Hamiltonian cycle 0..n-1 plus chords
/// i -> i + jumps[i mod len] (mod n), n = len * repeats.
inline Graph lcf(std::span<const int> jumps, int repeats) {
  if (jumps.empty() || repeats <= 0) throw ConstructionError("LCF needs jumps and repeats > 0");
  const int n = static_cast<int>(jumps.size()) * repeats;
  if (n < 4 || n % 2 != 0) throw ConstructionError("LCF vertex count must be even and >= 4");
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int j = jumps[static_cast<std::size_t>(i) % jumps.size()];
    int mag = j < 0 ? -j : j;
    if (mag < 2 || mag > n - 2)
      throw ConstructionError("LCF jump " + std::to_string(j) + " outside [2, n-2]");
    partner[i] = ((i + j) % n + n) % n;
  }
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    int t = partner[i];
    if (partner[t] != i)
      throw ConstructionError("LCF chord collision at vertex " + std::to_string(i) + " -> " +
                              std::to_string(t));
    e.emplace_back(i, t);
  }
  Graph g(n, e);
  if (!is_cubic(g)) throw ConstructionError("LCF chords do not yield a cubic simple graph");
  return g;
}

inline Graph lcf(std::initializer_list<int> jumps, int repeats) {
  std::vector<int> v(jumps);
  return lcf(std::span<const int>(v), repeats);
}

/// Parses LCF text such as "[5,-5]^7" (whitespace tolerated, "^k" optional).
inline Graph parse_lcf(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto read_int = [&]() -> int {
    skip();
    std::size_t start = i;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      neg = text[i] == '-';
      ++i;
    }
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      throw ParseError("expected integer in LCF", start);
    long value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("LCF integer too large", start);
      ++i;
    }
    return static_cast<int>(neg ? -value : value);
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw ParseError("LCF must start with '['", i);
  ++i;
  std::vector<int> jumps;
  while (true) {
    jumps.push_back(read_int());
    skip();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    throw ParseError("expected ',' or ']' in LCF", i);
  }
  skip();
  int repeats = 1;
  if (i < text.size() && text[i] == '^') {
    ++i;
    repeats = read_int();
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters after LCF", i);
  return lcf(std::span<const int>(jumps), repeats);
}

/// Generalized Petersen graph GP(n,k): outer u_i = i, inner v_i = n + i.
inline Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n)
    throw ConstructionError("GP(n,k) needs n >= 3 and 1 <= k < n/2");
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph(2 * n, e);
}

inline Graph petersen() { return generalized_petersen(5, 2); }
inline Graph heawood() { return lcf({5, -5}, 7); }
inline Graph moebius_kantor_graph() { return lcf({5, -5}, 8); }
inline Graph pappus() { return lcf({5, 7, -7, 7, -7, -5}, 3); }
inline Graph triangular_prism() { return generalized_petersen(3, 1); }

}  // namespace p2fi
