#pragma once

// Edge-cut certificates for small cubic graphs: essential 4-edge-connectivity
// (no non-trivial cut of size <= 3) and cyclic edge connectivity.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "p2fi/error.hpp"
#include "p2fi/graph.hpp"

namespace p2fi {

enum class CutKind { Trivial, NonTrivial, Cyclic };

inline std::string to_string(CutKind k) {
  switch (k) {
    case CutKind::Trivial: return "trivial";
    case CutKind::NonTrivial: return "non-trivial";
    case CutKind::Cyclic: return "cyclic";
  }
  return "?";
}

/// An edge cut with the two vertex sides it separates.
struct CutCertificate {
  EdgeList cut;
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;
  CutKind kind = CutKind::NonTrivial;
};

/// Edges of g with exactly one endpoint in `side` (membership flags).
inline EdgeList boundary(const Graph& g, const std::vector<char>& side) {
  EdgeList out;
  for (const auto& e : g.edges())
    if (side[e.u] != side[e.v]) out.push_back(e);
  return out;
}

inline CutCertificate make_certificate(const Graph& g, const std::vector<char>& side, CutKind kind) {
  CutCertificate c;
  c.cut = boundary(g, side);
  for (Vertex v = 0; v < g.order(); ++v) (side[v] ? c.side_a : c.side_b).push_back(v);
  c.kind = kind;
  return c;
}

/// True iff g - cut splits into exactly the two recorded sides, each connected.
inline bool certificate_holds(const Graph& g, const CutCertificate& c) {
  std::vector<int> comp;
  int count = component_ids(g.without_edges(c.cut), comp);
  if (count != 2 || c.side_a.empty() || c.side_b.empty()) return false;
  int ca = comp[c.side_a.front()];
  for (Vertex v : c.side_a)
    if (comp[v] != ca) return false;
  for (Vertex v : c.side_b)
    if (comp[v] == ca) return false;
  return true;
}

namespace detail {

// Adjacency with edge ids so subsets of edges can be masked cheaply.
struct IndexedAdjacency {
  std::vector<std::vector<std::pair<Vertex, int>>> adj;

  explicit IndexedAdjacency(const Graph& g) : adj(static_cast<std::size_t>(g.order())) {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const auto& e = g.edges()[i];
      adj[e.u].emplace_back(e.v, static_cast<int>(i));
      adj[e.v].emplace_back(e.u, static_cast<int>(i));
    }
  }

  int components(const std::vector<char>& removed, std::vector<int>& comp) const {
    comp.assign(adj.size(), -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (std::size_t s = 0; s < adj.size(); ++s) {
      if (comp[s] >= 0) continue;
      comp[s] = count;
      stack.push_back(static_cast<Vertex>(s));
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (auto [y, id] : adj[x])
          if (!removed[id] && comp[y] < 0) {
            comp[y] = count;
            stack.push_back(y);
          }
      }
      ++count;
    }
    return count;
  }
};

inline void require_cubic_connected(const Graph& g, const char* op) {
  if (!is_cubic(g)) throw PreconditionError(std::string(op) + " requires a cubic graph");
  if (!is_connected(g)) throw PreconditionError(std::string(op) + " requires a connected graph");
}

}  // namespace detail

struct EssentialConnectivity {
  bool holds = true;
  std::optional<CutCertificate> witness;
};

/// Brute force over all edge subsets of size 1..3. A disconnecting subset
/// is trivial only when it is the star of a single vertex.
inline EssentialConnectivity essential_4_edge_connectivity(const Graph& g) {
  detail::require_cubic_connected(g, "essential 4-edge-connectivity");
  const detail::IndexedAdjacency ia(g);
  const int m = static_cast<int>(g.size());
  std::vector<char> removed(static_cast<std::size_t>(m), 0);
  std::vector<int> comp;
  std::optional<CutCertificate> witness;

  auto examine = [&]() {
    int count = ia.components(removed, comp);
    if (count < 2) return false;
    // Pick a component whose removal keeps the rest connected (a leaf of the
    // component tree); in a cubic graph with <= 3 removed edges a singleton
    // component forces exactly two components, so the cut is trivial.
    std::vector<int> sizes(static_cast<std::size_t>(count), 0);
    for (int c : comp) ++sizes[c];
    for (int c = 0; c < count; ++c) {
      std::vector<char> side(comp.size(), 0);
      for (std::size_t v = 0; v < comp.size(); ++v) side[v] = comp[v] == c;
      auto cert = make_certificate(g, side, CutKind::NonTrivial);
      if (!certificate_holds(g, cert)) continue;
      if (sizes[c] >= 2 && static_cast<int>(comp.size()) - sizes[c] >= 2) {
        witness = std::move(cert);
        return true;
      }
    }
    return false;
  };

  for (int a = 0; a < m; ++a) {
    removed[a] = 1;
    if (examine()) return {false, witness};
    for (int b = a + 1; b < m; ++b) {
      removed[b] = 1;
      if (examine()) return {false, witness};
      for (int c = b + 1; c < m; ++c) {
        removed[c] = 1;
        if (examine()) return {false, witness};
        removed[c] = 0;
      }
      removed[b] = 0;
    }
    removed[a] = 0;
  }
  return {true, std::nullopt};
}

inline bool is_essentially_4_edge_connected(const Graph& g) { return essential_4_edge_connectivity(g).holds; }

struct CyclicConnectivity {
  std::optional<int> value;  // nullopt: no two vertex-disjoint cycles
  std::optional<CutCertificate> witness;
};

namespace detail {

using VertexMask = std::uint64_t;

/// Simple cycles of length <= max_len as vertex masks, each listed once.
inline std::vector<VertexMask> cycles_up_to(const Graph& g, int max_len) {
  std::vector<VertexMask> out;
  std::vector<Vertex> path;
  VertexMask mask = 0;
  std::function<void(Vertex, Vertex)> dfs = [&](Vertex s, Vertex x) {
    for (Vertex y : g.neighbors(x)) {
      if (y == s && path.size() >= 3 && path[1] < path.back()) out.push_back(mask);
      if (y <= s || ((mask >> y) & 1u) || static_cast<int>(path.size()) >= max_len) continue;
      path.push_back(y);
      mask |= VertexMask{1} << y;
      dfs(s, y);
      mask &= ~(VertexMask{1} << y);
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    mask = VertexMask{1} << s;
    dfs(s, s);
  }
  return out;
}

/// True iff the subgraph induced by `mask` contains a cycle.
inline bool induces_cycle(const Graph& g, VertexMask mask) {
  int vertices = std::popcount(mask), edges = 0;
  for (const auto& e : g.edges())
    if (((mask >> e.u) & 1u) && ((mask >> e.v) & 1u)) ++edges;
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  int comps = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!((mask >> s) & 1u) || seen[s]) continue;
    ++comps;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (((mask >> y) & 1u) && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return edges > vertices - comps;
}

/// Unit-capacity max flow between two contracted vertex sets, stopping at
/// `limit`. Returns the flow value and, when below the limit, the source
/// side of a minimum cut.
class ContractedFlow {
 public:
  explicit ContractedFlow(const Graph& g) : g_(g), ia_(g) {}

  int run(VertexMask source, VertexMask sink, int limit, VertexMask* source_side) {
    const std::size_t m = g_.size();
    used_.assign(2 * m, 0);  // flow on arc (edge id, direction)
    int flow = 0;
    std::vector<int> via(static_cast<std::size_t>(g_.order()));
    std::vector<Vertex> queue;
    while (true) {
      std::fill(via.begin(), via.end(), -2);
      queue.clear();
      for (Vertex v = 0; v < g_.order(); ++v)
        if ((source >> v) & 1u) {
          via[v] = -1;
          queue.push_back(v);
        }
      Vertex reached = -1;
      for (std::size_t qi = 0; qi < queue.size() && reached < 0; ++qi) {
        Vertex x = queue[qi];
        for (auto [y, id] : ia_.adj[x]) {
          if (via[y] != -2) continue;
          if (residual(x, y, id) <= 0) continue;
          via[y] = encode(id, x);
          if ((sink >> y) & 1u) {
            reached = y;
            break;
          }
          queue.push_back(y);
        }
      }
      if (reached < 0) {
        if (source_side) {
          VertexMask side = 0;
          for (Vertex v = 0; v < g_.order(); ++v)
            if (via[v] != -2) side |= VertexMask{1} << v;
          *source_side = side;
        }
        return flow;
      }
      for (Vertex y = reached; via[y] != -1;) {
        int code = via[y];
        int id = code / 2;
        Vertex x = g_.edges()[id].other(y);
        push(x, y, id);
        y = x;
      }
      if (++flow >= limit) return flow;
    }
  }

 private:
  int encode(int id, Vertex from) const { return 2 * id + (g_.edges()[id].u == from ? 0 : 1); }
  // arc index 2*id is u->v, 2*id+1 is v->u
  int residual(Vertex x, Vertex, int id) const {
    bool forward = g_.edges()[id].u == x;
    int f = used_[2 * id + (forward ? 0 : 1)] - used_[2 * id + (forward ? 1 : 0)];
    return 1 - f;
  }
  void push(Vertex x, Vertex, int id) {
    bool forward = g_.edges()[id].u == x;
    int& back = used_[2 * id + (forward ? 1 : 0)];
    if (back > 0) --back;
    else ++used_[2 * id + (forward ? 0 : 1)];
  }

  const Graph& g_;
  IndexedAdjacency ia_;
  std::vector<int> used_;
};

/// Largest girth a cubic multigraph on h vertices can have (Moore bound).
inline int moore_girth_limit(int h) {
  auto moore = [](int gamma) -> long {
    if (gamma % 2) return 3L * (1L << ((gamma - 1) / 2)) - 2;
    return (1L << (gamma / 2 + 1)) - 2;
  };
  int gamma = 1;
  while (moore(gamma + 1) <= h) ++gamma;
  return gamma;
}

}  // namespace detail

/// Minimum size of an edge cut leaving two components that both contain a
/// cycle. Every pair of vertex-disjoint cycles is contracted to a source and
/// a sink and separated by max flow. For cubic graphs only cycles up to a
/// length bound are needed: shrinking a cyclic side to its 2-core leaves at
/// most k degree-2 vertices (k = cut size) around a cubic multigraph on at
/// most n - girth vertices, whose girth obeys the Moore bound.
inline CyclicConnectivity cyclic_edge_connectivity(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("cyclic edge connectivity requires a connected graph");
  if (g.order() > 64) throw ResourceError("cyclic edge connectivity supports at most 64 vertices");
  CyclicConnectivity out;
  auto gir = girth(g);
  if (!gir) return out;

  using detail::VertexMask;
  const VertexMask all = g.order() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.order()) - 1;
  int best = std::numeric_limits<int>::max();
  VertexMask best_side = 0;

  // Upper bound from shortest cycles whose complement is still cyclic.
  for (VertexMask c : detail::cycles_up_to(g, *gir)) {
    if (!detail::induces_cycle(g, all & ~c)) continue;
    std::vector<char> side(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v = 0; v < g.order(); ++v) side[v] = (c >> v) & 1u;
    auto cert = make_certificate(g, side, CutKind::Cyclic);
    if (!certificate_holds(g, cert)) continue;
    int size = static_cast<int>(cert.cut.size());
    if (size < best) {
      best = size;
      best_side = c;
    }
  }

  int max_len = g.order();
  if (is_cubic(g) && best != std::numeric_limits<int>::max())
    max_len = std::min(max_len, detail::moore_girth_limit(g.order() - *gir) + best - 1);
  const auto cycles = detail::cycles_up_to(g, max_len);
  detail::ContractedFlow flow(g);
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (cycles[i] & cycles[j]) continue;
      VertexMask side = 0;
      int f = flow.run(cycles[i], cycles[j], best, &side);
      if (f < best) {
        best = f;
        best_side = side;
      }
    }

  if (best == std::numeric_limits<int>::max()) return out;
  std::vector<char> side(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) side[v] = (best_side >> v) & 1u;
  out.value = best;
  out.witness = make_certificate(g, side, CutKind::Cyclic);
  return out;
}

}  // namespace p2fi
