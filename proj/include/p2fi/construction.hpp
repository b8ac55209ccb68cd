#pragma once

// Residues of the Möbius-Kantor and Fano configurations, the eight-bridge
// joins that glue them into 15_3 configurations, and the marked edge set
// {e, f_0..f_3, m_0..m_3} of a joined Levi graph.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "p2fi/configuration.hpp"
#include "p2fi/error.hpp"
#include "p2fi/graph.hpp"
#include "p2fi/permutation.hpp"

namespace p2fi {

/// A join whose configuration has two lines meeting twice.
class InvalidBridge : public StructuralError {
 public:
  InvalidBridge(const std::string& what, std::pair<int, int> lines)
      : StructuralError(what), lines_(lines) {}
  std::pair<int, int> lines() const noexcept { return lines_; }

 private:
  std::pair<int, int> lines_;
};

using Quad = std::array<int, 4>;

/// Quadrilateral P_0..P_3 with side lines sides[i] = P_i P_{i+1}.
struct Quadrilateral {
  Quad points{};
  Quad sides{};
};

/// Two vertex-disjoint quadrilaterals, each side of one passing through a vertex of the other.
struct QuadrilateralPair {
  Quadrilateral first;
  Quadrilateral second;
};

namespace detail {
inline void require_n3_valencies(const Configuration& c) {
  for (int p = 0; p < c.num_points(); ++p)
    if (c.point_valency(p) != 3)
      throw PreconditionError("point " + c.point_name(p) + " is not on exactly 3 lines");
  for (int l = 0; l < c.num_lines(); ++l)
    if (c.line_valency(l) != 3)
      throw PreconditionError("line " + c.line_name(l) + " does not have exactly 3 points");
}
}  // namespace detail

/// All quadrilaterals up to rotation and reflection (P_0 least, P_1 < P_3).
/// With `diagonal_free`, P_0P_2 and P_1P_3 must not be collinear.
inline std::vector<Quadrilateral> quadrilaterals(const Configuration& c, bool diagonal_free) {
  detail::require_n3_valencies(c);
  const int n = c.num_points();
  std::vector<Quadrilateral> out;
  auto collinear3 = [&](int a, int b, int d) {
    for (int l = 0; l < c.num_lines(); ++l)
      if (c.incident(a, l) && c.incident(b, l) && c.incident(d, l)) return true;
    return false;
  };
  for (int p0 = 0; p0 < n; ++p0)
    for (int p1 = p0 + 1; p1 < n; ++p1)
      for (int p2 = p0 + 1; p2 < n; ++p2)
        for (int p3 = p1 + 1; p3 < n; ++p3) {
          if (p2 == p1 || p2 == p3) continue;
          Quad q{p0, p1, p2, p3};
          if (collinear3(p0, p1, p2) || collinear3(p0, p1, p3) || collinear3(p0, p2, p3) ||
              collinear3(p1, p2, p3))
            continue;
          Quadrilateral quad{q, {}};
          bool ok = true;
          for (int i = 0; i < 4 && ok; ++i) {
            auto l = c.line_through(q[i], q[(i + 1) % 4]);
            if (!l) ok = false;
            else quad.sides[i] = *l;
          }
          if (!ok) continue;
          if (diagonal_free && (c.line_through(p0, p2) || c.line_through(p1, p3))) continue;
          out.push_back(quad);
        }
  return out;
}

/// Ordered pairs of diagonal-free quadrilaterals that are mutually inscribed
/// and circumscribed.
inline std::vector<QuadrilateralPair> quadrilaterals_mutually_inscribed(const Configuration& c) {
  auto quads = quadrilaterals(c, true);
  auto inscribed_in = [&](const Quadrilateral& outer, const Quadrilateral& inner) {
    // each side of outer carries exactly one vertex of inner, all distinct
    std::set<int> hit;
    for (int l : outer.sides) {
      int count = 0;
      for (int p : inner.points)
        if (c.incident(p, l)) {
          ++count;
          hit.insert(p);
        }
      if (count != 1) return false;
    }
    return hit.size() == 4;
  };
  std::vector<QuadrilateralPair> out;
  for (const auto& a : quads)
    for (const auto& b : quads) {
      bool disjoint = std::none_of(a.points.begin(), a.points.end(), [&](int p) {
        return std::find(b.points.begin(), b.points.end(), p) != b.points.end();
      });
      if (disjoint && inscribed_in(a, b) && inscribed_in(b, a)) out.push_back({a, b});
    }
  return out;
}

/// A configuration with some incidences deleted, leaving four open points
/// and four open lines of valency two.
struct Residue {
  Configuration base;
  std::vector<std::pair<int, int>> removed;  // (point, line)
  Quad open_points{};
  Quad open_lines{};
  std::vector<int> companion_points;

  /// The base with the removed incidences deleted; no point or line disappears.
  Configuration structure() const {
    std::vector<std::vector<int>> lines = base.lines();
    for (auto [p, l] : removed) {
      auto& pts = lines[static_cast<std::size_t>(l)];
      pts.erase(std::remove(pts.begin(), pts.end(), p), pts.end());
    }
    std::vector<std::string> pn, ln;
    for (int p = 0; p < base.num_points(); ++p) pn.push_back(base.point_name(p));
    for (int l = 0; l < base.num_lines(); ++l) ln.push_back(base.line_name(l));
    return Configuration(base.num_points(), std::move(lines), std::move(pn), std::move(ln));
  }

  void validate() const {
    for (auto [p, l] : removed)
      if (!base.incident(p, l)) throw StructuralError("removed incidence was not present in the base");
    auto s = structure();
    for (int p = 0; p < s.num_points(); ++p) {
      bool open = std::find(open_points.begin(), open_points.end(), p) != open_points.end();
      if (s.point_valency(p) != (open ? 2 : 3)) throw StructuralError("residue point valency mismatch");
    }
    for (int l = 0; l < s.num_lines(); ++l) {
      bool open = std::find(open_lines.begin(), open_lines.end(), l) != open_lines.end();
      if (s.line_valency(l) != (open ? 2 : 3)) throw StructuralError("residue line valency mismatch");
    }
  }
};

/// Möbius-Kantor residue: the even quadrilateral P = (0,2,4,6) and the odd
/// one (1,3,5,7) are mutually inscribed. The odd sides are indexed so that
/// l_i is the side through P_{i-2}, i.e. l_i = L_{2i+4}; removing
/// P_i | l_{i+2} (each even point from the odd side through it) leaves the
/// inscription only.
inline Residue mk_residue() {
  Residue r;
  r.base = moebius_kantor();
  r.companion_points = {1, 3, 5, 7};
  for (int i = 0; i < 4; ++i) {
    const int a = (2 * i + 5) % 8, b = (2 * i + 7) % 8;  // odd side l_i
    auto l = r.base.line_through(a, b);
    if (!l) throw StructuralError("Möbius-Kantor model lacks an odd side");
    r.open_points[i] = 2 * i;
    r.open_lines[i] = *l;
  }
  for (int i = 0; i < 4; ++i) {
    const int p = r.open_points[i], l = r.open_lines[(i + 2) % 4];
    if (!r.base.incident(p, l)) throw StructuralError("Möbius-Kantor model lacks the circumscription");
    r.removed.emplace_back(p, l);
  }
  r.validate();
  return r;
}

/// Fano residue: quadrilateral P''=(3,4,5,6) (complement of line 012), sides
/// l''_i = P''_i P''_{i+1}; the incidences P''_{i+1} | l''_i are removed so
/// that f_i = P''_i l''_i survives.
inline Residue f_residue() {
  Residue r;
  r.base = fano();
  r.open_points = {3, 4, 5, 6};
  for (int i = 0; i < 4; ++i) {
    auto l = r.base.line_through(r.open_points[i], r.open_points[(i + 1) % 4]);
    if (!l) throw StructuralError("Fano quadrilateral side missing");
    r.open_lines[i] = *l;
    r.removed.emplace_back(r.open_points[(i + 1) % 4], *l);
  }
  r.validate();
  return r;
}

/// Pair of permutations of {0,1,2,3}: MK open point i joins Fano open line
/// alpha(i); Fano open point beta(i) joins MK open line i.
struct BridgeSpec {
  Permutation alpha{4};
  Permutation beta{4};

  /// One-line image form, e.g. "0123".
  static Permutation parse_perm(std::string_view text) {
    if (text.size() != 4) throw ConstructionError("permutation must be 4 digits in image form");
    std::vector<int> img;
    for (char c : text) {
      if (c < '0' || c > '3') throw ConstructionError("permutation digit outside 0..3");
      img.push_back(c - '0');
    }
    return Permutation(img);
  }
  static std::string format_perm(const Permutation& p) {
    std::string s;
    for (int x : p.images()) s += static_cast<char>('0' + x);
    return s;
  }
  std::string to_string() const { return format_perm(alpha) + "," + format_perm(beta); }

  friend bool operator==(const BridgeSpec&, const BridgeSpec&) = default;
};

/// S_4 in lexicographic image order.
inline const std::vector<Permutation>& s4_elements() {
  static const std::vector<Permutation> all = [] {
    std::vector<Permutation> out;
    std::vector<int> img{0, 1, 2, 3};
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
  }();
  return all;
}

inline int s4_rank(const Permutation& p) {
  const auto& all = s4_elements();
  return static_cast<int>(std::lower_bound(all.begin(), all.end(), p) - all.begin());
}

inline int spec_rank(const BridgeSpec& s) { return 24 * s4_rank(s.alpha) + s4_rank(s.beta); }

inline BridgeSpec spec_from_rank(int rank) {
  return {s4_elements()[static_cast<std::size_t>(rank / 24)], s4_elements()[static_cast<std::size_t>(rank % 24)]};
}

/// A joined 15_3 configuration with its Levi graph and provenance.
/// Points: MK 0..7 then Fano 8..14; lines likewise; Levi vertex of line l is 15 + l.
struct BridgeGraph {
  BridgeSpec spec;
  Configuration config;
  LeviGraph levi;
  Quad f_open_points{};  // Levi vertices of P''_i
  Quad f_open_lines{};   // Levi vertices of l''_i
  Quad mk_open_points{};
  Quad mk_open_lines{};
  std::vector<char> in_mk;  // per Levi vertex
  EdgeList bridge;          // the eight added incidences

  const Graph& graph() const { return levi.graph; }
};

inline BridgeGraph bridge_join(const Residue& f, const Residue& mk, const BridgeSpec& spec) {
  const auto fs = f.structure();
  const auto ms = mk.structure();
  const int mk_points = ms.num_points(), mk_lines = ms.num_lines();
  const int points = mk_points + fs.num_points();

  std::vector<std::vector<int>> lines;
  std::vector<std::string> pn, ln;
  for (int p = 0; p < mk_points; ++p) pn.push_back("mk." + ms.point_name(p));
  for (int p = 0; p < fs.num_points(); ++p) pn.push_back("f." + fs.point_name(p));
  for (int l = 0; l < mk_lines; ++l) {
    lines.push_back(ms.line(l));
    ln.push_back("mk." + ms.line_name(l));
  }
  for (int l = 0; l < fs.num_lines(); ++l) {
    std::vector<int> pts;
    for (int p : fs.line(l)) pts.push_back(mk_points + p);
    lines.push_back(std::move(pts));
    ln.push_back("f." + fs.line_name(l));
  }
  std::vector<std::pair<int, int>> added;  // (point, line) in joined indexing
  for (int i = 0; i < 4; ++i) {
    added.emplace_back(mk.open_points[i], mk_lines + f.open_lines[spec.alpha(i)]);
    added.emplace_back(mk_points + f.open_points[spec.beta(i)], mk.open_lines[i]);
  }
  for (auto [p, l] : added) lines[static_cast<std::size_t>(l)].push_back(p);

  BridgeGraph out;
  out.spec = spec;
  out.config = Configuration(points, std::move(lines), std::move(pn), std::move(ln));
  if (auto bad = out.config.linearity_violation())
    throw InvalidBridge("bridge " + spec.to_string() + " makes lines " + out.config.line_name(bad->first) +
                            " and " + out.config.line_name(bad->second) + " meet twice",
                        *bad);
  out.config.validate_n3();
  out.levi = levi_graph(out.config);
  for (int i = 0; i < 4; ++i) {
    out.f_open_points[i] = out.levi.point_vertex(mk_points + f.open_points[i]);
    out.f_open_lines[i] = out.levi.line_vertex(mk_lines + f.open_lines[i]);
    out.mk_open_points[i] = out.levi.point_vertex(mk.open_points[i]);
    out.mk_open_lines[i] = out.levi.line_vertex(mk.open_lines[i]);
  }
  out.in_mk.assign(static_cast<std::size_t>(out.levi.graph.order()), 0);
  for (int p = 0; p < mk_points; ++p) out.in_mk[out.levi.point_vertex(p)] = 1;
  for (int l = 0; l < mk_lines; ++l) out.in_mk[out.levi.line_vertex(l)] = 1;
  for (auto [p, l] : added) out.bridge.emplace_back(out.levi.point_vertex(p), out.levi.line_vertex(l));
  std::sort(out.bridge.begin(), out.bridge.end());
  return out;
}

inline BridgeGraph bridge_join(const BridgeSpec& spec) {
  static const Residue f = f_residue();
  static const Residue mk = mk_residue();
  return bridge_join(f, mk, spec);
}

/// The nine marked edges. all() lists e, f_0..f_3, m_0..m_3.
struct MarkedEdges {
  Edge e;
  std::array<Edge, 4> f{};
  std::array<Edge, 4> m{};

  std::array<Edge, 9> all() const { return {e, f[0], f[1], f[2], f[3], m[0], m[1], m[2], m[3]}; }
};

/// Distance from a vertex to an edge: the nearer endpoint.
inline int vertex_edge_distance(const std::vector<std::vector<int>>& dist, Vertex x, const Edge& e) {
  return std::min(dist[x][e.u], dist[x][e.v]);
}

/// Distance between edges in the line graph: 0 for the same edge, otherwise
/// one more than the least endpoint-to-endpoint distance.
inline int edge_edge_distance(const std::vector<std::vector<int>>& dist, const Edge& a, const Edge& b) {
  if (a == b) return 0;
  return 1 + std::min({dist[a.u][b.u], dist[a.u][b.v], dist[a.v][b.u], dist[a.v][b.v]});
}

/// Locates e (unique edge at distance 2 from every P''_i and l''_i),
/// f_i = P''_i l''_i, and the MK-part edges at line-graph distance 2 from the
/// eight-bridge (exactly four, pairwise independent). Throws StructuralError
/// when a uniqueness or count assertion fails.
inline MarkedEdges marked_edges(const BridgeGraph& bg) {
  const Graph& g = bg.graph();
  const auto dist = distance_matrix(g);
  MarkedEdges out;
  for (int i = 0; i < 4; ++i) {
    Edge fi(bg.f_open_points[i], bg.f_open_lines[i]);
    if (!g.has_edge(fi.u, fi.v)) throw StructuralError("f-edge P''_i l''_i missing");
    out.f[static_cast<std::size_t>(i)] = fi;
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (out.f[i].shares_endpoint(out.f[j])) throw StructuralError("f-edges are not independent");

  std::vector<Edge> e_candidates;
  for (const auto& edge : g.edges()) {
    bool all_two = true;
    for (int i = 0; i < 4 && all_two; ++i)
      all_two = vertex_edge_distance(dist, bg.f_open_points[i], edge) == 2 &&
                vertex_edge_distance(dist, bg.f_open_lines[i], edge) == 2;
    if (all_two) e_candidates.push_back(edge);
  }
  if (e_candidates.size() != 1)
    throw StructuralError("expected a unique edge e at distance 2 from the open Fano elements, found " +
                          std::to_string(e_candidates.size()));
  out.e = e_candidates.front();

  std::vector<Edge> m_candidates;
  for (const auto& edge : g.edges()) {
    if (!bg.in_mk[edge.u] || !bg.in_mk[edge.v]) continue;
    int d = 1 << 20;
    for (const auto& b : bg.bridge) d = std::min(d, edge_edge_distance(dist, edge, b));
    if (d == 2) m_candidates.push_back(edge);
  }
  if (m_candidates.size() != 4)
    throw StructuralError("expected exactly four m-edges, found " + std::to_string(m_candidates.size()));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (m_candidates[i].shares_endpoint(m_candidates[j]))
        throw StructuralError("m-edges are not independent");
  std::sort(m_candidates.begin(), m_candidates.end());
  std::copy(m_candidates.begin(), m_candidates.end(), out.m.begin());
  auto all = out.all();
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw StructuralError("marked edges are not distinct");
  return out;
}

/// Induced permutation on an edge list (index i -> index of g(edges[i])),
/// or nullopt if the list is not invariant under g.
inline std::optional<Permutation> edge_action(const Permutation& g, std::span<const Edge> edges) {
  std::vector<int> img(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge target(g(edges[i].u), g(edges[i].v));
    auto it = std::find(edges.begin(), edges.end(), target);
    if (it == edges.end()) return std::nullopt;
    img[i] = static_cast<int>(it - edges.begin());
  }
  return Permutation(std::move(img));
}

}  // namespace p2fi
