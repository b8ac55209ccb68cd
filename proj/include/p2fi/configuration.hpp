#pragma once

// Point-line incidence structures: symmetric n_3 configurations, their Levi
// graphs, duals, and configuration automorphisms/dualities via coloured
// Levi-graph searches (points coloured 0, lines coloured 1).

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p2fi/canon.hpp"
#include "p2fi/error.hpp"
#include "p2fi/graph.hpp"

namespace p2fi {

/// Points 0..points-1; each line is a sorted list of points. Lines may carry
/// fewer than three points when the structure is a residue.
class Configuration {
 public:
  Configuration() = default;

  Configuration(int points, std::vector<std::vector<int>> lines, std::vector<std::string> point_names = {},
                std::vector<std::string> line_names = {})
      : points_(points),
        lines_(std::move(lines)),
        point_names_(std::move(point_names)),
        line_names_(std::move(line_names)) {
    for (auto& l : lines_) {
      std::sort(l.begin(), l.end());
      if (std::adjacent_find(l.begin(), l.end()) != l.end())
        throw ConstructionError("line repeats a point");
      for (int p : l)
        if (p < 0 || p >= points_) throw ConstructionError("line point out of range");
    }
    if (point_names_.empty())
      for (int p = 0; p < points_; ++p) point_names_.push_back("p" + std::to_string(p));
    if (line_names_.empty())
      for (std::size_t l = 0; l < lines_.size(); ++l) line_names_.push_back("L" + std::to_string(l));
    if (point_names_.size() != static_cast<std::size_t>(points_) || line_names_.size() != lines_.size())
      throw ConstructionError("name table size mismatch");
  }

  int num_points() const noexcept { return points_; }
  int num_lines() const noexcept { return static_cast<int>(lines_.size()); }
  const std::vector<std::vector<int>>& lines() const noexcept { return lines_; }
  const std::vector<int>& line(int l) const { return lines_[static_cast<std::size_t>(l)]; }
  const std::string& point_name(int p) const { return point_names_[static_cast<std::size_t>(p)]; }
  const std::string& line_name(int l) const { return line_names_[static_cast<std::size_t>(l)]; }

  bool incident(int p, int l) const {
    const auto& pts = line(l);
    return std::binary_search(pts.begin(), pts.end(), p);
  }

  std::vector<int> lines_through(int p) const {
    std::vector<int> out;
    for (int l = 0; l < num_lines(); ++l)
      if (incident(p, l)) out.push_back(l);
    return out;
  }

  int point_valency(int p) const { return static_cast<int>(lines_through(p).size()); }
  int line_valency(int l) const { return static_cast<int>(line(l).size()); }

  /// Index of the line through both points, if any (first match).
  std::optional<int> line_through(int a, int b) const {
    for (int l = 0; l < num_lines(); ++l)
      if (incident(a, l) && incident(b, l)) return l;
    return std::nullopt;
  }

  /// First pair of distinct lines sharing two or more points.
  std::optional<std::pair<int, int>> linearity_violation() const {
    for (int a = 0; a < num_lines(); ++a)
      for (int b = a + 1; b < num_lines(); ++b) {
        int shared = 0;
        for (int p : line(a))
          if (incident(p, b)) ++shared;
        if (shared >= 2) return std::pair{a, b};
      }
    return std::nullopt;
  }

  /// n points, n lines, all valencies 3, linear.
  bool is_symmetric_n3() const {
    if (num_lines() != points_) return false;
    for (int l = 0; l < num_lines(); ++l)
      if (line_valency(l) != 3) return false;
    for (int p = 0; p < points_; ++p)
      if (point_valency(p) != 3) return false;
    return !linearity_violation();
  }

  void validate_n3() const {
    if (num_lines() != points_)
      throw ConstructionError("configuration has " + std::to_string(points_) + " points but " +
                              std::to_string(num_lines()) + " lines");
    for (int l = 0; l < num_lines(); ++l)
      if (line_valency(l) != 3) throw ConstructionError("line " + line_name(l) + " does not have 3 points");
    for (int p = 0; p < points_; ++p)
      if (point_valency(p) != 3) throw ConstructionError("point " + point_name(p) + " is not on 3 lines");
    if (auto bad = linearity_violation())
      throw ConstructionError("lines " + line_name(bad->first) + " and " + line_name(bad->second) +
                              " share two points");
  }

  /// Incidence list (point, line), ordered by line then point.
  std::vector<std::pair<int, int>> incidences() const {
    std::vector<std::pair<int, int>> out;
    for (int l = 0; l < num_lines(); ++l)
      for (int p : line(l)) out.emplace_back(p, l);
    return out;
  }

 private:
  int points_ = 0;
  std::vector<std::vector<int>> lines_;
  std::vector<std::string> point_names_;
  std::vector<std::string> line_names_;
};

/// Fano plane: points 0..6, lines 012 034 056 135 146 236 245.
inline Configuration fano() {
  Configuration c(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  c.validate_n3();
  return c;
}

/// Cyclic Möbius-Kantor model: points Z_8, lines L_i = {i, i+1, i+3}.
inline Configuration moebius_kantor() {
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < 8; ++i) lines.push_back({i, (i + 1) % 8, (i + 3) % 8});
  Configuration c(8, std::move(lines));
  c.validate_n3();
  return c;
}

/// Levi graph with point p at vertex p and line l at vertex points + l.
struct LeviGraph {
  Graph graph;
  Bipartition sides;
  std::vector<int> colours;  // 0 = point, 1 = line
  int num_points = 0;

  Vertex point_vertex(int p) const { return p; }
  Vertex line_vertex(int l) const { return num_points + l; }
};

inline LeviGraph levi_graph(const Configuration& c) {
  const int np = c.num_points();
  const int nl = c.num_lines();
  std::vector<std::pair<int, int>> pairs;
  for (auto [p, l] : c.incidences()) pairs.emplace_back(p, np + l);
  std::vector<std::string> labels;
  for (int p = 0; p < np; ++p) labels.push_back(c.point_name(p));
  for (int l = 0; l < nl; ++l) labels.push_back(c.line_name(l));
  LeviGraph out;
  out.num_points = np;
  out.graph = Graph(np + nl, std::span<const std::pair<int, int>>(pairs), std::move(labels));
  for (int p = 0; p < np; ++p) out.sides.side_a.push_back(p);
  for (int l = 0; l < nl; ++l) out.sides.side_b.push_back(np + l);
  out.colours.assign(static_cast<std::size_t>(np), 0);
  out.colours.resize(static_cast<std::size_t>(np + nl), 1);
  return out;
}

/// Point j of the dual is line j; line p of the dual is the set of lines through p.
inline Configuration dual(const Configuration& c) {
  std::vector<std::vector<int>> lines;
  std::vector<std::string> pnames, lnames;
  for (int p = 0; p < c.num_points(); ++p) {
    lines.push_back(c.lines_through(p));
    lnames.push_back(c.point_name(p));
  }
  for (int l = 0; l < c.num_lines(); ++l) pnames.push_back(c.line_name(l));
  return Configuration(c.num_lines(), std::move(lines), std::move(pnames), std::move(lnames));
}

/// Isomorphism of incidence structures (points to points, lines to lines).
inline bool configurations_isomorphic(const Configuration& a, const Configuration& b) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return false;
  auto la = levi_graph(a);
  auto lb = levi_graph(b);
  return isomorphism(la.graph, lb.graph, la.colours, lb.colours).has_value();
}

inline bool is_self_dual(const Configuration& c) { return configurations_isomorphic(c, dual(c)); }

/// Incidence-preserving maps sending points to points and lines to lines.
inline AutomorphismGroup configuration_automorphisms(const Configuration& c) {
  auto levi = levi_graph(c);
  return automorphism_group(levi.graph, levi.colours);
}

}  // namespace p2fi
