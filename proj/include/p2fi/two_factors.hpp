#pragma once

// Perfect matchings and 2-factors of cubic graphs. In a cubic graph the
// 2-factors are exactly the complements of perfect matchings, so both are
// enumerated by one branch-and-bound.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "p2fi/error.hpp"
#include "p2fi/graph.hpp"

namespace p2fi {

using EdgeSet = EdgeList;  // sorted

/// All perfect matchings. Branching picks the lowest unmatched vertex and
/// tries its incident edges in increasing neighbour order.
inline std::vector<EdgeSet> enumerate_perfect_matchings(const Graph& g) {
  std::vector<EdgeSet> out;
  const int n = g.order();
  if (n % 2 != 0) return out;
  std::vector<char> matched(static_cast<std::size_t>(n), 0);
  EdgeSet current;
  std::function<void(Vertex)> branch = [&](Vertex from) {
    while (from < n && matched[from]) ++from;
    if (from == n) {
      EdgeSet m = current;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    matched[from] = 1;
    for (Vertex w : g.neighbors(from)) {
      if (matched[w]) continue;
      matched[w] = 1;
      current.emplace_back(from, w);
      branch(from + 1);
      current.pop_back();
      matched[w] = 0;
    }
    matched[from] = 0;
  };
  branch(0);
  return out;
}

/// 2-factors as complements of perfect matchings, in matching order.
inline std::vector<EdgeSet> two_factors(const Graph& g) {
  if (!is_cubic(g)) throw PreconditionError("two_factors requires a cubic graph");
  std::vector<EdgeSet> out;
  for (const auto& m : enumerate_perfect_matchings(g)) {
    EdgeSet f;
    f.reserve(g.size() - m.size());
    std::set_difference(g.edges().begin(), g.edges().end(), m.begin(), m.end(), std::back_inserter(f));
    out.push_back(std::move(f));
  }
  return out;
}

/// Number of cycles of a spanning 2-regular edge set of g.
inline int cycle_count(const EdgeSet& factor, const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  for (const auto& e : factor) {
    if (!g.has_edge(e.u, e.v)) throw PreconditionError("edge set is not a subgraph");
    ++deg[e.u];
    ++deg[e.v];
  }
  for (int d : deg)
    if (d != 2) throw PreconditionError("edge set is not 2-regular spanning");
  std::vector<int> comp;
  return component_ids(Graph(g.order(), factor), comp);
}

enum class ParityStatus { AllOdd, AllEven, Mixed, NoTwoFactor };

inline std::string to_string(ParityStatus s) {
  switch (s) {
    case ParityStatus::AllOdd: return "AllOdd";
    case ParityStatus::AllEven: return "AllEven";
    case ParityStatus::Mixed: return "Mixed";
    case ParityStatus::NoTwoFactor: return "NoTwoFactor";
  }
  return "?";
}

struct TwoFactorReport {
  std::size_t matching_count = 0;
  std::vector<int> cycle_counts;  // one entry per 2-factor, enumeration order
  ParityStatus status = ParityStatus::NoTwoFactor;

  bool pseudo_2_factor_isomorphic() const {
    return status == ParityStatus::AllOdd || status == ParityStatus::AllEven;
  }
};

inline TwoFactorReport pseudo_2fi(const Graph& g) {
  TwoFactorReport r;
  for (const auto& f : two_factors(g)) r.cycle_counts.push_back(cycle_count(f, g));
  r.matching_count = r.cycle_counts.size();
  if (r.cycle_counts.empty()) return r;
  bool odd = false, even = false;
  for (int c : r.cycle_counts) (c % 2 ? odd : even) = true;
  r.status = odd && even ? ParityStatus::Mixed : (odd ? ParityStatus::AllOdd : ParityStatus::AllEven);
  return r;
}

}  // namespace p2fi
