#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "p2fi/error.hpp"

namespace p2fi {

/// Bijection on {0, ..., degree-1} stored as an image array.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
      if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
        throw ConstructionError("image array is not a bijection");
      seen[x] = 1;
    }
  }

  /// From disjoint cycles, e.g. from_cycles(4, {{0,1,2,3}}).
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p(degree);
    std::vector<char> used(degree, 0);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        int a = c[k];
        if (a < 0 || static_cast<std::size_t>(a) >= degree || used[a])
          throw ConstructionError("cycles are not disjoint or out of range");
        used[a] = 1;
        p.images_[a] = c[(k + 1) % c.size()];
      }
    }
    return p;
  }

  /// Parses cycle notation over single digits, e.g. "(0123)", "(02)(13)", "id".
  static Permutation parse_cycles(std::size_t degree, std::string_view text) {
    if (text == "id" || text == "()") return Permutation(degree);
    std::vector<std::vector<int>> cycles;
    std::vector<int>* current = nullptr;
    for (char c : text) {
      if (c == '(') {
        cycles.emplace_back();
        current = &cycles.back();
      } else if (c == ')') {
        current = nullptr;
      } else if (c >= '0' && c <= '9' && current) {
        current->push_back(c - '0');
      } else if (c != ' ') {
        throw ConstructionError("bad cycle notation: " + std::string(text));
      }
    }
    return from_cycles(degree, cycles);
  }

  std::size_t degree() const noexcept { return images_.size(); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  Permutation inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<int>(i);
    return r;
  }

  /// Disjoint cycles including fixed points, each starting at its least point,
  /// ordered by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> c;
      for (int x = static_cast<int>(s); !seen[x]; x = images_[x]) {
        seen[x] = 1;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Sorted cycle lengths (fixed points count as 1).
  std::vector<int> cycle_type() const {
    std::vector<int> t;
    for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end());
    return t;
  }

  std::size_t order() const {
    std::size_t r = 1;
    for (int len : cycle_type()) r = std::lcm(r, static_cast<std::size_t>(len));
    return r;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& c : cycles()) {
      if (c.size() == 1) continue;
      s += '(';
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(c[k]);
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

  /// Composition as functions: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw ConstructionError("degree mismatch in composition");
    Permutation r;
    r.images_.resize(a.images_.size());
    for (std::size_t i = 0; i < r.images_.size(); ++i) r.images_[i] = a.images_[b.images_[i]];
    return r;
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.images()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

}  // namespace p2fi
