#pragma once

// Scanning all 576 eight-bridge joins and picking out the order-144 class.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "p2fi/canon.hpp"
#include "p2fi/construction.hpp"
#include "p2fi/two_factors.hpp"

namespace p2fi {

inline constexpr int kBridgeCount = 576;

struct BridgeScan {
  int rank = 0;
  BridgeSpec spec;
  std::string certificate;
  std::uint64_t aut_order = 0;
  int girth = 0;
  std::optional<ParityStatus> parity;
};

/// Runs `work(i)` for i in [0, count) on up to `threads` workers.
template <typename F>
void parallel_for(int count, unsigned threads, F&& work) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max(count, 1)));
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        try {
          for (int i = next++; i < count; i = next++) work(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      });
  }
  if (failure) std::rethrow_exception(failure);
}

/// Certificate, automorphism order and girth for every spec, indexed by rank.
/// Any join failing the bridge invariants raises StructuralError.
inline std::vector<BridgeScan> scan_bridges(bool with_parity = false, unsigned threads = 0) {
  std::vector<BridgeScan> out(kBridgeCount);
  parallel_for(kBridgeCount, threads, [&](int r) {
    BridgeScan s;
    s.rank = r;
    s.spec = spec_from_rank(r);
    auto bg = bridge_join(s.spec);
    const Graph& g = bg.graph();
    auto gir = girth(g);
    if (g.order() != 30 || g.size() != 45 || !is_cubic(g) || !gir)
      throw StructuralError("bridge " + s.spec.to_string() + " is not a 30-vertex cubic graph");
    s.girth = *gir;
    auto [cf, aut] = canonical_form_and_group(g);
    s.certificate = std::move(cf.certificate);
    s.aut_order = aut.order();
    if (with_parity) s.parity = pseudo_2fi(g).status;
    out[static_cast<std::size_t>(r)] = std::move(s);
  });
  return out;
}

struct GoedgebeurGraph {
  BridgeSpec spec;
  BridgeGraph bridge;
  std::string certificate;
  std::vector<int> member_ranks;  // every spec producing this class

  const Graph& graph() const { return bridge.graph(); }
};

/// The lexicographically least spec whose join has 144 automorphisms; all
/// order-144 joins must be isomorphic and pseudo 2-factor isomorphic.
inline GoedgebeurGraph identify_goedgebeur(const std::vector<BridgeScan>& scan) {
  GoedgebeurGraph out;
  std::optional<int> first;
  for (const auto& s : scan) {
    if (s.aut_order != 144) continue;
    if (!first) {
      first = s.rank;
      out.certificate = s.certificate;
    } else if (s.certificate != out.certificate) {
      throw StructuralError("more than one isomorphism class with 144 automorphisms");
    }
    out.member_ranks.push_back(s.rank);
  }
  if (!first) throw StructuralError("no eight-bridge join has 144 automorphisms");
  out.spec = spec_from_rank(*first);
  out.bridge = bridge_join(out.spec);
  if (!pseudo_2fi(out.graph()).pseudo_2_factor_isomorphic())
    throw StructuralError("order-144 join is not pseudo 2-factor isomorphic");
  return out;
}

inline GoedgebeurGraph identify_goedgebeur() { return identify_goedgebeur(scan_bridges()); }

}  // namespace p2fi
