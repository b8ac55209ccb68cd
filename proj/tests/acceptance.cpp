// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "p2fi/aut_structure.hpp"
#include "p2fi/canon.hpp"
#include "p2fi/configuration.hpp"
#include "p2fi/connectivity.hpp"
#include "p2fi/goedgebeur.hpp"
#include "p2fi/graph6.hpp"
#include "p2fi/survey.hpp"
#include "p2fi/two_factors.hpp"

using namespace p2fi;

namespace {

// Collects failed sub-checks for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& actual, const B& expected, const std::string& what) {
    if (!(actual == expected)) {
      std::ostringstream os;
      os << what << " (got " << actual << ", want " << expected << ")";
      failures_.push_back(os.str());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

int failed = 0;

void criterion(int id, const char* title, const std::function<void(Checker&)>& body) {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = c.failures().empty();
  std::printf("%s criterion %d: %s [%.2fs]\n", ok ? "PASS" : "FAIL", id, title, secs);
  for (const auto& f : c.failures()) std::printf("    - %s\n", f.c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

}  // namespace

int main() {
  std::vector<BridgeScan> scan;
  std::optional<GoedgebeurGraph> gg;

  criterion(1, "reconstruction of the order-144 join (30 vertices, cubic, bipartite, girth 6, "
               "essentially 4-edge-connected, cyclically 6-edge-connected, |Aut| = 144, under 120 s)",
            [&](Checker& c) {
              const auto start = std::chrono::steady_clock::now();
              scan = scan_bridges();
              gg = identify_goedgebeur(scan);
              const Graph& g = gg->graph();
              c.equal(g.order(), 30, "vertices");
              c.equal(g.size(), 45u, "edges");
              c.expect(is_cubic(g), "cubic");
              c.expect(bipartition(g).has_value(), "bipartite");
              c.equal(girth(g).value_or(-1), 6, "girth");
              c.expect(is_essentially_4_edge_connected(g), "essentially 4-edge-connected");
              c.equal(cyclic_edge_connectivity(g).value.value_or(-1), 6, "cyclic edge connectivity");
              c.equal(automorphism_group(g).order(), 144u, "|Aut|");
              const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
              c.expect(secs < 120.0, "runtime under 120 s");
            });

  std::optional<AutStructure> st;
  criterion(2, "Aut = K x| H with K = Z3 x Z3 normal, H = stabilizer of e = D4 x Z2, stabilizers of M conjugate",
            [&](Checker& c) {
              if (!gg) throw StructuralError("criterion 1 did not produce the graph");
              st = analyze_automorphisms(gg->bridge);
              c.expect(st->semidirect.holds(), "semidirect certificate");
              c.equal(st->k.order(), 9u, "|K|");
              c.expect(st->k_profile == OrderProfile{{1, 1}, {3, 8}}, "K order profile {1:1,3:8}");
              c.expect(st->k_iso_z3_z3, "K = Z3 x Z3");
              c.expect(!st->k_iso_z9, "K not cyclic");
              c.expect(st->k_normal, "K normal");
              c.equal(st->h.order(), 16u, "|H|");
              c.expect(!st->h_abelian, "H non-abelian");
              c.expect(st->h_profile == OrderProfile{{1, 1}, {2, 11}, {4, 4}}, "H order profile {1:1,2:11,4:4}");
              c.expect(st->h_iso_d4_z2, "H = D4 x Z2");
              c.expect(st->stabilizers_conjugate, "nine M-edge stabilizers pairwise conjugate");
            });

  criterion(3, "marked edges: unique e, four independent m-edges, sigma/rho/delta/tau present in the M-action",
            [&](Checker& c) {
              if (!st) throw StructuralError("criterion 2 did not produce the analysis");
              const auto m = st->marked_edges;
              std::set<Vertex> ends;
              for (const auto& e : m.m) {
                ends.insert(e.u);
                ends.insert(e.v);
              }
              c.equal(ends.size(), 8u, "m-edge endpoints");
              const auto medges = m.all();
              c.expect(st->sigma0 && edge_action(*st->sigma0, medges)->cycle_type() == std::vector<int>{3, 3, 3},
                       "sigma0 of type 3+3+3");
              c.expect(st->sigma1 && edge_action(*st->sigma1, medges)->cycle_type() == std::vector<int>{3, 3, 3},
                       "sigma1 of type 3+3+3");
              c.expect(st->sigma_pair_generates_k, "sigma0, sigma1 generate K");
              c.expect(st->rho && edge_action(*st->rho, medges)->cycle_type() == std::vector<int>{1, 4, 4},
                       "rho fixes e with two 4-cycles");
              c.expect(st->delta && edge_action(*st->delta, medges)->order() == 2 &&
                           (*edge_action(*st->delta, medges))(0) == 0,
                       "delta an involution fixing e");
              c.expect(st->delta_rho_dihedral, "<delta, rho> acts as D4 on M");
              c.expect(st->tau && edge_action(*st->tau, medges)->is_identity(), "tau fixes every marked edge");
              bool swaps = st->tau.has_value();
              for (int v = 0; swaps && v < gg->graph().order(); ++v)
                swaps = gg->bridge.levi.colours[(*st->tau)(v)] != gg->bridge.levi.colours[v];
              c.expect(swaps, "tau exchanges points and lines");
            });

  criterion(4, "census of the 576 joins: diagonal 8 + 16, off-diagonal class histogram, sizes sum to 576",
            [&](Checker& c) {
              auto s = run_survey();
              c.equal(s.total(), 576u, "total");
              c.equal(s.rows.size(), 17u, "classes");
              std::map<std::uint64_t, std::size_t> diag;
              std::map<std::uint64_t, std::multiset<std::size_t>> off;
              for (const auto& r : s.rows) {
                if (r.diagonal) {
                  diag[r.aut_order] += r.diagonal_count;
                  c.equal(r.diagonal_count, r.size, "diagonal classes contain only diagonal specs");
                } else {
                  off[r.aut_order].insert(r.size);
                }
              }
              c.expect(diag == std::map<std::uint64_t, std::size_t>{{144, 8}, {24, 16}}, "diagonal 144:8, 24:16");
              c.expect(off[16] == std::multiset<std::size_t>{8}, "aut 16: one class of 8");
              c.expect(off[8] == std::multiset<std::size_t>{16, 16, 16, 16, 16, 16}, "aut 8: six classes of 16");
              c.expect(off[4] == std::multiset<std::size_t>{32, 32, 32, 32, 64}, "aut 4: 64 and 4 x 32");
              c.expect(off[2] == std::multiset<std::size_t>{64, 64}, "aut 2: two classes of 64");
              c.expect(off[1] == std::multiset<std::size_t>{128}, "aut 1: one class of 128");
              c.equal(off.size(), 5u, "off-diagonal automorphism orders");
              if (gg) c.equal(goedgebeur_row(s).representative, gg->certificate, "144 row equals identified graph");
            });

  criterion(5, "pseudo 2-factor isomorphism: K33 (AllOdd, 6), Heawood, Pappus, the order-144 join; refutation check",
            [&](Checker& c) {
              auto k33 = pseudo_2fi(complete_bipartite(3, 3));
              c.equal(to_string(k33.status), std::string("AllOdd"), "K33 status");
              c.equal(k33.matching_count, 6u, "K33 two-factors");
              for (auto [name, g] : {std::pair{"Heawood", heawood()}, std::pair{"Pappus", pappus()}}) {
                auto r = pseudo_2fi(g);
                c.expect(r.status != ParityStatus::Mixed && r.status != ParityStatus::NoTwoFactor,
                         std::string(name) + " not Mixed (" + to_string(r.status) + ")");
              }
              if (gg) {
                auto r = pseudo_2fi(gg->graph());
                c.expect(r.pseudo_2_factor_isomorphic(), "order-144 join not Mixed (" + to_string(r.status) + ")");
              }
              c.expect(refutation_check().holds(), "refutation check");
            });

  criterion(6, "geometry: Levi(Fano) = LCF[5,-5]^7, Levi(MK) = GP(8,3) = LCF[5,-5]^8, self-duality, |Aut(Levi)| = 2|Aut|",
            [&](Checker& c) {
              c.expect(are_isomorphic(levi_graph(fano()).graph, lcf({5, -5}, 7)), "Levi(Fano) = Heawood");
              c.expect(are_isomorphic(levi_graph(moebius_kantor()).graph, generalized_petersen(8, 3)),
                       "Levi(MK) = GP(8,3)");
              c.expect(are_isomorphic(generalized_petersen(8, 3), lcf({5, -5}, 8)), "GP(8,3) = LCF[5,-5]^8");
              if (!gg) throw StructuralError("criterion 1 did not produce the graph");
              const std::vector<std::tuple<const char*, Configuration, std::uint64_t, std::uint64_t>> cases{
                  {"Fano", fano(), 336, 168}, {"MK", moebius_kantor(), 96, 48}, {"C", gg->bridge.config, 144, 72}};
              for (const auto& [name, conf, levi_order, conf_order] : cases) {
                c.expect(is_self_dual(conf), std::string(name) + " self-dual");
                auto levi = automorphism_group(levi_graph(conf).graph).order();
                auto own = configuration_automorphisms(conf).order();
                c.equal(levi, levi_order, std::string(name) + " |Aut(Levi)|");
                c.equal(own, conf_order, std::string(name) + " |Aut(config)|");
                c.equal(levi, 2 * own, std::string(name) + " |Aut(Levi)| = 2|Aut(config)|");
              }
            });

  criterion(7, "oracles: graph6 round trip x1000, certificate invariance x100 per named graph, "
               "2-factor enumeration vs subsets, cyclic connectivity vs brute force",
            [&](Checker& c) {
              std::mt19937 rng(20261015);
              std::uniform_int_distribution<int> size(0, 30);
              std::uniform_real_distribution<double> density(0.0, 1.0);
              int round_trip_failures = 0;
              for (int t = 0; t < 1000; ++t) {
                Graph g = random_graph(size(rng), density(rng), rng);
                if (!(graph6_decode(graph6_encode(g)) == g)) ++round_trip_failures;
              }
              c.equal(round_trip_failures, 0, "graph6 round-trip failures");

              std::vector<std::pair<const char*, Graph>> named{
                  {"K33", complete_bipartite(3, 3)}, {"Petersen", petersen()}, {"Heawood", heawood()},
                  {"Pappus", pappus()}, {"MK", moebius_kantor_graph()}};
              if (gg) named.emplace_back("order-144 join", gg->graph());
              for (const auto& [name, g] : named) {
                const auto base = canonical_form(g).certificate;
                int mismatches = 0;
                std::vector<int> p(g.order());
                for (int t = 0; t < 100; ++t) {
                  std::iota(p.begin(), p.end(), 0);
                  std::shuffle(p.begin(), p.end(), rng);
                  if (canonical_form(g.relabeled(p)).certificate != base) ++mismatches;
                }
                c.equal(mismatches, 0, std::string(name) + " certificate changes under relabeling");
              }

              const std::vector<std::pair<const char*, Graph>> small{
                  {"K4", complete_graph(4)},           {"K33", complete_bipartite(3, 3)},
                  {"prism", triangular_prism()},       {"cube", generalized_petersen(4, 1)},
                  {"Wagner", lcf({4}, 8)},             {"Petersen", petersen()},
                  {"GP(5,1)", generalized_petersen(5, 1)}, {"Franklin", lcf({5, -5}, 6)},
                  {"GP(6,2)", generalized_petersen(6, 2)}, {"GP(6,1)", generalized_petersen(6, 1)},
                  {"LCF[3,-3]^4", lcf({3, -3}, 4)},    {"LCF[-3,3]^5", lcf({-3, 3}, 5)}};
              for (const auto& [name, g] : small) {
                auto mine = pseudo_2fi(g).cycle_counts;
                std::sort(mine.begin(), mine.end());
                c.expect(mine == oracle::two_factor_cycle_counts(g), std::string(name) + " 2-factor enumeration");
              }
              for (const auto& [name, g] : {std::pair{"Petersen", petersen()}, std::pair{"prism", triangular_prism()}}) {
                auto fast = cyclic_edge_connectivity(g).value;
                auto slow = oracle::cyclic_edge_connectivity(g, 6);
                c.expect(fast.has_value() && fast == slow, std::string(name) + " cyclic connectivity");
              }
            });

  std::printf("%s: %d of 7 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
