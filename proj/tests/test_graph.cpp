#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "p2fi/graph.hpp"
#include "p2fi/graph6.hpp"

using namespace p2fi;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph cube() { return Graph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}); }

}  // namespace

TEST(Graph, NormalizesAndDeduplicatesEdges) {
  Graph g = Graph::build(4, {{1, 0}, {0, 1}, {3, 2}});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(2, 3));
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_FALSE(g.has_edge(0, 0));
  EXPECT_FALSE(g.has_edge(-1, 2));
  EXPECT_EQ(g.edge_index(3, 2), 1);
  EXPECT_EQ(g.edge_index(0, 3), -1);
}

TEST(Graph, RejectsLoopsAndRange) {
  EXPECT_THROW(Graph::build(3, {{1, 1}}), ConstructionError);
  EXPECT_THROW(Graph::build(3, {{0, 3}}), ConstructionError);
  EXPECT_THROW(Graph(-1, EdgeList{}), ConstructionError);
  EXPECT_THROW(Graph::build(3, {{0, 1}}).with_labels({"a"}), ConstructionError);
}

TEST(Graph, EqualityIgnoresLabels) {
  Graph a = cycle_graph(4);
  Graph b = a.with_labels({"w", "x", "y", "z"});
  EXPECT_EQ(a, b);
  EXPECT_EQ(b.label(2), "y");
  EXPECT_EQ(a.label(2), "2");
}

TEST(Graph, RelabelMovesEdgesAndLabels) {
  Graph g = Graph::build(3, {{0, 1}}).with_labels({"a", "b", "c"});
  std::vector<int> perm{2, 0, 1};
  Graph h = g.relabeled(perm);
  EXPECT_TRUE(h.has_edge(2, 0));
  EXPECT_EQ(h.size(), 1u);
  EXPECT_EQ(h.label(2), "a");
  EXPECT_EQ(h.label(1), "c");
  EXPECT_THROW(g.relabeled(std::vector<int>{0, 1}), ConstructionError);
}

TEST(Graph, WithoutEdges) {
  Graph g = complete_graph(4);
  std::vector<Edge> rm{Edge(0, 1), Edge(2, 3)};
  Graph h = g.without_edges(rm);
  EXPECT_EQ(h.size(), 4u);
  EXPECT_FALSE(h.has_edge(0, 1));
  EXPECT_EQ(h.order(), 4);
}

TEST(Graph, BasicPredicates) {
  EXPECT_TRUE(is_cubic(complete_graph(4)));
  EXPECT_FALSE(is_cubic(cycle_graph(5)));
  EXPECT_TRUE(is_regular(cycle_graph(5), 2));
  EXPECT_TRUE(is_connected(petersen()));
  EXPECT_FALSE(is_connected(empty_graph(2)));
  EXPECT_TRUE(is_connected(empty_graph(0)));
  std::vector<int> comp;
  EXPECT_EQ(component_ids(Graph::build(5, {{0, 1}, {2, 3}}), comp), 3);
  EXPECT_EQ(comp[0], comp[1]);
  EXPECT_NE(comp[0], comp[2]);
}

TEST(Graph, Bipartition) {
  auto b = bipartition(heawood());
  ASSERT_TRUE(b);
  EXPECT_EQ(b->side_a.size(), 7u);
  EXPECT_EQ(b->side_b.size(), 7u);
  EXPECT_FALSE(bipartition(petersen()));
  EXPECT_FALSE(bipartition(cycle_graph(7)));
  EXPECT_TRUE(bipartition(complete_bipartite(3, 4)));
}

TEST(Graph, Distances) {
  auto d = distance_matrix(petersen());
  int diameter = 0;
  for (const auto& row : d)
    for (int x : row) diameter = std::max(diameter, x);
  EXPECT_EQ(diameter, 2);
  auto bfs = bfs_distances(Graph::build(3, {{0, 1}}), 0);
  EXPECT_EQ(bfs[1], 1);
  EXPECT_EQ(bfs[2], -1);
}

TEST(Graph, GirthMatchesOracle) {
  std::vector<Graph> graphs{complete_graph(4), complete_bipartite(3, 3), petersen(), heawood(), pappus(),
                            moebius_kantor_graph(), triangular_prism(), cube(), cycle_graph(9),
                            generalized_petersen(7, 2), generalized_petersen(10, 3)};
  for (const auto& g : graphs) EXPECT_EQ(girth(g), oracle::girth(g));
  EXPECT_EQ(girth(petersen()), 5);
  EXPECT_EQ(girth(heawood()), 6);
  EXPECT_EQ(girth(pappus()), 6);
  EXPECT_EQ(girth(complete_bipartite(3, 3)), 4);
  EXPECT_FALSE(girth(Graph::build(4, {{0, 1}, {1, 2}, {1, 3}})));

  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Graph g = random_graph(12, 0.2, rng);
    EXPECT_EQ(girth(g), oracle::girth(g));
  }
}

TEST(Lcf, NamedGraphs) {
  EXPECT_EQ(heawood().order(), 14);
  EXPECT_EQ(moebius_kantor_graph().order(), 16);
  EXPECT_EQ(pappus().order(), 18);
  EXPECT_TRUE(is_cubic(pappus()));
  EXPECT_EQ(parse_lcf("[5,-5]^7"), heawood());
  EXPECT_EQ(parse_lcf(" [ 5 , -5 ] ^ 8 "), moebius_kantor_graph());
  EXPECT_EQ(parse_lcf("[3,-3]^4").order(), 8);
}

TEST(Lcf, RejectsBadJumps) {
  EXPECT_THROW(lcf({1}, 6), ConstructionError);
  EXPECT_THROW(lcf({5}, 6), ConstructionError);
  // 2 -> 4 while 4 -> 1: the chord pairing is inconsistent
  EXPECT_THROW(lcf({2, 3}, 3), ConstructionError);
  EXPECT_THROW(lcf({3}, 5), ConstructionError);
  EXPECT_THROW(lcf({}, 3), ConstructionError);
  EXPECT_THROW(lcf({3}, 0), ConstructionError);
}

TEST(Lcf, ParseErrorsCarryOffsets) {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse_lcf(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  EXPECT_EQ(offset_of("5,-5]^7"), 0u);
  EXPECT_EQ(offset_of("[5;-5]^7"), 2u);
  EXPECT_EQ(offset_of("[5,x]^7"), 3u);
  EXPECT_EQ(offset_of("[5,-5]^7q"), 8u);
  EXPECT_EQ(offset_of("[5,-5]^"), 7u);
}

TEST(GeneralizedPetersen, Shape) {
  Graph g = generalized_petersen(8, 3);
  EXPECT_EQ(g.order(), 16);
  EXPECT_EQ(g.size(), 24u);
  EXPECT_TRUE(is_cubic(g));
  EXPECT_TRUE(g.has_edge(0, 8));
  EXPECT_TRUE(g.has_edge(8, 11));
  EXPECT_TRUE(g.has_edge(7, 0));
  EXPECT_THROW(generalized_petersen(2, 1), ConstructionError);
  EXPECT_THROW(generalized_petersen(8, 4), ConstructionError);
  EXPECT_THROW(generalized_petersen(8, 0), ConstructionError);
}

TEST(Graph6, ReferenceStrings) {
  // encodings produced by an independent graph library
  EXPECT_EQ(graph6_encode(complete_bipartite(3, 3)), "EFz_");
  Graph small = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  EXPECT_EQ(graph6_encode(small), "Ds[");
  Graph nine = Graph::build(9, {{0, 3}, {0, 5}, {1, 3}, {1, 8}, {3, 5}, {5, 6}});
  EXPECT_EQ(graph6_encode(nine), "HEAOG@?");
  Graph thirteen = Graph::build(
      13, {{0, 6},  {0, 7},  {0, 8},  {0, 10}, {1, 2},  {1, 3},  {1, 4},   {1, 10},  {1, 12},  {2, 5},  {2, 6},  {2, 8},
           {2, 9},  {2, 12}, {3, 4},  {3, 8},  {3, 9},  {3, 11}, {4, 5},   {4, 9},   {4, 10},  {5, 6},  {5, 8},  {5, 10},
           {5, 11}, {6, 7},  {6, 10}, {6, 11}, {7, 9},  {7, 12}, {9, 10},  {9, 12},  {10, 11}, {11, 12}});
  EXPECT_EQ(graph6_encode(thirteen), "LISlKEsMU[apWT");
  EXPECT_EQ(graph6_decode("LISlKEsMU[apWT"), thirteen);

  const std::string twenty = "SAI?g?_@FkP?o@???g???GEqo?@aOPGG?";
  Graph g20 = graph6_decode(twenty);
  EXPECT_EQ(g20.order(), 20);
  EXPECT_EQ(g20.size(), 36u);
  EXPECT_EQ(graph6_encode(g20), twenty);

  const std::string sixty_four =
      "~?@?_@GC?QI@CCO?H???OO@????I??S?o@O@@_??g@?@?KB??A?????G??C??h?A??a_o?cOA???_GA@?_G@@??H??????`??AO??GAG??CIo?@?"
      "@A??O?@?????????OG??C???O??G??C???O????@A???@Ac??C@?G?BC?O????_?C???@??C???COA???C?????OA?@??GH??I?_OB??G????@?@"
      "??@????CC?CYQOOO?AO???G??goH?CM?c@???C??GCO??`?C?`???G?P?GG??_?E?????????S?s??C???@??G??`A?G??C???G????C?A?QW@??C"
      "O?O";
  Graph g64 = graph6_decode(sixty_four);
  EXPECT_EQ(g64.order(), 64);
  EXPECT_EQ(g64.size(), 191u);
  EXPECT_EQ(graph6_encode(g64), sixty_four);
}

TEST(Graph6, NamedGraphsFromReferenceStrings) {
  EXPECT_EQ(oracle::automorphism_count(graph6_decode("IheA@GUAo")), 120u);
  EXPECT_TRUE(oracle::isomorphic(graph6_decode("IheA@GUAo"), petersen()));
  EXPECT_TRUE(oracle::isomorphic(graph6_decode("MhEGHC@AI?_PC@_G_"), heawood()));
  EXPECT_TRUE(oracle::isomorphic(graph6_decode("QhEGGD@?G__P?@G?_GGO@?CE?AG"), pappus()));
  EXPECT_TRUE(oracle::isomorphic(graph6_decode("OhEGHC@AG?_PO@?Ga?K?P"), moebius_kantor_graph()));
}

TEST(Graph6, HeaderAndNewline) {
  EXPECT_EQ(graph6_decode(">>graph6<<EFz_\n"), complete_bipartite(3, 3));
  EXPECT_EQ(graph6_decode("?"), empty_graph(0));
  EXPECT_EQ(graph6_encode(empty_graph(0)), "?");
  EXPECT_EQ(graph6_encode(empty_graph(1)), "@");
}

TEST(Graph6, LargeHeaders) {
  Graph g = cycle_graph(63);
  std::string s = graph6_encode(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(graph6_decode(s), g);
  Graph big = cycle_graph(3000);
  EXPECT_EQ(graph6_decode(graph6_encode(big)), big);
}

TEST(Graph6, DecodeErrors) {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      graph6_decode(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("EFz"), 3u);          // truncated body
  EXPECT_EQ(offset_of("EFz_?"), 4u);        // extra byte
  EXPECT_EQ(offset_of("EF z"), 2u);         // space is outside 63..126
  EXPECT_EQ(offset_of("EFz`"), 3u);         // padding bit set
  EXPECT_EQ(offset_of("~??E"), 0u);         // long header for small n
  EXPECT_EQ(offset_of(">>graph6<<EF"), 12u);
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> size(0, 30);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_graph(size(rng), density(rng), rng);
    EXPECT_EQ(graph6_decode(graph6_encode(g)), g);
  }
}
