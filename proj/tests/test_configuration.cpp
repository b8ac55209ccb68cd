#include <gtest/gtest.h>

#include "p2fi/canon.hpp"
#include "p2fi/configuration.hpp"
#include "p2fi/graph.hpp"

using namespace p2fi;

TEST(Configuration, Fano) {
  auto f = fano();
  EXPECT_TRUE(f.is_symmetric_n3());
  EXPECT_EQ(f.num_points(), 7);
  EXPECT_EQ(f.num_lines(), 7);
  for (int a = 0; a < 7; ++a)
    for (int b = a + 1; b < 7; ++b) EXPECT_TRUE(f.line_through(a, b)) << a << "," << b;
  EXPECT_EQ(f.lines_through(0), (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(f.incident(5, 6));
  EXPECT_FALSE(f.incident(6, 6));
  EXPECT_FALSE(f.incident(0, 3));
  EXPECT_EQ(f.incidences().size(), 21u);
  EXPECT_EQ(f.point_name(3), "p3");
  EXPECT_EQ(f.line_name(3), "L3");
}

TEST(Configuration, MoebiusKantor) {
  auto mk = moebius_kantor();
  EXPECT_TRUE(mk.is_symmetric_n3());
  EXPECT_EQ(mk.line(2), (std::vector<int>{2, 3, 5}));
  EXPECT_EQ(mk.line(7), (std::vector<int>{0, 2, 7}));
  int collinear_pairs = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) collinear_pairs += mk.line_through(a, b).has_value();
  EXPECT_EQ(collinear_pairs, 24);  // 8 lines x 3 pairs
}

TEST(Configuration, ValidationErrors) {
  EXPECT_THROW(Configuration(3, {{0, 0, 1}}), ConstructionError);
  EXPECT_THROW(Configuration(3, {{0, 3}}), ConstructionError);
  EXPECT_THROW(Configuration(2, {{0, 1}}, {"a"}), ConstructionError);
  Configuration two_lines(4, {{0, 1, 2}, {0, 1, 3}});
  ASSERT_TRUE(two_lines.linearity_violation());
  EXPECT_EQ(*two_lines.linearity_violation(), (std::pair<int, int>{0, 1}));
  EXPECT_THROW(two_lines.validate_n3(), ConstructionError);
  EXPECT_FALSE(two_lines.is_symmetric_n3());
  Configuration short_line(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_THROW(short_line.validate_n3(), ConstructionError);
}

TEST(Levi, FanoIsHeawood) {
  auto levi = levi_graph(fano());
  EXPECT_TRUE(are_isomorphic(levi.graph, lcf({5, -5}, 7)));
  EXPECT_EQ(levi.graph.label(7), "L0");
  EXPECT_EQ(levi.line_vertex(2), 9);
  EXPECT_EQ(levi.point_vertex(2), 2);
  EXPECT_EQ(levi.sides.side_a.size(), 7u);
  EXPECT_EQ(levi.colours[8], 1);
  EXPECT_EQ(levi.colours[6], 0);
}

TEST(Levi, MoebiusKantorIsGp83) {
  auto levi = levi_graph(moebius_kantor());
  EXPECT_TRUE(are_isomorphic(levi.graph, generalized_petersen(8, 3)));
  EXPECT_TRUE(are_isomorphic(levi.graph, lcf({5, -5}, 8)));
}

TEST(Duality, DualStructure) {
  auto d = dual(moebius_kantor());
  EXPECT_TRUE(d.is_symmetric_n3());
  EXPECT_EQ(d.point_name(0), "L0");
  EXPECT_EQ(d.line_name(0), "p0");
  // point 0 lies on lines 0, 5, 7
  EXPECT_EQ(d.line(0), (std::vector<int>{0, 5, 7}));
  EXPECT_TRUE(configurations_isomorphic(dual(d), moebius_kantor()));
}

TEST(Duality, SelfDual) {
  EXPECT_TRUE(is_self_dual(fano()));
  EXPECT_TRUE(is_self_dual(moebius_kantor()));
  // a point with four lines has no dual counterpart
  Configuration lopsided(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}});
  EXPECT_FALSE(is_self_dual(lopsided));
  EXPECT_FALSE(configurations_isomorphic(fano(), moebius_kantor()));
}

TEST(Automorphisms, ConfigurationsHalfTheLeviGroup) {
  EXPECT_EQ(configuration_automorphisms(fano()).order(), 168u);
  EXPECT_EQ(configuration_automorphisms(moebius_kantor()).order(), 48u);
  EXPECT_EQ(automorphism_group(levi_graph(fano()).graph).order(), 336u);
  EXPECT_EQ(automorphism_group(levi_graph(moebius_kantor()).graph).order(), 96u);
}
