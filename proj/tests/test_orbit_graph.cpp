#include <catch2/catch_amalgamated.hpp>

#include "braidorbits/orbit_graph.hpp"
#include "helpers.hpp"

using namespace braidorbits;
using braidorbits::testing::agl23;
using braidorbits::testing::class_by_profile;
using braidorbits::testing::symmetric;

TEST_CASE("single-node types yield one component and no edges") {
  auto g = symmetric(3);
  int c2 = g.class_by_label("2A"), c3 = g.class_by_label("3A");
  RamificationType rt({c2, c2, c3, c3});
  NodeIndex index(g, rt, {.k = 2});
  auto graph = sample_edges(index, 5, 50, 42);
  auto report = components(index, graph);
  if (index.vertex_count() == 1) {
    REQUIRE(graph.edges.empty());
    REQUIRE(report.components.size() == 1);
  }
  REQUIRE(report.deterministic == (report.components.size() <= 1));
}

TEST_CASE("matching components equal the classic partition") {
  auto g = symmetric(4);
  for (auto classes : {std::vector<int>{g.class_by_label("2B"), g.class_by_label("2B"),
                                        g.class_by_label("3A"), g.class_by_label("3A")},
                       std::vector<int>{g.class_by_label("2A"), g.class_by_label("2B"),
                                        g.class_by_label("2B"), g.class_by_label("4A")},
                       std::vector<int>{g.class_by_label("2B"), g.class_by_label("2B"),
                                        g.class_by_label("2B"), g.class_by_label("2B"),
                                        g.class_by_label("3A")}}) {
    RamificationType rt(classes);
    auto classic = orbit_partition(g, rt);
    NodeIndex index(g, rt, {});
    auto graph = sample_edges(index, 5, 50, 42);
    auto report = components(index, graph);
    REQUIRE(verify_components(g, report, classic));
  }
}

TEST_CASE("affine degree-9 group, cross-engine agreement") {
  auto g = agl23();
  int c2 = class_by_profile(g, 2, 3);
  int c3 = class_by_profile(g, 3, 4);
  RamificationType rt({c2, c2, c2, c2, c3});
  auto classic = orbit_partition(g, rt);
  REQUIRE(classic.generating_orbits == 1);
  NodeIndex index(g, rt, {.k = 2});
  auto graph = sample_edges(index, 5, 50, 7);
  auto report = components(index, graph);
  REQUIRE(verify_components(g, report, classic));
  REQUIRE(report.components.size() == 1);
  REQUIRE(report.components[0].classes == 216);
}

TEST_CASE("a corrupted edge set fails verification") {
  auto g = symmetric(4);
  RamificationType rt({g.class_by_label("2B"), g.class_by_label("2B"),
                       g.class_by_label("3A"), g.class_by_label("3A")});
  auto classic = orbit_partition(g, rt);
  NodeIndex index(g, rt, {});
  auto graph = sample_edges(index, 5, 50, 42);
  auto report = components(index, graph);
  if (report.components.size() == 1 && !graph.edges.empty()) {
    OrbitGraph broken = graph;
    broken.edges.clear();
    broken.witnesses.clear();
    auto report2 = components(index, broken);
    if (report2.components.size() != report.components.size())
      REQUIRE_FALSE(verify_components(g, report2, classic));
  }
}

TEST_CASE("identical seeds reproduce the graph exactly") {
  auto g = symmetric(4);
  RamificationType rt({g.class_by_label("2B"), g.class_by_label("2B"),
                       g.class_by_label("3A"), g.class_by_label("3A")});
  NodeIndex index(g, rt, {});
  auto a = sample_edges(index, 5, 50, 123);
  auto b = sample_edges(index, 5, 50, 123);
  REQUIRE(a.edges == b.edges);
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
    REQUIRE(a.witnesses[i].tuple == b.witnesses[i].tuple);
    REQUIRE(a.witnesses[i].move.str() == b.witnesses[i].move.str());
  }
}

TEST_CASE("different seeds give the same components") {
  auto g = agl23();
  int c2 = class_by_profile(g, 2, 3);
  int c3 = class_by_profile(g, 3, 4);
  RamificationType rt({c2, c2, c2, c2, c3});
  NodeIndex index(g, rt, {.k = 2});
  auto r1 = components(index, sample_edges(index, 5, 50, 1));
  auto r2 = components(index, sample_edges(index, 5, 50, 999));
  REQUIRE(r1.components.size() == r2.components.size());
  for (std::size_t i = 0; i < r1.components.size(); ++i) {
    REQUIRE(r1.components[i].vertices == r2.components[i].vertices);
    REQUIRE(r1.components[i].tuples == r2.components[i].tuples);
  }
}

TEST_CASE("edge witnesses replay") {
  auto g = symmetric(4);
  RamificationType rt({g.class_by_label("2B"), g.class_by_label("2B"),
                       g.class_by_label("3A"), g.class_by_label("3A")});
  NodeIndex index(g, rt, {});
  auto graph = sample_edges(index, 5, 50, 42);
  for (auto const& w : graph.witnesses) {
    REQUIRE(index.identify(w.tuple) == w.from);
    int to = index.identify(w.move.applied(w.tuple));
    if (index.nodes()[to].forwarded_to >= 0) to = index.nodes()[to].forwarded_to;
    REQUIRE(to == w.to);
  }
}

TEST_CASE("skip rule does not change the component partition") {
  auto g = symmetric(3);
  int c2 = g.class_by_label("2A");
  RamificationType rt({c2, c2, c2, c2});
  auto classic = orbit_partition(g, rt);
  for (bool skip : {true, false}) {
    NodeIndex index(g, rt, {.k = 2, .skip_identity = skip});
    auto report = components(index, sample_edges(index, 5, 50, 42));
    REQUIRE(verify_components(g, report, classic));
  }
}
