#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <string>

#include "ceg/graph.hpp"
#include "helpers.hpp"

using namespace ceg;

TEST_CASE("smallest legal graph: one edge, one color") {
  const auto g = new_graph(2, 1, {{0, 1, 0}});
  CHECK(g.node_count() == 2);
  CHECK(g.palette_size() == 1);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("validation rejects bad edges with distinct codes") {
  CHECK(test::thrown_code([] { new_graph(3, 2, {{0, 1, 0}, {1, 0, 1}}); }) == Errc::duplicate_edge);
  CHECK(test::thrown_code([] { new_graph(3, 2, {{1, 1, 0}}); }) == Errc::self_loop);
  CHECK(test::thrown_code([] { new_graph(3, 2, {{0, 3, 0}}); }) == Errc::node_out_of_range);
  CHECK(test::thrown_code([] { new_graph(3, 2, {{0, 1, 2}}); }) == Errc::color_out_of_range);
  CHECK(test::thrown_code([] { new_graph(-1, 2, {}); }) == Errc::bad_parameter);
}

TEST_CASE("validation errors name the offending edge") {
  try {
    new_graph(3, 2, {{0, 1, 0}, {2, 2, 1}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(2,2;c1)") != std::string::npos);
  }
}

TEST_CASE("five-node four-color gadget builds from its edge list") {
  const auto g = new_graph(5, 4, test::g1_edges());
  CHECK(g.edge_count() == 8);
  CHECK(g.node_count() == 5);
  // input had (4,0); storage is canonical
  for (const auto& e : g.edges()) CHECK(e.u < e.v);
  CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));
}

TEST_CASE("color classes partition the edge set") {
  const auto g = new_graph(5, 4, test::g1_edges());
  const auto classes = color_classes(g);
  REQUIRE(classes.size() == 4);
  std::vector<int> sizes;
  int total = 0;
  for (int c = 0; c < 4; ++c) {
    sizes.push_back(static_cast<int>(classes[c].size()));
    total += static_cast<int>(classes[c].size());
    for (const auto& e : classes[c]) CHECK(e.color == c);
  }
  std::sort(sizes.begin(), sizes.end());
  // every color carries exactly two of the eight edges
  CHECK(sizes == std::vector<int>{2, 2, 2, 2});
  CHECK(total == g.edge_count());
}

TEST_CASE("monochrome graph has one nonempty class") {
  const auto g = new_graph(3, 3, {{0, 1, 1}, {1, 2, 1}});
  const auto classes = color_classes(g);
  CHECK(classes[0].empty());
  CHECK(classes[1].size() == 2);
  CHECK(classes[2].empty());
}

TEST_CASE("edgeless graph yields m empty classes") {
  const auto classes = color_classes(new_graph(4, 3, {}));
  REQUIRE(classes.size() == 3);
  for (const auto& cls : classes) CHECK(cls.empty());
}

TEST_CASE("onto predicate") {
  CHECK(is_onto(new_graph(5, 4, test::g1_edges())));
  CHECK_FALSE(is_onto(new_graph(3, 2, {{0, 1, 0}, {1, 2, 0}})));
  CHECK(is_onto(new_graph(1, 0, {})));  // vacuously
}

TEST_CASE("serialize/parse round trip") {
  const auto g = new_graph(5, 4, test::g1_edges());
  CHECK(parse_graph(serialize_graph(g)) == g);
}

TEST_CASE("round trip preserves labels") {
  const ColoredEdgeGraph g(2, 2, {{0, 1, 1}}, LabelTable{{"alpha", "beta"}, {"fiber", "copper"}});
  const auto back = parse_graph(serialize_graph(g));
  CHECK(back == g);
  CHECK(back.labels() == g.labels());
}

TEST_CASE("parse rejects malformed documents and invalid graphs") {
  CHECK(test::thrown_code([] { parse_graph("{"); }) == Errc::malformed_document);
  CHECK(test::thrown_code([] { parse_graph("[]"); }) == Errc::malformed_document);
  CHECK(test::thrown_code([] { parse_graph(R"({"n":2,"m":1})"); }) == Errc::malformed_document);
  CHECK(test::thrown_code([] { parse_graph(R"({"n":2,"m":1,"edges":[[0,1]]})"); }) ==
        Errc::malformed_document);
  CHECK(test::thrown_code([] { parse_graph(R"({"n":2,"m":1,"edges":[[0,0,1]]})"); }) ==
        Errc::self_loop);
  CHECK(test::thrown_code([] { parse_graph(R"({"n":5,"m":4,"edges":[[0,1,4]]})"); }) ==
        Errc::color_out_of_range);
  CHECK(test::thrown_code([] { parse_graph(R"({"n":2,"m":1,"edges":[],"labels":{"nodes":["x"]}})"); }) ==
        Errc::bad_parameter);
}

TEST_CASE("serialization is independent of input edge order") {
  std::mt19937 rng(7);
  auto edges = test::g1_edges();
  const auto reference = serialize_graph(new_graph(5, 4, edges));
  for (int round = 0; round < 20; ++round) {
    std::shuffle(edges.begin(), edges.end(), rng);
    if (round % 2 == 0)
      for (auto& e : edges) std::swap(e.u, e.v);  // either orientation is accepted
    CHECK(serialize_graph(new_graph(5, 4, edges)) == reference);
  }
}

TEST_CASE("random graphs: classes are disjoint and cover the edge set") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto g = test::random_graph(rng);
    const auto classes = color_classes(g);
    int total = 0;
    for (int c = 0; c < g.palette_size(); ++c) {
      total += static_cast<int>(classes[c].size());
      for (const auto& e : classes[c]) CHECK(e.color == c);
    }
    CHECK(total == g.edge_count());
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}
