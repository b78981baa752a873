#include <doctest.h>

#include <algorithm>
#include <map>

#include "commgraph/graph.hpp"

using namespace commgraph;

namespace {

std::map<std::uint32_t, std::uint64_t> degree_histogram(
    const CommutingGraph& g) {
  std::map<std::uint32_t, std::uint64_t> hist;
  for (std::uint32_t d : g.degrees()) ++hist[d];
  return hist;
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("smallest modular graph") {
  const CommutingGraph g(Ring::modular(2));
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 3);
  // Three disjoint edges: every vertex pairs with its scalar shift.
  CHECK(g.component_sizes() == std::vector<std::uint64_t>{2, 2, 2});
  CHECK(!g.diameter().has_value());
  for (std::uint32_t i = 0; i < 6; ++i) CHECK(g.degree(i) == 1);
}

TEST_CASE("adjacency is symmetric and irreflexive") {
  const CommutingGraph g(Ring::modular(6));
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
    CHECK(!g.adjacent(i, i));
    std::uint32_t row_degree = 0;
    for (std::uint32_t j = 0; j < g.vertex_count(); ++j) {
      if (g.adjacent(i, j)) ++row_degree;
      CHECK(g.adjacent(i, j) == g.adjacent(j, i));
    }
    CHECK(row_degree == g.degree(i));
  }
}

TEST_CASE("index lookup") {
  const RingPtr r = Ring::modular(4);
  const CommutingGraph g(r);
  CHECK(!g.index_of(0, 0, 0).has_value());
  CHECK(!g.index_of(3, 0, 3).has_value());
  const auto idx = g.index_of(1, 2, 3);
  REQUIRE(idx.has_value());
  CHECK(g.vertices()[*idx] == UT2{r.get(), 1, 2, 3});
  CHECK_THROWS_AS(g.index_of(4, 0, 0), std::out_of_range);
}

TEST_CASE("graph over zmod 4") {
  const CommutingGraph g(Ring::modular(4));
  CHECK(g.vertex_count() == 60);
  CHECK(g.edge_count() == 426);
  CHECK(g.component_sizes() == std::vector<std::uint64_t>{60});
  CHECK(g.diameter() == std::uint32_t{3});
  const auto hist = degree_histogram(g);
  REQUIRE(hist.size() == 2);
  CHECK(hist.at(11) == 48);
  CHECK(hist.at(27) == 12);
}

TEST_CASE("graph over a field splits into cliques") {
  const CommutingGraph g(Ring::field(3, 1));
  CHECK(g.vertex_count() == 24);
  CHECK(g.edge_count() == 60);
  CHECK(g.component_sizes() ==
        std::vector<std::uint64_t>{6, 6, 6, 6});
  CHECK(!g.diameter().has_value());
  // 4 disjoint copies of the complete graph on 6 vertices.
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
    CHECK(g.degree(i) == 5);
}

TEST_CASE("fast edge count matches the built graph") {
  for (const char* text : {"zmod:2", "zmod:4", "zmod:6", "zmod:7", "zmod:8",
                           "zmod:9", "zmod:10", "gf:2^2", "gf:2^3", "gf:3^2",
                           "prod:zmod:2,zmod:3", "prod:zmod:3,zmod:3",
                           "prod:gf:2^2,zmod:2"}) {
    const RingPtr r = Ring::make(parse_ring_spec(text));
    const CommutingGraph g(r);
    CHECK(edge_count_fast(*r) == BigInt(g.edge_count()));
  }
}

TEST_CASE("fast edge count on frozen values") {
  CHECK(edge_count_fast(*Ring::modular(8)) == 19236);
  CHECK(edge_count_fast(*Ring::modular(9)) == 31392);
  CHECK(edge_count_fast(*Ring::modular(10)) == 62055);
  CHECK(edge_count_fast(*Ring::field(2, 2)) == 330);
  CHECK(edge_count_fast(*Ring::field(3, 2)) == 25560);
  const RingPtr f5 = Ring::field(5, 1);
  CHECK(edge_count_fast(*Ring::product(f5, f5)) == 6172200);
}

TEST_CASE("vertex cap") {
  CHECK_THROWS_AS(CommutingGraph(Ring::modular(28)), CapExceeded);
  CHECK_NOTHROW(CommutingGraph(Ring::modular(28), 22000));
}

TEST_CASE("dot export") {
  const CommutingGraph g(Ring::modular(2));
  const std::string dot = export_dot(g);
  CHECK(dot.rfind("graph commuting {", 0) == 0);
  // Vertex 0 is [[0,0],[0,1]], a scalar shift of the A1 representative.
  CHECK(dot.find("v0 [label=\"[[0,0],[0,1]] A1\"]") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos;
       pos = dot.find(" -- ", pos + 1))
    ++edges;
  CHECK(edges == 3);
  CHECK_THROWS_AS(export_dot(g, 3), CapExceeded);
}

TEST_CASE("degree csv export") {
  const CommutingGraph g(Ring::modular(2));
  const std::string csv = export_csv_degrees(g);
  CHECK(csv.rfind("vertex_index,class,degree\n0,A1,1\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}

TEST_SUITE_END();
