#include <doctest.h>

#include <algorithm>

#include "commgraph/extremal.hpp"

using namespace commgraph;

namespace {

bool is_clique(const CommutingGraph& g, const std::vector<std::uint32_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_independent(const CommutingGraph& g,
                    const std::vector<std::uint32_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("extremal");

TEST_CASE("clique number over zmod 4") {
  const CommutingGraph g(Ring::modular(4));
  const ExtremalResult r = max_clique(g, 30.0);
  CHECK(r.exact);
  CHECK(r.value == 12);
  CHECK(r.upper == 12);
  REQUIRE(r.witness.size() == 12);
  CHECK(is_clique(g, r.witness));
  CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));
}

TEST_CASE("independence number over zmod 4") {
  const CommutingGraph g(Ring::modular(4));
  const ExtremalResult r = max_independent_set(g, 30.0);
  CHECK(r.exact);
  CHECK(r.value == 6);
  REQUIRE(r.witness.size() == 6);
  CHECK(is_independent(g, r.witness));
}

TEST_CASE("maximum clique census over zmod 4") {
  const CommutingGraph g(Ring::modular(4));
  const CountResult c = count_maximum_cliques(g, 12, 30.0);
  CHECK(c.exact);
  CHECK(c.count == 7);
}

TEST_CASE("frozen extremal values over zmod 6") {
  const CommutingGraph g(Ring::modular(6));
  const ExtremalResult omega = max_clique(g, 60.0);
  CHECK(omega.exact);
  CHECK(omega.value == 30);
  const ExtremalResult alpha = max_independent_set(g, 60.0);
  CHECK(alpha.exact);
  CHECK(alpha.value == 12);
  const CountResult c = count_maximum_cliques(g, omega.value, 60.0);
  CHECK(c.exact);
  CHECK(c.count == 12);
}

TEST_CASE("field graphs") {
  const CommutingGraph g(Ring::field(2, 2));
  const ExtremalResult omega = max_clique(g, 30.0);
  CHECK(omega.exact);
  CHECK(omega.value == 12);
  const ExtremalResult alpha = max_independent_set(g, 30.0);
  CHECK(alpha.exact);
  CHECK(alpha.value == 5);
  // One maximum clique per component.
  const CountResult c = count_maximum_cliques(g, 12, 30.0);
  CHECK(c.exact);
  CHECK(c.count == 5);
}

TEST_CASE("zero budget degrades to bounds") {
  const CommutingGraph g(Ring::modular(6));
  const ExtremalResult r = max_clique(g, 0.0);
  CHECK(!r.exact);
  CHECK(r.value <= r.upper);
  CHECK(is_clique(g, r.witness));
}

TEST_CASE("invariants bundle") {
  const CommutingGraph g(Ring::modular(4));
  const Invariants inv = invariants(g, 30.0);
  CHECK(inv.vertices == 60);
  CHECK(inv.edges == 426);
  CHECK(inv.degree_histogram.at(11) == 48);
  CHECK(inv.degree_histogram.at(27) == 12);
  CHECK(!inv.regular);
  CHECK(inv.components == std::vector<std::uint64_t>{60});
  CHECK(inv.diameter == std::uint32_t{3});
  CHECK(inv.omega.exact);
  CHECK(inv.omega.value == 12);
  CHECK(inv.alpha.exact);
  CHECK(inv.alpha.value == 6);
  REQUIRE(inv.max_clique_count.has_value());
  CHECK(*inv.max_clique_count == 7);

  const CommutingGraph f(Ring::field(3, 1));
  const Invariants finv = invariants(f, 30.0);
  CHECK(finv.regular);
  CHECK(!finv.diameter.has_value());
  CHECK(finv.components.size() == 4);
  CHECK(finv.omega.value == 6);
  CHECK(finv.alpha.value == 4);
}

TEST_SUITE_END();
