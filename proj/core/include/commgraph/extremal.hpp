#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "commgraph/graph.hpp"

namespace commgraph {

// Result of an exact search that may stop early on a wall clock budget.
// value is always a verified bound from an explicit witness; when exact is
// false the true answer lies in [value, upper].
struct ExtremalResult {
  std::uint32_t value = 0;
  bool exact = false;
  std::uint32_t upper = 0;
  std::vector<std::uint32_t> witness;  // vertex indices, ascending
};

// Largest set of pairwise commuting vertices. Branch and bound with greedy
// coloring bounds, deterministic vertex order, witness checked before
// returning.
ExtremalResult max_clique(const CommutingGraph& graph, double budget_seconds);

// Largest set of pairwise non-commuting vertices. Scalar shift cosets are
// cliques with identical neighborhoods, so a maximum independent set may be
// assumed to pick only canonical representatives (z = 0); the search runs on
// the complement of that induced subgraph.
ExtremalResult max_independent_set(const CommutingGraph& graph,
                                   double budget_seconds);

// Number of distinct cliques of exactly the maximum size omega. exact is
// false when the budget ran out; count is then a lower bound.
struct CountResult {
  std::uint64_t count = 0;
  bool exact = false;
};

CountResult count_maximum_cliques(const CommutingGraph& graph,
                                  std::uint32_t omega, double budget_seconds);

// One-stop summary of the graph. Each extremal quantity gets the full
// budget; the clique census only runs when the clique number is exact.
struct Invariants {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::map<std::uint32_t, std::uint64_t> degree_histogram;
  bool regular = false;
  std::vector<std::uint64_t> components;
  std::optional<std::uint32_t> diameter;  // nullopt = disconnected
  ExtremalResult omega;
  ExtremalResult alpha;
  std::optional<std::uint64_t> max_clique_count;
};

Invariants invariants(const CommutingGraph& graph, double budget_seconds);

}  // namespace commgraph
