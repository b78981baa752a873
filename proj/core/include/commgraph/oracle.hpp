#pragma once

#include "commgraph/graph.hpp"

namespace commgraph {

// Independent cross-checks that lean on the definitions alone. Everything
// here trades speed for being too simple to share a bug with the code under
// test: full matrix products, plain loops, no coset shortcuts.

// Edge count by enumerating every vertex pair and comparing the two full
// matrix products.
BigInt naive_edge_count(const RingPtr& ring, std::uint64_t vertex_cap = 20000);

// Degree of one vertex by scanning all |R|^3 matrices. Throws CapExceeded
// when |R|^3 exceeds matrix_cap.
std::uint64_t exhaustive_centralizer_degree(
    const RingPtr& ring, const UT2& a,
    std::uint64_t matrix_cap = std::uint64_t{1} << 20);

// Clique number, number of maximum cliques and independence number by full
// enumeration over 64 bit subsets. Only for graphs with at most 64
// vertices; validates the budgeted branch and bound solvers.
struct ExhaustiveExtremal {
  std::uint32_t omega = 0;
  std::uint64_t max_clique_count = 0;
  std::uint32_t alpha = 0;
};

ExhaustiveExtremal exhaustive_extremal(const CommutingGraph& graph);

// Checks that the residue map is a graph isomorphism between the graph over
// zmod m*n and the graph over zmod m x zmod n for coprime m, n: noncentral
// matrices map onto noncentral matrices and adjacency is preserved both
// ways on every pair.
bool verify_crt_iso(std::uint64_t m, std::uint64_t n,
                    std::uint64_t vertex_cap = 20000);

}  // namespace commgraph
