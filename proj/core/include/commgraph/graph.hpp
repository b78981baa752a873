#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commgraph/bigint.hpp"
#include "commgraph/trimat.hpp"

namespace commgraph {

// Commuting graph on the noncentral upper triangular 2x2 matrices over a
// finite commutative ring: vertices in ascending lexicographic (x, y, z)
// order, an edge between distinct matrices that commute. Adjacency is stored
// as a dense bit matrix, so construction is limited to vertex_cap vertices
// (the default keeps the matrix at 50 MB).
class CommutingGraph {
 public:
  explicit CommutingGraph(RingPtr ring, std::uint64_t vertex_cap = 20000);

  const RingPtr& ring() const { return ring_; }
  const std::vector<UT2>& vertices() const { return verts_; }
  std::uint32_t vertex_count() const { return std::uint32_t(verts_.size()); }
  std::uint64_t edge_count() const { return edges_; }

  bool adjacent(std::uint32_t i, std::uint32_t j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1;
  }
  std::uint32_t degree(std::uint32_t i) const { return degrees_[i]; }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }

  // Index of the vertex [[x, y], [0, z]]; nullopt for central matrices.
  std::optional<std::uint32_t> index_of(Elem x, Elem y, Elem z) const;

  const std::uint64_t* row(std::uint32_t i) const {
    return rows_.data() + std::size_t(i) * words_;
  }
  std::size_t row_words() const { return words_; }

  // Connected component sizes in discovery order (lowest vertex first).
  std::vector<std::uint64_t> component_sizes() const;

  // Exact diameter; nullopt when the graph is disconnected. Runs a bit
  // parallel BFS from one vertex per scalar shift coset: vertices that
  // differ by a scalar matrix have identical closed neighborhoods, hence
  // identical eccentricities.
  std::optional<std::uint32_t> diameter() const;

 private:
  void bfs(std::uint32_t start, std::vector<std::uint64_t>& visited,
           std::uint64_t& reached, std::uint32_t& ecc) const;

  RingPtr ring_;
  std::vector<UT2> verts_;
  std::vector<std::int32_t> code_to_index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint32_t> degrees_;
  std::uint64_t edges_ = 0;
};

// Exact edge count without building the graph. Canonical representatives
// with z = 0 stand in for whole scalar shift cosets: every member of a coset
// has degree |R| * c - 1 where c counts the canonical pairs it commutes
// with. Runs in O(|R|^3) time and O(|R|) extra space.
BigInt edge_count_fast(const Ring& ring);

// Graphviz rendering with one node per vertex labelled by matrix and class.
// Throws CapExceeded above cap vertices.
std::string export_dot(const CommutingGraph& graph, std::uint64_t cap = 2000);

// CSV with header vertex_index,class,degree, one row per vertex.
std::string export_csv_degrees(const CommutingGraph& graph);

}  // namespace commgraph
