#include "commgraph/graph.hpp"

#include <bit>
#include <sstream>

namespace commgraph {

CommutingGraph::CommutingGraph(RingPtr ring, std::uint64_t vertex_cap)
    : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("ring is null");
  verts_ = enumerate_vertices(ring_, vertex_cap);
  const std::uint32_t n = vertex_count();
  const std::uint64_t r = ring_->size();

  code_to_index_.assign(r * r * r, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const UT2& v = verts_[i];
    code_to_index_[(std::uint64_t(v.x) * r + v.y) * r + v.z] =
        std::int32_t(i);
  }

  words_ = (std::size_t(n) + 63) / 64;
  rows_.assign(std::size_t(n) * words_, 0);
  degrees_.assign(n, 0);

  const Ring& R = *ring_;
  for (std::uint32_t i = 0; i < n; ++i) {
    const UT2 a = verts_[i];
    std::uint64_t* row_i = rows_.data() + std::size_t(i) * words_;
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const UT2& b = verts_[j];
      if (R.add(R.mul(a.x, b.y), R.mul(a.y, b.z)) ==
          R.add(R.mul(b.x, a.y), R.mul(b.y, a.z))) {
        row_i[j >> 6] |= std::uint64_t{1} << (j & 63);
        rows_[std::size_t(j) * words_ + (i >> 6)] |= std::uint64_t{1}
                                                     << (i & 63);
        ++degrees_[i];
        ++degrees_[j];
        ++edges_;
      }
    }
  }
}

std::optional<std::uint32_t> CommutingGraph::index_of(Elem x, Elem y,
                                                      Elem z) const {
  const std::uint64_t r = ring_->size();
  if (x >= r || y >= r || z >= r) {
    throw std::out_of_range("element code out of range");
  }
  std::int32_t i = code_to_index_[(std::uint64_t(x) * r + y) * r + z];
  if (i < 0) return std::nullopt;
  return std::uint32_t(i);
}

void CommutingGraph::bfs(std::uint32_t start,
                         std::vector<std::uint64_t>& visited,
                         std::uint64_t& reached, std::uint32_t& ecc) const {
  std::vector<std::uint64_t> frontier(words_, 0), next(words_, 0);
  frontier[start >> 6] |= std::uint64_t{1} << (start & 63);
  visited[start >> 6] |= std::uint64_t{1} << (start & 63);
  reached = 1;
  ecc = 0;
  while (true) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits) {
        const std::uint32_t v =
            std::uint32_t(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* rv = row(v);
        for (std::size_t k = 0; k < words_; ++k) next[k] |= rv[k];
      }
    }
    std::uint64_t found = 0;
    for (std::size_t k = 0; k < words_; ++k) {
      next[k] &= ~visited[k];
      visited[k] |= next[k];
      found += std::uint64_t(std::popcount(next[k]));
    }
    if (found == 0) break;
    reached += found;
    ++ecc;
    frontier.swap(next);
  }
}

std::vector<std::uint64_t> CommutingGraph::component_sizes() const {
  const std::uint32_t n = vertex_count();
  std::vector<std::uint64_t> visited(words_, 0);
  std::vector<std::uint64_t> sizes;
  for (std::uint32_t v = 0; v < n; ++v) {
    if ((visited[v >> 6] >> (v & 63)) & 1) continue;
    std::uint64_t reached = 0;
    std::uint32_t ecc = 0;
    bfs(v, visited, reached, ecc);
    sizes.push_back(reached);
  }
  return sizes;
}

std::optional<std::uint32_t> CommutingGraph::diameter() const {
  const std::uint32_t n = vertex_count();
  if (n == 0) return std::nullopt;
  {
    std::vector<std::uint64_t> visited(words_, 0);
    std::uint64_t reached = 0;
    std::uint32_t ecc = 0;
    bfs(0, visited, reached, ecc);
    if (reached != n) return std::nullopt;
  }
  // One BFS source per scalar shift coset.
  const Ring& R = *ring_;
  const std::uint64_t r = R.size();
  std::vector<std::uint8_t> seen(r * r, 0);
  std::uint32_t diam = 0;
  for (std::uint32_t v = 0; v < n; ++v) {
    const UT2& a = verts_[v];
    const std::uint64_t key = std::uint64_t(R.sub(a.x, a.z)) * r + a.y;
    if (seen[key]) continue;
    seen[key] = 1;
    std::vector<std::uint64_t> visited(words_, 0);
    std::uint64_t reached = 0;
    std::uint32_t ecc = 0;
    bfs(v, visited, reached, ecc);
    diam = std::max(diam, ecc);
  }
  return diam;
}

BigInt edge_count_fast(const Ring& ring) {
  const std::uint64_t r = ring.size();
  // hits[w] = #{y' : x*y' = w} for the current x.
  std::vector<std::uint32_t> hits(r);
  BigInt total = 0;
  for (std::uint64_t x = 0; x < r; ++x) {
    std::fill(hits.begin(), hits.end(), 0);
    for (std::uint64_t yp = 0; yp < r; ++yp) {
      ++hits[ring.mul(Elem(x), Elem(yp))];
    }
    for (std::uint64_t y = 0; y < r; ++y) {
      if (x == 0 && y == 0) continue;
      // raw counts the pairs (x', y') with x*y' = x'*y, (0, 0) included.
      std::uint64_t raw = 0;
      for (std::uint64_t xp = 0; xp < r; ++xp) {
        raw += hits[ring.mul(Elem(y), Elem(xp))];
      }
      const std::uint64_t coset_degree = r * (raw - 1) - 1;
      total += BigInt(r) * coset_degree;
    }
  }
  return exact_div(total, 2);
}

std::string export_dot(const CommutingGraph& graph, std::uint64_t cap) {
  const std::uint32_t n = graph.vertex_count();
  if (n > cap) {
    throw CapExceeded("dot export of " + std::to_string(n) +
                      " vertices exceeds the limit " + std::to_string(cap));
  }
  std::ostringstream out;
  out << "graph commuting {\n";
  out << "  node [shape=box];\n";
  for (std::uint32_t i = 0; i < n; ++i) {
    const UT2& v = graph.vertices()[i];
    out << "  v" << i << " [label=\"" << ut2_string(v) << " "
        << class_name(classify(canonicalize(v).matrix)) << "\"];\n";
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (graph.adjacent(i, j)) out << "  v" << i << " -- v" << j << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_csv_degrees(const CommutingGraph& graph) {
  std::ostringstream out;
  out << "vertex_index,class,degree\n";
  for (std::uint32_t i = 0; i < graph.vertex_count(); ++i) {
    const UT2& v = graph.vertices()[i];
    out << i << ',' << class_name(classify(canonicalize(v).matrix)) << ','
        << graph.degree(i) << '\n';
  }
  return out.str();
}

}  // namespace commgraph
