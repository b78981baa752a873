#include "commgraph/oracle.hpp"

#include <bit>

namespace commgraph {

BigInt naive_edge_count(const RingPtr& ring, std::uint64_t vertex_cap) {
  const std::vector<UT2> verts = enumerate_vertices(ring, vertex_cap);
  BigInt edges = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (ut2_mul(verts[i], verts[j]) == ut2_mul(verts[j], verts[i])) {
        ++edges;
      }
    }
  }
  return edges;
}

std::uint64_t exhaustive_centralizer_degree(const RingPtr& ring, const UT2& a,
                                            std::uint64_t matrix_cap) {
  if (!ring) throw std::invalid_argument("ring is null");
  if (a.ring != ring.get()) {
    throw std::invalid_argument("matrix does not belong to the given ring");
  }
  const std::uint64_t r = ring->size();
  if (r > matrix_cap / r / r) {
    throw CapExceeded("matrix count " + std::to_string(r) + "^3 exceeds the limit " +
                      std::to_string(matrix_cap));
  }
  if (is_central(a)) {
    throw std::invalid_argument("degree of a central matrix is undefined");
  }
  std::uint64_t degree = 0;
  for (std::uint64_t x = 0; x < r; ++x) {
    for (std::uint64_t y = 0; y < r; ++y) {
      for (std::uint64_t z = 0; z < r; ++z) {
        if (y == 0 && x == z) continue;
        const UT2 b{ring.get(), Elem(x), Elem(y), Elem(z)};
        if (b == a) continue;
        if (ut2_mul(a, b) == ut2_mul(b, a)) ++degree;
      }
    }
  }
  return degree;
}

namespace {

struct SubsetSearch {
  const std::vector<std::uint64_t>& adj;
  std::uint32_t best = 0;
  std::uint64_t count = 0;

  void visit(std::uint32_t size) {
    if (size == 0) return;
    if (size > best) {
      best = size;
      count = 1;
    } else if (size == best) {
      ++count;
    }
  }

  // Enumerates every clique exactly once, extending by ascending index.
  void run(std::uint64_t cand, std::uint32_t size) {
    visit(size);
    while (cand) {
      const std::uint32_t v = std::uint32_t(std::countr_zero(cand));
      cand &= cand - 1;
      run(cand & adj[v], size + 1);
    }
  }
};

}  // namespace

ExhaustiveExtremal exhaustive_extremal(const CommutingGraph& graph) {
  const std::uint32_t n = graph.vertex_count();
  if (n > 64) {
    throw CapExceeded("exhaustive search over " + std::to_string(n) +
                      " vertices exceeds the limit 64");
  }
  std::vector<std::uint64_t> adj(n, 0), coadj(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (graph.adjacent(i, j)) {
        adj[i] |= std::uint64_t{1} << j;
      } else {
        coadj[i] |= std::uint64_t{1} << j;
      }
    }
  }
  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  ExhaustiveExtremal out;
  SubsetSearch cliques{adj};
  cliques.run(all, 0);
  out.omega = cliques.best;
  out.max_clique_count = cliques.count;

  SubsetSearch anticliques{coadj};
  anticliques.run(all, 0);
  out.alpha = anticliques.best;
  return out;
}

bool verify_crt_iso(std::uint64_t m, std::uint64_t n,
                    std::uint64_t vertex_cap) {
  const CrtMap map = crt_map(m, n);
  const CommutingGraph source(map.source, vertex_cap);
  const CommutingGraph target(map.target, vertex_cap);
  if (source.vertex_count() != target.vertex_count()) return false;

  const std::uint32_t count = source.vertex_count();
  std::vector<std::uint32_t> image(count);
  std::vector<std::uint8_t> hit(count, 0);
  for (std::uint32_t i = 0; i < count; ++i) {
    const UT2& v = source.vertices()[i];
    const auto j = target.index_of(map.to_product(v.x), map.to_product(v.y),
                                   map.to_product(v.z));
    // A central matrix must map to a central matrix, so the image of a
    // vertex must be a vertex.
    if (!j) return false;
    if (hit[*j]) return false;
    hit[*j] = 1;
    image[i] = *j;
  }
  for (std::uint32_t i = 0; i < count; ++i) {
    for (std::uint32_t j = i + 1; j < count; ++j) {
      if (source.adjacent(i, j) != target.adjacent(image[i], image[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace commgraph
