#include "commgraph/extremal.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace commgraph {

namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline_from(double budget_seconds) {
  if (budget_seconds <= 0) return Clock::now();
  return Clock::now() +
         std::chrono::duration_cast<Clock::duration>(
             std::chrono::duration<double>(budget_seconds));
}

// Read-only view of a bit packed adjacency matrix.
struct BitAdj {
  std::uint32_t n = 0;
  std::size_t words = 0;
  const std::uint64_t* base = nullptr;
  std::size_t stride = 0;

  const std::uint64_t* row(std::uint32_t v) const {
    return base + std::size_t(v) * stride;
  }
};

// Deterministic branch and bound maximum clique search with greedy coloring
// bounds (candidates expanded in decreasing color, bit scans in ascending
// vertex order).
class CliqueSolver {
 public:
  CliqueSolver(const BitAdj& adj, Clock::time_point deadline)
      : adj_(adj), deadline_(deadline) {}

  void run() {
    if (adj_.n == 0) return;
    // Depth never exceeds the clique size, so reserving keeps every Level
    // reference stable across the emplace_back in expand.
    levels_.reserve(std::size_t(adj_.n) + 2);
    levels_.emplace_back();
    Level& root = levels_[0];
    root.cand.assign(adj_.words, 0);
    for (std::uint32_t v = 0; v < adj_.n; ++v) {
      root.cand[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    color_sort(root);
    root_bound_ = root.colors.empty() ? 0 : root.colors.back();
    expand(0);
  }

  std::uint32_t best() const { return best_; }
  bool timed_out() const { return timed_out_; }
  std::uint32_t upper_bound() const {
    return timed_out_ ? root_bound_ : best_;
  }
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  struct Level {
    std::vector<std::uint64_t> cand;
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> colors;
  };

  // Checked on the first node and every 1024th after, so a nonpositive
  // budget degrades to bounds without searching.
  bool out_of_time() {
    if (timed_out_) return true;
    if ((nodes_++ & 1023) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
    }
    return timed_out_;
  }

  // Greedy coloring of L.cand. Emits vertices color class by color class,
  // so L.colors is nondecreasing and a valid clique bound for the suffix
  // starting at each position.
  void color_sort(Level& L) {
    L.order.clear();
    L.colors.clear();
    uncolored_ = L.cand;
    std::uint32_t k = 0;
    while (true) {
      bool any = false;
      for (std::size_t w = 0; w < adj_.words; ++w) {
        if (uncolored_[w]) {
          any = true;
          break;
        }
      }
      if (!any) break;
      ++k;
      q_ = uncolored_;
      for (std::size_t w = 0; w < adj_.words; ++w) {
        while (q_[w]) {
          const std::uint32_t v =
              std::uint32_t(w * 64 + std::countr_zero(q_[w]));
          q_[w] &= q_[w] - 1;
          uncolored_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
          const std::uint64_t* rv = adj_.row(v);
          for (std::size_t t = w; t < adj_.words; ++t) q_[t] &= ~rv[t];
          L.order.push_back(v);
          L.colors.push_back(k);
        }
      }
    }
  }

  void expand(std::size_t depth) {
    if (out_of_time()) return;
    Level& L = levels_[depth];
    for (std::size_t idx = L.order.size(); idx-- > 0;) {
      if (timed_out_) return;
      if (std::uint32_t(current_.size()) + L.colors[idx] <= best_) return;
      const std::uint32_t v = L.order[idx];
      current_.push_back(v);
      if (depth + 1 >= levels_.size()) levels_.emplace_back();
      Level& next = levels_[depth + 1];
      next.cand.resize(adj_.words);
      const std::uint64_t* rv = adj_.row(v);
      std::uint64_t any = 0;
      for (std::size_t w = 0; w < adj_.words; ++w) {
        next.cand[w] = L.cand[w] & rv[w];
        any |= next.cand[w];
      }
      if (any) {
        color_sort(next);
        expand(depth + 1);
      } else if (std::uint32_t(current_.size()) > best_) {
        best_ = std::uint32_t(current_.size());
        witness_ = current_;
      }
      current_.pop_back();
      L.cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  BitAdj adj_;
  Clock::time_point deadline_;
  std::vector<Level> levels_;
  std::vector<std::uint64_t> uncolored_, q_;
  std::vector<std::uint32_t> current_, witness_;
  std::uint32_t best_ = 0;
  std::uint32_t root_bound_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

// Counts cliques of exactly size omega by ascending index enumeration.
// Prunes on candidate cardinality and on a greedy coloring bound.
class CountSolver {
 public:
  CountSolver(const BitAdj& adj, std::uint32_t omega,
              Clock::time_point deadline)
      : adj_(adj), omega_(omega), deadline_(deadline) {}

  void run() {
    if (adj_.n == 0 || omega_ == 0) return;
    cand_.reserve(std::size_t(omega_) + 2);
    cand_.emplace_back(adj_.words, 0);
    for (std::uint32_t v = 0; v < adj_.n; ++v) {
      cand_[0][v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    expand(0, 0);
  }

  std::uint64_t count() const { return count_; }
  bool timed_out() const { return timed_out_; }

 private:
  bool out_of_time() {
    if (timed_out_) return true;
    if ((nodes_++ & 1023) == 0 && Clock::now() > deadline_) {
      timed_out_ = true;
    }
    return timed_out_;
  }

  std::uint32_t color_bound(const std::vector<std::uint64_t>& cand) {
    uncolored_ = cand;
    std::uint32_t k = 0;
    while (true) {
      std::uint32_t v = adj_.n;
      for (std::size_t w = 0; w < adj_.words; ++w) {
        if (uncolored_[w]) {
          v = std::uint32_t(w * 64 + std::countr_zero(uncolored_[w]));
          break;
        }
      }
      if (v >= adj_.n) break;
      ++k;
      q_ = uncolored_;
      for (std::size_t w = v >> 6; w < adj_.words; ++w) {
        while (q_[w]) {
          const std::uint32_t u =
              std::uint32_t(w * 64 + std::countr_zero(q_[w]));
          q_[w] &= q_[w] - 1;
          uncolored_[u >> 6] &= ~(std::uint64_t{1} << (u & 63));
          const std::uint64_t* ru = adj_.row(u);
          for (std::size_t t = w; t < adj_.words; ++t) q_[t] &= ~ru[t];
        }
      }
    }
    return k;
  }

  void expand(std::size_t depth, std::uint32_t size) {
    if (out_of_time()) return;
    if (size == omega_) {
      ++count_;
      return;
    }
    if (depth + 1 >= cand_.size()) cand_.emplace_back(adj_.words, 0);
    std::vector<std::uint64_t>& cand = cand_[depth];
    std::uint32_t remaining = 0;
    for (std::size_t w = 0; w < adj_.words; ++w) {
      remaining += std::uint32_t(std::popcount(cand[w]));
    }
    if (size + remaining < omega_) return;
    if (size + color_bound(cand) < omega_) return;
    for (std::size_t w = 0; w < adj_.words; ++w) {
      while (cand[w]) {
        if (timed_out_) return;
        const std::uint32_t v =
            std::uint32_t(w * 64 + std::countr_zero(cand[w]));
        cand[w] &= cand[w] - 1;
        // cand no longer holds v or anything below it, so the recursion
        // sees each clique once, in ascending vertex order.
        const std::uint64_t* rv = adj_.row(v);
        std::vector<std::uint64_t>& next = cand_[depth + 1];
        for (std::size_t t = 0; t < adj_.words; ++t) {
          next[t] = cand[t] & rv[t];
        }
        expand(depth + 1, size + 1);
      }
    }
  }

  BitAdj adj_;
  std::uint32_t omega_ = 0;
  Clock::time_point deadline_;
  std::vector<std::vector<std::uint64_t>> cand_;
  std::vector<std::uint64_t> uncolored_, q_;
  std::uint64_t count_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

void check_witness(const CommutingGraph& graph,
                   const std::vector<std::uint32_t>& witness,
                   bool want_adjacent) {
  for (std::size_t i = 0; i < witness.size(); ++i) {
    for (std::size_t j = i + 1; j < witness.size(); ++j) {
      if (graph.adjacent(witness[i], witness[j]) != want_adjacent) {
        throw std::logic_error("extremal search produced an invalid witness");
      }
    }
  }
}

}  // namespace

ExtremalResult max_clique(const CommutingGraph& graph, double budget_seconds) {
  BitAdj adj{graph.vertex_count(), graph.row_words(),
             graph.vertex_count() ? graph.row(0) : nullptr,
             graph.row_words()};
  CliqueSolver solver(adj, deadline_from(budget_seconds));
  solver.run();
  ExtremalResult result;
  result.value = solver.best();
  result.exact = !solver.timed_out();
  result.upper = solver.upper_bound();
  result.witness = solver.witness();
  std::sort(result.witness.begin(), result.witness.end());
  check_witness(graph, result.witness, true);
  return result;
}

ExtremalResult max_independent_set(const CommutingGraph& graph,
                                   double budget_seconds) {
  // Adding a scalar matrix changes neither side of any commutation test, so
  // the canonical vertices (z = 0) meet every independent set pattern:
  // mapping each member of an independent set to its canonical form is
  // injective (coset mates commute) and preserves non-commuting pairs.
  const Elem zero = graph.ring()->zero();
  std::vector<std::uint32_t> canon;
  for (std::uint32_t i = 0; i < graph.vertex_count(); ++i) {
    if (graph.vertices()[i].z == zero) canon.push_back(i);
  }
  const std::uint32_t m = std::uint32_t(canon.size());
  const std::size_t words = (std::size_t(m) + 63) / 64;
  std::vector<std::uint64_t> rows(std::size_t(m) * words, 0);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      if (a != b && !graph.adjacent(canon[a], canon[b])) {
        rows[std::size_t(a) * words + (b >> 6)] |= std::uint64_t{1}
                                                   << (b & 63);
      }
    }
  }
  BitAdj adj{m, words, rows.data(), words};
  CliqueSolver solver(adj, deadline_from(budget_seconds));
  solver.run();
  ExtremalResult result;
  result.value = solver.best();
  result.exact = !solver.timed_out();
  result.upper = solver.upper_bound();
  for (std::uint32_t v : solver.witness()) result.witness.push_back(canon[v]);
  std::sort(result.witness.begin(), result.witness.end());
  check_witness(graph, result.witness, false);
  return result;
}

CountResult count_maximum_cliques(const CommutingGraph& graph,
                                  std::uint32_t omega, double budget_seconds) {
  BitAdj adj{graph.vertex_count(), graph.row_words(),
             graph.vertex_count() ? graph.row(0) : nullptr,
             graph.row_words()};
  CountSolver solver(adj, omega, deadline_from(budget_seconds));
  solver.run();
  return CountResult{solver.count(), !solver.timed_out()};
}

Invariants invariants(const CommutingGraph& graph, double budget_seconds) {
  Invariants inv;
  inv.vertices = graph.vertex_count();
  inv.edges = graph.edge_count();
  for (std::uint32_t d : graph.degrees()) ++inv.degree_histogram[d];
  inv.regular = inv.degree_histogram.size() == 1;
  inv.components = graph.component_sizes();
  inv.diameter = graph.diameter();
  inv.omega = max_clique(graph, budget_seconds);
  inv.alpha = max_independent_set(graph, budget_seconds);
  if (inv.omega.exact) {
    CountResult cr =
        count_maximum_cliques(graph, inv.omega.value, budget_seconds);
    if (cr.exact) inv.max_clique_count = cr.count;
  }
  return inv;
}

}  // namespace commgraph
