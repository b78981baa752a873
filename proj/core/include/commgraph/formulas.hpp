#pragma once

#include "commgraph/bigint.hpp"
#include "commgraph/trimat.hpp"

namespace commgraph {

std::uint64_t euler_phi(std::uint64_t n);

// True iff x = p^k for a prime p and k >= 1; on success fills p and k.
bool is_prime_power(std::uint64_t x, std::uint64_t* p = nullptr,
                    unsigned* k = nullptr);

// Degree of every vertex whose canonical representative is [[x, y], [0, 0]],
// from the closed forms
//   A1, A2, A3, A7, A8:  |R|^2 - |R| - 1
//   A4, A5:              |ann| * |R|^2 - |R| - 1
//   A6:                  S * |R| - |R| - 1,  S = #{(a, b) : x a + y b = 0}
// The tag must agree with classify([[x, y], [0, 0]]).
BigInt predict_class_degree(const Ring& ring, ClassTag tag, Elem x, Elem y);

// Sum of predict_class_degree over every vertex of the class.
BigInt predict_class_degree_sum(const Ring& ring, ClassTag tag);

// Edge count assembled from the class degree sums (handshake, halved with
// an exactness check).
BigInt predict_total_edges(const Ring& ring);

// Closed form edge count over the field with q = p^n elements:
//   q (q^2 - 1) (q^2 - q - 1) / 2.
BigInt predict_edges_field(std::uint64_t p, unsigned n);

// Closed form edge count over a product of the fields with pm and qn
// elements (each a prime power). Uses the grouping
//   |R|/2 * ( Y|U|(4 + |U| + 2(|U1| + |U2|))
//           + Z|U1|(2 + |U1|) + W|U2|(2 + |U2|) )
// with Y = |R|^2-|R|-1, Z = qn|R|^2-|R|-1, W = pm|R|^2-|R|-1. A published
// rendering drops the parentheses around |U1| + |U2|; that reading fails
// against enumeration, this one matches it.
BigInt predict_edges_product(std::uint64_t pm, std::uint64_t qn);

// Edge count over zmod p^2 as a polynomial in the prime p:
//   p^2 (p^2 - 1) (p^6 + p^5 - p^4 - 2 p^2 - 1) / 2.
BigInt predict_edges_zp2(std::uint64_t p);

// Degree sum over the class A7 for zmod n:
//   n phi(n) (n - phi(n) - 1) (n^2 - n - 1).
// A published rendering multiplies in a stray phi(n^2 - n - 1); the form
// here is the one consistent with enumeration.
BigInt predict_dA7star_zn(std::uint64_t n);

// Class degree sums and extremal claims for zmod p^n, n >= 2. The A6 sum
// is assembled as dA6star = 2 alpha - beta from the two auxiliary sums
// below. One published rendering of beta uses p^(2n+1) inside the sum;
// consistency with enumeration requires p^(2n+r).
struct PrimePowerClassSums {
  BigInt dA4star;
  BigInt dA5star;
  BigInt dA6star_alpha;
  BigInt dA6star_beta;
  BigInt dA6star;
  BigInt omega;      // p^n (p^n - 1)
  BigInt alpha_ind;  // claimed independence number p^n (p^2n - p^(2n-2))
};

PrimePowerClassSums predict_prime_power_class_sums(std::uint64_t p,
                                                   unsigned n);

// Claimed component structure over the field with q = p^n elements:
// q + 1 components, each a complete graph on q^2 - q vertices.
struct FieldStructure {
  BigInt components;
  BigInt component_size;
  BigInt degree;
  BigInt omega;
  BigInt alpha;
  bool connected;
};

FieldStructure predict_field_structure(std::uint64_t p, unsigned n);

// Claimed global structure over zmod m for composite m.
struct ZmStructure {
  bool connected;
  BigInt diameter;                 // 3
  BigInt omega;                    // m (m - 1)
  BigInt max_clique_count_claimed; // 2
};

ZmStructure predict_zm_structure(std::uint64_t m);

// Claimed independence number for zmod n, composite n:
//   n phi(n) (2n - phi(n)).
BigInt conjecture_alpha_zn(std::uint64_t n);

}  // namespace commgraph
