#pragma once

#include <array>
#include <string>
#include <vector>

#include "commgraph/ring.hpp"

namespace commgraph {

// Upper triangular 2x2 matrix [[x, y], [0, z]] over a fixed ring. The ring
// pointer identifies the ambient ring; operations on matrices from different
// rings throw std::invalid_argument.
struct UT2 {
  const Ring* ring = nullptr;
  Elem x = 0;
  Elem y = 0;
  Elem z = 0;

  friend bool operator==(const UT2&, const UT2&) = default;
};

inline void check_same_ring(const UT2& a, const UT2& b) {
  if (a.ring == nullptr || a.ring != b.ring) {
    throw std::invalid_argument("matrices belong to different rings");
  }
}

inline UT2 ut2_mul(const UT2& a, const UT2& b) {
  check_same_ring(a, b);
  const Ring& r = *a.ring;
  return UT2{a.ring, r.mul(a.x, b.x),
             r.add(r.mul(a.x, b.y), r.mul(a.y, b.z)), r.mul(a.z, b.z)};
}

// True iff a*b == b*a. Over a commutative ring the diagonal entries of the
// two products always agree, so only the corner entries are compared.
inline bool commutes(const UT2& a, const UT2& b) {
  check_same_ring(a, b);
  const Ring& r = *a.ring;
  return r.add(r.mul(a.x, b.y), r.mul(a.y, b.z)) ==
         r.add(r.mul(b.x, a.y), r.mul(b.y, a.z));
}

// Central elements of the full upper triangular ring are exactly the scalar
// matrices.
inline bool is_central(const UT2& a) {
  if (a.ring == nullptr) throw std::invalid_argument("matrix has no ring");
  return a.y == a.ring->zero() && a.x == a.z;
}

// Every matrix A has the same set of commuting partners as A - zI, so each
// matrix is reduced to a representative with bottom right entry 0.
struct Canonical {
  UT2 matrix;  // [[x-z, y], [0, 0]]
  Elem shift;  // the z that was subtracted
};

Canonical canonicalize(const UT2& a);

// Noncentral canonical representatives split into eight classes by where the
// pair (x, y) sits in {0} / units / nonzero zero divisors:
//   A1 (u, 0)   A2 (0, u)   A3 (u, u')  A4 (d, 0)
//   A5 (0, d)   A6 (d, d')  A7 (u, d)   A8 (d, u)
enum class ClassTag { A1, A2, A3, A4, A5, A6, A7, A8 };

const char* class_name(ClassTag tag);

// Classifies a canonical representative. Requires z == 0 and a noncentral
// matrix; throws std::invalid_argument otherwise.
ClassTag classify(const UT2& a);

// Number of noncentral matrices whose canonical representative lands in each
// class, indexed by ClassTag order. The entries sum to |R|^3 - |R|.
std::array<std::uint64_t, 8> class_sizes(const Ring& ring);

// All noncentral matrices in ascending lexicographic (x, y, z) order.
// Throws CapExceeded when the ring would produce more than cap vertices.
std::vector<UT2> enumerate_vertices(const RingPtr& ring,
                                    std::uint64_t cap = 20000);

std::string ut2_string(const UT2& a);

}  // namespace commgraph
