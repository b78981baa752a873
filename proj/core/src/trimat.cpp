#include "commgraph/trimat.hpp"

namespace commgraph {

Canonical canonicalize(const UT2& a) {
  if (a.ring == nullptr) throw std::invalid_argument("matrix has no ring");
  const Ring& r = *a.ring;
  return Canonical{UT2{a.ring, r.sub(a.x, a.z), a.y, r.zero()}, a.z};
}

const char* class_name(ClassTag tag) {
  static const char* names[] = {"A1", "A2", "A3", "A4",
                                "A5", "A6", "A7", "A8"};
  return names[static_cast<int>(tag)];
}

ClassTag classify(const UT2& a) {
  if (a.ring == nullptr) throw std::invalid_argument("matrix has no ring");
  const Ring& r = *a.ring;
  if (a.z != r.zero()) {
    throw std::invalid_argument(
        "classify needs a canonical representative with z == 0");
  }
  if (a.x == r.zero() && a.y == r.zero()) {
    throw std::invalid_argument("classify needs a noncentral matrix");
  }
  const bool xu = r.is_unit(a.x);
  const bool yu = r.is_unit(a.y);
  if (a.x == r.zero()) return yu ? ClassTag::A2 : ClassTag::A5;
  if (a.y == r.zero()) return xu ? ClassTag::A1 : ClassTag::A4;
  if (xu && yu) return ClassTag::A3;
  if (!xu && !yu) return ClassTag::A6;
  return xu ? ClassTag::A7 : ClassTag::A8;
}

std::array<std::uint64_t, 8> class_sizes(const Ring& ring) {
  const std::uint64_t r = ring.size();
  const std::uint64_t u = ring.units().size();
  const std::uint64_t d = ring.zero_divisors().size();
  return {r * u,     r * u,     r * u * u, r * d,
          r * d,     r * d * d, r * u * d, r * u * d};
}

std::vector<UT2> enumerate_vertices(const RingPtr& ring, std::uint64_t cap) {
  if (!ring) throw std::invalid_argument("ring is null");
  const std::uint64_t n = ring->size();
  const std::uint64_t count = n * n * n - n;
  if (count > cap) {
    throw CapExceeded("vertex count " + std::to_string(count) +
                      " exceeds the limit " + std::to_string(cap));
  }
  std::vector<UT2> verts;
  verts.reserve(count);
  const Ring* rp = ring.get();
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      for (std::uint64_t z = 0; z < n; ++z) {
        if (y == 0 && x == z) continue;
        verts.push_back(UT2{rp, Elem(x), Elem(y), Elem(z)});
      }
    }
  }
  return verts;
}

std::string ut2_string(const UT2& a) {
  if (a.ring == nullptr) throw std::invalid_argument("matrix has no ring");
  const Ring& r = *a.ring;
  return "[[" + r.elem_string(a.x) + "," + r.elem_string(a.y) + "],[" +
         r.elem_string(r.zero()) + "," + r.elem_string(a.z) + "]]";
}

}  // namespace commgraph
