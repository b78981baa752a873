#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace commgraph {

// Ring elements are dense codes in [0, size). Code 0 is always the zero
// element; the rest of the encoding depends on the ring kind (see Ring).
using Elem = std::uint32_t;

// Thrown when a request would blow past a hard resource limit. Callers that
// want partial results must lower the request, not catch and ignore.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hard limits enforced by the ring factories.
struct RingLimits {
  std::uint64_t max_ring_size = std::uint64_t{1} << 20;
  unsigned max_field_degree = 8;
};

enum class RingKind { Modular, Field, Product };

// Parsed form of a ring description string:
//   zmod:<n>                      integers modulo n, n >= 2
//   gf:<p>^<n>                    field with p^n elements, auto modulus
//   gf:<p>^<n>:<coeffs>           explicit monic irreducible modulus,
//                                 coefficients low to high; a bare digit
//                                 string for p <= 10, else a comma list
//   prod:<spec>,<spec>            direct product of two base rings
struct RingSpec {
  RingKind kind = RingKind::Modular;
  std::uint64_t modulus = 0;                  // zmod
  std::uint32_t prime = 0;                    // gf
  unsigned degree = 0;                        // gf
  std::optional<std::vector<std::uint32_t>> coeffs;  // gf, length degree+1
  std::vector<RingSpec> factors;              // prod, exactly two
};

RingSpec parse_ring_spec(const std::string& text);
std::string format_ring_spec(const RingSpec& spec);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Maps Z_{mn} onto Z_m x Z_n for coprime m, n. Ring isomorphism in both
// directions; see verify_crt_iso for the exhaustive check.
struct CrtMap {
  RingPtr source;   // zmod:m*n
  RingPtr target;   // prod:zmod:m,zmod:n
  Elem to_product(Elem x) const;
  Elem from_product(Elem ab) const;

  std::uint64_t m_ = 0, n_ = 0;
};

CrtMap crt_map(std::uint64_t m, std::uint64_t n,
               const RingLimits& limits = RingLimits{});

// A finite commutative ring with identity, one of:
//   Modular  Z_n with the natural encoding (code = residue)
//   Field    GF(p^n); the code of sum c_i x^i is sum c_i p^(n-1-i), so
//            numeric code order equals lexicographic order on
//            (c_0, c_1, ..., c_{n-1}) and code 1 decodes to x^(n-1)
//   Product  A x B over two base rings; code = a * |B| + b
//
// Element arithmetic is table backed for rings of size <= 256 and computed
// on demand above that.
class Ring {
 public:
  static RingPtr modular(std::uint64_t n,
                         const RingLimits& limits = RingLimits{});
  static RingPtr field(std::uint32_t p, unsigned degree,
                       std::optional<std::vector<std::uint32_t>> coeffs =
                           std::nullopt,
                       const RingLimits& limits = RingLimits{});
  static RingPtr product(RingPtr a, RingPtr b,
                         const RingLimits& limits = RingLimits{});
  static RingPtr make(const RingSpec& spec,
                      const RingLimits& limits = RingLimits{});

  RingKind kind() const { return kind_; }
  std::uint64_t size() const { return size_; }
  Elem zero() const { return 0; }
  Elem one() const { return one_; }

  Elem add(Elem a, Elem b) const {
    check_elem(a);
    check_elem(b);
    if (!add_table_.empty()) return add_table_[std::size_t(a) * size32_ + b];
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    check_elem(a);
    if (!neg_table_.empty()) return neg_table_[a];
    return neg_slow(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    check_elem(a);
    check_elem(b);
    if (!mul_table_.empty()) return mul_table_[std::size_t(a) * size32_ + b];
    return mul_slow(a, b);
  }

  bool is_unit(Elem a) const {
    check_elem(a);
    return unit_flag_[a] != 0;
  }
  // Nonzero elements with a nonzero annihilator. In a finite commutative
  // ring these are exactly the nonzero nonunits.
  bool is_zero_divisor(Elem a) const {
    check_elem(a);
    return a != 0 && unit_flag_[a] == 0;
  }

  std::optional<Elem> inverse(Elem a) const;

  // All y with a*y = 0, in ascending code order. Always contains 0.
  std::vector<Elem> annihilator(Elem a) const;

  // Number of pairs (x, y) with n1*x + n2*y = 0. Runs in O(size) time.
  std::uint64_t count_syzygies(Elem n1, Elem n2) const;

  // Census of the nonzero elements, ascending code order.
  const std::vector<Elem>& units() const { return units_; }
  const std::vector<Elem>& zero_divisors() const { return zero_divisors_; }

  // Field accessors; throw std::domain_error for other kinds.
  std::uint32_t field_prime() const;
  unsigned field_degree() const;
  // Modulus coefficients low to high, length degree + 1, leading 1.
  const std::vector<std::uint32_t>& field_modulus() const;

  // Product accessors; throw std::domain_error for other kinds.
  const RingPtr& factor(int i) const;
  Elem pack(Elem a, Elem b) const;
  std::pair<Elem, Elem> unpack(Elem ab) const;

  std::string elem_string(Elem a) const;
  std::string spec_string() const;

 private:
  Ring() = default;

  void check_elem(Elem a) const {
    if (a >= size32_) {
      throw std::out_of_range("element code " + std::to_string(a) +
                              " out of range for ring of size " +
                              std::to_string(size_));
    }
  }

  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;
  void build_census();
  void build_tables();

  RingKind kind_ = RingKind::Modular;
  std::uint64_t size_ = 0;
  std::uint32_t size32_ = 0;
  Elem one_ = 0;

  // Modular state.
  std::uint64_t modulus_ = 0;

  // Field state.
  std::uint32_t prime_ = 0;
  unsigned degree_ = 0;
  std::vector<std::uint32_t> field_modulus_;  // low to high, length degree+1
  std::vector<std::uint32_t> pow_;            // pow_[i] = p^i

  // Product state.
  RingPtr factors_[2];

  std::vector<std::uint8_t> unit_flag_;
  std::vector<Elem> units_;
  std::vector<Elem> zero_divisors_;

  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
  std::vector<Elem> neg_table_;
};

// Lexicographically smallest monic irreducible polynomial of degree n over
// GF(p), compared on (c_0, c_1, ..., c_{n-1}). Returned low to high with the
// leading 1 included, so the result has length n + 1.
std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned n);

}  // namespace commgraph
