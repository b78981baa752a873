#include "commgraph/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace commgraph {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp,
                          std::uint64_t cap) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (result > cap / base) {
      throw CapExceeded("ring size " + std::to_string(base) + "^" +
                        std::to_string(exp) + " exceeds the limit " +
                        std::to_string(cap));
    }
    result *= base;
  }
  return result;
}

// x*u + y*v = gcd(x, y); all quantities fit comfortably in 64 bits for the
// ring sizes this library accepts.
std::int64_t ext_gcd(std::int64_t x, std::int64_t y, std::int64_t& u,
                     std::int64_t& v) {
  if (y == 0) {
    u = 1;
    v = 0;
    return x;
  }
  std::int64_t u1 = 0, v1 = 0;
  std::int64_t g = ext_gcd(y, x % y, u1, v1);
  u = v1;
  v = u1 - (x / y) * v1;
  return g;
}

// Polynomials over GF(p) as coefficient vectors, low to high. Inputs to the
// division helper are monic and the divisor has positive degree.
std::vector<std::uint32_t> poly_mod(const std::vector<std::uint32_t>& f,
                                    const std::vector<std::uint32_t>& g,
                                    std::uint32_t p) {
  std::vector<std::uint32_t> r = f;
  const std::size_t dg = g.size() - 1;
  while (r.size() > dg) {
    std::uint32_t lead = r.back();
    if (lead != 0) {
      const std::size_t shift = r.size() - 1 - dg;
      for (std::size_t i = 0; i < dg; ++i) {
        std::uint64_t t = std::uint64_t(lead) * g[i] % p;
        r[shift + i] = std::uint32_t((r[shift + i] + p - t) % p);
      }
    }
    r.pop_back();
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const unsigned n = unsigned(f.size() - 1);
  if (n == 0) return false;
  if (n == 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (unsigned d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    std::vector<std::uint32_t> g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t rest = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = std::uint32_t(rest % p);
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }
  bool try_consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!try_consume(c)) {
      throw std::invalid_argument("ring spec '" + text + "': expected '" +
                                  std::string(1, c) + "' at position " +
                                  std::to_string(pos));
    }
  }
  bool try_consume_word(const std::string& w) {
    if (text.compare(pos, w.size(), w) != 0) return false;
    pos += w.size();
    return true;
  }
  std::uint64_t parse_uint() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw std::invalid_argument("ring spec '" + text +
                                  "': expected a number at position " +
                                  std::to_string(pos));
    }
    std::uint64_t value = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t digit = std::uint64_t(text[pos] - '0');
      if (value > (std::uint64_t(-1) - digit) / 10) {
        throw std::invalid_argument("ring spec '" + text +
                                    "': number too large");
      }
      value = value * 10 + digit;
      ++pos;
    }
    return value;
  }
};

RingSpec parse_spec_at(Cursor& cur) {
  RingSpec spec;
  if (cur.try_consume_word("zmod:")) {
    spec.kind = RingKind::Modular;
    spec.modulus = cur.parse_uint();
    return spec;
  }
  if (cur.try_consume_word("gf:")) {
    spec.kind = RingKind::Field;
    std::uint64_t p = cur.parse_uint();
    cur.expect('^');
    std::uint64_t n = cur.parse_uint();
    if (p > std::uint32_t(-1) || n > 64) {
      throw std::invalid_argument("ring spec '" + cur.text +
                                  "': field parameters out of range");
    }
    spec.prime = std::uint32_t(p);
    spec.degree = unsigned(n);
    if (cur.try_consume(':')) {
      std::vector<std::uint32_t> coeffs;
      if (p <= 10) {
        // Exactly degree+1 digit characters, low coefficient first.
        for (std::uint64_t i = 0; i <= n; ++i) {
          if (cur.eof() ||
              !std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            throw std::invalid_argument(
                "ring spec '" + cur.text + "': modulus needs " +
                std::to_string(n + 1) + " coefficient digits");
          }
          coeffs.push_back(std::uint32_t(cur.text[cur.pos] - '0'));
          ++cur.pos;
        }
      } else {
        for (std::uint64_t i = 0; i <= n; ++i) {
          if (i > 0) cur.expect(',');
          coeffs.push_back(std::uint32_t(cur.parse_uint()));
        }
      }
      spec.coeffs = std::move(coeffs);
    }
    return spec;
  }
  if (cur.try_consume_word("prod:")) {
    spec.kind = RingKind::Product;
    RingSpec a = parse_spec_at(cur);
    if (a.kind == RingKind::Product) {
      throw std::invalid_argument("ring spec '" + cur.text +
                                  "': product factors must be base rings");
    }
    cur.expect(',');
    RingSpec b = parse_spec_at(cur);
    if (b.kind == RingKind::Product) {
      throw std::invalid_argument("ring spec '" + cur.text +
                                  "': product factors must be base rings");
    }
    spec.factors.push_back(std::move(a));
    spec.factors.push_back(std::move(b));
    return spec;
  }
  throw std::invalid_argument("ring spec '" + cur.text +
                              "': expected zmod:, gf: or prod: at position " +
                              std::to_string(cur.pos));
}

void format_coeffs(std::ostringstream& out,
                   const std::vector<std::uint32_t>& coeffs,
                   std::uint32_t p) {
  if (p <= 10) {
    for (std::uint32_t c : coeffs) out << c;
  } else {
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0) out << ',';
      out << coeffs[i];
    }
  }
}

}  // namespace

RingSpec parse_ring_spec(const std::string& text) {
  Cursor cur{text};
  RingSpec spec = parse_spec_at(cur);
  if (!cur.eof()) {
    throw std::invalid_argument("ring spec '" + text +
                                "': trailing characters at position " +
                                std::to_string(cur.pos));
  }
  return spec;
}

std::string format_ring_spec(const RingSpec& spec) {
  std::ostringstream out;
  switch (spec.kind) {
    case RingKind::Modular:
      out << "zmod:" << spec.modulus;
      break;
    case RingKind::Field:
      out << "gf:" << spec.prime << '^' << spec.degree;
      if (spec.coeffs) {
        out << ':';
        format_coeffs(out, *spec.coeffs, spec.prime);
      }
      break;
    case RingKind::Product:
      if (spec.factors.size() != 2) {
        throw std::invalid_argument("product spec needs exactly two factors");
      }
      out << "prod:" << format_ring_spec(spec.factors[0]) << ','
          << format_ring_spec(spec.factors[1]);
      break;
  }
  return out.str();
}

std::vector<std::uint32_t> find_irreducible(std::uint32_t p, unsigned n) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  }
  if (n == 0) throw std::invalid_argument("field degree must be positive");
  std::uint64_t count = checked_pow(p, n, std::uint64_t{1} << 40);
  std::vector<std::uint32_t> f(n + 1, 0);
  f[n] = 1;
  // Candidate codes in ascending order enumerate the coefficient tuples
  // (c_0, c_1, ..., c_{n-1}) in lexicographic order because c_0 sits at the
  // most significant base-p digit.
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t rest = code;
    for (unsigned i = n; i-- > 0;) {
      f[i] = std::uint32_t(rest % p);
      rest /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw std::domain_error("no irreducible polynomial found");  // unreachable
}

RingPtr Ring::modular(std::uint64_t n, const RingLimits& limits) {
  if (n < 2) {
    throw std::invalid_argument("zmod modulus must be at least 2, got " +
                                std::to_string(n));
  }
  if (n > limits.max_ring_size) {
    throw CapExceeded("ring size " + std::to_string(n) +
                      " exceeds the limit " +
                      std::to_string(limits.max_ring_size));
  }
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->kind_ = RingKind::Modular;
  ring->size_ = n;
  ring->size32_ = std::uint32_t(n);
  ring->modulus_ = n;
  ring->one_ = 1;
  ring->build_census();
  ring->build_tables();
  return ring;
}

RingPtr Ring::field(std::uint32_t p, unsigned degree,
                    std::optional<std::vector<std::uint32_t>> coeffs,
                    const RingLimits& limits) {
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) +
                                " is not prime");
  }
  if (degree == 0) throw std::invalid_argument("field degree must be positive");
  // The scratch buffers in mul_slow are sized for degree <= 15, so that is a
  // hard bound no matter what the caller puts in RingLimits.
  if (degree > limits.max_field_degree || degree > 15) {
    throw CapExceeded("field degree " + std::to_string(degree) +
                      " exceeds the limit " +
                      std::to_string(std::min(limits.max_field_degree, 15u)));
  }
  std::uint64_t size = checked_pow(p, degree, limits.max_ring_size);

  std::vector<std::uint32_t> modulus;
  if (coeffs) {
    modulus = std::move(*coeffs);
    if (modulus.size() != std::size_t(degree) + 1) {
      throw std::invalid_argument(
          "field modulus needs " + std::to_string(degree + 1) +
          " coefficients, got " + std::to_string(modulus.size()));
    }
    for (std::uint32_t c : modulus) {
      if (c >= p) {
        throw std::invalid_argument("field modulus coefficient " +
                                    std::to_string(c) +
                                    " is not reduced modulo " +
                                    std::to_string(p));
      }
    }
    if (modulus.back() != 1) {
      throw std::invalid_argument("field modulus must be monic");
    }
    if (!is_irreducible(modulus, p)) {
      throw std::invalid_argument("field modulus is reducible over GF(" +
                                  std::to_string(p) + ")");
    }
  } else {
    modulus = find_irreducible(p, degree);
  }

  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->kind_ = RingKind::Field;
  ring->size_ = size;
  ring->size32_ = std::uint32_t(size);
  ring->prime_ = p;
  ring->degree_ = degree;
  ring->field_modulus_ = std::move(modulus);
  ring->pow_.resize(degree + 1);
  ring->pow_[0] = 1;
  for (unsigned i = 1; i <= degree; ++i) {
    ring->pow_[i] = ring->pow_[i - 1] * p;
  }
  ring->one_ = ring->pow_[degree - 1];
  ring->build_census();
  ring->build_tables();
  return ring;
}

RingPtr Ring::product(RingPtr a, RingPtr b, const RingLimits& limits) {
  if (!a || !b) throw std::invalid_argument("product factor is null");
  if (a->kind() == RingKind::Product || b->kind() == RingKind::Product) {
    throw std::invalid_argument("product factors must be base rings");
  }
  if (a->size() > limits.max_ring_size / b->size()) {
    throw CapExceeded("ring size " + std::to_string(a->size()) + "*" +
                      std::to_string(b->size()) + " exceeds the limit " +
                      std::to_string(limits.max_ring_size));
  }
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->kind_ = RingKind::Product;
  ring->size_ = a->size() * b->size();
  ring->size32_ = std::uint32_t(ring->size_);
  ring->factors_[0] = std::move(a);
  ring->factors_[1] = std::move(b);
  ring->one_ = ring->pack(ring->factors_[0]->one(), ring->factors_[1]->one());
  ring->build_census();
  ring->build_tables();
  return ring;
}

RingPtr Ring::make(const RingSpec& spec, const RingLimits& limits) {
  switch (spec.kind) {
    case RingKind::Modular:
      return modular(spec.modulus, limits);
    case RingKind::Field:
      return field(spec.prime, spec.degree, spec.coeffs, limits);
    case RingKind::Product: {
      if (spec.factors.size() != 2) {
        throw std::invalid_argument("product spec needs exactly two factors");
      }
      return product(make(spec.factors[0], limits),
                     make(spec.factors[1], limits), limits);
    }
  }
  throw std::invalid_argument("unknown ring kind");
}

Elem Ring::add_slow(Elem a, Elem b) const {
  switch (kind_) {
    case RingKind::Modular:
      return Elem((std::uint64_t(a) + b) % modulus_);
    case RingKind::Field: {
      Elem out = 0;
      for (unsigned i = 0; i < degree_; ++i) {
        std::uint32_t place = pow_[degree_ - 1 - i];
        std::uint32_t ca = a / place % prime_;
        std::uint32_t cb = b / place % prime_;
        out += (ca + cb) % prime_ * place;
      }
      return out;
    }
    case RingKind::Product: {
      auto [a0, a1] = unpack(a);
      auto [b0, b1] = unpack(b);
      return pack(factors_[0]->add(a0, b0), factors_[1]->add(a1, b1));
    }
  }
  throw std::domain_error("unknown ring kind");
}

Elem Ring::neg_slow(Elem a) const {
  switch (kind_) {
    case RingKind::Modular:
      return a == 0 ? 0 : Elem(modulus_ - a);
    case RingKind::Field: {
      Elem out = 0;
      for (unsigned i = 0; i < degree_; ++i) {
        std::uint32_t place = pow_[degree_ - 1 - i];
        std::uint32_t c = a / place % prime_;
        out += (prime_ - c) % prime_ * place;
      }
      return out;
    }
    case RingKind::Product: {
      auto [a0, a1] = unpack(a);
      return pack(factors_[0]->neg(a0), factors_[1]->neg(a1));
    }
  }
  throw std::domain_error("unknown ring kind");
}

Elem Ring::mul_slow(Elem a, Elem b) const {
  switch (kind_) {
    case RingKind::Modular:
      return Elem(std::uint64_t(a) * b % modulus_);
    case RingKind::Field: {
      std::uint32_t ca[16], cb[16], acc[31] = {0};
      for (unsigned i = 0; i < degree_; ++i) {
        std::uint32_t place = pow_[degree_ - 1 - i];
        ca[i] = a / place % prime_;
        cb[i] = b / place % prime_;
      }
      for (unsigned i = 0; i < degree_; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < degree_; ++j) {
          acc[i + j] = std::uint32_t(
              (acc[i + j] + std::uint64_t(ca[i]) * cb[j]) % prime_);
        }
      }
      // Fold x^k for k >= degree using x^degree = -(m_0 + ... ).
      for (unsigned k = 2 * degree_ - 2; k + 1 > degree_; --k) {
        std::uint32_t top = acc[k];
        if (top == 0) continue;
        acc[k] = 0;
        for (unsigned i = 0; i < degree_; ++i) {
          std::uint64_t t = std::uint64_t(top) * field_modulus_[i] % prime_;
          acc[k - degree_ + i] =
              std::uint32_t((acc[k - degree_ + i] + prime_ - t) % prime_);
        }
      }
      Elem out = 0;
      for (unsigned i = 0; i < degree_; ++i) {
        out += acc[i] * pow_[degree_ - 1 - i];
      }
      return out;
    }
    case RingKind::Product: {
      auto [a0, a1] = unpack(a);
      auto [b0, b1] = unpack(b);
      return pack(factors_[0]->mul(a0, b0), factors_[1]->mul(a1, b1));
    }
  }
  throw std::domain_error("unknown ring kind");
}

void Ring::build_census() {
  unit_flag_.assign(size_, 0);
  for (std::uint64_t e = 0; e < size_; ++e) {
    bool unit = false;
    switch (kind_) {
      case RingKind::Modular:
        unit = std::gcd(e, modulus_) == 1;
        break;
      case RingKind::Field:
        unit = e != 0;
        break;
      case RingKind::Product: {
        auto [a, b] = unpack(Elem(e));
        unit = factors_[0]->is_unit(a) && factors_[1]->is_unit(b);
        break;
      }
    }
    unit_flag_[e] = unit ? 1 : 0;
  }
  for (std::uint64_t e = 1; e < size_; ++e) {
    if (unit_flag_[e]) {
      units_.push_back(Elem(e));
    } else {
      zero_divisors_.push_back(Elem(e));
    }
  }
}

void Ring::build_tables() {
  constexpr std::uint64_t kTableCap = 256;
  if (size_ > kTableCap) return;
  neg_table_.resize(size_);
  add_table_.resize(size_ * size_);
  mul_table_.resize(size_ * size_);
  for (std::uint64_t a = 0; a < size_; ++a) {
    neg_table_[a] = neg_slow(Elem(a));
    for (std::uint64_t b = 0; b < size_; ++b) {
      add_table_[a * size_ + b] = add_slow(Elem(a), Elem(b));
      mul_table_[a * size_ + b] = mul_slow(Elem(a), Elem(b));
    }
  }
}

std::optional<Elem> Ring::inverse(Elem a) const {
  check_elem(a);
  if (!unit_flag_[a]) return std::nullopt;
  switch (kind_) {
    case RingKind::Modular: {
      std::int64_t u = 0, v = 0;
      ext_gcd(std::int64_t(a), std::int64_t(modulus_), u, v);
      std::int64_t m = std::int64_t(modulus_);
      return Elem(((u % m) + m) % m);
    }
    case RingKind::Field: {
      // a^(q-2) in a field of q elements.
      std::uint64_t e = size_ - 2;
      Elem base = a, result = one_;
      while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
      }
      return result;
    }
    case RingKind::Product: {
      auto [a0, a1] = unpack(a);
      return pack(*factors_[0]->inverse(a0), *factors_[1]->inverse(a1));
    }
  }
  throw std::domain_error("unknown ring kind");
}

std::vector<Elem> Ring::annihilator(Elem a) const {
  check_elem(a);
  std::vector<Elem> out;
  for (std::uint64_t y = 0; y < size_; ++y) {
    if (mul(a, Elem(y)) == 0) out.push_back(Elem(y));
  }
  return out;
}

std::uint64_t Ring::count_syzygies(Elem n1, Elem n2) const {
  check_elem(n1);
  check_elem(n2);
  std::vector<std::uint32_t> hits(size_, 0);
  for (std::uint64_t y = 0; y < size_; ++y) {
    ++hits[mul(n2, Elem(y))];
  }
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < size_; ++x) {
    total += hits[neg(mul(n1, Elem(x)))];
  }
  return total;
}

std::uint32_t Ring::field_prime() const {
  if (kind_ != RingKind::Field) {
    throw std::domain_error("field_prime on a non-field ring");
  }
  return prime_;
}

unsigned Ring::field_degree() const {
  if (kind_ != RingKind::Field) {
    throw std::domain_error("field_degree on a non-field ring");
  }
  return degree_;
}

const std::vector<std::uint32_t>& Ring::field_modulus() const {
  if (kind_ != RingKind::Field) {
    throw std::domain_error("field_modulus on a non-field ring");
  }
  return field_modulus_;
}

const RingPtr& Ring::factor(int i) const {
  if (kind_ != RingKind::Product) {
    throw std::domain_error("factor on a non-product ring");
  }
  if (i != 0 && i != 1) throw std::out_of_range("factor index must be 0 or 1");
  return factors_[i];
}

Elem Ring::pack(Elem a, Elem b) const {
  if (kind_ != RingKind::Product) {
    throw std::domain_error("pack on a non-product ring");
  }
  if (a >= factors_[0]->size() || b >= factors_[1]->size()) {
    throw std::out_of_range("component code out of range");
  }
  return Elem(std::uint64_t(a) * factors_[1]->size() + b);
}

std::pair<Elem, Elem> Ring::unpack(Elem ab) const {
  if (kind_ != RingKind::Product) {
    throw std::domain_error("unpack on a non-product ring");
  }
  check_elem(ab);
  std::uint64_t nb = factors_[1]->size();
  return {Elem(ab / nb), Elem(ab % nb)};
}

std::string Ring::elem_string(Elem a) const {
  check_elem(a);
  switch (kind_) {
    case RingKind::Modular:
      return std::to_string(a);
    case RingKind::Field: {
      std::ostringstream out;
      for (unsigned i = 0; i < degree_; ++i) {
        std::uint32_t c = a / pow_[degree_ - 1 - i] % prime_;
        if (prime_ <= 10) {
          out << c;
        } else {
          if (i > 0) out << ',';
          out << c;
        }
      }
      return out.str();
    }
    case RingKind::Product: {
      auto [a0, a1] = unpack(a);
      return "(" + factors_[0]->elem_string(a0) + "," +
             factors_[1]->elem_string(a1) + ")";
    }
  }
  throw std::domain_error("unknown ring kind");
}

std::string Ring::spec_string() const {
  std::ostringstream out;
  switch (kind_) {
    case RingKind::Modular:
      out << "zmod:" << modulus_;
      break;
    case RingKind::Field:
      out << "gf:" << prime_ << '^' << degree_ << ':';
      format_coeffs(out, field_modulus_, prime_);
      break;
    case RingKind::Product:
      out << "prod:" << factors_[0]->spec_string() << ','
          << factors_[1]->spec_string();
      break;
  }
  return out.str();
}

Elem CrtMap::to_product(Elem x) const {
  return target->pack(Elem(x % m_), Elem(x % n_));
}

Elem CrtMap::from_product(Elem ab) const {
  auto [a, b] = target->unpack(ab);
  std::int64_t u = 0, v = 0;
  ext_gcd(std::int64_t(m_), std::int64_t(n_), u, v);
  std::int64_t mn = std::int64_t(m_ * n_);
  std::int64_t x =
      (std::int64_t(b) * u % mn * std::int64_t(m_) +
       std::int64_t(a) * v % mn * std::int64_t(n_)) %
      mn;
  return Elem((x + mn) % mn);
}

CrtMap crt_map(std::uint64_t m, std::uint64_t n, const RingLimits& limits) {
  if (m < 2 || n < 2) {
    throw std::invalid_argument("crt_map factors must be at least 2");
  }
  if (std::gcd(m, n) != 1) {
    throw std::invalid_argument("crt_map factors " + std::to_string(m) +
                                " and " + std::to_string(n) +
                                " are not coprime");
  }
  CrtMap map;
  map.m_ = m;
  map.n_ = n;
  map.source = Ring::modular(m * n, limits);
  map.target =
      Ring::product(Ring::modular(m, limits), Ring::modular(n, limits), limits);
  return map;
}

}  // namespace commgraph
