#include "commgraph/formulas.hpp"

namespace commgraph {

namespace {

BigInt pw(std::uint64_t base, unsigned exp) {
  BigInt out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= base;
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_field_params(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) {
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not prime");
  }
  if (n == 0) throw std::invalid_argument("field degree must be positive");
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi of 0");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      result -= result / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

bool is_prime_power(std::uint64_t x, std::uint64_t* p, unsigned* k) {
  if (x < 2) return false;
  std::uint64_t base = x;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      base = d;
      break;
    }
  }
  unsigned exp = 0;
  std::uint64_t rest = x;
  while (rest % base == 0) {
    rest /= base;
    ++exp;
  }
  if (rest != 1) return false;
  if (p) *p = base;
  if (k) *k = exp;
  return true;
}

BigInt predict_class_degree(const Ring& ring, ClassTag tag, Elem x, Elem y) {
  const UT2 rep{&ring, x, y, ring.zero()};
  if (classify(rep) != tag) {
    throw std::invalid_argument(std::string("representative (") +
                                ring.elem_string(x) + ", " +
                                ring.elem_string(y) + ") is in class " +
                                class_name(classify(rep)) + ", not " +
                                class_name(tag));
  }
  const BigInt r = ring.size();
  switch (tag) {
    case ClassTag::A1:
    case ClassTag::A2:
    case ClassTag::A3:
    case ClassTag::A7:
    case ClassTag::A8:
      return r * r - r - 1;
    case ClassTag::A4:
      return BigInt(ring.annihilator(x).size()) * r * r - r - 1;
    case ClassTag::A5:
      return BigInt(ring.annihilator(y).size()) * r * r - r - 1;
    case ClassTag::A6:
      return BigInt(ring.count_syzygies(x, y)) * r - r - 1;
  }
  throw std::invalid_argument("unknown class tag");
}

BigInt predict_class_degree_sum(const Ring& ring, ClassTag tag) {
  const BigInt r = ring.size();
  const BigInt u = ring.units().size();
  const BigInt d = ring.zero_divisors().size();
  const BigInt y = r * r - r - 1;
  switch (tag) {
    case ClassTag::A1:
    case ClassTag::A2:
      return r * u * y;
    case ClassTag::A3:
      return r * u * u * y;
    case ClassTag::A7:
    case ClassTag::A8:
      return r * u * d * y;
    case ClassTag::A4:
    case ClassTag::A5: {
      BigInt sum = 0;
      for (Elem n : ring.zero_divisors()) {
        sum += BigInt(ring.annihilator(n).size()) * r * r - r - 1;
      }
      return r * sum;
    }
    case ClassTag::A6: {
      BigInt sum = 0;
      for (Elem n1 : ring.zero_divisors()) {
        for (Elem n2 : ring.zero_divisors()) {
          sum += BigInt(ring.count_syzygies(n1, n2)) * r - r - 1;
        }
      }
      return r * sum;
    }
  }
  throw std::invalid_argument("unknown class tag");
}

BigInt predict_total_edges(const Ring& ring) {
  BigInt total = 0;
  for (int t = 0; t < 8; ++t) {
    total += predict_class_degree_sum(ring, static_cast<ClassTag>(t));
  }
  return exact_div(total, 2);
}

BigInt predict_edges_field(std::uint64_t p, unsigned n) {
  require_field_params(p, n);
  const BigInt q = pw(p, n);
  return exact_div(q * (q * q - 1) * (q * q - q - 1), 2);
}

BigInt predict_edges_product(std::uint64_t pm, std::uint64_t qn) {
  if (!is_prime_power(pm) || !is_prime_power(qn)) {
    throw std::invalid_argument("product factors must be prime powers");
  }
  const BigInt r = BigInt(pm) * qn;
  const BigInt u1 = pm - 1;
  const BigInt u2 = qn - 1;
  const BigInt u = u1 * u2;
  const BigInt y = r * r - r - 1;
  const BigInt z = qn * r * r - r - 1;
  const BigInt w = pm * r * r - r - 1;
  const BigInt inner = y * u * (4 + u + 2 * (u1 + u2)) +
                       z * u1 * (2 + u1) + w * u2 * (2 + u2);
  return exact_div(r * inner, 2);
}

BigInt predict_edges_zp2(std::uint64_t p) {
  require_field_params(p, 1);
  const BigInt q = p;
  return exact_div(
      q * q * (q * q - 1) *
          (pw(p, 6) + pw(p, 5) - pw(p, 4) - 2 * q * q - 1),
      2);
}

BigInt predict_dA7star_zn(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  const BigInt phi = euler_phi(n);
  const BigInt bn = n;
  return bn * phi * (bn - phi - 1) * (bn * bn - bn - 1);
}

PrimePowerClassSums predict_prime_power_class_sums(std::uint64_t p,
                                                   unsigned n) {
  require_field_params(p, 1);
  if (n < 2) {
    throw std::invalid_argument(
        "prime power class sums need exponent at least 2");
  }
  PrimePowerClassSums out;

  out.dA4star = 0;
  for (unsigned r = 1; r <= n - 1; ++r) {
    out.dA4star +=
        (BigInt(p) - 1) * pw(p, 2 * n - r - 1) * (pw(p, 2 * n + r) - pw(p, n) - 1);
  }
  out.dA5star = out.dA4star;

  // alpha = (p-1) p^(2n-1) * sum_r ( (p^3n + p^n + 1) p^-r
  //                                 - (p^2n + p^n) p^-2r - p^2n ).
  // The sum is evaluated over the common denominator p^(2n-2); the division
  // at the end is checked exact.
  BigInt alpha_num = 0;
  for (unsigned r = 1; r <= n - 1; ++r) {
    alpha_num += (pw(p, 3 * n) + pw(p, n) + 1) * pw(p, 2 * (n - 1) - r);
    alpha_num -= (pw(p, 2 * n) + pw(p, n)) * pw(p, 2 * (n - 1) - 2 * r);
    alpha_num -= pw(p, 2 * n) * pw(p, 2 * (n - 1));
  }
  out.dA6star_alpha =
      exact_div((BigInt(p) - 1) * pw(p, 2 * n - 1) * alpha_num,
                pw(p, 2 * (n - 1)));

  out.dA6star_beta = 0;
  for (unsigned r = 1; r <= n - 1; ++r) {
    out.dA6star_beta += (BigInt(p) - 1) * (BigInt(p) - 1) *
                        pw(p, 3 * n - 2 * r - 2) *
                        (pw(p, 2 * n + r) - pw(p, n) - 1);
  }

  out.dA6star = 2 * out.dA6star_alpha - out.dA6star_beta;
  out.omega = pw(p, n) * (pw(p, n) - 1);
  out.alpha_ind = pw(p, n) * (pw(p, 2 * n) - pw(p, 2 * n - 2));
  return out;
}

FieldStructure predict_field_structure(std::uint64_t p, unsigned n) {
  require_field_params(p, n);
  const BigInt q = pw(p, n);
  FieldStructure out;
  out.components = q + 1;
  out.component_size = q * q - q;
  out.degree = q * q - q - 1;
  out.omega = q * q - q;
  out.alpha = q + 1;
  out.connected = false;
  return out;
}

ZmStructure predict_zm_structure(std::uint64_t m) {
  if (m < 4 || is_prime(m)) {
    throw std::invalid_argument("modulus " + std::to_string(m) +
                                " is not composite");
  }
  ZmStructure out;
  out.connected = true;
  out.diameter = 3;
  out.omega = BigInt(m) * (m - 1);
  out.max_clique_count_claimed = 2;
  return out;
}

BigInt conjecture_alpha_zn(std::uint64_t n) {
  if (n < 4 || is_prime(n)) {
    throw std::invalid_argument("modulus " + std::to_string(n) +
                                " is not composite");
  }
  const BigInt phi = euler_phi(n);
  return BigInt(n) * phi * (2 * BigInt(n) - phi);
}

}  // namespace commgraph
