#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace commgraph {

// Edge counts and closed form predictions outgrow 64 bits long before the
// rings themselves become intractable, so all formula arithmetic is exact
// arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

// Exact division; throws std::domain_error when b does not divide a. Used
// wherever a formula divides by 2 or by a power so that a wrong closed form
// fails loudly instead of rounding.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("exact_div by zero");
  BigInt q = a / b;
  if (q * b != a) {
    throw std::domain_error("exact_div: " + a.str() + " is not divisible by " +
                            b.str());
  }
  return q;
}

}  // namespace commgraph
