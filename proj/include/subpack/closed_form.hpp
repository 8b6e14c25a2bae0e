#pragma once

#include <cstdint>
#include <vector>


#include "subpack/genfunc.hpp"
#include "subpack/numeric.hpp"
#include "subpack/params.hpp"

namespace subpack {

/// P(N) = sum_{k=0}^{S} a_{kD} N^{T-k}, so that L = P(N) / D.
inline BigInt closed_form_polynomial(const Parameters& p, const std::vector<BigInt>& filtered) {
  const auto T = derive_shape(p).T;
  const BigInt n = p.N();
  BigInt value = 0;
  for (std::size_t k = 0; k < filtered.size(); ++k) {
    value += filtered[k] * ipow(n, static_cast<std::uint64_t>(T - static_cast<std::int64_t>(k)));
  }
  return value;
}

inline BigInt closed_form_polynomial(const Parameters& p) {
  const auto shape = derive_shape(p);
  return closed_form_polynomial(p, filtered_coefficients(expand_coefficients(p.D(), shape.T)));
}

inline Rational normalized_L_closed_form(const Parameters& p) {
  return Rational(closed_form_polynomial(p), BigInt(p.D()));
}

struct LeadingTerm {
  std::int64_t degree;
  Rational coefficient;
};

// Highest power of N with a nonzero coefficient in P(N) / D.
inline LeadingTerm leading_term(const Parameters& p) {
  const auto shape = derive_shape(p);
  const auto filtered = filtered_coefficients(expand_coefficients(p.D(), shape.T));
  for (std::size_t k = 0; k < filtered.size(); ++k) {
    if (filtered[k] != 0) {
      return LeadingTerm{shape.T - static_cast<std::int64_t>(k), Rational(filtered[k], BigInt(p.D()))};
    }
  }
  return LeadingTerm{0, Rational(0)};
}

struct ClosedFormResult {
  Parameters params;
  Rational L;
  BigInt subpacketization;  // smallest positive integer of the form m * L
  BigInt multiplier;        // the m achieving it; divides D
  BigInt polynomial_value;  // P(N) = D * L
};

/// With L = P/D, the smallest integer multiple is P / gcd(P, D), reached at
/// m = D / gcd(P, D).
inline ClosedFormResult subpacketization_level(const Parameters& p) {
  const BigInt P = closed_form_polynomial(p);
  const BigInt D = p.D();
  const BigInt g = boost::multiprecision::gcd(P, D);
  return ClosedFormResult{p, Rational(P, D), P / g, D / g, P};
}

}  // namespace subpack
