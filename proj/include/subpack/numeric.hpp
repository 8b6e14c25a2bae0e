#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace subpack {

using BigInt = boost::multiprecision::cpp_int;

// Always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline std::string to_string(const BigInt& x) { return x.str(); }

// "p/q", or just "p" when the value is an integer.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1u) result *= b;
    exp >>= 1;
    if (exp != 0) b *= b;
  }
  return result;
}

inline Rational ipow(const Rational& base, std::uint64_t exp) {
  return Rational(ipow(numerator_of(base), exp), ipow(denominator_of(base), exp));
}

// Row n of Pascal's triangle: C(n,0), ..., C(n,n), by the multiplicative rule.
inline std::vector<BigInt> binomial_row(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("binomial_row requires n >= 0");
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (std::int64_t k = 1; k <= n; ++k) {
    row[k] = row[k - 1] * (n - k + 1) / k;
  }
  return row;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
  }
  return c;
}

}  // namespace subpack
