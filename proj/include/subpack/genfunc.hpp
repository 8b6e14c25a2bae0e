#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "subpack/numeric.hpp"
#include "subpack/params.hpp"

namespace subpack {

/// Coefficients a_0, ..., a_{T(D-1)} of (1 + x + ... + x^{D-1})^T.
struct CoefficientVector {
  std::int64_t D;
  std::int64_t T;
  std::vector<BigInt> coeffs;

  std::int64_t degree() const { return T * (D - 1); }
  const BigInt& operator[](std::int64_t n) const { return coeffs.at(static_cast<std::size_t>(n)); }
};

inline void check_window_args(std::int64_t D, std::int64_t T) {
  if (D < 2) throw DomainError("requires D >= 2");
  if (T < 1) throw DomainError("requires T >= 1");
}

/// Expands the window power by T-1 schoolbook convolutions with the all-ones
/// polynomial of length D.
inline CoefficientVector expand_coefficients(std::int64_t D, std::int64_t T) {
  check_window_args(D, T);
  std::vector<BigInt> current(static_cast<std::size_t>(D), BigInt(1));
  for (std::int64_t step = 1; step < T; ++step) {
    std::vector<BigInt> next(current.size() + static_cast<std::size_t>(D - 1), BigInt(0));
    for (std::size_t n = 0; n < current.size(); ++n) {
      for (std::int64_t j = 0; j < D; ++j) next[n + j] += current[n];
    }
    current = std::move(next);
  }
  return CoefficientVector{D, T, std::move(current)};
}

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Histogram of tuple sums over [0:D-1]^T, by walking every tuple.
/// Throws if D^T exceeds the enumeration budget.
inline std::vector<std::uint64_t> tuple_sum_histogram(
    std::int64_t D, std::int64_t T, std::uint64_t budget = kDefaultEnumerationBudget) {
  check_window_args(D, T);
  std::uint64_t total = 1;
  for (std::int64_t i = 0; i < T; ++i) {
    if (total > budget / static_cast<std::uint64_t>(D)) {
      throw DomainError("enumeration of " + std::to_string(D) + "^" + std::to_string(T) +
                        " tuples exceeds budget " + std::to_string(budget));
    }
    total *= static_cast<std::uint64_t>(D);
  }

  std::vector<std::uint64_t> hist(static_cast<std::size_t>(T * (D - 1) + 1), 0);
  std::vector<std::int64_t> digits(static_cast<std::size_t>(T), 0);
  std::int64_t sum = 0;
  for (std::uint64_t visited = 0; visited < total; ++visited) {
    ++hist[static_cast<std::size_t>(sum)];
    // Odometer increment.
    for (auto& d : digits) {
      if (d + 1 < D) {
        ++d;
        ++sum;
        break;
      }
      sum -= d;
      d = 0;
    }
  }
  return hist;
}

/// Number of T-tuples over [0:D-1] summing to n, by brute force.
inline std::uint64_t coefficient_count_oracle(std::int64_t D, std::int64_t T, std::int64_t n,
                                              std::uint64_t budget = kDefaultEnumerationBudget) {
  check_window_args(D, T);
  if (n < 0 || n > T * (D - 1)) throw DomainError("requires 0 <= n <= T(D-1)");
  return tuple_sum_histogram(D, T, budget)[static_cast<std::size_t>(n)];
}

// [a_0, a_D, ..., a_{SD}]: the coefficients whose index is a multiple of D.
inline std::vector<BigInt> filtered_coefficients(const CoefficientVector& v) {
  const auto S = shape_of(v.D, v.T).S;
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(S) + 1);
  for (std::int64_t k = 0; k <= S; ++k) out.push_back(v[k * v.D]);
  return out;
}

}  // namespace subpack
