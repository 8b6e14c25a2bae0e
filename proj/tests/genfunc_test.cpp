#include "subpack/genfunc.hpp"

#include <gtest/gtest.h>

namespace subpack {
namespace {

std::vector<BigInt> Z(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

TEST(ExpandCoefficients, SmallCases) {
  EXPECT_EQ(expand_coefficients(2, 3).coeffs, Z({1, 3, 3, 1}));
  EXPECT_EQ(expand_coefficients(3, 2).coeffs, Z({1, 2, 3, 2, 1}));
  EXPECT_EQ(expand_coefficients(2, 2).coeffs, Z({1, 2, 1}));
  EXPECT_EQ(expand_coefficients(5, 1).coeffs, Z({1, 1, 1, 1, 1}));
}

TEST(ExpandCoefficients, RejectsBadArguments) {
  EXPECT_THROW(expand_coefficients(1, 3), DomainError);
  EXPECT_THROW(expand_coefficients(3, 0), DomainError);
}

TEST(CountOracle, Enumerates) {
  EXPECT_EQ(coefficient_count_oracle(3, 2, 2), 3u);
  EXPECT_EQ(coefficient_count_oracle(2, 3, 0), 1u);
  EXPECT_EQ(coefficient_count_oracle(2, 3, 2), 3u);
}

TEST(CountOracle, RejectsOutOfRangeAndOverBudget) {
  EXPECT_THROW(coefficient_count_oracle(3, 2, 5), DomainError);
  EXPECT_THROW(coefficient_count_oracle(3, 2, -1), DomainError);
  EXPECT_THROW(coefficient_count_oracle(10, 7, 3), DomainError);
  EXPECT_THROW(coefficient_count_oracle(3, 3, 1, 26), DomainError);
  EXPECT_EQ(coefficient_count_oracle(3, 3, 1, 27), 3u);
}

TEST(FilteredCoefficients, IndexSelection) {
  EXPECT_EQ(filtered_coefficients(expand_coefficients(2, 3)), Z({1, 3}));
  EXPECT_EQ(filtered_coefficients(expand_coefficients(3, 2)), Z({1, 2}));
  EXPECT_EQ(filtered_coefficients(expand_coefficients(2, 2)), Z({1, 1}));
}

// Convolution against brute-force enumeration wherever D^T <= 10^6, plus the
// structural invariants on a wider range.
TEST(ExpandCoefficients, AgreesWithEnumeration) {
  for (std::int64_t D = 2; D <= 16; ++D) {
    for (std::int64_t T = 1; T <= 20; ++T) {
      const auto v = expand_coefficients(D, T);
      std::vector<std::uint64_t> hist;
      try {
        hist = tuple_sum_histogram(D, T);
      } catch (const DomainError&) {
        break;
      }
      ASSERT_EQ(hist.size(), v.coeffs.size());
      for (std::size_t n = 0; n < hist.size(); ++n) ASSERT_EQ(v.coeffs[n], hist[n]) << D << " " << T << " " << n;
    }
  }
}

TEST(ExpandCoefficients, StructuralInvariants) {
  for (std::int64_t D = 2; D <= 14; ++D) {
    for (std::int64_t T = 1; T <= 30; ++T) {
      const auto v = expand_coefficients(D, T);
      const auto deg = T * (D - 1);
      ASSERT_EQ(static_cast<std::int64_t>(v.coeffs.size()), deg + 1);
      ASSERT_EQ(v[0], 1);
      ASSERT_EQ(v[deg], 1);
      BigInt total = 0;
      for (std::int64_t n = 0; n <= deg; ++n) {
        ASSERT_EQ(v[n], v[deg - n]);
        ASSERT_GE(v[n], 0);
        total += v[n];
      }
      ASSERT_EQ(total, ipow(BigInt(D), T));
      const auto f = filtered_coefficients(v);
      ASSERT_EQ(static_cast<std::int64_t>(f.size()), shape_of(D, T).S + 1);
      ASSERT_EQ(f.front(), 1);
      if (D == 2) {
        for (std::int64_t n = 0; n <= deg; ++n) ASSERT_EQ(v[n], binomial(T, n));
      }
    }
  }
}

}  // namespace
}  // namespace subpack
