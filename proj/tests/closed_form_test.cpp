#include "subpack/closed_form.hpp"

#include <gtest/gtest.h>

#include "subpack/recursion.hpp"

namespace subpack {
namespace {

TEST(ClosedForm, SmallExamples) {
  EXPECT_EQ(normalized_L_closed_form(make_parameters(2, 3, 2)), 3);
  EXPECT_EQ(normalized_L_closed_form(make_parameters(2, 4, 3)), Rational(8, 3));
  EXPECT_EQ(normalized_L_closed_form(make_parameters(3, 3, 2)), 6);
}

// Frozen from an independent exact evaluation of the recursion definition.
TEST(ClosedForm, LargerFrozenValues) {
  EXPECT_EQ(normalized_L_closed_form(make_parameters(2, 10, 3)), Rational(101600, 3));
  EXPECT_EQ(normalized_L_closed_form(make_parameters(3, 9, 4)), 20844);
  EXPECT_EQ(normalized_L_closed_form(make_parameters(5, 30, 4)), BigInt("10161261910672812277760000000"));
  EXPECT_EQ(normalized_L_closed_form(make_parameters(7, 40, 6)),
            BigInt("1560624170563166214422373656573543485201514496"));
}

TEST(ClosedForm, LeadingTerm) {
  auto check = [](std::int64_t N, std::int64_t K, std::int64_t D, std::int64_t deg, Rational coef) {
    const auto lt = leading_term(make_parameters(N, K, D));
    EXPECT_EQ(lt.degree, deg);
    EXPECT_EQ(lt.coefficient, coef);
  };
  check(2, 3, 2, 2, Rational(1, 2));
  check(5, 10, 3, 8, Rational(1, 3));
  check(2, 4, 3, 2, Rational(1, 3));
}

TEST(Subpacketization, Examples) {
  auto r = subpacketization_level(make_parameters(2, 3, 2));
  EXPECT_EQ(r.subpacketization, 3);
  EXPECT_EQ(r.multiplier, 1);
  r = subpacketization_level(make_parameters(2, 4, 3));
  EXPECT_EQ(r.L, Rational(8, 3));
  EXPECT_EQ(r.subpacketization, 8);
  EXPECT_EQ(r.multiplier, 3);
  EXPECT_EQ(r.polynomial_value, 8);
  r = subpacketization_level(make_parameters(3, 3, 2));
  EXPECT_EQ(r.subpacketization, 6);
  EXPECT_EQ(r.multiplier, 1);
}

TEST(ClosedForm, MatchesRecursionAndIsMonotoneInN) {
  for (std::int64_t K = 3; K <= 18; ++K) {
    for (std::int64_t D = 2; D < K; ++D) {
      Rational previous = 0;
      for (std::int64_t N = 2; N <= 9; ++N) {
        const auto p = make_parameters(N, K, D);
        const auto r = subpacketization_level(p);
        ASSERT_EQ(r.L, normalized_L_via_recursion(p)) << p.to_string();
        ASSERT_EQ(r.L * D, r.polynomial_value);
        ASSERT_EQ(Rational(r.multiplier) * r.L, r.subpacketization);
        ASSERT_EQ(BigInt(D) % r.multiplier, 0);
        for (BigInt m = 1; m < r.multiplier; ++m) ASSERT_FALSE(is_integer(Rational(m) * r.L));
        ASSERT_GT(r.L, previous);
        previous = r.L;
      }
    }
  }
}

TEST(ClosedForm, LargeInstanceAgreesWithRecursion) {
  const auto p = make_parameters(4, 200, 5);
  EXPECT_EQ(normalized_L_closed_form(p), normalized_L_via_recursion(p));
}

}  // namespace
}  // namespace subpack
