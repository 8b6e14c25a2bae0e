#include "subpack/params.hpp"

#include <gtest/gtest.h>

namespace subpack {
namespace {

std::string error_of(std::int64_t N, std::int64_t K, std::int64_t D) {
  try {
    make_parameters(N, K, D);
  } catch (const DomainError& e) {
    return e.what();
  }
  return "";
}

TEST(Parameters, SmallestAdmissibleTriple) {
  const auto p = make_parameters(2, 3, 2);
  EXPECT_EQ(p.N(), 2);
  EXPECT_EQ(p.K(), 3);
  EXPECT_EQ(p.D(), 2);
}

TEST(Parameters, RejectsBoundaryViolations) {
  EXPECT_EQ(error_of(2, 3, 3), "requires K > D");
  EXPECT_EQ(error_of(1, 5, 2), "requires N > 1");
  EXPECT_EQ(error_of(4, 3, 9), "requires K > D");
  EXPECT_EQ(error_of(3, 5, 1), "requires D > 1");
  EXPECT_EQ(error_of(0, 5, 2), "requires N > 1");
  EXPECT_EQ(error_of(-3, -1, -2), "requires D > 1");
}

TEST(DerivedShape, Examples) {
  EXPECT_EQ(derive_shape(make_parameters(2, 3, 2)), (DerivedShape{2, 1}));
  EXPECT_EQ(derive_shape(make_parameters(2, 4, 3)), (DerivedShape{2, 1}));
  EXPECT_EQ(derive_shape(make_parameters(2, 10, 3)), (DerivedShape{8, 5}));
}

TEST(DerivedShape, InvariantsOverGrid) {
  for (std::int64_t K = 3; K <= 60; ++K) {
    for (std::int64_t D = 2; D < K; ++D) {
      const auto s = derive_shape(make_parameters(2, K, D));
      EXPECT_EQ(s.T, K - D + 1);
      EXPECT_GE(s.T, 2);
      EXPECT_GE(s.S, 0);
      EXPECT_LE(s.S * D, s.T * (D - 1));
      EXPECT_GT((s.S + 1) * D, s.T * (D - 1));
      EXPECT_LT(s.S, s.T);
    }
  }
}

}  // namespace
}  // namespace subpack
