#include "dbgf/formula.hpp"
#include "dbgf/cycles.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace dbgf {
namespace {

TEST(GLinear, Examples) {
  EXPECT_EQ(g_linear({3, {1}, false}), (IntPolynomial{0, 1, 0, 1}));
  EXPECT_EQ(g_linear({3, {}, false}), (IntPolynomial{0, 0, 0, 2}));
  EXPECT_EQ(g_linear({4, {1}, false}), (IntPolynomial{0, 1, 0, 7, 0, 7, 0, 1}));
}

TEST(GLinear, ExamplesMatchIndependentEnumeration) {
  const auto brute = [](const LinearSpec& s) { return testing::histogram_poly(testing::brute_histogram(make_linear(s))); };
  EXPECT_EQ(brute({3, {}, false}), (IntPolynomial{0, 0, 0, 2}));
  EXPECT_EQ(brute({4, {1}, false}), (IntPolynomial{0, 1, 0, 7, 0, 7, 0, 1}));
  EXPECT_EQ(brute({3, {1}, true}), (IntPolynomial{0, 1, 0, 1}));
  EXPECT_EQ(brute({3, {}, true}), (IntPolynomial{0, 2}));
}

TEST(GLinear, RejectsConstantOne) {
  try {
    g_linear({3, {1}, true});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::unsupported_spec);
  }
}

TEST(GComplement, Examples) {
  EXPECT_EQ(g_complement({3, {1}, true}), (IntPolynomial{0, 1, 0, 1}));
  EXPECT_EQ(g_complement({3, {}, true}), (IntPolynomial{0, 2}));
  EXPECT_THROW(g_complement({3, {1}, false}), Error);
}

TEST(GZero, Examples) {
  EXPECT_EQ(g_zero(3), (IntPolynomial{0, 0, 0, 2}));
  EXPECT_EQ(g_zero(2), (IntPolynomial{0, 0, 1}));
  EXPECT_THROW(g_zero(1), Error);
}

TEST(GZero, AgreesWithCycleProduct) {
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(g_zero(n), g_linear({n, {}, false})) << n;
}

TEST(GZero, ExponentsPastTheWalkLimit) {
  // Total necklace count of length 30 (OEIS A000031).
  BigInt cycles = 0;
  for (std::uint64_t i = 0; i <= 30; ++i) cycles += e_coefficient(30, i);
  EXPECT_EQ(cycles, BigInt("35792568"));
}

TEST(GZero, CountsAtLargerOrder) {
  const int n = 15;
  EXPECT_EQ(g_zero(n).evaluate(1), pow2((std::size_t{1} << (n - 1)) - n));
}

TEST(GFryers, Examples) {
  EXPECT_EQ(g_fryers(3), (IntPolynomial{0, 1, 0, 1}));
  EXPECT_EQ(g_fryers(4), (IntPolynomial{0, 1, 0, 7, 0, 7, 0, 1}));
  // C(8,3) * 2 / 16
  EXPECT_EQ(g_fryers(4).coeff(3), binomial(8, 3) * 2 / 16);
  EXPECT_EQ(g_fryers(4).coeff(3), 7);
}

TEST(GFryers, MatchesMaximalPeriodTapSets) {
  for (int n = 3; n <= 10; ++n) {
    int maximal = 0;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      const LinearSpec spec = LinearSpec::from_mask(n, mask);
      if (!fibonacci_cycles(make_linear(spec)).is_maximal(n)) continue;
      ++maximal;
      EXPECT_EQ(g_linear(spec), g_fryers(n)) << describe(spec);
    }
    EXPECT_GT(maximal, 0) << n;
  }
}

TEST(GLinear, TotalCount) {
  for (int n = 2; n <= 10; ++n) {
    const BigInt total = pow2((std::size_t{1} << (n - 1)) - static_cast<std::size_t>(n));
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      const LinearSpec spec = LinearSpec::from_mask(n, mask);
      ASSERT_EQ(g_linear(spec).evaluate(1), total) << describe(spec);
      LinearSpec one = spec;
      one.constant = true;
      ASSERT_EQ(g_complement(one).evaluate(1), total) << describe(one);
    }
  }
}

TEST(GLinear, NonnegativeWithUniformExponentParity) {
  for (int n = 2; n <= 9; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      const LinearSpec spec = LinearSpec::from_mask(n, mask);
      const IntPolynomial g = g_linear(spec);
      long parity = -1;
      for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
        const BigInt& c = g.coeffs()[k];
        ASSERT_GE(sgn(c), 0) << describe(spec);
        if (sgn(c) == 0) continue;
        if (parity < 0) parity = static_cast<long>(k % 2);
        ASSERT_EQ(static_cast<long>(k % 2), parity) << describe(spec);
      }
    }
  }
}

}  // namespace
}  // namespace dbgf
