#include "dbgf/oracle.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "dbgf/formula.hpp"
#include "test_util.hpp"

namespace dbgf {
namespace {

using testing::table_of;

TEST(Enumerate, Examples) {
  const auto s3 = enumerate_debruijn_functions(3, 1);
  ASSERT_EQ(s3.size(), 2u);
  EXPECT_EQ(s3[0], table_of(3, {1, 1, 0, 1}));
  EXPECT_EQ(s3[1], table_of(3, {1, 0, 1, 1}));
  EXPECT_EQ(enumerate_debruijn_functions(4).size(), 16u);
  EXPECT_EQ(enumerate_debruijn_functions(2).size(), 1u);
  EXPECT_EQ(enumerate_debruijn_functions(5).size(), 2048u);
}

TEST(Enumerate, OrderTooLarge) {
  try {
    enumerate_debruijn_functions(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::order_too_large);
  }
  EXPECT_THROW(g_bruteforce(FeedbackFunction(6)), Error);
  EXPECT_THROW(search_at_distance(FeedbackFunction(6), 1, 1), Error);
}

TEST(Enumerate, ParallelMatchesSequential) {
  for (int n = 2; n <= 5; ++n) {
    const auto seq = enumerate_debruijn_functions(n, 1);
    for (unsigned w : {2u, 3u, 8u}) EXPECT_EQ(enumerate_debruijn_functions(n, w), seq) << n << " " << w;
    for (std::size_t i = 1; i < seq.size(); ++i) EXPECT_LT(seq[i - 1].to_bits(), seq[i].to_bits());
  }
}

TEST(GBruteforce, Examples) {
  EXPECT_EQ(g_bruteforce(make_linear({3, {1}, false})), (IntPolynomial{0, 1, 0, 1}));
  EXPECT_EQ(g_bruteforce(FeedbackFunction(3)), (IntPolynomial{0, 0, 0, 2}));
  EXPECT_EQ(g_bruteforce(table_of(3, {1, 0, 1, 1})).coeff(0), 1);
}

TEST(GBruteforce, MatchesIndependentHistogram) {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 4; ++n) {
    for (int i = 0; i < 5; ++i) {
      const auto f = testing::random_function(n, rng);
      EXPECT_EQ(g_bruteforce(f), testing::histogram_poly(testing::brute_histogram(f)));
    }
  }
}

TEST(GBruteforce, MatchesFormulaForLinear) {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      const LinearSpec spec = LinearSpec::from_mask(n, mask);
      EXPECT_EQ(g_bruteforce(make_linear(spec)), g_linear(spec)) << describe(spec);
      if (n == 3 || n == 4) {
        LinearSpec one = spec;
        one.constant = true;
        EXPECT_EQ(g_bruteforce(make_linear(one)), g_complement(one)) << describe(one);
      }
    }
  }
}

TEST(GBruteforce, TotalIsClosedForm) {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 5; ++n) {
    const auto f = testing::random_function(n, rng);
    const auto h = distance_histogram(f);
    EXPECT_EQ(h.total(), std::uint64_t{1} << ((1u << (n - 1)) - static_cast<unsigned>(n)));
    EXPECT_EQ(h.counts.size(), f.size() + 1);
    EXPECT_EQ(g_bruteforce(f).evaluate(1), BigInt(static_cast<unsigned long>(h.total())));
  }
}

TEST(SearchAtDistance, Examples) {
  const auto x1 = make_linear({3, {1}, false});
  EXPECT_EQ(search_at_distance(x1, 1, 10), (std::vector<FeedbackFunction>{table_of(3, {1, 1, 0, 1})}));
  EXPECT_TRUE(search_at_distance(x1, 2, 10).empty());
  EXPECT_EQ(search_at_distance(x1, 3, 10), (std::vector<FeedbackFunction>{table_of(3, {1, 0, 1, 1})}));
}

TEST(SearchAtDistance, CountsMatchCoefficients) {
  const auto f = make_linear({5, {2}, false});
  const IntPolynomial g = g_bruteforce(f);
  for (std::size_t k = 0; k <= f.size(); ++k) {
    const auto found = search_at_distance(f, k, 100000);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(found.size())), g.coeff(k)) << k;
    for (const auto& h : found) EXPECT_EQ(hamming_distance(f, h), k);
  }
  EXPECT_LE(search_at_distance(f, 7, 3).size(), 3u);
}

TEST(Csv, Listing) {
  std::ostringstream os;
  write_debruijn_csv(os, make_linear({3, {1}, false}), 1);
  EXPECT_EQ(os.str(), "table,weight,distance\n0xb,3,1\n0xd,3,3\n");
}

}  // namespace
}  // namespace dbgf
