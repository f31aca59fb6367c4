#pragma once

// Exhaustive ground truth over every feedback function of a small order.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dbgf/core.hpp"
#include "dbgf/poly.hpp"

namespace dbgf {

inline constexpr int kMaxOracleOrder = 5;

struct DistanceHistogram {
  int n = 0;
  FeedbackFunction reference{2};
  std::vector<std::uint64_t> counts;  // counts[k] = N(reference; k)

  IntPolynomial to_polynomial() const;
  std::uint64_t total() const;
};

/// Every f of order n that generates a De Bruijn sequence, in ascending
/// packed-table order. `workers` = 0 uses all cores; the result does not
/// depend on the worker count.
std::vector<FeedbackFunction> enumerate_debruijn_functions(int n, unsigned workers = 0);

DistanceHistogram distance_histogram(const FeedbackFunction& f, unsigned workers = 0);

/// G(f; y) by direct enumeration.
IntPolynomial g_bruteforce(const FeedbackFunction& f, unsigned workers = 0);

/// Up to `limit` De Bruijn functions at Hamming distance k from f, ascending.
std::vector<FeedbackFunction> search_at_distance(const FeedbackFunction& f, std::size_t k, std::size_t limit,
                                                 unsigned workers = 0);

/// CSV rows "table,weight,distance" for every De Bruijn function of f's order.
void write_debruijn_csv(std::ostream& os, const FeedbackFunction& reference, unsigned workers = 0);

}  // namespace dbgf
