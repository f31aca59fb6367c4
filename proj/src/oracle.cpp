#include "dbgf/oracle.hpp"

#include <ostream>

#include "dbgf/parallel.hpp"

namespace dbgf {

namespace {

void check_oracle_order(int n) {
  if (n > kMaxOracleOrder) {
    throw Error(ErrorKind::order_too_large,
                "brute force needs n <= " + std::to_string(kMaxOracleOrder) + ", got n = " + std::to_string(n) +
                    "; use the mtt route for single functions or the formula route for linear ones");
  }
  check_order(n);
}

// Tour check on a packed table; n <= 5 keeps everything in one word.
bool packed_is_debruijn(int n, std::uint64_t table) {
  const std::uint32_t states = 1u << n;
  const int top = n - 1;
  std::uint32_t s = 0;
  std::uint32_t len = 0;
  do {
    const std::uint32_t rest = s >> 1;
    const std::uint32_t bit = (s & 1u) ^ static_cast<std::uint32_t>((table >> rest) & 1u);
    s = rest | (bit << top);
    ++len;
  } while (s != 0 && len < states);
  return s == 0 && len == states;
}

}  // namespace

IntPolynomial DistanceHistogram::to_polynomial() const {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (auto v : counts) c.emplace_back(static_cast<unsigned long>(v));
  return IntPolynomial(std::move(c));
}

std::uint64_t DistanceHistogram::total() const {
  std::uint64_t t = 0;
  for (auto v : counts) t += v;
  return t;
}

std::vector<FeedbackFunction> enumerate_debruijn_functions(int n, unsigned workers) {
  check_oracle_order(n);
  const std::uint64_t candidates = std::uint64_t{1} << (std::uint64_t{1} << (n - 1));
  auto parts = map_chunks(candidates, workers, [n](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> found;
    for (std::uint64_t t = begin; t < end; ++t) {
      if (packed_is_debruijn(n, t)) found.push_back(t);
    }
    return found;
  });
  std::vector<FeedbackFunction> out;
  for (const auto& part : parts) {
    for (auto t : part) out.push_back(FeedbackFunction::from_bits(n, t));
  }
  return out;
}

DistanceHistogram distance_histogram(const FeedbackFunction& f, unsigned workers) {
  check_oracle_order(f.order());
  DistanceHistogram h{f.order(), f, std::vector<std::uint64_t>(f.size() + 1, 0)};
  for (const auto& g : enumerate_debruijn_functions(f.order(), workers)) ++h.counts[hamming_distance(f, g)];
  return h;
}

IntPolynomial g_bruteforce(const FeedbackFunction& f, unsigned workers) {
  return distance_histogram(f, workers).to_polynomial();
}

std::vector<FeedbackFunction> search_at_distance(const FeedbackFunction& f, std::size_t k, std::size_t limit,
                                                 unsigned workers) {
  check_oracle_order(f.order());
  std::vector<FeedbackFunction> out;
  for (auto& g : enumerate_debruijn_functions(f.order(), workers)) {
    if (out.size() >= limit) break;
    if (hamming_distance(f, g) == k) out.push_back(std::move(g));
  }
  return out;
}

void write_debruijn_csv(std::ostream& os, const FeedbackFunction& reference, unsigned workers) {
  os << "table,weight,distance\n";
  for (const auto& g : enumerate_debruijn_functions(reference.order(), workers)) {
    os << "0x" << g.to_hex() << "," << g.weight() << "," << hamming_distance(reference, g) << "\n";
  }
}

}  // namespace dbgf
