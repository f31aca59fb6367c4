#include "dbgf/cycles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace dbgf {

void CycleProfile::add(std::uint64_t r, std::uint64_t d, std::uint64_t multiplicity) {
  if (r == 0 || d > r) throw Error(ErrorKind::domain, "cycle entry needs 0 <= d <= r and r > 0");
  entries_[{r, d}] += multiplicity;
}

std::uint64_t CycleProfile::total_length() const noexcept {
  std::uint64_t total = 0;
  for (const auto& [key, mult] : entries_) total += key.first * mult;
  return total;
}

std::uint64_t CycleProfile::cycle_count() const noexcept {
  std::uint64_t total = 0;
  for (const auto& [key, mult] : entries_) total += mult;
  return total;
}

bool CycleProfile::is_maximal(int n) const {
  const std::uint64_t states = std::uint64_t{1} << n;
  CycleProfile expected;
  expected.add(1, 0);
  expected.add(states - 1, states / 2);
  return *this == expected;
}

std::string to_string(const CycleProfile& profile) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [key, mult] : profile.entries()) {
    os << (first ? "" : ", ") << "(" << key.first << "," << key.second << ")";
    if (mult > 1) os << "x" << mult;
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

template <typename Step, typename Ones>
CycleProfile walk_orbits(int n, Step next, Ones is_one) {
  const std::size_t states = std::size_t{1} << n;
  std::vector<bool> seen(states, false);
  CycleProfile profile;
  for (std::uint32_t start = 0; start < states; ++start) {
    if (seen[start]) continue;
    std::uint64_t r = 0;
    std::uint64_t d = 0;
    std::uint32_t s = start;
    do {
      seen[s] = true;
      ++r;
      d += is_one(s) ? 1 : 0;
      s = next(s);
    } while (s != start);
    profile.add(r, d);
  }
  return profile;
}

}  // namespace

CycleProfile fibonacci_cycles(const FeedbackFunction& f) {
  return walk_orbits(
      f.order(), [&f](std::uint32_t s) { return step_raw(f, s); },
      [](std::uint32_t s) { return (s & 1u) != 0; });
}

std::uint32_t galois_step(std::uint32_t v, std::uint32_t tap_mask, int n) noexcept {
  const std::uint32_t v0 = v & 1u;
  std::uint32_t next = v >> 1;
  if (v0) next ^= tap_mask;
  next |= v0 << (n - 1);
  return next;
}

CycleProfile galois_cycles(const LinearSpec& spec) {
  if (spec.constant) {
    throw Error(ErrorKind::unsupported_spec, "Galois stepping needs a zero constant term");
  }
  check_order(spec.n);
  const std::uint32_t mask = spec.tap_mask();
  const int n = spec.n;
  const std::uint32_t last = 1u << (n - 1);
  return walk_orbits(
      n, [mask, n](std::uint32_t v) { return galois_step(v, mask, n); },
      [last](std::uint32_t v) { return (v & last) != 0; });
}

LinearSpec reverse_taps(const LinearSpec& spec) {
  if (spec.constant) throw Error(ErrorKind::unsupported_spec, "tap reversal needs a zero constant term");
  spec.validate();
  LinearSpec out{spec.n, {}, false};
  for (int t : spec.taps) out.taps.push_back(spec.n - t);
  std::sort(out.taps.begin(), out.taps.end());
  return out;
}

Necklace Necklace::canonical(std::string_view word) {
  std::string best(word);
  std::string doubled = std::string(word) + std::string(word);
  for (std::size_t k = 1; k < word.size(); ++k) {
    std::string_view rot(doubled.data() + k, word.size());
    if (rot < best) best.assign(rot);
  }
  return Necklace{word.size(), std::move(best)};
}

bool Necklace::is_primitive() const {
  for (std::size_t p = 1; p < length; ++p) {
    if (length % p != 0) continue;
    bool periodic = true;
    for (std::size_t j = p; j < length && periodic; ++j) periodic = bits[j] == bits[j - p];
    if (periodic) return false;
  }
  return true;
}

int moebius(std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::domain, "moebius(0) is undefined");
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    mu = -mu;
  }
  if (k > 1) mu = -mu;
  return mu;
}

BigInt primitive_necklace_count(std::uint64_t d, std::uint64_t i) {
  if (d == 0) throw Error(ErrorKind::domain, "necklace length must be positive");
  if (i > d) throw Error(ErrorKind::domain, "ones count exceeds necklace length");
  // Divisors of gcd(d, i) are exactly the e with e | d, e | i, e | d - i.
  const std::uint64_t g = std::gcd(d, i);
  BigInt sum = 0;
  for (std::uint64_t e = 1; e <= g; ++e) {
    if (g % e) continue;
    const int mu = moebius(e);
    if (mu == 0) continue;
    const BigInt term = binomial(static_cast<unsigned long>(d / e), static_cast<unsigned long>(i / e));
    if (mu > 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum / BigInt(static_cast<unsigned long>(d));
}

std::uint64_t primitive_necklace_count_bruteforce(unsigned d, unsigned i) {
  if (d == 0 || d > 24) throw Error(ErrorKind::domain, "brute-force necklace count needs 1 <= d <= 24");
  if (i > d) throw Error(ErrorKind::domain, "ones count exceeds necklace length");
  const std::uint32_t full = (1u << d) - 1;
  auto rotate = [d, full](std::uint32_t w) { return ((w >> 1) | ((w & 1u) << (d - 1))) & full; };
  std::uint64_t count = 0;
  for (std::uint32_t w = 0; w <= full; ++w) {
    if (static_cast<unsigned>(std::popcount(w)) != i) continue;
    // w represents its class when it is the least rotation; it is primitive
    // when no nontrivial rotation fixes it.
    bool least = true;
    bool primitive = true;
    std::uint32_t r = w;
    for (unsigned k = 1; k < d; ++k) {
      r = rotate(r);
      if (r < w) {
        least = false;
        break;
      }
      if (r == w) primitive = false;
    }
    if (least && primitive) ++count;
  }
  return count;
}

BigInt primitive_necklace_total(std::uint64_t d) {
  if (d == 0) throw Error(ErrorKind::domain, "necklace length must be positive");
  BigInt sum = 0;
  for (std::uint64_t e = 1; e <= d; ++e) {
    if (d % e) continue;
    const int mu = moebius(e);
    if (mu > 0) sum += pow2(d / e);
    if (mu < 0) sum -= pow2(d / e);
  }
  return sum / BigInt(static_cast<unsigned long>(d));
}

BigInt e_coefficient(std::uint64_t n, std::uint64_t i) {
  if (n == 0) throw Error(ErrorKind::domain, "order must be positive");
  if (i > n) throw Error(ErrorKind::domain, "ones count exceeds order");
  BigInt sum = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0 && i <= d) sum += primitive_necklace_count(d, i);
  }
  return sum;
}

}  // namespace dbgf
