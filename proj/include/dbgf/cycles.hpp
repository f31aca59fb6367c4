#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dbgf/core.hpp"
#include "dbgf/poly.hpp"

namespace dbgf {

/// Multiset of (cycle length r, ones count d) pairs.
class CycleProfile {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;

  void add(std::uint64_t r, std::uint64_t d, std::uint64_t multiplicity = 1);

  const std::map<Key, std::uint64_t>& entries() const noexcept { return entries_; }
  /// Sum of r over all entries, with multiplicity.
  std::uint64_t total_length() const noexcept;
  std::uint64_t cycle_count() const noexcept;
  /// True for {(1,0), (2^n - 1, 2^{n-1})}: a maximal-period linear recursion.
  bool is_maximal(int n) const;

  friend bool operator==(const CycleProfile&, const CycleProfile&) = default;

 private:
  std::map<Key, std::uint64_t> entries_;
};

std::string to_string(const CycleProfile& profile);

/// Orbits of Fibonacci stepping. Each orbit contributes (length, number of
/// states in it with x_0 = 1).
CycleProfile fibonacci_cycles(const FeedbackFunction& f);

/// One step of the Galois companion map
///   v'_j = l_{j+1} v_0 + v_{j+1}  (j < n-1),   v'_{n-1} = v_0
/// with coordinate j at bit j.
std::uint32_t galois_step(std::uint32_t v, std::uint32_t tap_mask, int n) noexcept;

/// Orbits of the Galois companion map; ones are counted in coordinate n-1.
CycleProfile galois_cycles(const LinearSpec& spec);

/// Tap i becomes tap n-i.
LinearSpec reverse_taps(const LinearSpec& spec);

struct Necklace {
  std::size_t length = 0;
  std::string bits;  // least rotation

  /// Canonical representative of the rotation class of `word`.
  static Necklace canonical(std::string_view word);
  bool is_primitive() const;
};

/// Moebius function mu(k).
int moebius(std::uint64_t k);

/// L(d, i): primitive binary necklaces of length d with i ones.
BigInt primitive_necklace_count(std::uint64_t d, std::uint64_t i);

/// Same count by enumerating all 2^d words; d <= 24.
std::uint64_t primitive_necklace_count_bruteforce(unsigned d, unsigned i);

/// (1/d) sum_{e|d} mu(e) 2^{d/e}: all primitive necklaces of length d.
BigInt primitive_necklace_total(std::uint64_t d);

/// e_{n,i} = sum over d | n of L(d, i).
BigInt e_coefficient(std::uint64_t n, std::uint64_t i);

}  // namespace dbgf
