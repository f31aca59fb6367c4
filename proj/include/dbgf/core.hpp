#pragma once

// Feedback functions of binary shift registers of the shape
//   x_n = x_0 + g(x_{n-1}, ..., x_1)
// stored as truth tables, together with Fibonacci stepping on n-bit states.
//
// Bit conventions:
//   state word:  x_i sits at binary place i (x_0 is the least significant bit)
//   table index: x_i sits at binary place i-1

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dbgf/error.hpp"

namespace dbgf {

/// Largest order accepted by stepping and cycle walks.
inline constexpr int kMaxOrder = 24;

class FeedbackFunction {
 public:
  /// All-zero function of order n.
  explicit FeedbackFunction(int n);
  FeedbackFunction(int n, std::vector<std::uint8_t> table);

  /// Table given as the low 2^{n-1} bits of `bits`; needs n <= 7.
  static FeedbackFunction from_bits(int n, std::uint64_t bits);
  /// Lowercase or uppercase hex, optional "0x" prefix, index 0 in the LSB.
  static FeedbackFunction from_hex(int n, std::string_view hex);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  std::span<const std::uint8_t> table() const noexcept { return table_; }
  std::uint8_t operator()(std::uint32_t index) const { return table_[index]; }

  /// Number of ones in the truth table.
  std::size_t weight() const noexcept;
  std::string to_hex() const;
  /// Packed table; only valid for n <= 7.
  std::uint64_t to_bits() const;

  friend bool operator==(const FeedbackFunction&, const FeedbackFunction&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

struct StateWord {
  std::uint32_t value = 0;
  friend bool operator==(StateWord, StateWord) = default;
};

struct LinearSpec {
  int n = 0;
  std::vector<int> taps;  // indices i in [1, n-1] with l_i = 1, ascending
  bool constant = false;

  /// Throws if the order or a tap index is out of range.
  void validate() const;
  /// Taps packed so that tap i sits at bit i-1 (the truth-table index layout).
  std::uint32_t tap_mask() const;
  static LinearSpec from_mask(int n, std::uint32_t mask, bool constant = false);

  friend bool operator==(const LinearSpec&, const LinearSpec&) = default;
};

/// Human-readable form, e.g. "1 + x1 + x3" or "0".
std::string describe(const LinearSpec& spec);

void check_order(int n, int max_order = kMaxOrder);

FeedbackFunction make_linear(const LinearSpec& spec);

inline std::uint32_t step_raw(const FeedbackFunction& f, std::uint32_t s) noexcept {
  const int n = f.order();
  const std::uint32_t rest = s >> 1;
  const std::uint32_t top = (s & 1u) ^ f(rest);
  return rest | (top << (n - 1));
}

StateWord step(const FeedbackFunction& f, StateWord s);

bool is_debruijn(const FeedbackFunction& f);

/// One period read from x_0 along the tour from state 0.
std::vector<std::uint8_t> debruijn_sequence(const FeedbackFunction& f);

std::size_t hamming_distance(const FeedbackFunction& f, const FeedbackFunction& g);

std::string bits_to_string(std::span<const std::uint8_t> bits);

}  // namespace dbgf
