#include "dbgf/core.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace dbgf {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_order: return "invalid-order";
    case ErrorKind::order_mismatch: return "order-mismatch";
    case ErrorKind::order_too_large: return "order-too-large";
    case ErrorKind::not_debruijn: return "not-a-debruijn-function";
    case ErrorKind::inexact_division: return "inexact-division";
    case ErrorKind::domain: return "domain";
    case ErrorKind::unsupported_spec: return "unsupported-spec";
    case ErrorKind::degree_exceeds: return "degree-exceeds-m";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

void check_order(int n, int max_order) {
  if (n < 2) {
    throw Error(ErrorKind::invalid_order, "order must be at least 2, got " + std::to_string(n));
  }
  if (n > max_order) {
    throw Error(ErrorKind::order_too_large,
                "order " + std::to_string(n) + " exceeds the limit " + std::to_string(max_order));
  }
}

FeedbackFunction::FeedbackFunction(int n) : n_(n) {
  check_order(n);
  table_.assign(std::size_t{1} << (n - 1), 0);
}

FeedbackFunction::FeedbackFunction(int n, std::vector<std::uint8_t> table)
    : n_(n), table_(std::move(table)) {
  check_order(n);
  if (table_.size() != (std::size_t{1} << (n - 1))) {
    throw Error(ErrorKind::domain, "truth table of order " + std::to_string(n) + " needs " +
                                       std::to_string(std::size_t{1} << (n - 1)) + " entries");
  }
  for (auto v : table_) {
    if (v > 1) throw Error(ErrorKind::domain, "truth table entries must be 0 or 1");
  }
}

FeedbackFunction FeedbackFunction::from_bits(int n, std::uint64_t bits) {
  check_order(n, 7);
  const std::size_t len = std::size_t{1} << (n - 1);
  if (len < 64 && (bits >> len) != 0) {
    throw Error(ErrorKind::domain, "table bits beyond 2^(n-1) entries are set");
  }
  std::vector<std::uint8_t> table(len);
  for (std::size_t i = 0; i < len; ++i) table[i] = static_cast<std::uint8_t>((bits >> i) & 1u);
  return FeedbackFunction(n, std::move(table));
}

FeedbackFunction FeedbackFunction::from_hex(int n, std::string_view hex) {
  check_order(n);
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw Error(ErrorKind::parse, "empty hex truth table");
  const std::size_t len = std::size_t{1} << (n - 1);
  std::vector<std::uint8_t> table(len, 0);
  std::size_t bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else {
      throw Error(ErrorKind::parse, std::string("invalid hex digit '") + *it + "'");
    }
    for (int b = 0; b < 4; ++b, ++bit) {
      const auto v = static_cast<std::uint8_t>((nibble >> b) & 1);
      if (bit < len) {
        table[bit] = v;
      } else if (v) {
        throw Error(ErrorKind::parse, "hex table has bits beyond 2^(n-1) entries");
      }
    }
  }
  return FeedbackFunction(n, std::move(table));
}

std::size_t FeedbackFunction::weight() const noexcept {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), std::uint8_t{1}));
}

std::string FeedbackFunction::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = (table_.size() + 3) / 4;
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t i = 4 * d + static_cast<std::size_t>(b);
      if (i < table_.size()) nibble |= table_[i] << b;
    }
    out[digits - 1 - d] = kDigits[nibble];
  }
  return out;
}

std::uint64_t FeedbackFunction::to_bits() const {
  if (n_ > 7) throw Error(ErrorKind::order_too_large, "packed tables need n <= 7");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < table_.size(); ++i) bits |= std::uint64_t{table_[i]} << i;
  return bits;
}

void LinearSpec::validate() const {
  check_order(n);
  for (int t : taps) {
    if (t < 1 || t > n - 1) {
      throw Error(ErrorKind::domain,
                  "tap " + std::to_string(t) + " outside [1, " + std::to_string(n - 1) + "]");
    }
  }
}

std::uint32_t LinearSpec::tap_mask() const {
  validate();
  std::uint32_t mask = 0;
  for (int t : taps) mask |= 1u << (t - 1);
  return mask;
}

LinearSpec LinearSpec::from_mask(int n, std::uint32_t mask, bool constant) {
  LinearSpec spec{n, {}, constant};
  for (int i = 1; i < n; ++i) {
    if (mask & (1u << (i - 1))) spec.taps.push_back(i);
  }
  spec.validate();
  if ((mask >> (n - 1)) != 0) throw Error(ErrorKind::domain, "tap mask wider than n-1 bits");
  return spec;
}

std::string describe(const LinearSpec& spec) {
  std::ostringstream os;
  bool first = true;
  if (spec.constant) {
    os << "1";
    first = false;
  }
  auto taps = spec.taps;
  std::sort(taps.begin(), taps.end());
  for (int t : taps) {
    os << (first ? "" : " + ") << "x" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FeedbackFunction make_linear(const LinearSpec& spec) {
  const std::uint32_t mask = spec.tap_mask();
  const std::size_t len = std::size_t{1} << (spec.n - 1);
  std::vector<std::uint8_t> table(len);
  for (std::size_t idx = 0; idx < len; ++idx) {
    const auto parity = static_cast<std::uint8_t>(std::popcount(static_cast<std::uint32_t>(idx) & mask) & 1);
    table[idx] = static_cast<std::uint8_t>(parity ^ (spec.constant ? 1 : 0));
  }
  return FeedbackFunction(spec.n, std::move(table));
}

StateWord step(const FeedbackFunction& f, StateWord s) {
  if (s.value >> f.order()) {
    throw Error(ErrorKind::domain, "state word wider than the register");
  }
  return StateWord{step_raw(f, s.value)};
}

bool is_debruijn(const FeedbackFunction& f) {
  const std::uint64_t states = std::uint64_t{1} << f.order();
  std::uint32_t s = step_raw(f, 0);
  std::uint64_t len = 1;
  while (s != 0 && len < states) {
    s = step_raw(f, s);
    ++len;
  }
  return s == 0 && len == states;
}

std::vector<std::uint8_t> debruijn_sequence(const FeedbackFunction& f) {
  if (!is_debruijn(f)) {
    throw Error(ErrorKind::not_debruijn, "function 0x" + f.to_hex() + " does not generate a De Bruijn sequence");
  }
  const std::size_t states = std::size_t{1} << f.order();
  std::vector<std::uint8_t> seq;
  seq.reserve(states);
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < states; ++i) {
    seq.push_back(static_cast<std::uint8_t>(s & 1u));
    s = step_raw(f, s);
  }
  return seq;
}

std::size_t hamming_distance(const FeedbackFunction& f, const FeedbackFunction& g) {
  if (f.order() != g.order()) {
    throw Error(ErrorKind::order_mismatch, "cannot compare functions of order " +
                                               std::to_string(f.order()) + " and " + std::to_string(g.order()));
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < f.size(); ++i) d += f.table()[i] != g.table()[i];
  return d;
}

std::string bits_to_string(std::span<const std::uint8_t> bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace dbgf
