#pragma once

// Weighted De Bruijn graph and the Matrix Tree route to G(f; y).

#include <cstdint>
#include <string>
#include <vector>

#include "dbgf/core.hpp"
#include "dbgf/poly.hpp"

namespace dbgf {

inline constexpr int kMaxMatrixOrder = 12;
inline constexpr int kMaxCharpolyOrder = 8;

enum class EdgeLabel : std::uint8_t { zero, one, y };

/// W_{f,n}: row s, column t holds the label of edge s -> t. Every state has
/// one out-edge labelled 1 (the f-consistent successor) and one labelled y.
class WeightedAdjacency {
 public:
  explicit WeightedAdjacency(const FeedbackFunction& f);

  int order() const noexcept { return n_; }
  std::size_t dim() const noexcept { return one_.size(); }
  std::uint32_t one_target(std::uint32_t s) const { return one_[s]; }
  std::uint32_t y_target(std::uint32_t s) const { return y_[s]; }
  EdgeLabel entry(std::uint32_t s, std::uint32_t t) const;

  /// Whitespace-separated grid of 0 / 1 / y, rows = sources ascending.
  std::string to_text() const;

 private:
  int n_;
  std::vector<std::uint32_t> one_;
  std::vector<std::uint32_t> y_;
};

WeightedAdjacency weighted_adjacency(const FeedbackFunction& f);

/// Dense square integer matrix in row-major order.
struct IntMatrix {
  std::size_t dim = 0;
  std::vector<BigInt> data;

  BigInt& at(std::size_t r, std::size_t c) { return data[r * dim + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

/// Fraction-free Gaussian elimination; consumes its argument.
BigInt bareiss_determinant(IntMatrix m);

/// ((1+y)I - W) at y = y0 with the row and column of state 0 removed.
IntMatrix reduced_laplacian_at(const WeightedAdjacency& w, const BigInt& y0);

/// Integer value of the reduced determinant at one point.
BigInt reduced_determinant_at(const WeightedAdjacency& w, const BigInt& y0);

/// Sum over in-trees rooted at 0 of their edge-weight products, as a
/// polynomial in y. Evaluated at 2^n + 1 points and interpolated.
IntPolynomial reduced_determinant(const WeightedAdjacency& w, unsigned workers = 0);

/// Polynomial through (0, values[0]), (1, values[1]), ... exactly; throws
/// inexact_division if the data do not come from an integer polynomial.
IntPolynomial interpolate_consecutive(const std::vector<BigInt>& values);

/// G(f; y) for any f: reduced determinant divided by (1+y)^{2^{n-1}-1}.
IntPolynomial g_mtt(const FeedbackFunction& f, unsigned workers = 0);

struct CharpolyCheck {
  BigInt determinant;    // det(z0 I - W) at y = y0
  BigInt cycle_product;  // prod over Galois cycles (r,k) of z0^r - (1+y0)^{r-k} (1-y0)^k
  bool pass = false;
};

CharpolyCheck charpoly_factor_values(const LinearSpec& spec, const BigInt& z0, const BigInt& y0);

bool charpoly_factor_check(const LinearSpec& spec, const BigInt& z0, const BigInt& y0);

}  // namespace dbgf
