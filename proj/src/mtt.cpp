#include "dbgf/mtt.hpp"

#include <sstream>
#include <utility>

#include "dbgf/cycles.hpp"
#include "dbgf/parallel.hpp"

namespace dbgf {

WeightedAdjacency::WeightedAdjacency(const FeedbackFunction& f) : n_(f.order()) {
  if (n_ > kMaxMatrixOrder) {
    throw Error(ErrorKind::order_too_large, "weighted adjacency needs n <= " + std::to_string(kMaxMatrixOrder));
  }
  const std::uint32_t states = 1u << n_;
  const std::uint32_t top = 1u << (n_ - 1);
  one_.resize(states);
  y_.resize(states);
  for (std::uint32_t s = 0; s < states; ++s) {
    one_[s] = step_raw(f, s);
    y_[s] = one_[s] ^ top;
  }
}

EdgeLabel WeightedAdjacency::entry(std::uint32_t s, std::uint32_t t) const {
  if (one_.at(s) == t) return EdgeLabel::one;
  if (y_[s] == t) return EdgeLabel::y;
  return EdgeLabel::zero;
}

std::string WeightedAdjacency::to_text() const {
  std::ostringstream os;
  const auto states = static_cast<std::uint32_t>(dim());
  for (std::uint32_t s = 0; s < states; ++s) {
    for (std::uint32_t t = 0; t < states; ++t) {
      if (t) os << ' ';
      switch (entry(s, t)) {
        case EdgeLabel::zero: os << '0'; break;
        case EdgeLabel::one: os << '1'; break;
        case EdgeLabel::y: os << 'y'; break;
      }
    }
    os << '\n';
  }
  return os.str();
}

WeightedAdjacency weighted_adjacency(const FeedbackFunction& f) { return WeightedAdjacency(f); }

BigInt bareiss_determinant(IntMatrix m) {
  const std::size_t dim = m.dim;
  if (dim == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    if (sgn(m.at(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < dim && sgn(m.at(p, k)) == 0) ++p;
      if (p == dim) return 0;
      for (std::size_t c = k; c < dim; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    const mpz_srcptr pivot = m.at(k, k).get_mpz_t();
    for (std::size_t i = k + 1; i < dim; ++i) {
      const mpz_srcptr lead = m.at(i, k).get_mpz_t();
      for (std::size_t j = k + 1; j < dim; ++j) {
        mpz_ptr cell = m.at(i, j).get_mpz_t();
        mpz_mul(cell, cell, pivot);
        mpz_submul(cell, lead, m.at(k, j).get_mpz_t());
        mpz_divexact(cell, cell, prev.get_mpz_t());
      }
    }
    prev = m.at(k, k);
  }
  BigInt det = m.at(dim - 1, dim - 1);
  if (sign < 0) det = -det;
  return det;
}

IntMatrix reduced_laplacian_at(const WeightedAdjacency& w, const BigInt& y0) {
  const std::size_t dim = w.dim() - 1;
  IntMatrix m{dim, std::vector<BigInt>(dim * dim)};
  const BigInt diag = 1 + y0;
  for (std::uint32_t s = 1; s <= dim; ++s) {
    m.at(s - 1, s - 1) += diag;
    const std::uint32_t t1 = w.one_target(s);
    const std::uint32_t ty = w.y_target(s);
    if (t1 != 0) m.at(s - 1, t1 - 1) -= 1;
    if (ty != 0) m.at(s - 1, ty - 1) -= y0;
  }
  return m;
}

BigInt reduced_determinant_at(const WeightedAdjacency& w, const BigInt& y0) {
  return bareiss_determinant(reduced_laplacian_at(w, y0));
}

IntPolynomial interpolate_consecutive(const std::vector<BigInt>& values) {
  if (values.empty()) return {};
  // Forward differences give the falling-factorial (Newton) coefficients
  // a_k = delta^k f(0) / k!, integers for integer polynomials.
  std::vector<BigInt> diff = values;
  std::vector<BigInt> newton(values.size());
  BigInt factorial = 1;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) {
      factorial *= static_cast<unsigned long>(k);
      for (std::size_t i = 0; i + k < values.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    }
    if (!mpz_divisible_p(diff[0].get_mpz_t(), factorial.get_mpz_t())) {
      throw Error(ErrorKind::inexact_division, "sample values do not come from an integer polynomial");
    }
    mpz_divexact(newton[k].get_mpz_t(), diff[0].get_mpz_t(), factorial.get_mpz_t());
  }
  // Horner in the Newton basis: P = a_0 + x (a_1 + (x - 1)(a_2 + ...)).
  std::vector<BigInt> poly{newton.back()};
  for (std::size_t k = newton.size() - 1; k-- > 0;) {
    // poly <- poly * (x - k) + a_k
    std::vector<BigInt> next(poly.size() + 1);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      mpz_submul_ui(next[i].get_mpz_t(), poly[i].get_mpz_t(), static_cast<unsigned long>(k));
    }
    next[0] += newton[k];
    poly = std::move(next);
  }
  return IntPolynomial(std::move(poly));
}

IntPolynomial reduced_determinant(const WeightedAdjacency& w, unsigned workers) {
  const std::uint64_t points = w.dim() + 1;
  auto parts = map_chunks(points, workers, [&w](std::uint64_t begin, std::uint64_t end) {
    std::vector<BigInt> values;
    for (std::uint64_t y = begin; y < end; ++y) values.push_back(reduced_determinant_at(w, BigInt(static_cast<unsigned long>(y))));
    return values;
  });
  std::vector<BigInt> values;
  values.reserve(points);
  for (auto& part : parts) {
    for (auto& v : part) values.push_back(std::move(v));
  }
  IntPolynomial det = interpolate_consecutive(values);
  // An in-tree has 2^n - 1 edges, each of weight 1 or y.
  if (det.degree() > static_cast<long>(w.dim()) - 1) {
    throw Error(ErrorKind::inexact_division, "reduced determinant exceeds its degree bound");
  }
  return det;
}

IntPolynomial g_mtt(const FeedbackFunction& f, unsigned workers) {
  const WeightedAdjacency w(f);
  const IntPolynomial det = reduced_determinant(w, workers);
  const IntPolynomial one_plus_y{1, 1};
  return det.divide_exact(pow(one_plus_y, (std::size_t{1} << (f.order() - 1)) - 1));
}

CharpolyCheck charpoly_factor_values(const LinearSpec& spec, const BigInt& z0, const BigInt& y0) {
  if (spec.constant) throw Error(ErrorKind::unsupported_spec, "charpoly check needs a zero constant term");
  check_order(spec.n, kMaxCharpolyOrder);
  const WeightedAdjacency w(make_linear(spec));
  const std::size_t dim = w.dim();
  IntMatrix m{dim, std::vector<BigInt>(dim * dim)};
  for (std::uint32_t s = 0; s < dim; ++s) {
    m.at(s, s) += z0;
    m.at(s, w.one_target(s)) -= 1;
    m.at(s, w.y_target(s)) -= y0;
  }

  CharpolyCheck out;
  out.determinant = bareiss_determinant(std::move(m));
  out.cycle_product = 1;
  const BigInt plus = 1 + y0;
  const BigInt minus = 1 - y0;
  const CycleProfile profile = galois_cycles(spec);
  for (const auto& [key, mult] : profile.entries()) {
    const auto [r, k] = key;
    BigInt zr, pr, mk;
    mpz_pow_ui(zr.get_mpz_t(), z0.get_mpz_t(), r);
    mpz_pow_ui(pr.get_mpz_t(), plus.get_mpz_t(), r - k);
    mpz_pow_ui(mk.get_mpz_t(), minus.get_mpz_t(), k);
    const BigInt factor = zr - pr * mk;
    for (std::uint64_t i = 0; i < mult; ++i) out.cycle_product *= factor;
  }
  out.pass = out.determinant == out.cycle_product;
  return out;
}

bool charpoly_factor_check(const LinearSpec& spec, const BigInt& z0, const BigInt& y0) {
  return charpoly_factor_values(spec, z0, y0).pass;
}

}  // namespace dbgf
