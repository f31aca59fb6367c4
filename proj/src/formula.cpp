#include "dbgf/formula.hpp"

#include <algorithm>

namespace dbgf {

namespace {

// Multiplies smallest-degree factors first so operand sizes stay balanced.
IntPolynomial balanced_product(std::vector<IntPolynomial> factors) {
  if (factors.empty()) return IntPolynomial{1};
  auto larger = [](const IntPolynomial& a, const IntPolynomial& b) { return a.degree() > b.degree(); };
  std::vector<IntPolynomial> heap = std::move(factors);
  std::make_heap(heap.begin(), heap.end(), larger);
  while (heap.size() > 1) {
    std::pop_heap(heap.begin(), heap.end(), larger);
    IntPolynomial a = std::move(heap.back());
    heap.pop_back();
    std::pop_heap(heap.begin(), heap.end(), larger);
    IntPolynomial b = std::move(heap.back());
    heap.pop_back();
    heap.push_back(a * b);
    std::push_heap(heap.begin(), heap.end(), larger);
  }
  return std::move(heap.front());
}

}  // namespace

IntPolynomial g_from_profile(int n, const CycleProfile& profile) {
  // p_d(y) = 2y * q_d(y^2) with q_d(u) = sum over odd j of C(d, j) u^{(j-1)/2};
  // multiplying the q_d halves the operand lengths.
  std::vector<IntPolynomial> factors;
  std::uint64_t odd_factors = 0;
  for (const auto& [key, mult] : profile.entries()) {
    const auto d = key.second;
    if (d == 0) continue;
    std::vector<BigInt> q((d + 1) / 2);
    BigInt c = 1;  // C(d, j), advanced along the row
    for (std::uint64_t j = 0; j < d; ++j) {
      c *= static_cast<unsigned long>(d - j);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j + 1));
      if (j % 2 == 0) q[j / 2] = c;
    }
    const IntPolynomial qd(std::move(q));
    for (std::uint64_t m = 0; m < mult; ++m) factors.push_back(qd);
    odd_factors += mult;
  }
  const IntPolynomial product = balanced_product(std::move(factors));
  std::vector<BigInt> expanded(2 * product.coeffs().size() + odd_factors);
  for (std::size_t k = 0; k < product.coeffs().size(); ++k) expanded[2 * k + odd_factors] = product.coeffs()[k];
  IntPolynomial g(std::move(expanded));
  g *= pow2(odd_factors);
  return g.divide_exact(pow2(static_cast<std::size_t>(n)));
}

IntPolynomial g_linear(const LinearSpec& spec) {
  if (spec.constant) {
    throw Error(ErrorKind::unsupported_spec, "g_linear needs a zero constant term; use g_complement");
  }
  return g_from_profile(spec.n, fibonacci_cycles(make_linear(spec)));
}

IntPolynomial g_complement(const LinearSpec& spec) {
  if (!spec.constant) {
    throw Error(ErrorKind::unsupported_spec, "g_complement needs a constant term of one");
  }
  LinearSpec flipped = spec;
  flipped.constant = false;
  return reciprocal_transform(g_linear(flipped), std::size_t{1} << (spec.n - 1));
}

IntPolynomial g_any_linear(const LinearSpec& spec) {
  return spec.constant ? g_complement(spec) : g_linear(spec);
}

IntPolynomial g_zero(int n) {
  if (n < 2) throw Error(ErrorKind::invalid_order, "order must be at least 2");
  const auto order = static_cast<std::uint64_t>(n);
  std::vector<IntPolynomial> factors;
  for (std::uint64_t i = 1; i <= order; ++i) {
    const BigInt e = e_coefficient(order, i);
    if (sgn(e) == 0) continue;
    factors.push_back(pow(p_poly(i), e.get_ui()));
  }
  return balanced_product(std::move(factors)).divide_exact(pow2(order));
}

IntPolynomial g_fryers(int n) {
  if (n < 2) throw Error(ErrorKind::invalid_order, "order must be at least 2");
  return p_poly(std::size_t{1} << (n - 1)).divide_exact(pow2(static_cast<std::size_t>(n)));
}

}  // namespace dbgf
