#include "dbgf/poly.hpp"

#include <algorithm>
#include <sstream>

#include "dbgf/error.hpp"

namespace dbgf {

namespace {

// Below this many terms per operand the schoolbook product wins.
constexpr std::size_t kKroneckerThreshold = 24;

std::size_t max_bits(const std::vector<BigInt>& v) {
  std::size_t bits = 0;
  for (const auto& c : v) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
  return bits;
}

std::vector<BigInt> schoolbook(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

// Kronecker substitution for nonnegative coefficient vectors: pack each
// operand into one big integer with limb-aligned slots, multiply once, unpack.
std::vector<BigInt> kronecker(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  const std::size_t terms = std::min(a.size(), b.size());
  std::size_t slot_bits = max_bits(a) + max_bits(b) + 2;
  for (std::size_t t = terms; t > 1; t >>= 1) ++slot_bits;
  const std::size_t slot_limbs = (slot_bits + 63) / 64;

  auto pack = [slot_limbs](const std::vector<BigInt>& v) {
    std::vector<std::uint64_t> limbs(v.size() * slot_limbs, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      mpz_export(limbs.data() + i * slot_limbs, nullptr, -1, sizeof(std::uint64_t), 0, 0, v[i].get_mpz_t());
    }
    BigInt packed;
    mpz_import(packed.get_mpz_t(), limbs.size(), -1, sizeof(std::uint64_t), 0, 0, limbs.data());
    return packed;
  };

  const BigInt product = pack(a) * pack(b);
  const std::size_t out_terms = a.size() + b.size() - 1;
  std::vector<std::uint64_t> limbs(out_terms * slot_limbs + 1, 0);
  std::size_t written = 0;
  mpz_export(limbs.data(), &written, -1, sizeof(std::uint64_t), 0, 0, product.get_mpz_t());
  std::vector<BigInt> out(out_terms);
  for (std::size_t i = 0; i < out_terms; ++i) {
    mpz_import(out[i].get_mpz_t(), slot_limbs, -1, sizeof(std::uint64_t), 0, 0, limbs.data() + i * slot_limbs);
  }
  return out;
}

void split_signs(const std::vector<BigInt>& v, std::vector<BigInt>& pos, std::vector<BigInt>& neg) {
  pos.assign(v.size(), 0);
  neg.assign(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) > 0) {
      pos[i] = v[i];
    } else {
      neg[i] = -v[i];
    }
  }
}

bool nonnegative(const std::vector<BigInt>& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& c) { return sgn(c) >= 0; });
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

BigInt IntPolynomial::evaluate(const BigInt& y) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= y;
    acc += *it;
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  const auto& x = a.coeffs_;
  const auto& y = b.coeffs_;
  if (x.empty() || y.empty()) return {};
  if (std::min(x.size(), y.size()) < kKroneckerThreshold) return IntPolynomial(schoolbook(x, y));
  if (nonnegative(x) && nonnegative(y)) return IntPolynomial(kronecker(x, y));

  std::vector<BigInt> xp, xn, yp, yn;
  split_signs(x, xp, xn);
  split_signs(y, yp, yn);
  IntPolynomial out(kronecker(xp, yp));
  out += IntPolynomial(kronecker(xn, yn));
  out -= IntPolynomial(kronecker(xp, yn));
  out -= IntPolynomial(kronecker(xn, yp));
  return out;
}

IntPolynomial IntPolynomial::divide_exact(const BigInt& d) const {
  if (sgn(d) == 0) throw Error(ErrorKind::inexact_division, "division by zero");
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t())) {
      throw Error(ErrorKind::inexact_division,
                  "coefficient of y^" + std::to_string(i) + " is not divisible by " + d.get_str());
    }
    mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::inexact_division, "division by the zero polynomial");
  const BigInt& lead = divisor.coeffs_.back();
  if (abs(lead) != 1) throw Error(ErrorKind::domain, "polynomial divisor must have leading coefficient +-1");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw Error(ErrorKind::inexact_division, "nonzero remainder");

  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt q = rem[k + dd] * lead;  // lead is +-1
    if (sgn(q) != 0) {
      for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
    }
    quot[k] = std::move(q);
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (sgn(rem[i]) != 0) throw Error(ErrorKind::inexact_division, "nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    os << BigInt(abs(c)).get_str();
    if (k == 1) os << "*y";
    if (k > 1) os << "*y^" << k;
  }
  return os.str();
}

std::string IntPolynomial::to_pretty_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const BigInt mag = abs(c);
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "y";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

IntPolynomial pow(const IntPolynomial& base, std::size_t e) {
  IntPolynomial result{1};
  IntPolynomial b = base;
  while (e) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

BigInt pow2(std::size_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

IntPolynomial p_poly(std::size_t k) {
  if (k == 0) return IntPolynomial{1};
  // (1+y)^k - (1-y)^k keeps the odd powers, doubled.
  std::vector<BigInt> c(k + 1);
  for (std::size_t j = 1; j <= k; j += 2) c[j] = 2 * binomial(k, j);
  return IntPolynomial(std::move(c));
}

IntPolynomial reciprocal_transform(const IntPolynomial& p, std::size_t m) {
  if (p.degree() > static_cast<long>(m)) {
    throw Error(ErrorKind::degree_exceeds,
                "degree " + std::to_string(p.degree()) + " exceeds window " + std::to_string(m));
  }
  std::vector<BigInt> out(m + 1);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[m - k] = p.coeffs()[k];
  return IntPolynomial(std::move(out));
}

}  // namespace dbgf
