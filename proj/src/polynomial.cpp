#include "recip/polynomial.hpp"

#include <algorithm>
#include <utility>

namespace recip {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

int Polynomial::degree() const {
  for (std::size_t i = coeffs_.size(); i > 0; --i) {
    if (coeffs_[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

Rational Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = coeffs_.size(); i > 0; --i) {
    acc *= x;
    acc += coeffs_[i - 1];
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial({Rational(0)});
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / static_cast<unsigned long>(i + 1);
  }
  return Polynomial(std::move(out));
}

Rational Polynomial::integrate(const Rational& lo, const Rational& hi) const {
  const Polynomial anti = antiderivative();
  return anti(hi) - anti(lo);
}

Polynomial Polynomial::compose_affine(const Rational& scale, const Rational& shift) const {
  // Horner in polynomial arithmetic: acc = acc * (scale x + shift) + c_i.
  std::vector<Rational> acc;
  acc.reserve(coeffs_.size());
  for (std::size_t i = coeffs_.size(); i > 0; --i) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t j = 0; j < acc.size(); ++j) {
      next[j] += acc[j] * shift;
      next[j + 1] += acc[j] * scale;
    }
    next[0] += coeffs_[i - 1];
    acc = std::move(next);
  }
  if (acc.empty()) acc.emplace_back(0);
  return Polynomial(std::move(acc));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.coeffs_.empty() || rhs.coeffs_.empty()) return Polynomial({Rational(0)});
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coefficient(i) != b.coefficient(i)) return false;
  }
  return true;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  if (k > n) return Integer(0);
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace recip
