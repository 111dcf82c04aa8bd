#ifndef RECIP_POLYNOMIAL_HPP_
#define RECIP_POLYNOMIAL_HPP_

#include <cstddef>
#include <vector>

#include "recip/rational.hpp"

namespace recip {

/// Dense univariate polynomial with exact rational coefficients, stored from
/// the constant term upwards. Trailing zeros are kept as given; degree()
/// ignores them.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(unsigned degree, const Rational& c = Rational(1));

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  /// Degree of the highest nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  Rational coefficient(std::size_t i) const;

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  Rational integrate(const Rational& lo, const Rational& hi) const;

  /// p(scale * x + shift).
  Polynomial compose_affine(const Rational& scale, const Rational& shift) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  /// Equality up to trailing zeros.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Rational> coeffs_;
};

/// Binomial coefficient C(n, k) as an exact integer (0 when k > n).
Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace recip

#endif  // RECIP_POLYNOMIAL_HPP_
