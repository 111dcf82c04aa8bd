#ifndef RECIP_SYMBOLIC_HPP_
#define RECIP_SYMBOLIC_HPP_

#include <complex>
#include <optional>
#include <string>

#include "recip/rational.hpp"

namespace recip {

/// Exact scalar coeff * pi^pi_power * i^iota_power.
///
/// Canonical form: iota_power is 0 or 1 (i^2 = -1 is folded into the sign of
/// coeff), and the zero value has both powers zero. pi_power may be negative
/// so that Fourier coefficients like -q!/(2 pi i n)^q fit the same type.
class SymbolicValue {
 public:
  SymbolicValue() = default;
  SymbolicValue(Rational coeff, int pi_power = 0, int iota_power = 0);

  const Rational& coeff() const noexcept { return coeff_; }
  int pi_power() const noexcept { return pi_power_; }
  int iota_power() const noexcept { return iota_power_; }

  bool is_zero() const { return coeff_ == 0; }
  /// True when the value is a plain rational (no pi, no i).
  bool is_rational() const { return is_zero() || (pi_power_ == 0 && iota_power_ == 0); }

  std::complex<double> numeric() const;

  SymbolicValue& operator*=(const SymbolicValue& rhs);
  SymbolicValue& operator*=(const Rational& s);
  friend SymbolicValue operator*(SymbolicValue a, const SymbolicValue& b) { return a *= b; }
  friend SymbolicValue operator*(SymbolicValue a, const Rational& s) { return a *= s; }
  friend SymbolicValue operator*(const Rational& s, SymbolicValue a) { return a *= s; }
  SymbolicValue operator-() const;

  /// Raises to a nonnegative integer power.
  SymbolicValue pow(unsigned exponent) const;
  /// Multiplicative inverse. Throws std::domain_error for zero.
  SymbolicValue inverse() const;

  /// Sum of two like terms (same pi and i powers, or one side zero);
  /// std::nullopt otherwise.
  static std::optional<SymbolicValue> try_add(const SymbolicValue& a, const SymbolicValue& b);

  friend bool operator==(const SymbolicValue& a, const SymbolicValue& b) {
    return a.coeff_ == b.coeff_ && a.pi_power_ == b.pi_power_ && a.iota_power_ == b.iota_power_;
  }

  std::string to_string() const;

 private:
  void canonicalize();

  Rational coeff_{0};
  int pi_power_ = 0;
  int iota_power_ = 0;
};

}  // namespace recip

#endif  // RECIP_SYMBOLIC_HPP_
