#include "recip/symbolic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace recip {

SymbolicValue::SymbolicValue(Rational coeff, int pi_power, int iota_power)
    : coeff_(std::move(coeff)), pi_power_(pi_power), iota_power_(iota_power) {
  canonicalize();
}

void SymbolicValue::canonicalize() {
  coeff_.canonicalize();
  int m = iota_power_ % 4;
  if (m < 0) m += 4;
  if (m >= 2) {
    coeff_ = -coeff_;
    m -= 2;
  }
  iota_power_ = m;
  if (coeff_ == 0) {
    pi_power_ = 0;
    iota_power_ = 0;
  }
}

std::complex<double> SymbolicValue::numeric() const {
  const double magnitude = coeff_.get_d() * std::pow(std::numbers::pi, pi_power_);
  return iota_power_ == 0 ? std::complex<double>(magnitude, 0.0)
                          : std::complex<double>(0.0, magnitude);
}

SymbolicValue& SymbolicValue::operator*=(const SymbolicValue& rhs) {
  coeff_ *= rhs.coeff_;
  pi_power_ += rhs.pi_power_;
  iota_power_ += rhs.iota_power_;
  canonicalize();
  return *this;
}

SymbolicValue& SymbolicValue::operator*=(const Rational& s) {
  coeff_ *= s;
  canonicalize();
  return *this;
}

SymbolicValue SymbolicValue::operator-() const {
  return SymbolicValue(-coeff_, pi_power_, iota_power_);
}

SymbolicValue SymbolicValue::pow(unsigned exponent) const {
  SymbolicValue out(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

SymbolicValue SymbolicValue::inverse() const {
  if (is_zero()) throw std::domain_error("SymbolicValue: inverse of zero");
  return SymbolicValue(Rational(1) / coeff_, -pi_power_, -iota_power_);
}

std::optional<SymbolicValue> SymbolicValue::try_add(const SymbolicValue& a,
                                                    const SymbolicValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.pi_power_ != b.pi_power_ || a.iota_power_ != b.iota_power_) return std::nullopt;
  return SymbolicValue(a.coeff_ + b.coeff_, a.pi_power_, a.iota_power_);
}

std::string SymbolicValue::to_string() const {
  std::string out = recip::to_string(coeff_);
  if (pi_power_ != 0) out += "*pi^" + std::to_string(pi_power_);
  if (iota_power_ != 0) out += "*i";
  return out;
}

}  // namespace recip
