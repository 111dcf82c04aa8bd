#include "recip/scalar.hpp"

namespace recip {

namespace {

bool is_real(const Scalar& s) { return !std::holds_alternative<std::complex<double>>(s); }

}  // namespace

Scalar add(const Scalar& a, const Scalar& b) {
  if (is_exact(a) && is_exact(b)) return Rational(std::get<Rational>(a) + std::get<Rational>(b));
  if (is_real(a) && is_real(b)) return to_complex(a).real() + to_complex(b).real();
  return to_complex(a) + to_complex(b);
}

Scalar subtract(const Scalar& a, const Scalar& b) {
  if (is_exact(a) && is_exact(b)) return Rational(std::get<Rational>(a) - std::get<Rational>(b));
  if (is_real(a) && is_real(b)) return to_complex(a).real() - to_complex(b).real();
  return to_complex(a) - to_complex(b);
}

Scalar multiply(const Rational& a, const Scalar& b) {
  if (const auto* q = std::get_if<Rational>(&b)) return Rational(a * *q);
  if (const auto* d = std::get_if<double>(&b)) return a.get_d() * *d;
  return a.get_d() * std::get<std::complex<double>>(b);
}

}  // namespace recip
