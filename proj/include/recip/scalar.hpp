#ifndef RECIP_SCALAR_HPP_
#define RECIP_SCALAR_HPP_

#include <complex>
#include <variant>

#include "recip/rational.hpp"

namespace recip {

/// Result of a computation that is exact when it can be: an exact rational,
/// a real float (truncated lattice sums) or a complex float (trig families).
using Scalar = std::variant<Rational, double, std::complex<double>>;

inline bool is_exact(const Scalar& s) { return std::holds_alternative<Rational>(s); }

inline std::complex<double> to_complex(const Scalar& s) {
  if (const auto* q = std::get_if<Rational>(&s)) return {q->get_d(), 0.0};
  if (const auto* d = std::get_if<double>(&s)) return {*d, 0.0};
  return std::get<std::complex<double>>(s);
}

/// a + b, staying exact when both sides are exact.
Scalar add(const Scalar& a, const Scalar& b);
Scalar subtract(const Scalar& a, const Scalar& b);
Scalar multiply(const Rational& a, const Scalar& b);

}  // namespace recip

#endif  // RECIP_SCALAR_HPP_
