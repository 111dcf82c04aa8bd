#ifndef RECIP_SUMMATION_HPP_
#define RECIP_SUMMATION_HPP_

#include <cmath>
#include <complex>

#ifdef __FAST_MATH__
#error fast math enabled, this would negate compensation.
#endif

namespace recip {

/// Kahan-Babuska-Neumaier compensated accumulator. Results depend on the
/// order of additions, so callers feed terms in a fixed order.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      correction_ += (sum_ - t) + x;
    } else {
      correction_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  CompensatedSum& operator+=(const CompensatedSum& other) noexcept {
    *this += other.sum_;
    *this += other.correction_;
    return *this;
  }
  double value() const noexcept { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

class CompensatedComplexSum {
 public:
  CompensatedComplexSum& operator+=(std::complex<double> z) noexcept {
    re_ += z.real();
    im_ += z.imag();
    return *this;
  }
  std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace recip

#endif  // RECIP_SUMMATION_HPP_
