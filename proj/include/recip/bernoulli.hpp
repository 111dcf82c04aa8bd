#ifndef RECIP_BERNOULLI_HPP_
#define RECIP_BERNOULLI_HPP_

#include "recip/polynomial.hpp"
#include "recip/rational.hpp"

namespace recip {

/// How a 1-periodic function with a jump at the integers is evaluated there.
/// principal: mean of the one-sided limits; left: f(1^-); right: f(0^+).
enum class BoundaryMode { principal, left, right };

/// B_q with the convention B_1 = -1/2. Memoized and thread-safe.
Rational bernoulli_number(unsigned q);

/// The Bernoulli polynomial B_q(x) = sum_j C(q, j) B_j x^(q - j).
struct BernoulliPoly {
  unsigned degree = 0;
  Polynomial poly;
};

BernoulliPoly bernoulli_poly(unsigned q);

/// Cached B_q(x); the reference stays valid for the lifetime of the program.
const Polynomial& bernoulli_polynomial(unsigned q);

/// b_q(x) = B_q({x}); only b_1 is discontinuous, at the integers.
Rational eval_periodic_bernoulli(unsigned q, const Rational& x,
                                 BoundaryMode mode = BoundaryMode::principal);

}  // namespace recip

#endif  // RECIP_BERNOULLI_HPP_
