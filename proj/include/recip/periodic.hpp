#ifndef RECIP_PERIODIC_HPP_
#define RECIP_PERIODIC_HPP_

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recip/bernoulli.hpp"
#include "recip/polynomial.hpp"
#include "recip/rational.hpp"
#include "recip/scalar.hpp"
#include "recip/symbolic.hpp"

namespace recip {

/// A 1-periodic function that is absolutely continuous on (0, 1) and may
/// jump at the integers.
class PeriodicFn {
 public:
  enum class Kind { bernoulli, power_frac, shifted_frac, poly_frac, sin, cos, exp_e };

  /// b_q(x) = B_q({x}).
  static PeriodicFn bernoulli(unsigned q);
  /// {x}^q, q >= 1.
  static PeriodicFn power_frac(unsigned q);
  /// {x} - a with 0 < a < 1.
  static PeriodicFn shifted_frac(const Rational& a);
  /// F({x}) for the polynomial with the given coefficients (constant first).
  static PeriodicFn poly_frac(std::vector<Rational> coefficients);
  static PeriodicFn sin();
  static PeriodicFn cos();
  /// e(x) = exp(2 pi i x).
  static PeriodicFn exp_e();

  Kind kind() const noexcept { return kind_; }
  unsigned q() const noexcept { return q_; }
  const Rational& shift() const noexcept { return shift_; }
  const std::vector<Rational>& poly_coefficients() const noexcept { return poly_; }

  /// True for the families given by a rational polynomial in {x}.
  bool is_polynomial_family() const noexcept;

  friend bool operator==(const PeriodicFn& a, const PeriodicFn& b);

 private:
  PeriodicFn() = default;

  Kind kind_ = Kind::bernoulli;
  unsigned q_ = 0;
  Rational shift_{0};
  std::vector<Rational> poly_;
};

/// The polynomial F with f(x) = F({x}). Throws std::invalid_argument for
/// the trigonometric families.
Polynomial underlying_polynomial(const PeriodicFn& f);

/// Exact value at a rational point; throws std::invalid_argument for trig families.
Rational eval_exact(const PeriodicFn& f, const Rational& x,
                    BoundaryMode mode = BoundaryMode::principal);
/// Double-precision value; trig families are reduced with {x} first.
std::complex<double> eval_numeric(const PeriodicFn& f, const Rational& x,
                                  BoundaryMode mode = BoundaryMode::principal);
/// Exact for polynomial families, complex float for sin/cos/e.
Scalar eval(const PeriodicFn& f, const Rational& x, BoundaryMode mode = BoundaryMode::principal);

struct JumpData {
  Rational delta;        // f(1^-) - f(0^+)
  Rational left_value;   // f(1^-)
  Rational right_value;  // f(0^+)
};

JumpData jump(const PeriodicFn& f);

/// prod_j f_j(1^-) - prod_j f_j(0^+). Throws std::invalid_argument when empty.
Rational jump_product(std::span<const PeriodicFn> fvec);

/// Which value to use for the jump ratio when f is continuous at 0.
enum class ContinuityBranch {
  none,           // refuse: f must jump
  geometric_sum,  // the plain sum formula, (r + 1) f(0)^r
  shifted_limit,  // the limit along shifted functions, -(r + 1) f(0)^(r + 1)
};

/// sum_{k=0}^{r} f(1^-)^k f(0^+)^(r-k), the ratio of the product jump to the
/// single jump. Throws std::domain_error for constant f, or when f does not
/// jump and no continuity branch is chosen.
Rational jump_ratio_single(const PeriodicFn& f, unsigned r,
                           ContinuityBranch branch = ContinuityBranch::none);

/// Expansion of x^q in the Bernoulli basis: pairs (s, coefficient of B_s).
std::vector<std::pair<unsigned, Rational>> power_to_bernoulli(unsigned q);

/// Coefficients beta_s with F(x) = sum_s beta_s B_s(x).
std::vector<Rational> to_bernoulli_basis(const Polynomial& poly);

/// n-th Fourier coefficient of f as a single symbolic term. Families whose
/// coefficient mixes different powers of pi (PowerFrac q >= 2, general
/// PolyFrac) throw std::domain_error; use fourier_coeff_expansion for them.
SymbolicValue fourier_coeff(const PeriodicFn& f, long n);

/// n-th Fourier coefficient as a list of unlike symbolic terms whose sum is
/// the coefficient. Works for every family.
std::vector<SymbolicValue> fourier_coeff_expansion(const PeriodicFn& f, long n);

/// Descriptor grammar: "b:q", "pow:q", "shift:p/q", "poly:c0,c1,...", "sin",
/// "cos", "e".
PeriodicFn parse_periodic_fn(std::string_view text);
std::string to_string(const PeriodicFn& f);

/// Comma-separated descriptor list; coefficients following "poly:" belong to
/// that descriptor until the next named descriptor.
std::vector<PeriodicFn> parse_periodic_fn_list(std::string_view text);
std::string to_string(std::span<const PeriodicFn> fvec);

}  // namespace recip

#endif  // RECIP_PERIODIC_HPP_
