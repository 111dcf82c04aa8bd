#ifndef RECIP_DEDEKIND_HPP_
#define RECIP_DEDEKIND_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "recip/periodic.hpp"
#include "recip/rational.hpp"
#include "recip/scalar.hpp"
#include "recip/symbolic.hpp"

namespace recip {

/// nu = (nu_0, ..., nu_r): pairwise distinct, pairwise coprime positive
/// integers. The invariants are checked once, on construction.
class NuVector {
 public:
  /// Throws std::invalid_argument when an invariant fails.
  explicit NuVector(std::vector<std::int64_t> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  /// r, so that there are r + 1 entries.
  unsigned r() const noexcept { return static_cast<unsigned>(entries_.size() - 1); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  /// nu^k: the vector with the k-th entry removed.
  NuVector without(std::size_t k) const;

  friend bool operator==(const NuVector&, const NuVector&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

/// Comma-separated integers, e.g. "2,3,5".
NuVector parse_nu_vector(std::string_view text);
std::string to_string(const NuVector& nu);

/// Generic comma-separated integer list (used for q vectors).
std::vector<std::int64_t> parse_int_list(std::string_view text);
std::string to_string(std::span<const std::int64_t> values);

/// Outcome of a reciprocity check: residual = lhs - rhs.
struct ReciprocityReport {
  Scalar lhs;
  Scalar rhs;
  Scalar residual;
  std::string method;
  /// Truncation bound when the rhs is a truncated lattice sum.
  std::optional<long> bound;
};

ReciprocityReport make_report(Scalar lhs, Scalar rhs, std::string method,
                              std::optional<long> bound = std::nullopt);

/// S_f(nu | nu_k) = sum_{i=1}^{nu_k - 1} prod_{j != k} f_j(i nu_j / nu_k).
/// Exact when every f_j is polynomial, complex float otherwise. For r = 0
/// the value is nu_0 - 1 by convention.
Scalar dedekind_sum(std::span<const PeriodicFn> fvec, const NuVector& nu, std::size_t k);

/// R_f(nu) = sum_k (jump of f_k) * S_f(nu | nu_k).
Scalar reciprocity_lhs(std::span<const PeriodicFn> fvec, const NuVector& nu);

/// (nu_0^2 + nu_1^2 + nu_2^2) / (12 nu_0 nu_1 nu_2) - 1/4.
Rational rademacher_rhs(const NuVector& nu);

/// Closed form of R_f for f_j = {x} - a_j, r = 2.
Rational shifted_rhs(const NuVector& nu, const std::array<Rational, 3>& a);

/// Reciprocity for f = (b_1, b_q), r = 1.
Rational r1_closed_form(const NuVector& nu, unsigned q);

/// S_e(nu | nu_k) for f_j = e(x) = exp(2 pi i x).
std::int64_t exp_closed_form(const NuVector& nu, std::size_t k);
/// S_f(nu | nu_k) for f_j = cos(2 pi x).
Rational cos_closed_form(const NuVector& nu, std::size_t k);
/// S_f(nu | nu_k) for f_j = sin(2 pi x).
SymbolicValue sin_closed_form(const NuVector& nu, std::size_t k);

/// A factor F({nu x}) of a piecewise polynomial integrand.
struct PeriodicFactor {
  Polynomial poly;
  std::int64_t nu;
};

/// int_0^1 prod_j F_j({nu_j x}) dx, exactly, by splitting [0, 1] at every
/// i / nu_j and integrating the polynomial product on each piece.
Rational piecewise_integral(std::span<const PeriodicFactor> factors);

/// int_0^1 prod_j b_{q_j}(nu_j x) dx.
Rational franel_integral(std::span<const unsigned> qvec, std::span<const std::int64_t> nuvec);

/// -jump_product(f) + sum_k nu_k int_0^1 f_k'(nu_k x) prod_{j != k} f_j(nu_j x) dx.
/// Polynomial families only; trig descriptors throw std::invalid_argument.
Rational integral_recip_rhs(std::span<const PeriodicFn> fvec, const NuVector& nu);

/// Compares R for f_j = {x}^{q_j} against the Bernoulli-basis expansion
/// prod 1/(q_j+1) sum_s A_s R_{b_s}, A_s = prod C(q_j + 1, s_j).
ReciprocityReport power_basis_recip_check(std::span<const unsigned> qvec, const NuVector& nu);

}  // namespace recip

#endif  // RECIP_DEDEKIND_HPP_
