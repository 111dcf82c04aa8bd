#ifndef RECIP_ZETA_HPP_
#define RECIP_ZETA_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "recip/dedekind.hpp"
#include "recip/lattice.hpp"
#include "recip/symbolic.hpp"

namespace recip {

using QVector = std::vector<unsigned>;

/// |q| = sum of the entries.
unsigned weight(std::span<const unsigned> q);
/// q with the k-th entry set to zero.
QVector masked(std::span<const unsigned> q, std::size_t k);
/// Number of entries equal to one.
unsigned count_ones(std::span<const unsigned> q);

/// Lattice sums are truncated to max |n_j| <= bound (coordinate box) or,
/// for cone sums, to parameters a, b <= bound. Symmetric pairing adds n and
/// -n together, which realizes the principal value.
struct TruncationPlan {
  enum class Pairing { symmetric, none };
  std::int64_t bound = 2000;
  Pairing pairing = Pairing::symmetric;
};

/// zeta(q) = (-1)^(q/2+1) B_q (2 pi)^q / (2 q!) for even q >= 2.
SymbolicValue riemann_zeta_even_exact(unsigned q);

/// zeta(s) for real s > 1: partial sum plus an Euler-Maclaurin tail,
/// refined until the last correction is below tol.
double riemann_zeta_numeric(double s, double tol = 1e-15);

/// zeta(q) as a double, exact closed form for even q.
double riemann_zeta(unsigned q);

/// sum_{t >= 1} 1 / (t v)^q = zeta(|q|) prod v_j^(-q_j) for |q| even >= 2.
/// Throws std::domain_error for odd |q| and std::invalid_argument when v is
/// not primitive or vanishes/turns negative on the support of q.
SymbolicValue ray_zeta_exact(std::span<const unsigned> q, std::span<const std::int64_t> v);

/// sum_{t in Z, t != 0} 1 / (t v)^q under the principal value; v may have
/// negative entries. Zero for odd |q|.
SymbolicValue line_zeta_exact(std::span<const unsigned> q, std::span<const std::int64_t> v);

enum class ConeRegion { closed, relative_interior };

/// Lattice points {a g_1 + b g_2} of a ray (one generator) or unimodular
/// 2-cone with 0 <= a, b <= param_bound (a, b >= 1 for the relative
/// interior of a 2-cone; t >= 1 for a ray). The origin is never included.
std::vector<IntVec> cone_lattice_points(std::span<const IntVec> generators, ConeRegion region,
                                        std::int64_t param_bound);

/// Truncated conical zeta value sum_{n in region} prod n_j^(-q_j), 0^0 = 1.
/// Rejects cones with more than two generators and non-unimodular 2-cones.
double conical_zeta_trunc(std::span<const unsigned> q, std::span<const IntVec> generators,
                          ConeRegion region, const TruncationPlan& plan);

enum class ZetaVariant { full, Y, Z, plain };

struct TruncatedValue {
  double value = 0.0;
  std::size_t points_used = 0;
};

/// Truncated principal-value sums over nu^perp:
/// full  sum over n with n_j != 0 for j != k of 1 / n^(q_k)  (Y + Z)
/// Y     all coordinates nonzero, weight 1 / n^(q_k)
/// Z     n_k = 0, others nonzero; equal to plain over (nu^k, q^k)
/// plain all coordinates nonzero, weight 1 / n^q (k ignored).
TruncatedValue multiple_zeta_trunc(const NuVector& nu, std::span<const unsigned> q, std::size_t k,
                                   ZetaVariant variant, const TruncationPlan& plan);

/// (sum_{k: q_k = 1} nu_k Y_k, -sum_{k: q_k > 1} nu_k zeta_{nu, q - e_k}).
/// The left side is one merged pass whose per-point weight
/// (sum_{k: q_k = 1} nu_k n_k) / n^q has an exact integer numerator.
std::pair<double, double> combined_Y_identity(const NuVector& nu, std::span<const unsigned> q,
                                              const TruncationPlan& plan);

/// Per-orthant sums of positive vectors: y[mask] sums 1 / m^(q_k) over
/// m > 0 with <u nu, m> = 0, z[mask] the same over (u nu^k)^perp. Bit j of
/// mask set means u_j = -1. Used by the bounds and the orthant identities.
struct OrthantSums {
  std::vector<double> y;
  std::vector<double> z;
};
OrthantSums orthant_sums(const NuVector& nu, std::span<const unsigned> q, std::size_t k,
                         const TruncationPlan& plan);

/// sigma_{k,l} = prod_{j != k} (u_l)_j^(q_j) for the canonical sign vectors.
int sigma(std::span<const unsigned> q, std::size_t k, std::size_t l);

/// Z_k = zeta(|q_k|) / v_k^(q_k) sum_{l != k} sigma_{k,l}; zero for odd |q_k|.
SymbolicValue Z_closed_r2(const NuVector& nu, std::span<const unsigned> q, std::size_t k);

/// Q_k = sum_l sigma_{k,l} (sum_{i=1}^{s_l} 1 / v_{l,i}^(q_k)
///       + sum_{i=0}^{s_l} zeta(q_k, open cone C_{l,i}) / zeta(|q_k|)).
double q_sum(const NuVector& nu, std::span<const unsigned> q, std::size_t k,
             const TruncationPlan& plan);

/// sum_{k: q_k = 1} nu_k Q_k in one pass over the same cone points.
double q_total(const NuVector& nu, std::span<const unsigned> q, const TruncationPlan& plan);

/// Reciprocity for Bernoulli functions, any r >= 1, with the zeta values
/// on the Fourier side (exact when r = 1).
ReciprocityReport bernoulli_recip_general(const NuVector& nu, std::span<const unsigned> q,
                                          const TruncationPlan& plan);

/// The r = 2 form through the Hirzebruch-Jung cone subdivision.
ReciprocityReport bernoulli_recip_r2(const NuVector& nu, std::span<const unsigned> q,
                                     const TruncationPlan& plan);

struct BoundReport {
  bool ok = false;
  std::size_t l = 0;
  double product_zeta = 0.0;  // prod_{j != k} zeta(q_j)
  double max_y = 0.0;         // largest per-orthant Y
  double y_bound = 0.0;
  double max_z = 0.0;
  double z_bound = 0.0;
  double abs_zeta = 0.0;  // |zeta_{k, nu, q}| truncated
  double zeta_bound = 0.0;
};

/// Checks the per-orthant bounds and the bound on |zeta_{k,nu,q}|; every
/// q_j must exceed 1.
BoundReport bound_report(const NuVector& nu, std::span<const unsigned> q, std::size_t k,
                         const TruncationPlan& plan);
bool bound_check(const NuVector& nu, std::span<const unsigned> q, std::size_t k,
                 const TruncationPlan& plan);

}  // namespace recip

#endif  // RECIP_ZETA_HPP_
