#ifndef RECIP_LATTICE_HPP_
#define RECIP_LATTICE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "recip/dedekind.hpp"

namespace recip {

using IntVec = std::vector<std::int64_t>;
using Vec3 = std::array<std::int64_t, 3>;

struct LatticeConstraint {
  enum class Mode { all_nonzero, coord_zero, unrestricted };
  Mode mode = Mode::unrestricted;
  std::size_t k = 0;

  static LatticeConstraint all_nonzero() { return {Mode::all_nonzero, 0}; }
  static LatticeConstraint coord_zero(std::size_t k) { return {Mode::coord_zero, k}; }
  static LatticeConstraint unrestricted() { return {Mode::unrestricted, 0}; }
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

namespace detail {

// Visits every nonzero n with <w, n> = 0 and max |n_j| <= bound, where w has
// positive entries. nonzero[j] forces n_j != 0. With half_space only the
// points whose first nonzero coordinate is positive are visited. The order
// is fixed: the free coordinates run lexicographically, the eliminated one
// (largest w_j) follows.
template <typename Mask, typename Visit>
void for_each_orthogonal(std::span<const std::int64_t> w, std::int64_t bound, const Mask& nonzero,
                         bool half_space, Visit&& visit) {
  const std::size_t n = w.size();
  if (n < 2 || bound < 1) return;
  std::size_t elim = 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (w[j] > w[elim]) elim = j;
  }
  std::vector<std::size_t> free_idx;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != elim) free_idx.push_back(j);
  }
  const std::size_t last = free_idx.back();
  const std::int64_t we = w[elim];
  const std::int64_t wl = w[last];
  const std::int64_t g = gcd(wl, we);
  const std::int64_t step = we / g;
  const std::int64_t inv = step == 1 ? 0 : mod_inverse((wl / g) % step, step);

  std::vector<std::int64_t> point(n, 0);
  const std::size_t outer = free_idx.size() - 1;
  std::vector<std::int64_t> ctr(outer, -bound);
  auto first_nonzero_positive = [&]() {
    for (std::size_t j = 0; j < n; ++j) {
      if (point[j] != 0) return point[j] > 0;
    }
    return false;
  };
  while (true) {
    bool skip = false;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < outer; ++i) {
      point[free_idx[i]] = ctr[i];
      if (ctr[i] == 0 && nonzero[free_idx[i]]) skip = true;
      s += w[free_idx[i]] * ctr[i];
    }
    // Need wl * x + s = -we * y with |x|, |y| <= bound.
    if (!skip && s % g == 0) {
      const std::int64_t sg = s / g;
      // x = -sg * (wl/g)^{-1} mod step
      std::int64_t residue = 0;
      if (step > 1) {
        residue = static_cast<std::int64_t>((static_cast<__int128>(((-sg) % step + step) % step) * inv) % step);
      }
      // range for x from |y| <= bound: -bound*we - s <= wl x <= bound*we - s
      auto floor_div = [](std::int64_t a, std::int64_t b) {
        std::int64_t q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
        return q;
      };
      auto ceil_div = [&](std::int64_t a, std::int64_t b) { return -floor_div(-a, b); };
      std::int64_t lo = std::max(-bound, ceil_div(-bound * we - s, wl));
      const std::int64_t hi = std::min(bound, floor_div(bound * we - s, wl));
      if (lo <= hi) {
        std::int64_t x = lo + ((residue - lo) % step + step) % step;
        for (; x <= hi; x += step) {
          const std::int64_t y = -(s + wl * x) / we;
          if (nonzero[last] && x == 0) continue;
          if (nonzero[elim] && y == 0) continue;
          point[last] = x;
          point[elim] = y;
          if (x == 0 && y == 0 && s == 0) {
            bool all_zero = true;
            for (std::size_t i = 0; i < outer; ++i) all_zero = all_zero && ctr[i] == 0;
            if (all_zero) continue;
          }
          if (half_space && !first_nonzero_positive()) continue;
          visit(std::span<const std::int64_t>(point));
        }
      }
    }
    std::size_t i = outer;
    while (i > 0) {
      --i;
      if (ctr[i] < bound) {
        ++ctr[i];
        break;
      }
      ctr[i] = -bound;
      if (i == 0) return;
    }
    if (outer == 0) return;
  }
}

}  // namespace detail

/// All nonzero n with <nu, n> = 0, max |n_j| <= bound and the constraint,
/// sorted lexicographically.
std::vector<IntVec> enumerate_orthogonal(const NuVector& nu, std::int64_t bound,
                                         LatticeConstraint constraint);

/// Naive full-box filter; the reference the fast enumerator is tested against.
std::vector<IntVec> enumerate_orthogonal_naive(std::span<const std::int64_t> nu, std::int64_t bound,
                                               LatticeConstraint constraint);

/// u_0 = (1,-1,-1), u_1 = (1,-1,1), u_2 = (1,1,-1).
const std::array<Vec3, 3>& canonical_sign_vectors();

/// v_0 = (0, nu_2, nu_1), v_1 = (nu_2, 0, nu_0), v_2 = (nu_1, nu_0, 0).
std::array<Vec3, 3> r2_cone_generators(const NuVector& nu);

/// The boundary rays of the positive part of the plane (u_l nu)^perp:
/// (l', l'') = (l + 1, l + 2) mod 3.
std::pair<std::size_t, std::size_t> boundary_indices(std::size_t l);

struct HJSequence {
  std::vector<std::int64_t> m;     // m_0 > m_1 > ... > m_s = 1 > m_{s+1} = 0
  std::vector<std::int64_t> mbar;  // 0 = mbar_0 < mbar_1 = 1 < ... < mbar_{s+1} = m_0
  std::vector<std::int64_t> k;     // k_1 .. k_s, each >= 2

  std::size_t s() const noexcept { return k.size(); }
};

/// Negative continued fraction of m0 / m1. Throws std::invalid_argument when
/// m1 >= m0 or gcd(m0, m1) != 1 (m0 = 1, m1 = 0 is the trivial sequence).
HJSequence hj_sequence(std::int64_t m0, std::int64_t m1);

/// The unique 0 < eps < nu_l with (v_{l'} eps + v_{l''}) / nu_l integral;
/// 0 when nu_l = 1.
std::int64_t epsilon_l(const NuVector& nu, std::size_t l);
/// Same value found by trying every candidate.
std::int64_t epsilon_l_scan(const NuVector& nu, std::size_t l);

/// A planar cone subdivided into consecutive 2-cones C(g_i, g_{i+1}).
struct ConeFan {
  Vec3 normal;
  std::vector<Vec3> generators;
  HJSequence hj;

  std::size_t cone_count() const noexcept {
    return generators.empty() ? 0 : generators.size() - 1;
  }
};

/// Hirzebruch-Jung subdivision of the cone C(v_{l'}, v_{l''}) in (u_l nu)^perp.
ConeFan hj_generators(const NuVector& nu, std::size_t l);

/// True iff every lattice point of the plane in the probe box that lies in
/// the closed big cone is in the relative interior of exactly one face
/// (open 2-cone or ray, integral coefficients), and every 2-cone spans the
/// plane lattice.
bool verify_unimodular(const ConeFan& fan, std::int64_t probe_bound);

Vec3 cross(const Vec3& a, const Vec3& b);
std::int64_t dot(const Vec3& a, const Vec3& b);

}  // namespace recip

#endif  // RECIP_LATTICE_HPP_
