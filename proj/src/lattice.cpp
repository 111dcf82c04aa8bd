#include "recip/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace recip {

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  std::int64_t old_r = ((a % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw std::invalid_argument("no modular inverse: gcd != 1");
  return ((old_s % m) + m) % m;
}

namespace {

std::vector<IntVec> collect(std::span<const std::int64_t> w, std::int64_t bound, bool all_nonzero) {
  std::vector<IntVec> out;
  const std::vector<bool> mask(w.size(), all_nonzero);
  detail::for_each_orthogonal(w, bound, mask, false,
                              [&](std::span<const std::int64_t> p) { out.emplace_back(p.begin(), p.end()); });
  return out;
}

}  // namespace

std::vector<IntVec> enumerate_orthogonal(const NuVector& nu, std::int64_t bound,
                                         LatticeConstraint constraint) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  std::vector<IntVec> out;
  switch (constraint.mode) {
    case LatticeConstraint::Mode::all_nonzero:
      out = collect(nu.entries(), bound, true);
      break;
    case LatticeConstraint::Mode::unrestricted:
      out = collect(nu.entries(), bound, false);
      break;
    case LatticeConstraint::Mode::coord_zero: {
      if (constraint.k >= nu.size()) throw std::out_of_range("constraint index out of range");
      if (nu.size() < 3) break;
      const NuVector sub = nu.without(constraint.k);
      for (auto& p : collect(sub.entries(), bound, false)) {
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(constraint.k), 0);
        out.push_back(std::move(p));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> enumerate_orthogonal_naive(std::span<const std::int64_t> nu, std::int64_t bound,
                                               LatticeConstraint constraint) {
  std::vector<IntVec> out;
  const std::size_t n = nu.size();
  IntVec p(n, -bound);
  if (n == 0) return out;
  while (true) {
    std::int64_t d = 0;
    bool zero = true;
    bool any_zero = false;
    for (std::size_t j = 0; j < n; ++j) {
      d += nu[j] * p[j];
      zero = zero && p[j] == 0;
      any_zero = any_zero || p[j] == 0;
    }
    bool keep = d == 0 && !zero;
    if (constraint.mode == LatticeConstraint::Mode::all_nonzero) keep = keep && !any_zero;
    if (constraint.mode == LatticeConstraint::Mode::coord_zero) keep = keep && p[constraint.k] == 0;
    if (keep) out.push_back(p);
    std::size_t j = n;
    while (j > 0) {
      --j;
      if (p[j] < bound) {
        ++p[j];
        break;
      }
      p[j] = -bound;
      if (j == 0) return out;
    }
  }
}

const std::array<Vec3, 3>& canonical_sign_vectors() {
  static const std::array<Vec3, 3> u{{{1, -1, -1}, {1, -1, 1}, {1, 1, -1}}};
  return u;
}

std::array<Vec3, 3> r2_cone_generators(const NuVector& nu) {
  if (nu.r() != 2) throw std::invalid_argument("cone generators need nu with 3 entries");
  return {{{0, nu[2], nu[1]}, {nu[2], 0, nu[0]}, {nu[1], nu[0], 0}}};
}

std::pair<std::size_t, std::size_t> boundary_indices(std::size_t l) {
  if (l > 2) throw std::out_of_range("l must be 0, 1 or 2");
  return {(l + 1) % 3, (l + 2) % 3};
}

HJSequence hj_sequence(std::int64_t m0, std::int64_t m1) {
  if (m0 < 1) throw std::invalid_argument("m0 must be positive");
  if (m1 < 0 || m1 >= m0) throw std::invalid_argument("need 0 <= m1 < m0");
  if (gcd(m0, m1) != 1) throw std::invalid_argument("need gcd(m0, m1) = 1");
  HJSequence hj;
  hj.m = {m0, m1};
  hj.mbar = {0, 1};
  while (hj.m.back() > 0) {
    const std::size_t i = hj.m.size() - 1;
    const std::int64_t ki = (hj.m[i - 1] + hj.m[i] - 1) / hj.m[i];
    hj.k.push_back(ki);
    hj.m.push_back(ki * hj.m[i] - hj.m[i - 1]);
    hj.mbar.push_back(ki * hj.mbar[i] - hj.mbar[i - 1]);
  }
  const std::size_t s = hj.k.size();
  if (s > 0 && static_cast<std::int64_t>((static_cast<__int128>(hj.m[1]) * hj.mbar[s]) % m0) != 1 % m0) {
    throw std::logic_error("Hirzebruch-Jung congruence failed");
  }
  if (hj.mbar.back() != m0) throw std::logic_error("Hirzebruch-Jung sequence did not close");
  return hj;
}

std::int64_t epsilon_l(const NuVector& nu, std::size_t l) {
  const auto v = r2_cone_generators(nu);
  const auto [lp, lpp] = boundary_indices(l);
  const std::int64_t m = nu[l];
  if (m == 1) return 0;
  std::int64_t eps = -1;
  for (std::size_t c = 0; c < 3 && eps < 0; ++c) {
    const std::int64_t a = ((v[lp][c] % m) + m) % m;
    if (gcd(a, m) == 1) {
      const std::int64_t b = ((v[lpp][c] % m) + m) % m;
      eps = static_cast<std::int64_t>((static_cast<__int128>((m - b) % m) * mod_inverse(a, m)) % m);
    }
  }
  if (eps <= 0) throw std::logic_error("no admissible epsilon; nu invariants broken");
  for (std::size_t c = 0; c < 3; ++c) {
    if ((v[lp][c] * eps + v[lpp][c]) % m != 0) {
      throw std::logic_error("epsilon congruences disagree across coordinates");
    }
  }
  return eps;
}

std::int64_t epsilon_l_scan(const NuVector& nu, std::size_t l) {
  const auto v = r2_cone_generators(nu);
  const auto [lp, lpp] = boundary_indices(l);
  const std::int64_t m = nu[l];
  if (m == 1) return 0;
  for (std::int64_t eps = 1; eps < m; ++eps) {
    bool ok = true;
    for (std::size_t c = 0; c < 3; ++c) ok = ok && (v[lp][c] * eps + v[lpp][c]) % m == 0;
    if (ok) return eps;
  }
  throw std::logic_error("no admissible epsilon; nu invariants broken");
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::int64_t dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

ConeFan hj_generators(const NuVector& nu, std::size_t l) {
  const auto v = r2_cone_generators(nu);
  const auto [lp, lpp] = boundary_indices(l);
  const std::int64_t m = nu[l];
  ConeFan fan;
  const Vec3& u = canonical_sign_vectors()[l];
  fan.normal = {u[0] * nu[0], u[1] * nu[1], u[2] * nu[2]};
  fan.hj = hj_sequence(m, epsilon_l(nu, l));
  for (std::size_t i = 0; i < fan.hj.m.size(); ++i) {
    Vec3 g{};
    for (std::size_t c = 0; c < 3; ++c) {
      const std::int64_t num = v[lp][c] * fan.hj.m[i] + v[lpp][c] * fan.hj.mbar[i];
      if (num % m != 0) throw std::logic_error("non-integral Hirzebruch-Jung generator");
      g[c] = num / m;
    }
    if (dot(g, fan.normal) != 0) throw std::logic_error("generator off the plane");
    fan.generators.push_back(g);
  }
  return fan;
}

namespace {

// Coefficients (a, b) of n = a g + b h times det, using the first nonzero
// 2x2 minor of (g, h).
struct PlaneSolver {
  std::size_t p = 0, q = 1;
  std::int64_t det = 0;
  Vec3 g{}, h{};

  PlaneSolver(const Vec3& g_, const Vec3& h_) : g(g_), h(h_) {
    const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pr : pairs) {
      const std::int64_t d = g[pr[0]] * h[pr[1]] - g[pr[1]] * h[pr[0]];
      if (d != 0) {
        p = pr[0];
        q = pr[1];
        det = d;
        return;
      }
    }
  }
  // Returns (a * det, b * det) with det > 0 normalization applied.
  std::pair<std::int64_t, std::int64_t> scaled(std::span<const std::int64_t> n, std::int64_t& d) const {
    std::int64_t a = n[p] * h[q] - n[q] * h[p];
    std::int64_t b = g[p] * n[q] - g[q] * n[p];
    d = det;
    if (d < 0) {
      a = -a;
      b = -b;
      d = -d;
    }
    return {a, b};
  }
};

}  // namespace

bool verify_unimodular(const ConeFan& fan, std::int64_t probe_bound) {
  if (fan.generators.size() < 2) return false;
  const Vec3 w = fan.normal;
  std::int64_t gw = 0;
  for (auto c : w) gw = gcd(gw, c);
  if (gw == 0) return false;
  for (const auto& g : fan.generators) {
    if (dot(g, w) != 0) return false;
  }

  // (b) each 2-cone spans the plane lattice.
  for (std::size_t i = 0; i + 1 < fan.generators.size(); ++i) {
    const Vec3 c = cross(fan.generators[i], fan.generators[i + 1]);
    const bool plus = c[0] * gw == w[0] && c[1] * gw == w[1] && c[2] * gw == w[2];
    const bool minus = c[0] * gw == -w[0] && c[1] * gw == -w[1] && c[2] * gw == -w[2];
    if (!plus && !minus) return false;
  }

  // (a) exact partition of the probe points of the closed big cone.
  const PlaneSolver big(fan.generators.front(), fan.generators.back());
  if (big.det == 0) return false;
  std::vector<PlaneSolver> cones;
  for (std::size_t i = 0; i + 1 < fan.generators.size(); ++i) {
    cones.emplace_back(fan.generators[i], fan.generators[i + 1]);
    if (cones.back().det == 0) return false;
  }
  std::array<std::int64_t, 3> abs_w{};
  std::array<bool, 3> flip{};
  for (std::size_t j = 0; j < 3; ++j) {
    if (w[j] == 0) return false;
    abs_w[j] = std::llabs(w[j]);
    flip[j] = w[j] < 0;
  }
  const std::array<bool, 3> none{};
  bool ok = true;
  std::array<std::int64_t, 3> n{};
  detail::for_each_orthogonal(
      std::span<const std::int64_t>(abs_w), probe_bound, none, false,
      [&](std::span<const std::int64_t> m) {
        if (!ok) return;
        for (std::size_t j = 0; j < 3; ++j) n[j] = flip[j] ? -m[j] : m[j];
        std::int64_t d = 0;
        const auto [ba, bb] = big.scaled(n, d);
        if (ba < 0 || bb < 0) return;
        int faces = 0;
        for (const auto& cone : cones) {
          const auto [a, b] = cone.scaled(n, d);
          if (a > 0 && b > 0 && a % d == 0 && b % d == 0) ++faces;
        }
        for (const auto& g : fan.generators) {
          // n = t g with t a positive integer.
          const Vec3 c = cross(g, {n[0], n[1], n[2]});
          if (c[0] != 0 || c[1] != 0 || c[2] != 0) continue;
          std::size_t j = 0;
          while (g[j] == 0) ++j;
          if (n[j] % g[j] == 0 && n[j] / g[j] > 0) ++faces;
        }
        if (faces != 1) ok = false;
      });
  return ok;
}

}  // namespace recip
