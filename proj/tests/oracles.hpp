// Independent reference implementations. Nothing here calls into the library
// beyond the Rational type, so the tests compare two separate derivations.
#ifndef RECIP_TESTS_ORACLES_HPP_
#define RECIP_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

using Q = mpq_class;

// mpq_class(a, b) does not reduce; every other operation assumes it did.
inline Q ratio(std::int64_t a, std::int64_t b) {
  Q r(static_cast<long>(a), static_cast<long>(b));
  r.canonicalize();
  return r;
}

// Akiyama-Tanigawa; produces B_n with B_1 = +1/2, flipped to -1/2 here.
inline Q bernoulli_number(unsigned n) {
  std::vector<Q> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = ratio(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
    }
  }
  Q b = a[0];
  if (n == 1) b = -b;
  return b;
}

inline mpz_class choose(unsigned n, unsigned k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

inline Q floor_part(const Q& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Q(f);
}

inline Q frac_part(const Q& x) { return x - floor_part(x); }

inline bool integral(const Q& x) { return x.get_den() == 1; }

// B_n(x) by the explicit binomial sum over oracle numbers.
inline Q bernoulli_poly(unsigned n, const Q& x) {
  Q s = 0;
  Q xp = 1;
  std::vector<Q> powers(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    powers[i] = xp;
    xp *= x;
  }
  for (unsigned k = 0; k <= n; ++k) s += choose(n, k) * bernoulli_number(k) * powers[n - k];
  return s;
}

// b_n(x) = B_n({x}); b_1 is 0 at the integers.
inline Q periodic_bernoulli(unsigned n, const Q& x) {
  if (n == 1 && integral(x)) return 0;
  return bernoulli_poly(n, frac_part(x));
}

using ExactFn = std::function<Q(const Q&)>;

// sum_{i=1}^{nu_k - 1} prod_{j != k} f_j(i nu_j / nu_k)
inline Q dedekind_sum(const std::vector<ExactFn>& f, const std::vector<std::int64_t>& nu, std::size_t k) {
  if (nu.size() == 1) return Q(nu[0] - 1);
  Q total = 0;
  for (std::int64_t i = 1; i < nu[k]; ++i) {
    Q p = 1;
    for (std::size_t j = 0; j < nu.size(); ++j) {
      if (j != k) p *= f[j](ratio(i * nu[j], nu[k]));
    }
    total += p;
  }
  return total;
}

inline Q rademacher(std::int64_t a, std::int64_t b, std::int64_t c) {
  return ratio(a * a + b * b + c * c, 12 * a * b * c) - ratio(1, 4);
}

// Classical s(1, c) = (c - 1)(c - 2) / (12 c).
inline Q classical_s1(std::int64_t c) { return ratio((c - 1) * (c - 2), 12 * c); }

inline Q franel(std::int64_t m, std::int64_t n) {
  const std::int64_t g = std::gcd(m, n);
  return ratio(g * g, 12 * m * n);
}

using FloatFn = std::function<std::complex<double>(double)>;

inline std::complex<double> dedekind_sum_float(const std::vector<FloatFn>& f, const std::vector<std::int64_t>& nu,
                                               std::size_t k) {
  std::complex<double> total = 0;
  for (std::int64_t i = 1; i < nu[k]; ++i) {
    std::complex<double> p = 1;
    for (std::size_t j = 0; j < nu.size(); ++j) {
      if (j != k) p *= f[j](static_cast<double>(i * nu[j]) / static_cast<double>(nu[k]));
    }
    total += p;
  }
  return total;
}

// Composite Simpson on [0, 1] with n (even) panels.
inline std::complex<double> simpson(const std::function<std::complex<double>(double)>& g, int n = 20000) {
  const double h = 1.0 / n;
  std::complex<double> s = g(0.0) + g(1.0);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * g(i * h);
  return s * h / 3.0;
}

// Midpoint rule on n panels, for integrands with jumps at the panel edges.
inline double midpoint(const std::function<double(double)>& g, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i) s += g((i + 0.5) / n);
  return s / n;
}

// Every nonzero n in the box with <w, n> = 0, lexicographic.
inline std::vector<std::vector<std::int64_t>> orthogonal_box(const std::vector<std::int64_t>& w, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> n(w.size(), -bound);
  while (true) {
    std::int64_t d = 0;
    bool zero = true;
    for (std::size_t j = 0; j < w.size(); ++j) {
      d += w[j] * n[j];
      zero = zero && n[j] == 0;
    }
    if (d == 0 && !zero) out.push_back(n);
    std::size_t i = w.size();
    while (i > 0) {
      --i;
      if (n[i] < bound) {
        ++n[i];
        break;
      }
      n[i] = -bound;
      if (i == 0) return out;
    }
  }
}

constexpr double zeta3 = 1.2020569031595942854;
constexpr double zeta5 = 1.0369277551433699263;
inline double zeta2() { return std::numbers::pi * std::numbers::pi / 6.0; }
inline double zeta4() { return std::pow(std::numbers::pi, 4) / 90.0; }

inline std::vector<std::vector<std::int64_t>> coprime_tuples(std::size_t len, std::int64_t max) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void()> rec = [&] {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t x = 1; x <= max; ++x) {
      bool ok = true;
      for (auto y : cur) ok = ok && y != x && std::gcd(x, y) == 1;
      if (!ok) continue;
      cur.push_back(x);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace oracle

#endif  // RECIP_TESTS_ORACLES_HPP_
