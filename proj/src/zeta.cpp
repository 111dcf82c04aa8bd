#include "recip/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "recip/bernoulli.hpp"
#include "recip/summation.hpp"

namespace recip {

unsigned weight(std::span<const unsigned> q) { return std::accumulate(q.begin(), q.end(), 0u); }

QVector masked(std::span<const unsigned> q, std::size_t k) {
  if (k >= q.size()) throw std::out_of_range("index k out of range");
  QVector out(q.begin(), q.end());
  out[k] = 0;
  return out;
}

unsigned count_ones(std::span<const unsigned> q) {
  return static_cast<unsigned>(std::count(q.begin(), q.end(), 1u));
}

SymbolicValue riemann_zeta_even_exact(unsigned q) {
  if (q < 2 || q % 2 == 1) throw std::invalid_argument("closed form needs an even q >= 2");
  Rational c = bernoulli_number(q) * pow(Rational(2), q) / (2 * Rational(factorial(q)));
  if ((q / 2 + 1) % 2 == 1) c = -c;
  return SymbolicValue(c, static_cast<int>(q), 0);
}

double riemann_zeta_numeric(double s, double tol) {
  if (!(s > 1.0)) throw std::invalid_argument("zeta(s) needs s > 1");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  for (std::int64_t n_cut = 8;; n_cut *= 2) {
    CompensatedSum sum;
    for (std::int64_t n = n_cut - 1; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    const double big_n = static_cast<double>(n_cut);
    sum += std::pow(big_n, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(big_n, -s);
    double rising = s;
    double last = 0.0;
    for (unsigned j = 1; j <= 10; ++j) {
      const Rational c = bernoulli_number(2 * j) / Rational(factorial(2 * j));
      last = c.get_d() * rising * std::pow(big_n, -s - 2.0 * j + 1.0);
      sum += last;
      rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
    }
    if (std::abs(last) <= tol * std::abs(sum.value()) || n_cut > (std::int64_t{1} << 24)) {
      return sum.value();
    }
  }
}

double riemann_zeta(unsigned q) {
  if (q >= 2 && q % 2 == 0) return riemann_zeta_even_exact(q).numeric().real();
  return riemann_zeta_numeric(static_cast<double>(q));
}

SymbolicValue ray_zeta_exact(std::span<const unsigned> q, std::span<const std::int64_t> v) {
  if (q.size() != v.size()) throw std::invalid_argument("q and v must have the same length");
  const unsigned w = weight(q);
  if (w % 2 == 1) throw std::domain_error("odd total weight has no closed form");
  if (w < 2) throw std::invalid_argument("ray zeta needs total weight >= 2");
  std::int64_t g = 0;
  for (auto c : v) g = gcd(g, c);
  if (g != 1) throw std::invalid_argument("ray generator must be primitive");
  Rational denom(1);
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] == 0) continue;
    if (v[j] <= 0) throw std::invalid_argument("ray generator must be positive on the support of q");
    denom *= pow(Rational(v[j]), q[j]);
  }
  return riemann_zeta_even_exact(w) * Rational(1 / denom);
}

SymbolicValue line_zeta_exact(std::span<const unsigned> q, std::span<const std::int64_t> v) {
  if (q.size() != v.size()) throw std::invalid_argument("q and v must have the same length");
  if (weight(q) % 2 == 1) return SymbolicValue();
  std::vector<std::int64_t> abs_v(v.begin(), v.end());
  bool negative = false;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (q[j] > 0 && v[j] == 0) throw std::invalid_argument("line meets a pole of the weight");
    if (v[j] < 0) {
      abs_v[j] = -v[j];
      if (q[j] % 2 == 1) negative = !negative;
    }
  }
  return ray_zeta_exact(q, abs_v) * Rational(negative ? -2 : 2);
}

namespace {

// 1 / prod n_j^(q_j) with 0^0 = 1.
inline double inv_monomial(std::span<const std::int64_t> n, std::span<const unsigned> q) {
  double d = 1.0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const double x = static_cast<double>(n[j]);
    for (unsigned e = 0; e < q[j]; ++e) d *= x;
  }
  return 1.0 / d;
}

std::int64_t minor_gcd(std::span<const std::int64_t> g, std::span<const std::int64_t> h) {
  std::int64_t out = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) out = gcd(out, g[i] * h[j] - g[j] * h[i]);
  }
  return out;
}

void check_cone(std::span<const IntVec> generators) {
  if (generators.empty() || generators.size() > 2) {
    throw std::invalid_argument("only rays and simplicial 2-cones are supported");
  }
  const std::size_t d = generators[0].size();
  for (const auto& g : generators) {
    if (g.size() != d) throw std::invalid_argument("generators must have equal length");
  }
  if (generators.size() == 2 && minor_gcd(generators[0], generators[1]) != 1) {
    throw std::invalid_argument("2-cone is not unimodular");
  }
}

template <typename Visit>
void for_each_cone_point(std::span<const IntVec> generators, ConeRegion region, std::int64_t bound,
                         Visit&& visit) {
  const std::size_t d = generators[0].size();
  std::vector<std::int64_t> p(d);
  if (generators.size() == 1) {
    for (std::int64_t t = 1; t <= bound; ++t) {
      for (std::size_t j = 0; j < d; ++j) p[j] = t * generators[0][j];
      visit(std::span<const std::int64_t>(p));
    }
    return;
  }
  const std::int64_t start = region == ConeRegion::closed ? 0 : 1;
  const auto& g = generators[0];
  const auto& h = generators[1];
  for (std::int64_t a = start; a <= bound; ++a) {
    for (std::int64_t b = start; b <= bound; ++b) {
      if (a == 0 && b == 0) continue;
      for (std::size_t j = 0; j < d; ++j) p[j] = a * g[j] + b * h[j];
      visit(std::span<const std::int64_t>(p));
    }
  }
}

}  // namespace

std::vector<IntVec> cone_lattice_points(std::span<const IntVec> generators, ConeRegion region,
                                        std::int64_t param_bound) {
  check_cone(generators);
  std::vector<IntVec> out;
  for_each_cone_point(generators, region, param_bound,
                      [&](std::span<const std::int64_t> p) { out.emplace_back(p.begin(), p.end()); });
  return out;
}

double conical_zeta_trunc(std::span<const unsigned> q, std::span<const IntVec> generators,
                          ConeRegion region, const TruncationPlan& plan) {
  check_cone(generators);
  if (q.size() != generators[0].size()) throw std::invalid_argument("q and generators differ in length");
  if (plan.bound < 1) throw std::invalid_argument("truncation bound must be positive");
  CompensatedSum sum;
  for_each_cone_point(generators, region, plan.bound, [&](std::span<const std::int64_t> p) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j] > 0 && p[j] == 0) throw std::domain_error("cone meets a pole of the weight");
    }
    sum += inv_monomial(p, q);
  });
  return sum.value();
}

namespace {

void check_plan(const TruncationPlan& plan) {
  if (plan.bound < 1) throw std::invalid_argument("truncation bound must be positive");
}

// sum over n in w^perp with all n_j != 0 of 1 / n^q.
TruncatedValue plain_sum(std::span<const std::int64_t> w, std::span<const unsigned> q,
                         const TruncationPlan& plan) {
  const bool odd = weight(q) % 2 == 1;
  if (odd && plan.pairing != TruncationPlan::Pairing::symmetric) {
    throw std::invalid_argument("odd weight needs symmetric pairing (principal value)");
  }
  const std::vector<bool> mask(w.size(), true);
  CompensatedSum sum;
  TruncatedValue out;
  if (plan.pairing == TruncationPlan::Pairing::symmetric) {
    detail::for_each_orthogonal(w, plan.bound, mask, true, [&](std::span<const std::int64_t> n) {
      out.points_used += 2;
      if (!odd) sum += 2.0 * inv_monomial(n, q);
    });
  } else {
    detail::for_each_orthogonal(w, plan.bound, mask, false, [&](std::span<const std::int64_t> n) {
      ++out.points_used;
      sum += inv_monomial(n, q);
    });
  }
  out.value = sum.value();
  return out;
}

void check_summable(std::size_t dims, std::span<const unsigned> q, const char* what) {
  const unsigned w = weight(q);
  if (dims >= 3) {
    for (unsigned x : q) {
      if (x == 0) throw std::invalid_argument(std::string(what) + ": zero exponent makes the sum diverge");
    }
  } else if (w % 2 == 0 && w < 2) {
    throw std::invalid_argument(std::string(what) + ": weight below 2 diverges");
  }
}

}  // namespace

TruncatedValue multiple_zeta_trunc(const NuVector& nu, std::span<const unsigned> q, std::size_t k,
                                   ZetaVariant variant, const TruncationPlan& plan) {
  check_plan(plan);
  if (q.size() != nu.size()) throw std::invalid_argument("q and nu must have the same length");
  if (variant != ZetaVariant::plain && k >= nu.size()) throw std::out_of_range("index k out of range");

  switch (variant) {
    case ZetaVariant::plain:
      check_summable(nu.size(), q, "plain zeta");
      return plain_sum(nu.entries(), q, plan);
    case ZetaVariant::Z: {
      if (nu.size() < 3) return {};
      const NuVector sub = nu.without(k);
      QVector qk;
      for (std::size_t j = 0; j < q.size(); ++j) {
        if (j != k) qk.push_back(q[j]);
      }
      check_summable(sub.size(), qk, "Z sum");
      return plain_sum(sub.entries(), qk, plan);
    }
    case ZetaVariant::Y:
    case ZetaVariant::full: {
      const QVector qk = masked(q, k);
      if (nu.size() >= 3) {
        for (std::size_t j = 0; j < q.size(); ++j) {
          if (j != k && q[j] < 2) {
            throw std::invalid_argument(
                "Y sums with an exponent below 2 off k diverge; use combined_Y_identity");
          }
        }
      } else if (weight(qk) == 0) {
        throw std::invalid_argument("Y sum with zero weight diverges");
      }
      if (weight(qk) % 2 == 1 && plan.pairing != TruncationPlan::Pairing::symmetric) {
        throw std::invalid_argument("odd weight needs symmetric pairing (principal value)");
      }
      TruncatedValue y = plain_sum(nu.entries(), qk, plan);
      if (variant == ZetaVariant::Y) return y;
      const TruncatedValue z = multiple_zeta_trunc(nu, q, k, ZetaVariant::Z, plan);
      CompensatedSum total;
      total += y.value;
      total += z.value;
      return {total.value(), y.points_used + z.points_used};
    }
  }
  return {};
}

std::pair<double, double> combined_Y_identity(const NuVector& nu, std::span<const unsigned> q,
                                              const TruncationPlan& plan) {
  check_plan(plan);
  if (q.size() != nu.size()) throw std::invalid_argument("q and nu must have the same length");
  if (count_ones(q) == 0) throw std::invalid_argument("combined identity needs some q_k = 1");
  for (unsigned x : q) {
    if (x == 0) throw std::invalid_argument("combined identity needs every q_j >= 1");
  }
  const bool odd = (weight(q) - 1) % 2 == 1;
  if (odd && plan.pairing != TruncationPlan::Pairing::symmetric) {
    throw std::invalid_argument("odd weight needs symmetric pairing (principal value)");
  }
  std::vector<std::int64_t> coeff(nu.size(), 0);
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (q[k] == 1) coeff[k] = nu[k];
  }
  const std::vector<bool> mask(nu.size(), true);
  CompensatedSum lhs;
  auto term = [&](std::span<const std::int64_t> n) {
    std::int64_t num = 0;
    for (std::size_t k = 0; k < n.size(); ++k) num += coeff[k] * n[k];
    return num == 0 ? 0.0 : static_cast<double>(num) * inv_monomial(n, q);
  };
  if (plan.pairing == TruncationPlan::Pairing::symmetric) {
    detail::for_each_orthogonal(nu.entries(), plan.bound, mask, true, [&](std::span<const std::int64_t> n) {
      if (!odd) lhs += 2.0 * term(n);
    });
  } else {
    detail::for_each_orthogonal(nu.entries(), plan.bound, mask, false,
                                [&](std::span<const std::int64_t> n) { lhs += term(n); });
  }

  CompensatedSum rhs;
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (q[k] <= 1) continue;
    QVector shifted(q.begin(), q.end());
    --shifted[k];
    rhs += -static_cast<double>(nu[k]) * plain_sum(nu.entries(), shifted, plan).value;
  }
  return {lhs.value(), rhs.value()};
}

OrthantSums orthant_sums(const NuVector& nu, std::span<const unsigned> q, std::size_t k,
                         const TruncationPlan& plan) {
  check_plan(plan);
  if (q.size() != nu.size()) throw std::invalid_argument("q and nu must have the same length");
  if (k >= nu.size()) throw std::out_of_range("index k out of range");
  if (nu.size() > 20) throw std::invalid_argument("too many coordinates for orthant sums");
  const QVector qk = masked(q, k);
  OrthantSums out;
  std::vector<CompensatedSum> y(std::size_t{1} << nu.size());
  std::vector<std::int64_t> m(nu.size());
  const std::vector<bool> all(nu.size(), true);
  detail::for_each_orthogonal(nu.entries(), plan.bound, all, false, [&](std::span<const std::int64_t> n) {
    std::size_t mask = 0;
    for (std::size_t j = 0; j < n.size(); ++j) {
      if (n[j] < 0) mask |= std::size_t{1} << j;
      m[j] = std::llabs(n[j]);
    }
    y[mask] += inv_monomial(m, qk);
  });
  for (const auto& s : y) out.y.push_back(s.value());

  if (nu.size() >= 3) {
    const NuVector sub = nu.without(k);
    QVector qsub;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j != k) qsub.push_back(q[j]);
    }
    std::vector<CompensatedSum> z(std::size_t{1} << sub.size());
    std::vector<std::int64_t> ms(sub.size());
    const std::vector<bool> all_sub(sub.size(), true);
    detail::for_each_orthogonal(sub.entries(), plan.bound, all_sub, false, [&](std::span<const std::int64_t> n) {
      std::size_t mask = 0;
      for (std::size_t j = 0; j < n.size(); ++j) {
        if (n[j] < 0) mask |= std::size_t{1} << j;
        ms[j] = std::llabs(n[j]);
      }
      z[mask] += inv_monomial(ms, qsub);
    });
    for (const auto& s : z) out.z.push_back(s.value());
  }
  return out;
}

int sigma(std::span<const unsigned> q, std::size_t k, std::size_t l) {
  if (q.size() != 3) throw std::invalid_argument("sigma needs three exponents");
  const Vec3& u = canonical_sign_vectors().at(l);
  int s = 1;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j != k && u[j] < 0 && q[j] % 2 == 1) s = -s;
  }
  return s;
}

namespace {

void require_r2(const NuVector& nu, std::span<const unsigned> q) {
  if (nu.r() != 2) throw std::invalid_argument("this operation needs nu with 3 entries");
  if (q.size() != 3) throw std::invalid_argument("q must have 3 entries");
}

}  // namespace

SymbolicValue Z_closed_r2(const NuVector& nu, std::span<const unsigned> q, std::size_t k) {
  require_r2(nu, q);
  if (k > 2) throw std::out_of_range("index k out of range");
  const QVector qk = masked(q, k);
  const unsigned w = weight(qk);
  if (w % 2 == 1) return SymbolicValue();
  if (w < 2) throw std::invalid_argument("Z sum with weight below 2 diverges");
  const Vec3 v = r2_cone_generators(nu)[k];
  Rational denom(1);
  for (std::size_t j = 0; j < 3; ++j) {
    if (j != k) denom *= pow(Rational(v[j]), qk[j]);
  }
  int sig = 0;
  for (std::size_t l = 0; l < 3; ++l) {
    if (l != k) sig += sigma(q, k, l);
  }
  return riemann_zeta_even_exact(w) * Rational(Rational(sig) / denom);
}

namespace {

// sum_l sign_l (sum_{interior rays} f(v) + sum_{open cones} f(m) / zeta_w)
template <typename SignOf, typename Weight>
double fan_sum(const NuVector& nu, const TruncationPlan& plan, double zeta_w, SignOf&& sign_of,
               Weight&& f) {
  CompensatedSum total;
  std::array<std::int64_t, 3> m{};
  for (std::size_t l = 0; l < 3; ++l) {
    const ConeFan fan = hj_generators(nu, l);
    CompensatedSum rays;
    CompensatedSum cones;
    for (std::size_t i = 1; i + 1 < fan.generators.size(); ++i) {
      const Vec3& g = fan.generators[i];
      rays += f(std::span<const std::int64_t>(g), l);
    }
    for (std::size_t i = 0; i + 1 < fan.generators.size(); ++i) {
      const Vec3& g = fan.generators[i];
      const Vec3& h = fan.generators[i + 1];
      for (std::int64_t a = 1; a <= plan.bound; ++a) {
        for (std::int64_t b = 1; b <= plan.bound; ++b) {
          for (std::size_t j = 0; j < 3; ++j) m[j] = a * g[j] + b * h[j];
          cones += f(std::span<const std::int64_t>(m), l);
        }
      }
    }
    const double part = rays.value() + cones.value() / zeta_w;
    total += static_cast<double>(sign_of(l)) * part;
  }
  return total.value();
}

}  // namespace

double q_sum(const NuVector& nu, std::span<const unsigned> q, std::size_t k, const TruncationPlan& plan) {
  require_r2(nu, q);
  check_plan(plan);
  if (k > 2) throw std::out_of_range("index k out of range");
  const QVector qk = masked(q, k);
  const unsigned w = weight(qk);
  if (w < 2) throw std::invalid_argument("Q sum needs weight >= 2");
  return fan_sum(
      nu, plan, riemann_zeta(w), [&](std::size_t l) { return sigma(q, k, l); },
      [&](std::span<const std::int64_t> m, std::size_t) { return inv_monomial(m, qk); });
}

double q_total(const NuVector& nu, std::span<const unsigned> q, const TruncationPlan& plan) {
  require_r2(nu, q);
  check_plan(plan);
  if (count_ones(q) == 0) return 0.0;
  const unsigned w = weight(q) - 1;
  if (w < 2) throw std::invalid_argument("Q sum needs weight >= 2");
  // coeff[l][k] = nu_k sigma_{k,l} for q_k = 1; the sign is folded in here.
  std::array<std::array<std::int64_t, 3>, 3> coeff{};
  for (std::size_t l = 0; l < 3; ++l) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (q[k] == 1) coeff[l][k] = nu[k] * sigma(q, k, l);
    }
  }
  return fan_sum(
      nu, plan, riemann_zeta(w), [](std::size_t) { return 1; },
      [&](std::span<const std::int64_t> m, std::size_t l) {
        const std::int64_t num = coeff[l][0] * m[0] + coeff[l][1] * m[1] + coeff[l][2] * m[2];
        return num == 0 ? 0.0 : static_cast<double>(num) * inv_monomial(m, q);
      });
}

namespace {

// (1 - (-1)^{1_q}) / 2^{1_q} prod_{q_j != 1} B_{q_j}
Rational bernoulli_constant(std::span<const unsigned> q) {
  const unsigned ones = count_ones(q);
  if (ones % 2 == 0) return Rational(0);
  Rational c = Rational(2) / pow(Rational(2), ones);
  for (unsigned x : q) {
    if (x != 1) c *= bernoulli_number(x);
  }
  return c;
}

Scalar bernoulli_lhs(const NuVector& nu, std::span<const unsigned> q) {
  std::vector<PeriodicFn> fs;
  for (unsigned x : q) fs.push_back(PeriodicFn::bernoulli(x));
  return reciprocity_lhs(fs, nu);
}

void check_bernoulli_q(const NuVector& nu, std::span<const unsigned> q) {
  if (q.size() != nu.size()) throw std::invalid_argument("q and nu must have the same length");
  if (nu.r() < 1) throw std::invalid_argument("Bernoulli reciprocity needs at least two entries in nu");
  for (unsigned x : q) {
    if (x == 0) throw std::invalid_argument("Bernoulli reciprocity needs every q_j >= 1");
  }
  if (count_ones(q) > 0 && weight(q) < 3) {
    throw std::invalid_argument("Bernoulli reciprocity needs |q| - 1 >= 2 when some q_j = 1");
  }
}

}  // namespace

ReciprocityReport bernoulli_recip_general(const NuVector& nu, std::span<const unsigned> q,
                                          const TruncationPlan& plan) {
  check_bernoulli_q(nu, q);
  check_plan(plan);
  const Scalar lhs = bernoulli_lhs(nu, q);
  const Rational c = bernoulli_constant(q);
  const unsigned qbar = weight(q) - 1;
  if (count_ones(q) == 0 || qbar % 2 == 1) {
    return make_report(lhs, Rational(-c), "bernoulli-fourier", plan.bound);
  }

  Integer fac_prod(1);
  for (unsigned x : q) fac_prod *= factorial(x);
  const SymbolicValue prefactor = SymbolicValue(Rational(nu.r() % 2 == 0 ? fac_prod : Integer(-fac_prod))) *
                                  SymbolicValue(Rational(2), 1, 1).pow(qbar).inverse();

  if (nu.r() == 1) {
    const std::array<std::int64_t, 2> v{nu[1], -nu[0]};
    SymbolicValue total;
    for (std::size_t k = 0; k < 2; ++k) {
      if (q[k] != 1) continue;
      const auto sum = SymbolicValue::try_add(total, line_zeta_exact(masked(q, k), v) * Rational(nu[k]));
      if (!sum) throw std::logic_error("unlike zeta terms");
      total = *sum;
    }
    const SymbolicValue value = prefactor * total;
    if (!value.is_rational()) throw std::logic_error("prefactor did not cancel");
    return make_report(lhs, Rational(value.coeff() - c), "bernoulli-fourier", plan.bound);
  }

  const bool all_ones = count_ones(q) == q.size();
  if (nu.r() == 2) {
    SymbolicValue z_total;
    for (std::size_t k = 0; k < 3; ++k) {
      if (q[k] != 1) continue;
      const auto sum = SymbolicValue::try_add(z_total, Z_closed_r2(nu, q, k) * Rational(nu[k]));
      if (!sum) throw std::logic_error("unlike zeta terms");
      z_total = *sum;
    }
    const SymbolicValue exact = prefactor * z_total;
    if (!exact.is_rational()) throw std::logic_error("prefactor did not cancel");
    const Rational exact_part = exact.coeff() - c;
    // <nu, n> = 0 makes the merged Y weight vanish identically when q = (1, ..., 1).
    if (all_ones) return make_report(lhs, exact_part, "bernoulli-fourier", plan.bound);
    const double y = combined_Y_identity(nu, q, plan).first;
    const double rhs = exact_part.get_d() + (prefactor.numeric() * y).real();
    return make_report(lhs, rhs, "bernoulli-fourier", plan.bound);
  }

  CompensatedSum zeta_sum;
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (q[k] != 1) continue;
    zeta_sum += static_cast<double>(nu[k]) *
                multiple_zeta_trunc(nu, q, k, ZetaVariant::Z, plan).value;
  }
  if (!all_ones) zeta_sum += combined_Y_identity(nu, q, plan).first;
  const double rhs = (prefactor.numeric() * zeta_sum.value()).real() - c.get_d();
  return make_report(lhs, rhs, "bernoulli-fourier", plan.bound);
}

ReciprocityReport bernoulli_recip_r2(const NuVector& nu, std::span<const unsigned> q,
                                     const TruncationPlan& plan) {
  require_r2(nu, q);
  check_bernoulli_q(nu, q);
  check_plan(plan);
  const Scalar lhs = bernoulli_lhs(nu, q);
  const Rational c = bernoulli_constant(q);
  const unsigned qbar = weight(q) - 1;
  if (count_ones(q) == 0 || qbar % 2 == 1) {
    return make_report(lhs, Rational(-c), "bernoulli-r2", plan.bound);
  }
  Rational scale = bernoulli_number(qbar) / Rational(factorial(qbar));
  for (unsigned x : q) {
    if (x > 1) scale *= Rational(factorial(x));
  }
  const auto v = r2_cone_generators(nu);
  Rational z_part(0);
  for (std::size_t k = 0; k < 3; ++k) {
    if (q[k] != 1) continue;
    Rational denom(1);
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != k) denom *= pow(Rational(v[k][j]), q[j]);
    }
    int sig = 0;
    for (std::size_t l = 0; l < 3; ++l) {
      if (l != k) sig += sigma(q, k, l);
    }
    z_part += Rational(nu[k]) * Rational(sig) / (2 * denom);
  }
  const Rational exact_part = -scale * z_part - c;
  // The Q-total vanishes pointwise for q = (1, 1, 1).
  if (count_ones(q) == 3) return make_report(lhs, exact_part, "bernoulli-r2", plan.bound);
  const double rhs = exact_part.get_d() - scale.get_d() * q_total(nu, q, plan);
  return make_report(lhs, rhs, "bernoulli-r2", plan.bound);
}

BoundReport bound_report(const NuVector& nu, std::span<const unsigned> q, std::size_t k,
                         const TruncationPlan& plan) {
  if (q.size() != nu.size()) throw std::invalid_argument("q and nu must have the same length");
  if (k >= nu.size()) throw std::out_of_range("index k out of range");
  if (nu.size() < 2) throw std::invalid_argument("bounds need at least two entries in nu");
  for (unsigned x : q) {
    if (x < 2) throw std::invalid_argument("bounds need every q_j > 1");
  }
  BoundReport rep;
  rep.l = k == 0 ? 1 : 0;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (j != k && nu[j] < nu[rep.l]) rep.l = j;
  }
  rep.product_zeta = 1.0;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (j != k) rep.product_zeta *= riemann_zeta(q[j]);
  }
  const double nu_l_pow = std::pow(static_cast<double>(nu[rep.l]), static_cast<double>(q[rep.l]));
  rep.y_bound = 2.0 * nu_l_pow * rep.product_zeta;
  rep.z_bound = rep.product_zeta;
  rep.zeta_bound = std::pow(2.0, static_cast<double>(nu.r())) * (1.0 + 4.0 * nu_l_pow) * rep.product_zeta;
  const OrthantSums os = orthant_sums(nu, q, k, plan);
  for (double y : os.y) rep.max_y = std::max(rep.max_y, y);
  for (double z : os.z) rep.max_z = std::max(rep.max_z, z);
  rep.abs_zeta = std::abs(multiple_zeta_trunc(nu, q, k, ZetaVariant::full, plan).value);
  rep.ok = rep.max_y <= rep.y_bound && rep.max_z <= rep.z_bound && rep.abs_zeta <= rep.zeta_bound;
  return rep;
}

bool bound_check(const NuVector& nu, std::span<const unsigned> q, std::size_t k,
                 const TruncationPlan& plan) {
  return bound_report(nu, q, k, plan).ok;
}

}  // namespace recip
