#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "oracles.hpp"
#include "recip/dedekind.hpp"
#include "recip/lattice.hpp"
#include "recip/zeta.hpp"

using namespace recip;

namespace {

TruncationPlan plan(std::int64_t n, TruncationPlan::Pairing p = TruncationPlan::Pairing::symmetric) {
  TruncationPlan t;
  t.bound = n;
  t.pairing = p;
  return t;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("q vector helpers") {
  const QVector q{1, 2, 3};
  CHECK(weight(q) == 6);
  CHECK(masked(q, 1) == QVector{1, 0, 3});
  CHECK(count_ones(QVector{1, 1, 2}) == 2);
}

TEST_CASE("Riemann zeta") {
  CHECK(riemann_zeta_even_exact(2) == SymbolicValue(make_rational(1, 6), 2));
  CHECK(riemann_zeta_even_exact(4) == SymbolicValue(make_rational(1, 90), 4));
  CHECK(riemann_zeta(2) == doctest::Approx(oracle::zeta2()).epsilon(1e-15));
  CHECK(rel(riemann_zeta(3), oracle::zeta3) < 1e-14);
  CHECK(rel(riemann_zeta(5), oracle::zeta5) < 1e-14);
  CHECK(rel(riemann_zeta_numeric(4.0), oracle::zeta4()) < 1e-14);
  CHECK(rel(riemann_zeta_numeric(1.5), 2.6123753486854883433) < 1e-12);
}

TEST_CASE("ray and line zeta values") {
  const unsigned q[2] = {2, 2};
  const std::int64_t v[2] = {1, 2};
  const SymbolicValue ray = ray_zeta_exact(q, v);
  CHECK(ray == SymbolicValue(make_rational(1, 360), 4));
  const std::vector<IntVec> gens{{1, 2}};
  const double trunc = conical_zeta_trunc(q, gens, ConeRegion::closed, plan(10000));
  CHECK(rel(trunc, ray.numeric().real()) < 1e-8);
  const unsigned odd[2] = {1, 2};
  CHECK_THROWS_AS(ray_zeta_exact(odd, v), std::domain_error);
  CHECK(line_zeta_exact(odd, v).is_zero());
  const std::int64_t w[2] = {3, -2};
  const unsigned q02[2] = {0, 2};
  CHECK(line_zeta_exact(q02, w) == SymbolicValue(make_rational(1, 12), 2));
}

TEST_CASE("conical sums") {
  const unsigned q[2] = {2, 2};
  const std::vector<IntVec> orthant{{1, 0}, {0, 1}};
  const double v = conical_zeta_trunc(q, orthant, ConeRegion::relative_interior, plan(10000));
  CHECK(rel(v, oracle::zeta2() * oracle::zeta2()) < 1e-3);
  CHECK_THROWS_AS(conical_zeta_trunc(q, orthant, ConeRegion::closed, plan(10)), std::domain_error);
  // zero exponent on a vanishing coordinate counts as 1
  const unsigned q20[2] = {2, 0};
  const std::vector<IntVec> axis{{1, 0}};
  CHECK(rel(conical_zeta_trunc(q20, axis, ConeRegion::closed, plan(100000)), oracle::zeta2()) < 1e-4);
  const std::vector<IntVec> thick{{1, 0}, {1, 2}};
  CHECK_THROWS_AS(conical_zeta_trunc(q, thick, ConeRegion::relative_interior, plan(10)), std::invalid_argument);
  const auto pts = cone_lattice_points(orthant, ConeRegion::relative_interior, 3);
  CHECK(pts.size() == 9);
  CHECK(cone_lattice_points(orthant, ConeRegion::closed, 3).size() == 15);
}

TEST_CASE("multiple zeta truncations") {
  const NuVector nu23({2, 3});
  const QVector q12{1, 2};
  const double full = multiple_zeta_trunc(nu23, q12, 0, ZetaVariant::full, plan(10000)).value;
  CHECK(std::abs(full - std::pow(std::numbers::pi, 2) / 12) < 5e-4);

  const NuVector nu({2, 3, 5});
  for (std::size_t k = 0; k < 3; ++k) {
    const QVector q{2, 3, 2};
    if (weight(masked(q, k)) % 2 == 1) {
      CHECK(std::abs(multiple_zeta_trunc(nu, q, k, ZetaVariant::full, plan(60)).value) <= 1e-12);
      CHECK_THROWS_AS(multiple_zeta_trunc(nu, q, k, ZetaVariant::full, plan(60, TruncationPlan::Pairing::none)),
                      std::invalid_argument);
    }
  }
  const QVector q{2, 2, 3};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto z = multiple_zeta_trunc(nu, q, k, ZetaVariant::Z, plan(200));
    QVector qk;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j != k) qk.push_back(q[j]);
    }
    const auto p = multiple_zeta_trunc(nu.without(k), qk, 0, ZetaVariant::plain, plan(200));
    CHECK(z.value == p.value);
    CHECK(z.points_used == p.points_used);
  }
  CHECK_THROWS_AS(multiple_zeta_trunc(nu, QVector{2, 1, 2}, 0, ZetaVariant::Y, plan(50)), std::invalid_argument);
  const auto y = multiple_zeta_trunc(nu, QVector{1, 2, 2}, 0, ZetaVariant::Y, plan(50));
  const auto zz = multiple_zeta_trunc(nu, QVector{1, 2, 2}, 0, ZetaVariant::Z, plan(50));
  const auto f = multiple_zeta_trunc(nu, QVector{1, 2, 2}, 0, ZetaVariant::full, plan(50));
  CHECK(rel(f.value, y.value + zz.value) < 1e-14);
}

TEST_CASE("combined Y identity") {
  const auto [l0, r0] = combined_Y_identity(NuVector({2, 3, 5}), QVector{1, 1, 1}, plan(100));
  CHECK(l0 == 0.0);
  CHECK(r0 == 0.0);
  const auto [lhs, rhs] = combined_Y_identity(NuVector({2, 3, 5}), QVector{1, 2, 2}, plan(300));
  CHECK(rel(lhs, rhs) < 1e-3);
  const auto [a, b] = combined_Y_identity(NuVector({1, 2, 3}), QVector{1, 1, 2}, plan(300));
  CHECK(rel(a, b) < 1e-3);
  CHECK_THROWS_AS(combined_Y_identity(NuVector({2, 3, 5}), QVector{2, 2, 2}, plan(10)), std::invalid_argument);
}

TEST_CASE("orthant decomposition") {
  const NuVector nu({2, 3, 5});
  const QVector q{2, 3, 2};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto os = orthant_sums(nu, q, k, plan(150));
    const QVector qk = masked(q, k);
    double signed_sum = 0;
    for (std::size_t mask = 0; mask < os.y.size(); ++mask) {
      int sign = 1;
      for (std::size_t j = 0; j < 3; ++j) {
        if ((mask >> j & 1) && qk[j] % 2 == 1) sign = -sign;
      }
      signed_sum += sign * os.y[mask];
    }
    const double y = multiple_zeta_trunc(nu, q, k, ZetaVariant::Y, plan(150)).value;
    CHECK(std::abs(signed_sum - y) <= 1e-12 * std::max(1.0, std::abs(y)));
    CHECK(os.y[0] == 0.0);
    CHECK(os.y[7] == 0.0);
  }
}

TEST_CASE("open subdivision covers the positive part of each plane") {
  const NuVector nu({2, 3, 5});
  const std::int64_t box = 40;
  for (std::size_t l = 0; l < 3; ++l) {
    const auto& u = canonical_sign_vectors()[l];
    std::set<IntVec> direct;
    for (auto& n : oracle::orthogonal_box({u[0] * 2, u[1] * 3, u[2] * 5}, box)) {
      if (n[0] > 0 && n[1] > 0 && n[2] > 0) direct.insert(n);
    }
    const ConeFan fan = hj_generators(nu, l);
    std::multiset<IntVec> pieces;
    auto add = [&](const std::vector<IntVec>& pts) {
      for (const auto& p : pts) {
        if (std::all_of(p.begin(), p.end(), [&](std::int64_t x) { return x > 0 && x <= box; })) pieces.insert(p);
      }
    };
    for (std::size_t i = 0; i + 1 < fan.generators.size(); ++i) {
      const std::vector<IntVec> g{IntVec(fan.generators[i].begin(), fan.generators[i].end()),
                                  IntVec(fan.generators[i + 1].begin(), fan.generators[i + 1].end())};
      add(cone_lattice_points(g, ConeRegion::relative_interior, box));
    }
    for (std::size_t i = 1; i + 1 < fan.generators.size(); ++i) {
      const std::vector<IntVec> g{IntVec(fan.generators[i].begin(), fan.generators[i].end())};
      add(cone_lattice_points(g, ConeRegion::relative_interior, box));
    }
    CHECK(pieces.size() == direct.size());
    CHECK(std::set<IntVec>(pieces.begin(), pieces.end()) == direct);
  }
}

TEST_CASE("sigma and the closed Z part") {
  // q = (1,1,1): sigma_{k,l} is the product of the two signs of u_l off k
  const QVector ones{1, 1, 1};
  const int expected[3][3] = {{1, -1, -1}, {1, -1, -1}, {1, -1, -1}};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t l = 0; l < 3; ++l) {
      const auto& u = canonical_sign_vectors()[l];
      int s = 1;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j != k) s *= u[j];
      }
      CHECK(sigma(ones, k, l) == s);
    }
  }
  CHECK(sigma(ones, 0, 0) == expected[0][0]);
  CHECK(sigma(QVector{2, 2, 2}, 0, 1) == 1);

  const NuVector nu({2, 3, 5});
  const QVector q{1, 2, 1};
  const double closed = Z_closed_r2(nu, q, 1).numeric().real();
  const double trunc = multiple_zeta_trunc(nu, q, 1, ZetaVariant::Z, plan(10000)).value;
  // The sum runs over t (5,-2), |t| <= 2000, so it misses the tail
  // sum_{t > 2000} 1/t^2 of zeta(2); the plain truncation is only O(1/N).
  CHECK(rel(trunc, closed) < 4e-4);
  const double T = 2000;
  const double tail = 1 / T - 1 / (2 * T * T) + 1 / (6 * T * T * T);
  CHECK(rel(trunc, closed * (1 - tail / oracle::zeta2())) < 1e-9);
  CHECK(Z_closed_r2(nu, QVector{1, 2, 2}, 1).is_zero());
}

TEST_CASE("Q total vanishes at q = (1,1,1)") {
  CHECK(std::abs(q_total(NuVector({2, 3, 5}), QVector{1, 1, 1}, plan(300))) < 1e-12);
  CHECK(std::abs(q_total(NuVector({3, 4, 5}), QVector{1, 1, 1}, plan(300))) < 1e-12);
}

TEST_CASE("Bernoulli reciprocity through zeta values") {
  const auto all_big = bernoulli_recip_general(NuVector({2, 3, 5}), QVector{2, 3, 2}, plan(50));
  CHECK(std::get<Rational>(all_big.lhs) == 0);
  CHECK(to_complex(all_big.rhs) == std::complex<double>(0, 0));

  const auto ded = bernoulli_recip_general(NuVector({2, 3, 5}), QVector{1, 1, 1}, plan(200));
  CHECK(std::get<Rational>(ded.lhs) == make_rational(-13, 90));
  CHECK(std::abs(to_complex(ded.residual)) < 1e-12);

  const auto r2 = bernoulli_recip_r2(NuVector({2, 3, 5}), QVector{1, 1, 1}, plan(200));
  CHECK(is_exact(r2.residual));
  CHECK(std::get<Rational>(r2.residual) == 0);

  for (const auto& t : oracle::coprime_tuples(2, 12)) {
    for (unsigned q = 2; q <= 8; ++q) {
      const NuVector nu(t);
      const auto rep = bernoulli_recip_general(nu, QVector{1, q}, plan(100));
      const Rational closed = r1_closed_form(nu, q);
      if (q % 2 == 1) {
        CHECK(closed == 0);
        CHECK(std::abs(to_complex(rep.rhs)) == 0.0);
      } else {
        CHECK(std::abs(to_complex(rep.rhs).real() - closed.get_d()) <= 1e-8 * std::abs(closed.get_d()));
      }
    }
  }
  CHECK_THROWS_AS(bernoulli_recip_general(NuVector({2, 3, 5}), QVector{0, 1, 2}, plan(10)), std::invalid_argument);
}

TEST_CASE("bounds") {
  CHECK(bound_check(NuVector({2, 3, 5}), QVector{2, 2, 2}, 0, plan(500)));
  CHECK(bound_check(NuVector({3, 4, 5}), QVector{3, 2, 2}, 1, plan(500)));
  const BoundReport r = bound_report(NuVector({2, 3, 5}), QVector{2, 2, 2}, 0, plan(100));
  CHECK(r.l == 1);
  CHECK(rel(r.product_zeta, oracle::zeta2() * oracle::zeta2()) < 1e-14);
  CHECK_THROWS_AS(bound_check(NuVector({2, 3, 5}), QVector{1, 2, 2}, 0, plan(10)), std::invalid_argument);
}
