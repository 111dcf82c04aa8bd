#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "recip/dedekind.hpp"

using namespace recip;

namespace {

const double two_pi = 2.0 * std::numbers::pi;

Rational exact(const Scalar& s) { return std::get<Rational>(s); }

oracle::ExactFn b(unsigned q) {
  return [q](const Rational& x) { return oracle::periodic_bernoulli(q, x); };
}

// {x} - a, principal value 1/2 - a at the integers.
oracle::ExactFn shifted(Rational a) {
  return [a](const Rational& x) -> Rational {
    if (oracle::integral(x)) return Rational(1, 2) - a;
    return oracle::frac_part(x) - a;
  };
}

Rational brute_lhs(const std::vector<oracle::ExactFn>& f, const std::vector<Rational>& deltas,
                   const std::vector<std::int64_t>& nu) {
  Rational total = 0;
  for (std::size_t k = 0; k < nu.size(); ++k) total += deltas[k] * oracle::dedekind_sum(f, nu, k);
  return total;
}

}  // namespace

TEST_CASE("nu vector validation") {
  CHECK_NOTHROW(NuVector({2, 3, 5}));
  CHECK_NOTHROW(NuVector({1, 4}));
  CHECK_THROWS_AS(NuVector({}), std::invalid_argument);
  CHECK_THROWS_AS(NuVector({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(NuVector({3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(NuVector({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(NuVector({-2, 3}), std::invalid_argument);
  const NuVector nu({2, 3, 5});
  CHECK(nu.r() == 2);
  CHECK(nu.without(1) == NuVector({2, 5}));
  CHECK(parse_nu_vector("2, 3,5") == nu);
  CHECK(to_string(nu) == "2,3,5");
  CHECK(parse_nu_vector(to_string(nu)) == nu);
  CHECK_THROWS_AS(parse_nu_vector("2,,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_nu_vector("2,3x"), std::invalid_argument);
  CHECK(parse_int_list("1,-2,0") == std::vector<std::int64_t>{1, -2, 0});
}

TEST_CASE("dedekind sums match direct summation") {
  CHECK(exact(dedekind_sum(std::vector<PeriodicFn>{PeriodicFn::bernoulli(1)}, NuVector({7}), 0)) == 6);
  const std::vector<std::int64_t> nu{3, 7, 10};
  const std::vector<PeriodicFn> fs{PeriodicFn::bernoulli(1), PeriodicFn::bernoulli(2),
                                   PeriodicFn::shifted_frac(make_rational(1, 3))};
  const std::vector<oracle::ExactFn> of{b(1), b(2), shifted(make_rational(1, 3))};
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(exact(dedekind_sum(fs, NuVector(nu), k)) == oracle::dedekind_sum(of, nu, k));
  }
}

TEST_CASE("classical Dedekind sum s(1, c)") {
  const std::vector<PeriodicFn> fs(3, PeriodicFn::bernoulli(1));
  for (std::int64_t c = 2; c <= 40; ++c) {
    // s(1, c) = sum_i b1(i/c) b1(i/c): take nu = (1, c + 1, c), k = 2.
    CHECK(exact(dedekind_sum(fs, NuVector({1, c + 1, c}), 2)) == oracle::classical_s1(c));
  }
}

TEST_CASE("Dedekind-Rademacher on small triples") {
  const std::vector<PeriodicFn> fs(3, PeriodicFn::bernoulli(1));
  for (const auto& t : oracle::coprime_tuples(3, 13)) {
    const NuVector nu(t);
    const Rational lhs = exact(reciprocity_lhs(fs, nu));
    CHECK(lhs == oracle::rademacher(t[0], t[1], t[2]));
    CHECK(lhs == brute_lhs({b(1), b(1), b(1)}, {1, 1, 1}, t));
    CHECK(rademacher_rhs(nu) == oracle::rademacher(t[0], t[1], t[2]));
  }
  CHECK(rademacher_rhs(NuVector({2, 3, 5})) == make_rational(-13, 90));
  CHECK_THROWS_AS(rademacher_rhs(NuVector({2, 3})), std::invalid_argument);
}

TEST_CASE("shifted parametric extension") {
  std::mt19937 rng(11);
  const auto triples = oracle::coprime_tuples(3, 12);
  std::uniform_int_distribution<std::size_t> pick(0, triples.size() - 1);
  std::uniform_int_distribution<int> num(1, 6);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& t = triples[pick(rng)];
    std::array<Rational, 3> a;
    std::vector<PeriodicFn> fs;
    std::vector<oracle::ExactFn> of;
    for (auto& x : a) {
      x = make_rational(num(rng), 7);
      fs.push_back(PeriodicFn::shifted_frac(x));
      of.push_back(shifted(x));
    }
    const NuVector nu(t);
    CHECK(shifted_rhs(nu, a) == brute_lhs(of, {1, 1, 1}, t));
    CHECK(exact(reciprocity_lhs(fs, nu)) == shifted_rhs(nu, a));
  }
  // a = 1/2 turns every factor into b_1
  const std::array<Rational, 3> half{make_rational(1, 2), make_rational(1, 2), make_rational(1, 2)};
  CHECK(shifted_rhs(NuVector({2, 3, 5}), half) == make_rational(-13, 90));
}

TEST_CASE("r = 1 closed form") {
  for (const auto& t : oracle::coprime_tuples(2, 15)) {
    for (unsigned q = 1; q <= 7; ++q) {
      const NuVector nu(t);
      const std::vector<PeriodicFn> fs{PeriodicFn::bernoulli(1), PeriodicFn::bernoulli(q)};
      const Rational brute = brute_lhs({b(1), b(q)}, {1, q == 1 ? 1 : 0}, t);
      CHECK(exact(reciprocity_lhs(fs, nu)) == brute);
      CHECK(r1_closed_form(nu, q) == brute);
    }
  }
  CHECK(r1_closed_form(NuVector({2, 3}), 2) == make_rational(-1, 12));
}

TEST_CASE("trig closed forms against float sums") {
  const oracle::FloatFn e = [](double x) { return std::polar(1.0, two_pi * x); };
  const oracle::FloatFn c = [](double x) { return std::complex<double>(std::cos(two_pi * x), 0); };
  const oracle::FloatFn s = [](double x) { return std::complex<double>(std::sin(two_pi * x), 0); };
  for (std::size_t len = 2; len <= 3; ++len) {
    for (const auto& t : oracle::coprime_tuples(len, 9)) {
      const NuVector nu(t);
      for (std::size_t k = 0; k < len; ++k) {
        const auto ref_e = oracle::dedekind_sum_float(std::vector<oracle::FloatFn>(len, e), t, k);
        const auto ref_c = oracle::dedekind_sum_float(std::vector<oracle::FloatFn>(len, c), t, k);
        const auto ref_s = oracle::dedekind_sum_float(std::vector<oracle::FloatFn>(len, s), t, k);
        CHECK(std::abs(ref_e - std::complex<double>(static_cast<double>(exp_closed_form(nu, k)), 0)) < 1e-9);
        CHECK(std::abs(ref_c.real() - cos_closed_form(nu, k).get_d()) < 1e-9);
        CHECK(std::abs(ref_s - sin_closed_form(nu, k).numeric()) < 1e-9);
        const auto lib = dedekind_sum(std::vector<PeriodicFn>(len, PeriodicFn::cos()), nu, k);
        CHECK(std::abs(to_complex(lib) - ref_c) < 1e-9);
      }
    }
  }
  CHECK(sin_closed_form(NuVector({4}), 0) == SymbolicValue(Rational(3)));
}

TEST_CASE("Franel integrals") {
  const unsigned q11[2] = {1, 1};
  for (std::int64_t m = 1; m <= 12; ++m) {
    for (std::int64_t n = 1; n <= 12; ++n) {
      const std::int64_t mn[2] = {m, n};
      CHECK(franel_integral(q11, mn) == oracle::franel(m, n));
    }
  }
  const unsigned q[3] = {1, 2, 3};
  const std::int64_t nus[3] = {2, 3, 5};
  const double numeric = oracle::midpoint(
      [&](double x) {
        double p = 1;
        for (int j = 0; j < 3; ++j) {
          const double y = nus[j] * x - std::floor(nus[j] * x);
          p *= oracle::bernoulli_poly(q[j], Rational(y)).get_d();
        }
        return p;
      },
      30 * 4000);
  CHECK(franel_integral(q, nus).get_d() == doctest::Approx(numeric).epsilon(1e-6));
  const std::int64_t bad[2] = {0, 3};
  CHECK_THROWS_AS(franel_integral(q11, bad), std::invalid_argument);
}

TEST_CASE("integral reciprocity for polynomial families") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t len = 2 + trial % 3;
    const auto tuples = oracle::coprime_tuples(len, 8);
    const auto& t = tuples[rng() % tuples.size()];
    std::vector<PeriodicFn> fs;
    for (std::size_t j = 0; j < len; ++j) {
      std::vector<Rational> c(1 + rng() % 4);
      for (auto& x : c) x = make_rational(coef(rng), 1 + rng() % 3);
      if (c.size() == 1) c.push_back(Rational(1));
      fs.push_back(PeriodicFn::poly_frac(c));
    }
    const NuVector nu(t);
    CHECK(exact(reciprocity_lhs(fs, nu)) == integral_recip_rhs(fs, nu));
  }
  CHECK_THROWS_AS(integral_recip_rhs(std::vector<PeriodicFn>{PeriodicFn::sin(), PeriodicFn::cos()}, NuVector({2, 3})),
                  std::invalid_argument);
}

TEST_CASE("power basis check") {
  const unsigned q[3] = {2, 1, 3};
  const ReciprocityReport rep = power_basis_recip_check(q, NuVector({3, 4, 5}));
  CHECK(exact(rep.residual) == 0);
  CHECK(rep.method == "power-basis");
  const std::vector<PeriodicFn> fs{PeriodicFn::power_frac(2), PeriodicFn::power_frac(1), PeriodicFn::power_frac(3)};
  CHECK(exact(rep.lhs) == exact(reciprocity_lhs(fs, NuVector({3, 4, 5}))));
}
