#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "recip/bernoulli.hpp"
#include "recip/polynomial.hpp"
#include "recip/rational.hpp"
#include "recip/scalar.hpp"
#include "recip/summation.hpp"
#include "recip/symbolic.hpp"

using namespace recip;

TEST_CASE("floor and frac of negative rationals") {
  CHECK(floor(Rational(-7, 3)) == -3);
  CHECK(frac(Rational(-7, 3)) == Rational(2, 3));
  CHECK(frac(Rational(5)) == 0);
  CHECK(residue_mod(Rational(-1, 2), 3) == Rational(5, 2));
  CHECK_THROWS_AS(residue_mod(Rational(1), 0), std::invalid_argument);
  for (int num = -40; num <= 40; ++num) {
    for (int den = 1; den <= 7; ++den) {
      const Rational x = make_rational(num, den);
      CHECK(frac(x) == oracle::frac_part(oracle::ratio(num, den)));
    }
  }
}

TEST_CASE("gcd and lcm") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(-4, 6) == 2);
  CHECK(gcd(0, 5) == 5);
  CHECK(lcm(4, 6) == 12);
}

TEST_CASE("rational text round trip") {
  for (const char* s : {"0", "-3", "7/9", "-22/7"}) {
    CHECK(to_string(parse_rational(s)) == s);
  }
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("polynomial calculus") {
  const Polynomial p({Rational(1), Rational(-2), Rational(3)});  // 1 - 2x + 3x^2
  CHECK(p.degree() == 2);
  CHECK(p(Rational(2)) == 9);
  CHECK(p.derivative() == Polynomial({Rational(-2), Rational(6)}));
  CHECK(p.antiderivative().derivative() == p);
  CHECK(p.integrate(Rational(0), Rational(1)) == 1);
  const Polynomial sq = p * p;
  for (int x = -3; x <= 3; ++x) CHECK(sq(Rational(x)) == p(Rational(x)) * p(Rational(x)));
  const Polynomial shifted = p.compose_affine(Rational(2), Rational(1, 2));
  for (int x = -3; x <= 3; ++x) CHECK(shifted(Rational(x)) == p(Rational(2 * x) + Rational(1, 2)));
  CHECK(Polynomial(std::vector<Rational>{}).degree() < 0);
}

TEST_CASE("bernoulli numbers agree with the Akiyama-Tanigawa table") {
  for (unsigned n = 0; n <= 40; ++n) {
    CAPTURE(n);
    CHECK(bernoulli_number(n) == oracle::bernoulli_number(n));
  }
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
}

TEST_CASE("bernoulli polynomial identities") {
  for (unsigned q = 0; q <= 12; ++q) {
    const Polynomial& b = bernoulli_polynomial(q);
    CHECK(b.degree() == static_cast<int>(q));
    if (q >= 1) CHECK(b.integrate(Rational(0), Rational(1)) == 0);
    for (int i = -4; i <= 4; ++i) {
      const Rational x = make_rational(i, 5);
      CHECK(b(x) == oracle::bernoulli_poly(q, x));
      const Rational reflected = (q % 2 == 0 ? 1 : -1) * b(x);
      CHECK(b(1 - x) == reflected);
      if (q >= 1) CHECK(b(x + 1) - b(x) == q * pow(x, q - 1));
    }
    if (q >= 1) {
      Polynomial scaled = bernoulli_polynomial(q - 1);
      scaled *= Rational(q);
      CHECK(b.derivative() == scaled);
    }
  }
  CHECK(bernoulli_poly(3).degree == 3);
}

TEST_CASE("periodic b_1 at the integers") {
  CHECK(eval_periodic_bernoulli(1, Rational(2)) == 0);
  CHECK(eval_periodic_bernoulli(1, Rational(2), BoundaryMode::left) == Rational(1, 2));
  CHECK(eval_periodic_bernoulli(1, Rational(2), BoundaryMode::right) == Rational(-1, 2));
  CHECK(eval_periodic_bernoulli(2, Rational(-3)) == Rational(1, 6));
  for (int i = -10; i <= 10; ++i) {
    const Rational x = make_rational(i, 7);
    for (unsigned q = 1; q <= 6; ++q) CHECK(eval_periodic_bernoulli(q, x) == oracle::periodic_bernoulli(q, x));
  }
}

TEST_CASE("symbolic values stay canonical") {
  const SymbolicValue i(Rational(1), 0, 1);
  CHECK(i * i == SymbolicValue(Rational(-1)));
  CHECK((i * i).is_rational());
  CHECK(SymbolicValue(Rational(3), 0, 3) == SymbolicValue(Rational(-3), 0, 1));
  CHECK(SymbolicValue(Rational(0), 4, 1) == SymbolicValue());
  const SymbolicValue x(Rational(2, 3), -2, 1);
  CHECK(x * x.inverse() == SymbolicValue(Rational(1)));
  CHECK(x.pow(4) == SymbolicValue(Rational(16, 81), -8, 0));
  CHECK_THROWS_AS(SymbolicValue().inverse(), std::domain_error);
  const auto sum = SymbolicValue::try_add(SymbolicValue(Rational(1), 2), SymbolicValue(Rational(1, 2), 2));
  REQUIRE(sum.has_value());
  CHECK(*sum == SymbolicValue(Rational(3, 2), 2));
  CHECK_FALSE(SymbolicValue::try_add(SymbolicValue(Rational(1), 2), SymbolicValue(Rational(1), 1)).has_value());
  const auto z = SymbolicValue(Rational(1, 2), 1, 1).numeric();
  CHECK(z.real() == doctest::Approx(0.0));
  CHECK(z.imag() == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("scalars stay exact until a float enters") {
  const Scalar a = Rational(1, 3);
  const Scalar b = Rational(2, 3);
  CHECK(is_exact(add(a, b)));
  CHECK(std::get<Rational>(add(a, b)) == 1);
  CHECK(std::get<Rational>(subtract(a, b)) == Rational(-1, 3));
  const Scalar c = add(a, Scalar(0.5));
  CHECK_FALSE(is_exact(c));
  CHECK(to_complex(c).real() == doctest::Approx(5.0 / 6.0));
  const Scalar w = add(a, Scalar(std::complex<double>(0, 1)));
  CHECK(to_complex(w).imag() == 1.0);
  CHECK(std::get<Rational>(multiply(Rational(3), a)) == 1);
}

TEST_CASE("compensated summation recovers cancelled low bits") {
  CompensatedSum s;
  s += 1e16;
  for (int i = 0; i < 1000; ++i) s += 1.0;
  s += -1e16;
  CHECK(s.value() == 1000.0);
  CompensatedSum a, b;
  a += 0.1;
  b += 0.2;
  a += b;
  CHECK(a.value() == doctest::Approx(0.3));
}
