#include "recip/periodic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace recip {

PeriodicFn PeriodicFn::bernoulli(unsigned q) {
  PeriodicFn f;
  f.kind_ = Kind::bernoulli;
  f.q_ = q;
  return f;
}

PeriodicFn PeriodicFn::power_frac(unsigned q) {
  if (q < 1) throw std::invalid_argument("pow:q requires q >= 1");
  PeriodicFn f;
  f.kind_ = Kind::power_frac;
  f.q_ = q;
  return f;
}

PeriodicFn PeriodicFn::shifted_frac(const Rational& a) {
  if (a <= 0 || a >= 1) throw std::invalid_argument("shift:a requires 0 < a < 1");
  PeriodicFn f;
  f.kind_ = Kind::shifted_frac;
  f.shift_ = a;
  return f;
}

PeriodicFn PeriodicFn::poly_frac(std::vector<Rational> coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("poly: needs at least one coefficient");
  PeriodicFn f;
  f.kind_ = Kind::poly_frac;
  f.poly_ = std::move(coefficients);
  return f;
}

PeriodicFn PeriodicFn::sin() {
  PeriodicFn f;
  f.kind_ = Kind::sin;
  return f;
}

PeriodicFn PeriodicFn::cos() {
  PeriodicFn f;
  f.kind_ = Kind::cos;
  return f;
}

PeriodicFn PeriodicFn::exp_e() {
  PeriodicFn f;
  f.kind_ = Kind::exp_e;
  return f;
}

bool PeriodicFn::is_polynomial_family() const noexcept {
  return kind_ != Kind::sin && kind_ != Kind::cos && kind_ != Kind::exp_e;
}

bool operator==(const PeriodicFn& a, const PeriodicFn& b) {
  return a.kind_ == b.kind_ && a.q_ == b.q_ && a.shift_ == b.shift_ && a.poly_ == b.poly_;
}

Polynomial underlying_polynomial(const PeriodicFn& f) {
  switch (f.kind()) {
    case PeriodicFn::Kind::bernoulli: return bernoulli_polynomial(f.q());
    case PeriodicFn::Kind::power_frac: return Polynomial::monomial(f.q());
    case PeriodicFn::Kind::shifted_frac: return Polynomial({Rational(-f.shift()), Rational(1)});
    case PeriodicFn::Kind::poly_frac: return Polynomial(f.poly_coefficients());
    default: break;
  }
  throw std::invalid_argument("trigonometric descriptor has no polynomial form");
}

namespace {

// Value of F on the fundamental domain, including the one-sided limits at
// the integers.
Rational eval_poly_family(const PeriodicFn& f, const Polynomial& poly, const Rational& x,
                          BoundaryMode mode) {
  if (!is_integer(x)) return poly(frac(x));
  const Rational at0 = poly(Rational(0));
  const Rational at1 = poly(Rational(1));
  if (at0 == at1) return at0;
  (void)f;
  switch (mode) {
    case BoundaryMode::left: return at1;
    case BoundaryMode::right: return at0;
    case BoundaryMode::principal: break;
  }
  return Rational((at0 + at1) / 2);
}

}  // namespace

Rational eval_exact(const PeriodicFn& f, const Rational& x, BoundaryMode mode) {
  if (f.kind() == PeriodicFn::Kind::bernoulli) {
    return eval_periodic_bernoulli(f.q(), x, mode);
  }
  if (f.kind() == PeriodicFn::Kind::power_frac) {
    if (is_integer(x)) return eval_poly_family(f, Polynomial::monomial(f.q()), x, mode);
    return pow(frac(x), f.q());
  }
  return eval_poly_family(f, underlying_polynomial(f), x, mode);
}

std::complex<double> eval_numeric(const PeriodicFn& f, const Rational& x, BoundaryMode mode) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  switch (f.kind()) {
    case PeriodicFn::Kind::sin: return {std::sin(two_pi * frac(x).get_d()), 0.0};
    case PeriodicFn::Kind::cos: return {std::cos(two_pi * frac(x).get_d()), 0.0};
    case PeriodicFn::Kind::exp_e: {
      const double t = two_pi * frac(x).get_d();
      return {std::cos(t), std::sin(t)};
    }
    default: break;
  }
  return {eval_exact(f, x, mode).get_d(), 0.0};
}

Scalar eval(const PeriodicFn& f, const Rational& x, BoundaryMode mode) {
  if (f.is_polynomial_family()) return eval_exact(f, x, mode);
  return eval_numeric(f, x, mode);
}

JumpData jump(const PeriodicFn& f) {
  switch (f.kind()) {
    case PeriodicFn::Kind::sin: return {Rational(0), Rational(0), Rational(0)};
    case PeriodicFn::Kind::cos:
    case PeriodicFn::Kind::exp_e: return {Rational(0), Rational(1), Rational(1)};
    default: break;
  }
  const Polynomial poly = underlying_polynomial(f);
  const Rational left = poly(Rational(1));
  const Rational right = poly(Rational(0));
  return {Rational(left - right), left, right};
}

Rational jump_product(std::span<const PeriodicFn> fvec) {
  if (fvec.empty()) throw std::invalid_argument("jump_product: empty function vector");
  Rational left(1);
  Rational right(1);
  for (const auto& f : fvec) {
    const JumpData j = jump(f);
    left *= j.left_value;
    right *= j.right_value;
  }
  return left - right;
}

Rational jump_ratio_single(const PeriodicFn& f, unsigned r, ContinuityBranch branch) {
  if (f.is_polynomial_family() && underlying_polynomial(f).degree() <= 0) {
    throw std::domain_error("jump ratio is undefined for a constant function");
  }
  const JumpData j = jump(f);
  if (j.delta == 0) {
    switch (branch) {
      case ContinuityBranch::none:
        throw std::domain_error("function does not jump at 0; choose a continuity branch");
      case ContinuityBranch::shifted_limit:
        return Rational(-Rational(r + 1) * pow(j.right_value, r + 1));
      case ContinuityBranch::geometric_sum: break;
    }
  }
  Rational acc(0);
  for (unsigned k = 0; k <= r; ++k) acc += pow(j.left_value, k) * pow(j.right_value, r - k);
  return acc;
}

std::vector<std::pair<unsigned, Rational>> power_to_bernoulli(unsigned q) {
  std::vector<std::pair<unsigned, Rational>> out;
  out.reserve(q + 1);
  for (unsigned s = 0; s <= q; ++s) {
    Rational c(binomial(q + 1, s), Integer(q + 1));
    c.canonicalize();
    out.emplace_back(s, c);
  }
  return out;
}

std::vector<Rational> to_bernoulli_basis(const Polynomial& poly) {
  std::vector<Rational> beta(poly.size(), Rational(0));
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Rational& a = poly.coefficients()[i];
    if (a == 0) continue;
    for (const auto& [s, c] : power_to_bernoulli(static_cast<unsigned>(i))) beta[s] += a * c;
  }
  return beta;
}

namespace {

// c_n(b_q) = -q! / (2 pi i n)^q for n != 0, q >= 1.
SymbolicValue bernoulli_fourier(unsigned q, long n) {
  if (q == 0) return SymbolicValue(Rational(n == 0 ? 1 : 0));
  if (n == 0) return SymbolicValue(Rational(0));
  const Rational denom = pow(Rational(2 * n), q);
  return SymbolicValue(Rational(-Rational(factorial(q)) / denom), -static_cast<int>(q),
                       -static_cast<int>(q));
}

}  // namespace

std::vector<SymbolicValue> fourier_coeff_expansion(const PeriodicFn& f, long n) {
  switch (f.kind()) {
    case PeriodicFn::Kind::exp_e: return {SymbolicValue(Rational(n == 1 ? 1 : 0))};
    case PeriodicFn::Kind::cos:
      return {SymbolicValue(n == 1 || n == -1 ? Rational(1, 2) : Rational(0))};
    case PeriodicFn::Kind::sin:
      if (n == 1) return {SymbolicValue(Rational(1, 2), 0, -1)};
      if (n == -1) return {SymbolicValue(Rational(-1, 2), 0, -1)};
      return {SymbolicValue()};
    case PeriodicFn::Kind::bernoulli: return {bernoulli_fourier(f.q(), n)};
    default: break;
  }
  const std::vector<Rational> beta = to_bernoulli_basis(underlying_polynomial(f));
  std::vector<SymbolicValue> terms;
  for (unsigned s = 0; s < beta.size(); ++s) {
    if (beta[s] == 0) continue;
    SymbolicValue term = bernoulli_fourier(s, n) * beta[s];
    if (!term.is_zero()) terms.push_back(term);
  }
  if (terms.empty()) terms.emplace_back();
  return terms;
}

SymbolicValue fourier_coeff(const PeriodicFn& f, long n) {
  const auto terms = fourier_coeff_expansion(f, n);
  SymbolicValue acc;
  for (const auto& t : terms) {
    auto sum = SymbolicValue::try_add(acc, t);
    if (!sum) {
      throw std::domain_error("Fourier coefficient of '" + to_string(f) +
                              "' is not a single symbolic term; use the expansion");
    }
    acc = *sum;
  }
  return acc;
}

namespace {

unsigned parse_unsigned(std::string_view s, std::string_view what) {
  if (s.empty() || s.size() > 6) throw std::invalid_argument("bad integer in '" + std::string(what) + "'");
  unsigned v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad integer in '" + std::string(what) + "'");
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool is_named_descriptor(std::string_view token) {
  return token == "sin" || token == "cos" || token == "e" || starts_with(token, "b:") ||
         starts_with(token, "pow:") || starts_with(token, "shift:") || starts_with(token, "poly:");
}

}  // namespace

PeriodicFn parse_periodic_fn(std::string_view text) {
  if (text == "sin") return PeriodicFn::sin();
  if (text == "cos") return PeriodicFn::cos();
  if (text == "e") return PeriodicFn::exp_e();
  if (starts_with(text, "b:")) return PeriodicFn::bernoulli(parse_unsigned(text.substr(2), text));
  if (starts_with(text, "pow:")) return PeriodicFn::power_frac(parse_unsigned(text.substr(4), text));
  if (starts_with(text, "shift:")) return PeriodicFn::shifted_frac(parse_rational(text.substr(6)));
  if (starts_with(text, "poly:")) {
    std::vector<Rational> coeffs;
    std::string_view rest = text.substr(5);
    while (true) {
      const auto comma = rest.find(',');
      coeffs.push_back(parse_rational(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return PeriodicFn::poly_frac(std::move(coeffs));
  }
  throw std::invalid_argument("unknown function descriptor '" + std::string(text) + "'");
}

std::string to_string(const PeriodicFn& f) {
  switch (f.kind()) {
    case PeriodicFn::Kind::bernoulli: return "b:" + std::to_string(f.q());
    case PeriodicFn::Kind::power_frac: return "pow:" + std::to_string(f.q());
    case PeriodicFn::Kind::shifted_frac: return "shift:" + to_string(f.shift());
    case PeriodicFn::Kind::sin: return "sin";
    case PeriodicFn::Kind::cos: return "cos";
    case PeriodicFn::Kind::exp_e: return "e";
    case PeriodicFn::Kind::poly_frac: break;
  }
  std::string out = "poly:";
  for (std::size_t i = 0; i < f.poly_coefficients().size(); ++i) {
    if (i != 0) out += ',';
    out += to_string(f.poly_coefficients()[i]);
  }
  return out;
}

std::vector<PeriodicFn> parse_periodic_fn_list(std::string_view text) {
  std::vector<std::string> items;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    if (token.empty()) throw std::invalid_argument("empty entry in descriptor list");
    if (is_named_descriptor(token) || items.empty()) {
      items.emplace_back(token);
    } else if (starts_with(items.back(), "poly:")) {
      items.back() += ',';
      items.back() += token;
    } else {
      throw std::invalid_argument("unexpected token '" + std::string(token) + "' in descriptor list");
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  std::vector<PeriodicFn> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(parse_periodic_fn(item));
  return out;
}

std::string to_string(std::span<const PeriodicFn> fvec) {
  std::string out;
  for (std::size_t i = 0; i < fvec.size(); ++i) {
    if (i != 0) out += ',';
    out += to_string(fvec[i]);
  }
  return out;
}

}  // namespace recip
