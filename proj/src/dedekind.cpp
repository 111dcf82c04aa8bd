#include "recip/dedekind.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "recip/summation.hpp"

namespace recip {

NuVector::NuVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("nu must have at least one entry");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) throw std::invalid_argument("nu entries must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[i] == entries_[j]) {
        throw std::invalid_argument("nu entries must be pairwise distinct");
      }
      if (gcd(entries_[i], entries_[j]) != 1) {
        throw std::invalid_argument("nu entries must be pairwise coprime");
      }
    }
  }
}

NuVector NuVector::without(std::size_t k) const {
  if (k >= entries_.size()) throw std::out_of_range("index k out of range");
  if (entries_.size() == 1) throw std::invalid_argument("cannot drop the only entry of nu");
  std::vector<std::int64_t> rest;
  rest.reserve(entries_.size() - 1);
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j != k) rest.push_back(entries_[j]);
  }
  return NuVector(std::move(rest));
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed integer '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

std::string to_string(std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

NuVector parse_nu_vector(std::string_view text) { return NuVector(parse_int_list(text)); }

std::string to_string(const NuVector& nu) { return to_string(std::span(nu.entries())); }

ReciprocityReport make_report(Scalar lhs, Scalar rhs, std::string method, std::optional<long> bound) {
  Scalar residual = subtract(lhs, rhs);
  return {std::move(lhs), std::move(rhs), std::move(residual), std::move(method), bound};
}

namespace {

void check_shape(std::span<const PeriodicFn> fvec, const NuVector& nu) {
  if (fvec.size() != nu.size()) {
    throw std::invalid_argument("function vector has " + std::to_string(fvec.size()) +
                                " entries but nu has " + std::to_string(nu.size()));
  }
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(a % m) * (b % m)) % m);
}

bool all_polynomial(std::span<const PeriodicFn> fvec) {
  return std::all_of(fvec.begin(), fvec.end(), [](const PeriodicFn& f) { return f.is_polynomial_family(); });
}

}  // namespace

Scalar dedekind_sum(std::span<const PeriodicFn> fvec, const NuVector& nu, std::size_t k) {
  check_shape(fvec, nu);
  if (k >= nu.size()) throw std::out_of_range("index k out of range");
  if (nu.r() == 0) return Rational(nu[0] - 1);
  const std::int64_t nk = nu[k];

  if (all_polynomial(fvec)) {
    std::vector<Polynomial> polys;
    polys.reserve(fvec.size());
    for (const auto& f : fvec) polys.push_back(underlying_polynomial(f));
    Rational total(0);
    Rational term;
    Rational x;
    for (std::int64_t i = 1; i < nk; ++i) {
      term = 1;
      for (std::size_t j = 0; j < fvec.size(); ++j) {
        if (j == k) continue;
        const std::int64_t m = mul_mod(i, nu[j], nk);
        if (m == 0) {
          term *= eval_exact(fvec[j], Rational(0));
        } else {
          x = Rational(m, nk);
          x.canonicalize();
          term *= polys[j](x);
        }
      }
      total += term;
    }
    return total;
  }

  CompensatedComplexSum total;
  for (std::int64_t i = 1; i < nk; ++i) {
    std::complex<double> term(1.0, 0.0);
    for (std::size_t j = 0; j < fvec.size(); ++j) {
      if (j == k) continue;
      Rational x(mul_mod(i, nu[j], nk), nk);
      x.canonicalize();
      term *= eval_numeric(fvec[j], x);
    }
    total += term;
  }
  return total.value();
}

Scalar reciprocity_lhs(std::span<const PeriodicFn> fvec, const NuVector& nu) {
  check_shape(fvec, nu);
  Scalar total = Rational(0);
  for (std::size_t k = 0; k < fvec.size(); ++k) {
    const Rational delta = jump(fvec[k]).delta;
    if (delta == 0) continue;
    total = add(total, multiply(delta, dedekind_sum(fvec, nu, k)));
  }
  return total;
}

namespace {

void require_r(const NuVector& nu, unsigned r, const char* what) {
  if (nu.r() != r) {
    throw std::invalid_argument(std::string(what) + " needs nu with " + std::to_string(r + 1) +
                                " entries");
  }
}

}  // namespace

Rational rademacher_rhs(const NuVector& nu) {
  require_r(nu, 2, "rademacher");
  const Rational n0(nu[0]), n1(nu[1]), n2(nu[2]);
  return Rational((n0 * n0 + n1 * n1 + n2 * n2) / (12 * n0 * n1 * n2) - Rational(1, 4));
}

Rational shifted_rhs(const NuVector& nu, const std::array<Rational, 3>& a) {
  require_r(nu, 2, "shifted");
  for (const auto& aj : a) {
    if (aj <= 0 || aj >= 1) throw std::invalid_argument("shift parameters must lie in (0, 1)");
  }
  const Rational half(1, 2);
  Rational result = -1 + a[0] + a[1] + a[2];
  result -= a[0] * a[1] + a[0] * a[2] + a[1] * a[2];
  for (std::size_t l = 0; l < 3; ++l) {
    const std::size_t j = (l + 1) % 3;
    const std::size_t k = (l + 2) % 3;
    result += Rational(nu[l]) * (half - a[j]) * (half - a[k]);
  }
  result += rademacher_rhs(nu) + Rational(1, 4);
  return result;
}

Rational r1_closed_form(const NuVector& nu, unsigned q) {
  require_r(nu, 1, "r1 closed form");
  if (q == 0) throw std::invalid_argument("r1 closed form needs q >= 1");
  if (q % 2 == 1) return q == 1 ? Rational(0) : Rational(-bernoulli_number(q));
  return Rational(bernoulli_number(q) * (Rational(1) / pow(Rational(nu[0]), q - 1) - 1));
}

namespace {

// Visits every sign vector u in {-1, 1}^m (or only those with u_0 = +1)
// and reports <u, values> together with prod u.
template <typename Visit>
void for_each_sign(std::span<const std::int64_t> values, bool fix_first, Visit&& visit) {
  const std::size_t m = values.size();
  if (m >= 63) throw std::invalid_argument("too many entries for sign enumeration");
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (fix_first && m > 0 && (mask & 1u)) continue;
    std::int64_t dot = 0;
    int sign = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (std::uint64_t{1} << j)) {
        dot -= values[j];
        sign = -sign;
      } else {
        dot += values[j];
      }
    }
    visit(dot, sign);
  }
}

std::vector<std::int64_t> others(const NuVector& nu, std::size_t k) {
  if (k >= nu.size()) throw std::out_of_range("index k out of range");
  std::vector<std::int64_t> rest;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (j != k) rest.push_back(nu[j]);
  }
  return rest;
}

}  // namespace

std::int64_t exp_closed_form(const NuVector& nu, std::size_t k) {
  std::int64_t total = 0;
  for (std::int64_t v : others(nu, k)) total = (total + v) % nu[k];
  return total == 0 ? nu[k] - 1 : -1;
}

Rational cos_closed_form(const NuVector& nu, std::size_t k) {
  const auto rest = others(nu, k);
  std::int64_t beta = 0;
  for_each_sign(rest, false, [&](std::int64_t dot, int) {
    if (dot % nu[k] == 0) ++beta;
  });
  Rational out(beta * nu[k]);
  out /= pow(Rational(2), nu.r());
  return Rational(out - 1);
}

SymbolicValue sin_closed_form(const NuVector& nu, std::size_t k) {
  const auto rest = others(nu, k);
  if (nu.r() == 0) return SymbolicValue(Rational(nu[0] - 1));
  if (nu.r() % 2 == 1) return SymbolicValue();
  std::int64_t beta_bar = 0;
  for_each_sign(rest, true, [&](std::int64_t dot, int sign) {
    if (dot % nu[k] == 0) beta_bar += sign;
  });
  // 2 / (2i)^r with r even.
  const SymbolicValue prefactor =
      SymbolicValue(Rational(2)) * SymbolicValue(Rational(2), 0, 1).pow(nu.r()).inverse();
  return prefactor * Rational(beta_bar * nu[k]);
}

Rational piecewise_integral(std::span<const PeriodicFactor> factors) {
  std::vector<Rational> cuts;
  for (const auto& factor : factors) {
    if (factor.nu < 1) throw std::invalid_argument("dilation factors must be positive");
    for (std::int64_t i = 0; i <= factor.nu; ++i) {
      Rational c(i, factor.nu);
      c.canonicalize();
      cuts.push_back(c);
    }
  }
  if (cuts.empty()) return Rational(1);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Rational total(0);
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const Rational mid = (cuts[p] + cuts[p + 1]) / 2;
    Polynomial piece = Polynomial::constant(Rational(1));
    for (const auto& factor : factors) {
      const Rational scale(factor.nu);
      const Rational offset(-floor(scale * mid));
      piece = piece * factor.poly.compose_affine(scale, offset);
    }
    total += piece.integrate(cuts[p], cuts[p + 1]);
  }
  return total;
}

Rational franel_integral(std::span<const unsigned> qvec, std::span<const std::int64_t> nuvec) {
  if (qvec.size() != nuvec.size()) {
    throw std::invalid_argument("q and nu must have the same length");
  }
  std::vector<PeriodicFactor> factors;
  for (std::size_t j = 0; j < qvec.size(); ++j) {
    if (nuvec[j] < 1) throw std::invalid_argument("nu entries must be positive");
    factors.push_back({bernoulli_polynomial(qvec[j]), nuvec[j]});
  }
  return piecewise_integral(factors);
}

Rational integral_recip_rhs(std::span<const PeriodicFn> fvec, const NuVector& nu) {
  check_shape(fvec, nu);
  std::vector<Polynomial> polys;
  for (const auto& f : fvec) {
    if (!f.is_polynomial_family()) {
      throw std::invalid_argument("integral reciprocity needs polynomial descriptors, got '" +
                                  to_string(f) + "'");
    }
    polys.push_back(underlying_polynomial(f));
  }
  Rational total = -jump_product(fvec);
  std::vector<PeriodicFactor> factors(fvec.size());
  for (std::size_t k = 0; k < fvec.size(); ++k) {
    for (std::size_t j = 0; j < fvec.size(); ++j) {
      factors[j] = {j == k ? polys[j].derivative() : polys[j], nu[j]};
    }
    total += Rational(nu[k]) * piecewise_integral(factors);
  }
  return total;
}

ReciprocityReport power_basis_recip_check(std::span<const unsigned> qvec, const NuVector& nu) {
  if (qvec.size() != nu.size()) throw std::invalid_argument("q and nu must have the same length");
  std::vector<PeriodicFn> powers;
  Rational scale(1);
  for (unsigned q : qvec) {
    if (q < 1) throw std::invalid_argument("power basis check needs q entries >= 1");
    powers.push_back(PeriodicFn::power_frac(q));
    scale /= q + 1;
  }
  const Scalar lhs = reciprocity_lhs(powers, nu);

  const std::size_t n = qvec.size();
  std::vector<unsigned> s(n, 0);
  std::vector<PeriodicFn> bern(n, PeriodicFn::bernoulli(0));
  Scalar acc = Rational(0);
  while (true) {
    Rational weight(1);
    for (std::size_t j = 0; j < n; ++j) {
      weight *= Rational(binomial(qvec[j] + 1, s[j]));
      bern[j] = PeriodicFn::bernoulli(s[j]);
    }
    acc = add(acc, multiply(weight, reciprocity_lhs(bern, nu)));
    std::size_t j = 0;
    while (j < n && s[j] == qvec[j]) s[j++] = 0;
    if (j == n) break;
    ++s[j];
  }
  return make_report(lhs, multiply(scale, acc), "power-basis");
}

}  // namespace recip
