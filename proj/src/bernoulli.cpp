#include "recip/bernoulli.hpp"

#include <deque>
#include <mutex>
#include <vector>

namespace recip {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Rational>& number_cache() {
  static std::vector<Rational> cache{Rational(1)};
  return cache;
}

std::deque<Polynomial>& poly_cache() {
  static std::deque<Polynomial> cache;
  return cache;
}

Rational bernoulli_number_locked(unsigned q) {
  auto& cache = number_cache();
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
  while (cache.size() <= q) {
    const unsigned n = static_cast<unsigned>(cache.size());
    Rational acc(0);
    for (unsigned j = 0; j < n; ++j) {
      acc += Rational(binomial(n + 1, j)) * cache[j];
    }
    Rational b = -acc / Rational(n + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[q];
}

}  // namespace

Rational bernoulli_number(unsigned q) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  return bernoulli_number_locked(q);
}

const Polynomial& bernoulli_polynomial(unsigned q) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto& cache = poly_cache();
  while (cache.size() <= q) {
    const auto n = static_cast<unsigned>(cache.size());
    std::vector<Rational> coeffs(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
      coeffs[n - j] = Rational(binomial(n, j)) * bernoulli_number_locked(j);
    }
    cache.emplace_back(std::move(coeffs));
  }
  return cache[q];
}

BernoulliPoly bernoulli_poly(unsigned q) { return {q, bernoulli_polynomial(q)}; }

Rational eval_periodic_bernoulli(unsigned q, const Rational& x, BoundaryMode mode) {
  if (q == 1 && is_integer(x)) {
    switch (mode) {
      case BoundaryMode::principal: return Rational(0);
      case BoundaryMode::left: return Rational(1, 2);
      case BoundaryMode::right: return Rational(-1, 2);
    }
  }
  return bernoulli_polynomial(q)(frac(x));
}

}  // namespace recip
