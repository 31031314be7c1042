#include "picard/intmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace picard::intmath {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(text);
      return Rational(n);
    }
    Int n(text.substr(0, slash));
    Int d(text.substr(slash + 1));
    return make_rational(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rational(rn, rd);
}

namespace {

// Trial-division factorization. The integers reaching this point come from
// 3x3 characteristic polynomials with small entries, so no large-prime
// machinery is needed; guard against surprises anyway.
std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::domain_error("factorize(0)");
  std::vector<std::pair<Int, unsigned>> factors;
  auto push = [&](const Int& p, unsigned e) { factors.emplace_back(p, e); };
  unsigned e2 = 0;
  while (mpz_even_p(n.get_mpz_t())) {
    n /= 2;
    ++e2;
  }
  if (e2) push(2, e2);
  Int p = 3;
  while (p * p <= n) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      push(p, e);
    }
    p += 2;
    if (p > 100000000) {
      throw std::runtime_error("integer too hard to factorize: " + n.get_str());
    }
  }
  if (n > 1) push(n, 1);
  return factors;
}

}  // namespace

std::pair<Rational, Int> squarefree_decompose(const Rational& q) {
  if (q < 0) throw std::domain_error("squarefree_decompose of a negative value");
  if (q == 0) return {Rational(0), Int(0)};
  // q = num/den = (num*den) / den^2, so the square-free kernel of num*den
  // carries all the information.
  Int m = q.get_num() * q.get_den();
  Int f = 1;
  Int root = 1;
  for (const auto& [p, e] : factorize(m)) {
    if (e % 2 == 1) f *= p;
    Int half;
    mpz_pow_ui(half.get_mpz_t(), p.get_mpz_t(), e / 2);
    root *= half;
  }
  // q = (root/den)^2 * f
  return {make_rational(root, q.get_den()), f};
}

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(n)) {
    (void)p;
    if (e >= 2) return false;
  }
  return true;
}

std::vector<Int> positive_divisors(const Int& n) {
  if (n == 0) throw std::domain_error("divisors of zero");
  const auto factors = factorize(n);
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : factors) {
    const size_t base = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace picard::intmath
