#include "picard/polynomial.hpp"

#include <algorithm>
#include <set>

#include "picard/errors.hpp"

namespace picard::poly {

namespace {

using intmath::positive_divisors;
using intmath::rational_sqrt;

// Clears denominators and the content; the result is primitive with a
// positive leading coefficient.
std::vector<Int> primitive_int_poly(const QPoly& p) {
  Int lcm = 1;
  for (const auto& c : p.coeffs()) {
    Int den = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<Int> out;
  out.reserve(p.coeffs().size());
  Int content = 0;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * Rational(lcm);
    out.push_back(scaled.get_num());
    Int g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    content = g;
  }
  if (content == 0) content = 1;
  if (out.back() < 0) content = -content;
  for (auto& c : out) c /= content;
  return out;
}

Int eval_int_poly(const std::vector<Int>& z, long x) {
  Int acc = 0;
  for (size_t i = z.size(); i-- > 0;) acc = acc * x + z[i];
  return acc;
}

}  // namespace

RationalRoots rational_roots(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  RationalRoots result{{}, p};
  if (p.degree() <= 0) return result;

  QPoly q = p;
  // Roots at zero.
  {
    int mult = 0;
    while (q.degree() >= 1 && q[0] == 0) {
      q = q.divmod(QPoly({Rational(0), Rational(1)})).first;
      ++mult;
    }
    if (mult) result.roots.emplace_back(Rational(0), mult);
  }
  if (q.degree() >= 1) {
    const auto z = primitive_int_poly(q);
    std::set<Rational> candidates;
    for (const auto& n : positive_divisors(z.front())) {
      for (const auto& d : positive_divisors(z.back())) {
        candidates.insert(intmath::make_rational(n, d));
        candidates.insert(intmath::make_rational(-n, d));
      }
    }
    for (const auto& cand : candidates) {
      int mult = 0;
      while (q.degree() >= 1 && q.eval(cand) == 0) {
        q = q.divmod(QPoly({-cand, Rational(1)})).first;
        ++mult;
      }
      if (mult) result.roots.emplace_back(cand, mult);
    }
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  result.deflated = q;
  return result;
}

std::vector<MonicQuadratic> quadratic_rational_factors(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("quadratic factors of the zero polynomial");
  const QPoly q = rational_roots(p).deflated;
  std::vector<MonicQuadratic> out;
  if (q.degree() < 2) return out;
  if (q.degree() == 2) {
    out.push_back({-q[1] / q[2], q[0] / q[2]});
    return out;
  }
  if (q.degree() == 3) return out;  // a rational-root-free cubic is irreducible

  // Kronecker interpolation through x = 0, 1, -1: any quadratic factor's
  // values divide the polynomial's values at those points.
  const auto z = primitive_int_poly(q);
  const Int v0 = eval_int_poly(z, 0);
  const Int v1 = eval_int_poly(z, 1);
  const Int vm = eval_int_poly(z, -1);
  const auto d0 = positive_divisors(v0);
  const auto d1 = positive_divisors(v1);
  const auto dm = positive_divisors(vm);
  if (d0.size() * d1.size() * dm.size() > 2'000'000) {
    throw std::runtime_error("quadratic factor search space too large");
  }

  for (const auto& a0 : d0) {
    for (int s0 : {1, -1}) {
      const Int g0 = s0 * a0;
      for (const auto& a1 : d1) {
        for (int s1 : {1, -1}) {
          const Int g1 = s1 * a1;
          for (const auto& am : dm) {
            for (int sm : {1, -1}) {
              const Int gm = sm * am;
              if (mpz_odd_p(Int(g1 - gm).get_mpz_t())) continue;
              const Int c1 = (g1 - gm) / 2;
              const Int c2 = (g1 + gm) / 2 - g0;
              if (c2 <= 0) continue;
              const QPoly cand({Rational(g0), Rational(c1), Rational(c2)});
              if (!q.divmod(cand).second.is_zero()) continue;
              MonicQuadratic mq{Rational(-c1) / Rational(c2), Rational(g0) / Rational(c2)};
              if (rational_sqrt(mq.u * mq.u - 4 * mq.v)) continue;  // reducible over Q
              if (std::find(out.begin(), out.end(), mq) == out.end()) out.push_back(mq);
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MonicQuadratic& a, const MonicQuadratic& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return out;
}

std::optional<QuadElt> sqrt_in_field(const QuadElt& delta) {
  const RingSpec spec = delta.spec();
  const Rational& s = delta.a();
  const Rational& t = delta.b();
  if (t == 0) {
    if (s >= 0) {
      if (auto x = rational_sqrt(s)) return QuadElt(*x, Rational(0), spec);
      return std::nullopt;
    }
    if (auto y = rational_sqrt(-s / Rational(spec.d))) return QuadElt(Rational(0), *y, spec);
    return std::nullopt;
  }
  // (x + y r)^2 = s + t r with r^2 = -d gives x^2 = (s + sqrt(s^2 + d t^2))/2.
  const auto w = rational_sqrt(s * s + Rational(spec.d) * t * t);
  if (!w) return std::nullopt;
  const auto x = rational_sqrt((s + *w) / 2);
  if (!x || *x == 0) return std::nullopt;
  const Rational y = t / (2 * *x);
  QuadElt root(*x, y, spec);
  if (root * root == delta) return root;
  return std::nullopt;
}

FieldRoots roots_in_quadratic_field(const KPoly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  if (p.degree() > 3) throw std::domain_error("roots_in_quadratic_field expects degree <= 3");
  const RingSpec spec = p[0].spec();
  const QuadElt r = QuadElt::root(spec);

  FieldRoots result{{}, p};
  KPoly q = p;

  auto record = [&](const QuadElt& root, int mult) {
    for (auto& [existing, m] : result.roots) {
      if (existing == root) {
        m += mult;
        return;
      }
    }
    result.roots.emplace_back(root, mult);
  };
  auto peel = [&](const QuadElt& root) {
    int mult = 0;
    const KPoly lin({-root, QuadElt::one(spec)});
    while (q.degree() >= 1 && FieldOps<QuadElt>::is_zero(q.eval(root))) {
      q = q.divmod(lin).first;
      ++mult;
    }
    if (mult) record(root, mult);
    return mult;
  };

  // Rational roots are the common rational roots of the two rational
  // component polynomials.
  {
    std::vector<Rational> ap, bp;
    for (const auto& c : q.coeffs()) {
      ap.push_back(c.a());
      bp.push_back(c.b());
    }
    const QPoly A(std::move(ap)), B(std::move(bp));
    const QPoly G = B.is_zero() ? A : poly_gcd(A, B);
    if (G.degree() >= 1) {
      for (const auto& [root, mult] : rational_roots(G).roots) {
        (void)mult;
        peel(QuadElt::from_rational(root, spec));
      }
    }
  }

  while (q.degree() >= 1) {
    if (q.degree() == 1) {
      peel((-q[0]) / q[1]);
      continue;
    }
    if (q.degree() == 2) {
      const QuadElt disc = q[1] * q[1] - QuadElt::from_rational(Rational(4), spec) * q[2] * q[0];
      const auto sq = sqrt_in_field(disc);
      if (!sq) break;
      const QuadElt half = (q[2] + q[2]).inverse();
      // Both roots must be formed before peeling mutates q.
      const QuadElt root_plus = (-q[1] + *sq) * half;
      const QuadElt root_minus = (-q[1] - *sq) * half;
      const int n_plus = peel(root_plus);
      const int n_minus = peel(root_minus);
      if (n_plus == 0 && n_minus == 0) break;
      continue;
    }
    // Degree 3, no rational roots left. A root in the field but outside Q
    // has a quadratic minimal polynomial dividing the norm N = q * conj(q),
    // which has rational coefficients.
    bool all_rational = true;
    for (const auto& c : q.coeffs()) all_rational &= c.is_rational();
    if (all_rational) break;  // irreducible cubic over Q has no quadratic-field root

    std::vector<QuadElt> conj_coeffs;
    for (const auto& c : q.coeffs()) conj_coeffs.push_back(c.conj());
    const KPoly norm_poly = q * KPoly(std::move(conj_coeffs));
    std::vector<Rational> norm_q;
    for (const auto& c : norm_poly.coeffs()) norm_q.push_back(c.as_rational());

    bool found = false;
    for (const auto& mq : quadratic_rational_factors(QPoly(std::move(norm_q)))) {
      const Rational esq = (4 * mq.v - mq.u * mq.u) / Rational(spec.d);
      const auto e = rational_sqrt(esq);
      if (!e) continue;  // roots lie in a different quadratic field
      const QuadElt base(mq.u / 2, *e / 2, spec);
      const QuadElt conj(mq.u / 2, -*e / 2, spec);
      found |= peel(base) > 0;
      found |= peel(conj) > 0;
      if (q.degree() < 3) break;
    }
    if (!found) break;
  }

  result.leftover = q;
  return result;
}

}  // namespace picard::poly
