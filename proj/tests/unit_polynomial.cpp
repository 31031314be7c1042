#include <doctest.h>

#include "picard/polynomial.hpp"

using picard::Rational;
using namespace picard::poly;
using picard::rings::QuadElt;
using picard::rings::RingSpec;

namespace {

QPoly qp(std::initializer_list<long> coeffs_low_first) {
  std::vector<Rational> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return QPoly(std::move(c));
}

KPoly from_roots(const std::vector<QuadElt>& roots) {
  const RingSpec spec = roots.front().spec();
  KPoly p = KPoly::constant(QuadElt::one(spec));
  for (const auto& r : roots) {
    p = p * KPoly({-r, QuadElt::one(spec)});
  }
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic and division") {
  const QPoly a = qp({-1, 0, 1});  // x^2 - 1
  const QPoly b = qp({-1, 1});     // x - 1
  const auto [quot, rem] = a.divmod(b);
  CHECK(quot == qp({1, 1}));
  CHECK(rem.is_zero());
  CHECK(poly_gcd(a, b) == b.monic());
  CHECK(a.derivative() == qp({0, 2}));
  CHECK(a.eval(Rational(3)) == 8);
}

TEST_CASE("rational roots with multiplicity") {
  // (x - 1)^2 (2x + 3) x
  const QPoly p = qp({0, 1}) * qp({-1, 1}) * qp({-1, 1}) * qp({3, 2});
  const auto rr = rational_roots(p);
  REQUIRE(rr.roots.size() == 3);
  CHECK(rr.roots[0] == std::pair<Rational, int>(Rational(-3, 2), 1));
  CHECK(rr.roots[1] == std::pair<Rational, int>(Rational(0), 1));
  CHECK(rr.roots[2] == std::pair<Rational, int>(Rational(1), 2));
  CHECK(rr.deflated.degree() == 0);
}

TEST_CASE("Kronecker quadratic factor search") {
  SUBCASE("repeated factor (x^2+1)^3") {
    const QPoly p = qp({1, 0, 1}) * qp({1, 0, 1}) * qp({1, 0, 1});
    const auto f = quadratic_rational_factors(p);
    REQUIRE(f.size() == 1);
    CHECK(f[0].u == 0);
    CHECK(f[0].v == 1);
  }
  SUBCASE("mixed factors of degree 6") {
    // (x^2 - x + 1)(x^2 + 2)(x^2 - x - 1): all irreducible over Q
    const QPoly p = qp({1, -1, 1}) * qp({2, 0, 1}) * qp({-1, -1, 1});
    const auto f = quadratic_rational_factors(p);
    REQUIRE(f.size() == 3);
    // Sorted by (u, v): x^2 + 2, then x^2 - x - 1, then x^2 - x + 1.
    CHECK(f[0] == MonicQuadratic{Rational(0), Rational(2)});
    CHECK(f[1] == MonicQuadratic{Rational(1), Rational(-1)});
    CHECK(f[2] == MonicQuadratic{Rational(1), Rational(1)});
  }
  SUBCASE("no quadratic factors in an irreducible cubic") {
    CHECK(quadratic_rational_factors(qp({-2, 0, 0, 1})).empty());  // x^3 - 2
  }
  SUBCASE("rational roots are stripped first") {
    const QPoly p = qp({-1, 1}) * qp({1, 0, 1});  // (x-1)(x^2+1)
    const auto f = quadratic_rational_factors(p);
    REQUIRE(f.size() == 1);
    CHECK(f[0].v == 1);
  }
}

TEST_CASE("square roots inside a quadratic field") {
  const RingSpec d3(3);
  // (1 + r)^2 = -2 + 2r
  const QuadElt delta(Rational(-2), Rational(2), d3);
  const auto s = sqrt_in_field(delta);
  REQUIRE(s.has_value());
  CHECK(*s * *s == delta);
  // -3 = r^2
  const auto s2 = sqrt_in_field(QuadElt(Rational(-3), Rational(0), d3));
  REQUIRE(s2.has_value());
  CHECK(*s2 * *s2 == QuadElt(Rational(-3), Rational(0), d3));
  // 2 is not a square in Q(sqrt(-3))
  CHECK(!sqrt_in_field(QuadElt(Rational(2), Rational(0), d3)));
  // 9/4 is
  const auto s3 = sqrt_in_field(QuadElt(Rational(9, 4), Rational(0), d3));
  REQUIRE(s3.has_value());
  CHECK(s3->a() == Rational(3, 2));
}

TEST_CASE("cubic roots in the coefficient field") {
  const RingSpec d1(1);
  const QuadElt i = QuadElt::root(d1);
  const QuadElt one = QuadElt::one(d1);

  SUBCASE("triple non-rational root (x - i)^3") {
    const auto fr = roots_in_quadratic_field(from_roots({i, i, i}));
    REQUIRE(fr.roots.size() == 1);
    CHECK(fr.roots[0].first == i);
    CHECK(fr.roots[0].second == 3);
    CHECK(fr.leftover.degree() == 0);
  }
  SUBCASE("mixed rational and non-rational roots (x-1)^2 (x-i)") {
    const auto fr = roots_in_quadratic_field(from_roots({one, one, i}));
    REQUIRE(fr.roots.size() == 2);
    CHECK(fr.leftover.degree() == 0);
    int total = 0;
    for (const auto& [root, mult] : fr.roots) total += mult;
    CHECK(total == 3);
  }
  SUBCASE("root in field, cofactor outside: (x - i)(x^2 - x - 1)") {
    const KPoly p = from_roots({i}) * KPoly({-one, -one, one});
    const auto fr = roots_in_quadratic_field(p);
    REQUIRE(fr.roots.size() == 1);
    CHECK(fr.roots[0].first == i);
    CHECK(fr.leftover.degree() == 2);  // golden-ratio roots are real
  }
  SUBCASE("irreducible rational cubic has no quadratic-field roots") {
    const KPoly p = KPoly({QuadElt(Rational(-2), Rational(0), d1),
                           QuadElt::zero(d1), QuadElt::zero(d1), one});  // x^3 - 2
    const auto fr = roots_in_quadratic_field(p);
    CHECK(fr.roots.empty());
    CHECK(fr.leftover.degree() == 3);
  }
  SUBCASE("rational cubic splitting in the field: (x^2+1)(x-2) over d=1") {
    const KPoly p = from_roots({i, -i, QuadElt(Rational(2), Rational(0), d1)});
    const auto fr = roots_in_quadratic_field(p);
    REQUIRE(fr.roots.size() == 3);
    CHECK(fr.leftover.degree() == 0);
  }
  SUBCASE("quadratic over the field directly") {
    const RingSpec d3(3);
    // x^2 - x + 1 has roots (1 +- sqrt(-3))/2
    const KPoly p = KPoly({QuadElt::one(d3), -QuadElt::one(d3), QuadElt::one(d3)});
    const auto fr = roots_in_quadratic_field(p);
    REQUIRE(fr.roots.size() == 2);
    CHECK(fr.roots[0].first * fr.roots[1].first == QuadElt::one(d3));
  }
  SUBCASE("conjugate-coefficient cubic keeps only its own roots") {
    // (x - i)(x - (1+i))(x - 3): all roots in Q(i)
    const QuadElt z(Rational(1), Rational(1), d1);
    const QuadElt three(Rational(3), Rational(0), d1);
    const auto fr = roots_in_quadratic_field(from_roots({i, z, three}));
    REQUIRE(fr.roots.size() == 3);
    CHECK(fr.leftover.degree() == 0);
  }
}
