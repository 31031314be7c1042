#include <doctest.h>

#include <random>

#include "picard/reflections.hpp"

using picard::Rational;
using namespace picard::reflections;
using picard::hermitian::isometry_inverse;
using picard::hermitian::paper_generators;
using picard::hermitian::paper_generators_quaternion;
using picard::hermitian::parse_matrix;
using picard::hermitian::QuadMatrix;
using picard::hermitian::QuadVector;
using picard::hermitian::QuatMatrix;
using picard::hermitian::QuatVector;
using picard::rings::QuadElt;
using picard::rings::QuatElt;
using picard::rings::RingSpec;

namespace {

QuadMatrix builtin(long d, const char* name) {
  for (const auto& [n, m] : paper_generators(RingSpec(d))) {
    if (n == std::string(name)) return m;
  }
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

QuatMatrix builtin_quat(const char* name) {
  for (const auto& [n, m] : paper_generators_quaternion()) {
    if (n == std::string(name)) return m;
  }
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

QuadMatrix random_isometry(std::mt19937& rng, RingSpec spec, int len = 5) {
  const auto gens = paper_generators(spec);
  QuadMatrix m = QuadMatrix::identity_like(QuadElt::one(spec));
  std::uniform_int_distribution<int> pick(0, 3);
  for (int i = 0; i < len; ++i) {
    const int kind = pick(rng);
    const QuadMatrix& g = gens[static_cast<size_t>(kind / 2)].matrix;
    m = m * (kind % 2 ? isometry_inverse(g) : g);
  }
  return m;
}

const ComplexEig* find_value(const std::vector<ComplexEig>& recs, const QuadElt& v) {
  for (const auto& r : recs) {
    if (r.value == v) return &r;
  }
  return nullptr;
}

QuadElt det_of(const QuadMatrix& a) {
  // -constant term of det(xI - A).
  return -char_poly(a)[0];
}

}  // namespace

TEST_CASE("characteristic polynomials of the named matrices") {
  const RingSpec d1(1);
  const QuadElt one = QuadElt::one(d1);
  const QuadElt i = QuadElt::root(d1);
  const auto I = QuadMatrix::identity_like(one);
  // identity: (x-1)^3
  CHECK(char_poly(I) ==
        picard::poly::KPoly({-one, one * Rational(3), -one * Rational(3), one}));
  // I0: (x-1)(x+1)^2 = x^3 + x^2 - x - 1
  CHECK(char_poly(builtin(1, "I0")) == picard::poly::KPoly({-one, -one, one, one}));
  // R with u=i: (x-1)^2 (x-i)
  const picard::poly::KPoly expected =
      picard::poly::KPoly({one, -one}) * picard::poly::KPoly({one, -one}) * picard::poly::KPoly({i, -one});
  const picard::poly::KPoly got = char_poly(builtin(1, "R"));
  CHECK(got == expected * QuadElt(Rational(-1), Rational(0), d1));
}

TEST_CASE("eigen-decomposition of I0") {
  const RingSpec d7(7);
  const QuadMatrix i0 = builtin(7, "I0");
  const auto recs = eigen_decompose(i0);
  REQUIRE(recs.size() == 2);

  const QuadElt minus1(Rational(-1), Rational(0), d7);
  const QuadElt plus1(Rational(1), Rational(0), d7);
  const auto* neg = find_value(recs, minus1);
  const auto* pos = find_value(recs, plus1);
  REQUIRE(neg);
  REQUIRE(pos);
  CHECK(neg->multiplicity == 2);
  CHECK(neg->basis.size() == 2);
  CHECK(neg->negative_type);
  CHECK(pos->multiplicity == 1);
  CHECK(!pos->negative_type);

  // The -1 eigenspace is the span of e2 and e1 - e3: both are eigenvectors.
  const QuadElt z = QuadElt::zero(d7);
  const QuadElt o = QuadElt::one(d7);
  for (const QuadVector v : {QuadVector{{z, o, z}}, QuadVector{{o, z, -o}}}) {
    CHECK(i0 * v == v * minus1);
  }
  for (const auto& v : neg->basis) CHECK(i0 * v == v * minus1);
}

TEST_CASE("eigen-decomposition of R and the identity") {
  const RingSpec d1(1);
  const auto recs = eigen_decompose(builtin(1, "R"));
  REQUIRE(recs.size() == 2);
  const auto* one_rec = find_value(recs, QuadElt::one(d1));
  const auto* i_rec = find_value(recs, QuadElt::root(d1));
  REQUIRE(one_rec);
  REQUIRE(i_rec);
  CHECK(one_rec->multiplicity == 2);
  CHECK(one_rec->negative_type);
  CHECK(i_rec->multiplicity == 1);
  CHECK(!i_rec->negative_type);

  const auto id_recs = eigen_decompose(QuadMatrix::identity_like(QuadElt::one(d1)));
  REQUIRE(id_recs.size() == 1);
  CHECK(id_recs[0].multiplicity == 3);
  CHECK(id_recs[0].basis.size() == 3);
  CHECK(id_recs[0].negative_type);
}

TEST_CASE("eigen-decomposition rejects non-isometries") {
  const RingSpec d1(1);
  CHECK_THROWS_AS(eigen_decompose(parse_matrix("[2,0,0; 0,1,0; 0,0,1]", d1)),
                  picard::NotIsometryError);
}

TEST_CASE("complex reflection certificates for the named matrices") {
  for (long d : {1L, 2L, 3L, 7L, 11L}) {
    CAPTURE(d);
    const auto i0 = is_complex_reflection(builtin(d, "I0"));
    CHECK(i0.is_reflection);
    REQUIRE(i0.mirror.has_value());
    CHECK(i0.mirror->value == QuadElt(Rational(-1), Rational(0), RingSpec(d)));
    CHECK(i0.mirror->multiplicity == 2);
    CHECK(i0.mirror->negative_type);

    const auto r = is_complex_reflection(builtin(d, "R"));
    CHECK(r.is_reflection);
    REQUIRE(r.mirror.has_value());
    CHECK(r.mirror->value == QuadElt::one(RingSpec(d)));
    CHECK(r.mirror->multiplicity == 2);
  }
}

TEST_CASE("the u-list from the reflection lemma certifies in full") {
  // u = i, u = e^{2 i pi / 3} = (-1+r)/2, u = -1
  const auto r1 = is_complex_reflection(parse_matrix("[1,0,0; 0,r,0; 0,0,1]", RingSpec(1)));
  const auto r3 =
      is_complex_reflection(parse_matrix("[1,0,0; 0,-1/2+1/2*r,0; 0,0,1]", RingSpec(3)));
  const auto r7 = is_complex_reflection(parse_matrix("[1,0,0; 0,-1,0; 0,0,1]", RingSpec(7)));
  for (const auto* cert : {&r1, &r3, &r7}) {
    CHECK(cert->is_reflection);
    CHECK(cert->mirror->multiplicity == 2);
    CHECK(cert->mirror->negative_type);
  }
}

TEST_CASE("a product of two reflections is not a reflection") {
  // I0 * R for d = 7: eigenvalues {1, 1, -1} but the negative-type one is -1
  // with multiplicity 1.
  const QuadMatrix prod = builtin(7, "I0") * builtin(7, "R");
  const auto recs = eigen_decompose(prod);
  const auto* neg = find_value(recs, QuadElt(Rational(-1), Rational(0), RingSpec(7)));
  REQUIRE(neg);
  CHECK(neg->negative_type);
  CHECK(neg->multiplicity == 1);
  CHECK(!is_complex_reflection(prod).is_reflection);
}

TEST_CASE("scalar matrices are not reflections") {
  const RingSpec d1(1);
  const QuadMatrix iI =
      QuadMatrix::identity_like(QuadElt::one(d1)) * QuadElt::root(d1);
  REQUIRE(picard::hermitian::is_isometry(iI));
  CHECK(!is_complex_reflection(iI).is_reflection);
  CHECK(classify_isometry(iI) == IsometryType::Identity);
}

TEST_CASE("isometry classification") {
  const RingSpec d7(7);
  CHECK(classify_isometry(builtin(7, "I0")) == IsometryType::Elliptic);
  CHECK(classify_isometry(builtin(7, "R")) == IsometryType::Elliptic);

  // Unipotent Heisenberg translation: parabolic. Non-diagonalizability
  // oracle: rank(A - I) > 0 while 1 is the only eigenvalue.
  const QuadMatrix t = parse_matrix("[1,1,-1/2+1/2*r; 0,1,-1; 0,0,1]", d7);
  REQUIRE(picard::hermitian::is_isometry(t));
  const auto recs = eigen_decompose(t);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].multiplicity == 3);
  CHECK(recs[0].basis.size() < 3);  // defective: geometric < algebraic
  CHECK(classify_isometry(t) == IsometryType::Parabolic);

  const QuadMatrix lox = parse_matrix("[2,0,0; 0,1,0; 0,0,1/2]", RingSpec(1));
  REQUIRE(picard::hermitian::is_isometry(lox));
  CHECK(classify_isometry(lox) == IsometryType::Loxodromic);
}

TEST_CASE("exactly one negative-type eigenvalue for elliptic elements") {
  std::mt19937 rng(3);
  for (long d : {1L, 3L, 7L}) {
    const RingSpec spec(d);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
      const QuadMatrix a = random_isometry(rng, spec);
      std::vector<ComplexEig> recs;
      try {
        recs = eigen_decompose(a);
      } catch (const picard::IrreducibleFactorError&) {
        continue;
      }
      if (classify_isometry(a) != IsometryType::Elliptic) continue;
      ++checked;
      int negatives = 0;
      int total_mult = 0;
      QuadElt prod = QuadElt::one(spec);
      for (const auto& r : recs) {
        negatives += r.negative_type ? 1 : 0;
        total_mult += r.multiplicity;
        for (int k = 0; k < r.multiplicity; ++k) prod = prod * r.value;
      }
      CHECK(negatives == 1);
      CHECK(total_mult == 3);
      CHECK(prod == det_of(a));
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("reflection verdict is invariant under conjugation") {
  std::mt19937 rng(9);
  for (long d : {1L, 3L}) {
    const RingSpec spec(d);
    for (const char* name : {"I0", "R"}) {
      const QuadMatrix a = builtin(d, name);
      const auto base = is_complex_reflection(a);
      for (int t = 0; t < 10; ++t) {
        const QuadMatrix b = random_isometry(rng, spec);
        const QuadMatrix conj = b * a * isometry_inverse(b);
        const auto cert = is_complex_reflection(conj);
        CHECK(cert.is_reflection == base.is_reflection);
        REQUIRE(cert.mirror.has_value());
        CHECK(cert.mirror->value == base.mirror->value);
        CHECK(cert.mirror->multiplicity == base.mirror->multiplicity);
      }
    }
  }
}

TEST_CASE("reflection verdict is invariant under unit rescaling") {
  const RingSpec d3(3);
  const QuadMatrix r = builtin(3, "R");
  // zeta = (1+r)/2 is a unit of O_3.
  const QuadElt zeta(Rational(1, 2), Rational(1, 2), d3);
  REQUIRE(zeta.is_unit_modulus());
  QuadElt mu = zeta;
  for (int k = 0; k < 5; ++k) {
    const auto cert = is_complex_reflection(r * mu);
    CHECK(cert.is_reflection);
    CHECK(cert.mirror->multiplicity == 2);
    // The mirror eigenvalue rescales along with the matrix.
    CHECK(cert.mirror->value == mu);
    mu = mu * zeta;
  }
}

TEST_CASE("quaternionic right eigenspaces of the named matrices") {
  const QuatMatrix rsigma = builtin_quat("Rsigma");
  const QuatElt z = QuatElt::zero();
  const QuatElt o = QuatElt::one();

  SUBCASE("class 1 of Rsigma: span{e1, e3}, negative") {
    const auto rec = right_eigenspace(rsigma, {Rational(1), Rational(0)});
    CHECK(rec.multiplicity == 2);
    REQUIRE(rec.basis.size() == 2);
    CHECK(rec.negative_type);
    for (const auto& v : rec.basis) {
      CHECK(v[1].is_zero());  // inside span{e1, e3}
      CHECK(rsigma * v == v);
    }
    for (const auto& w : rec.witnesses) {
      REQUIRE(w.has_value());
      CHECK(*w == o);
    }
  }
  SUBCASE("sigma class of Rsigma: e2, multiplicity 1") {
    const auto rec = right_eigenspace(rsigma, {Rational(1, 2), Rational(3, 4)});
    CHECK(rec.multiplicity == 1);
    REQUIRE(rec.basis.size() == 1);
    CHECK(!rec.negative_type);
    CHECK(rec.basis[0][0].is_zero());
    CHECK(rec.basis[0][2].is_zero());
    // The class representative lives in Q(sqrt(-3)): (1 + sqrt(-3))/2.
    CHECK(rec.value == QuadElt(Rational(1, 2), Rational(1, 2), RingSpec(3)));
    REQUIRE(rec.witnesses[0].has_value());
    CHECK(*rec.witnesses[0] == QuatElt::sigma());
  }
  SUBCASE("class -1 of quaternionic I0: span{e2, e1 - e3}") {
    const QuatMatrix i0 = builtin_quat("I0");
    const auto rec = right_eigenspace(i0, {Rational(-1), Rational(0)});
    CHECK(rec.multiplicity == 2);
    CHECK(rec.negative_type);
    const QuatVector e2{{z, o, z}};
    const QuatVector e13{{o, z, -o}};
    CHECK(i0 * e2 == e2 * QuatElt::from_rational(Rational(-1)));
    CHECK(i0 * e13 == e13 * QuatElt::from_rational(Rational(-1)));
  }
  SUBCASE("canonical representative is required") {
    CHECK_THROWS_AS(right_eigenspace(rsigma, {Rational(1, 2), Rational(-1)}),
                    std::domain_error);
  }
}

TEST_CASE("quaternionic reflection certificates") {
  for (const char* name : {"I0", "Ri", "Rsigma"}) {
    CAPTURE(name);
    const auto cert = is_quaternionic_reflection(builtin_quat(name));
    CHECK(cert.is_reflection);
    REQUIRE(cert.mirror.has_value());
    CHECK(cert.mirror->multiplicity == 2);
    CHECK(cert.mirror->negative_type);
    int total = 0;
    int negatives = 0;
    for (const auto& c : cert.classes) {
      total += c.multiplicity;
      negatives += c.negative_type ? 1 : 0;
    }
    CHECK(total == 3);
    CHECK(negatives == 1);
  }
  // The identity is not a reflection: single class of multiplicity 3.
  const QuatMatrix I = QuatMatrix::identity_like(QuatElt::one());
  CHECK(!is_quaternionic_reflection(I).is_reflection);
}

TEST_CASE("adjoint characteristic polynomial") {
  const QuatMatrix rsigma = builtin_quat("Rsigma");
  // (x-1)^4 (x^2 - x + 1)
  const auto chi = adjoint_char_poly(rsigma);
  CHECK(chi.degree() == 6);
  CHECK(chi.eval(Rational(1)) == 0);
  const auto quads = picard::poly::quadratic_rational_factors(chi);
  REQUIRE(quads.size() == 1);
  CHECK(quads[0].u == 1);
  CHECK(quads[0].v == 1);

  const QuatMatrix I = QuatMatrix::identity_like(QuatElt::one());
  const auto chi_id = adjoint_char_poly(I);
  // (x-1)^6
  CHECK(chi_id.eval(Rational(1)) == 0);
  CHECK(chi_id[0] == 1);
  CHECK(chi_id[1] == -6);
}

TEST_CASE("signature computation handles hyperbolic pairs") {
  const RingSpec d1(1);
  const QuadElt z = QuadElt::zero(d1);
  const QuadElt o = QuadElt::one(d1);
  // [[0, 1], [1, 0]]: signature (1, 1).
  const auto sig = form_signature<QuadElt>({z, o, o, z}, 2);
  CHECK(sig.positive == 1);
  CHECK(sig.negative == 1);
  CHECK(sig.zero == 0);
  // [[1, 0], [0, -2]]
  const auto sig2 = form_signature<QuadElt>({o, z, z, QuadElt(Rational(-2), Rational(0), d1)}, 2);
  CHECK(sig2.positive == 1);
  CHECK(sig2.negative == 1);
  // Degenerate: [[0, 0], [0, 1]]
  const auto sig3 = form_signature<QuadElt>({z, z, z, o}, 2);
  CHECK(sig3.positive == 1);
  CHECK(sig3.zero == 1);
}
