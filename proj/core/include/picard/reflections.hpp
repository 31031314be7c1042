#pragma once

#include <optional>
#include <vector>

#include "picard/hermitian.hpp"
#include "picard/polynomial.hpp"

namespace picard::reflections {

using hermitian::Mat3;
using hermitian::Vec3;
using poly::KPoly;
using poly::QPoly;
using rings::QuadElt;
using rings::QuatElt;
using rings::RingSpec;

/// Signature of an exact Hermitian form, computed by completion of squares
/// with pivoting; zero diagonals are handled through hyperbolic pairs.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// gram is a flat m x m Hermitian matrix (G* = G) over the scalar domain.
template <class S>
Signature form_signature(std::vector<S> gram, int m);

/// Eigenvalue record. In the complex case `value` lives in the matrix's own
/// field and `multiplicity` is algebraic (basis spans the geometric
/// eigenspace; the two sizes agree exactly when A is diagonalizable). In the
/// quaternionic case `value` is the canonical complex representative of a
/// right-eigenvalue similarity class, stored over Q(sqrt(-D)) for the
/// square-free D determined by the class, and `multiplicity` is the
/// quaternionic dimension of the class subspace.
template <class S>
struct EigRecord {
  QuadElt value;
  int multiplicity = 0;
  std::vector<Vec3<S>> basis;
  bool negative_type = false;
  /// Quaternionic only: a class member mu with A v = v mu, verified exactly,
  /// for each basis vector where one with rational coordinates exists.
  std::vector<std::optional<QuatElt>> witnesses;
};

using ComplexEig = EigRecord<QuadElt>;
using QuatEig = EigRecord<QuatElt>;

enum class IsometryType { Elliptic, Parabolic, Loxodromic, Identity };

const char* to_string(IsometryType t);

/// det(xI - A), exact, monic cubic over the matrix's field.
KPoly char_poly(const Mat3<QuadElt>& A);

/// One record per distinct eigenvalue in Q(sqrt(-d)); algebraic
/// multiplicities sum to 3. Throws NotIsometryError or
/// IrreducibleFactorError (an eigenvalue lies outside the field).
std::vector<ComplexEig> eigen_decompose(const Mat3<QuadElt>& A);

struct ComplexReflectionCert {
  bool is_reflection = false;
  /// The negative-type eigenvalue record when the verdict is true; its
  /// eigenspace projects to the fixed complex line.
  std::optional<ComplexEig> mirror;
  std::vector<ComplexEig> eigenvalues;
};

/// True iff the negative-type eigenvalue has multiplicity exactly 2 and A is
/// not a scalar matrix.
ComplexReflectionCert is_complex_reflection(const Mat3<QuadElt>& A);

/// Elliptic / parabolic / loxodromic via eigenvalue moduli and
/// diagonalizability (an implementation characterization; the geometric
/// definition is by fixed points). Exact when the eigenvalues lie in the
/// coefficient field; loxodromic detection by |lambda| != 1 is standard for
/// isometries of the form but goes beyond the elliptic modulus-one fact.
IsometryType classify_isometry(const Mat3<QuadElt>& A);

/// A right-eigenvalue similarity class of a quaternionic matrix: the class
/// of re + sqrt(imsq) * i with imsq >= 0 (the representative with
/// non-negative imaginary part).
struct EigenvalueClass {
  Rational re;
  Rational imsq;
};

/// Characteristic polynomial of the 6x6 complex adjoint of A; its roots are
/// exactly the right eigenvalues of A. Always has rational coefficients.
QPoly adjoint_char_poly(const Mat3<QuatElt>& A);

/// Solves A v = v lambda for the given class. Over the rationals this is the
/// kernel of A - re*I (real class) or of A^2 - (2 re) A + (re^2 + imsq) I
/// (non-real class, the class-spectral subspace); both are 12-real-unknown
/// linear systems solved by exact quaternionic elimination. The returned
/// multiplicity is the quaternionic dimension of that kernel, which equals
/// the complex dimension of the fixed-representative solution space.
QuatEig right_eigenspace(const Mat3<QuatElt>& A, const EigenvalueClass& cls);

struct QuatReflectionCert {
  bool is_reflection = false;
  std::optional<QuatEig> mirror;
  std::vector<QuatEig> classes;
};

/// True iff some right-eigenvalue class has quaternionic multiplicity 2 and
/// its subspace carries a negative vector. Candidate classes are harvested
/// from the rational roots and negative-discriminant quadratic factors of
/// the adjoint characteristic polynomial; throws
/// CandidateOutsideQuadraticFieldError when those do not account for the
/// whole space.
QuatReflectionCert is_quaternionic_reflection(const Mat3<QuatElt>& A);

}  // namespace picard::reflections
