#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "picard/errors.hpp"
#include "picard/rings.hpp"

namespace picard::hermitian {

using rings::QuadElt;
using rings::QuatElt;
using rings::RingSpec;

// Scalar-domain glue: QuadElt carries its field per element, QuatElt does not.
inline QuadElt zero_like(const QuadElt& s) { return QuadElt::zero(s.spec()); }
inline QuadElt one_like(const QuadElt& s) { return QuadElt::one(s.spec()); }
inline QuatElt zero_like(const QuatElt&) { return QuatElt::zero(); }
inline QuatElt one_like(const QuatElt&) { return QuatElt::one(); }

/// Column vector in C^{2,1} (resp. H^{2,1}). Quaternionic vectors form a right
/// module: matrices act by left multiplication, scalars by right multiplication.
template <class S>
struct Vec3 {
  std::array<S, 3> c;

  const S& operator[](int i) const { return c[static_cast<size_t>(i)]; }
  S& operator[](int i) { return c[static_cast<size_t>(i)]; }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  Vec3 operator+(const Vec3& o) const { return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]}}; }
  Vec3 operator-(const Vec3& o) const { return {{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2]}}; }
  /// Right scalar multiplication.
  Vec3 operator*(const S& s) const { return {{c[0] * s, c[1] * s, c[2] * s}}; }

  bool operator==(const Vec3& o) const { return c[0] == o.c[0] && c[1] == o.c[1] && c[2] == o.c[2]; }
};

/// 3x3 matrix over one coefficient domain, row-major.
template <class S>
struct Mat3 {
  std::array<S, 9> e;

  const S& at(int r, int col) const { return e[static_cast<size_t>(3 * r + col)]; }
  S& at(int r, int col) { return e[static_cast<size_t>(3 * r + col)]; }

  static Mat3 identity_like(const S& sample) {
    const S z = zero_like(sample);
    const S o = one_like(sample);
    return {{o, z, z, z, o, z, z, z, o}};
  }

  Mat3 operator*(const Mat3& o) const {
    Mat3 out;
    for (int r = 0; r < 3; ++r) {
      for (int col = 0; col < 3; ++col) {
        S acc = zero_like(e[0]);
        for (int m = 0; m < 3; ++m) acc = acc + at(r, m) * o.at(m, col);
        out.at(r, col) = acc;
      }
    }
    return out;
  }

  Vec3<S> operator*(const Vec3<S>& v) const {
    Vec3<S> out{{zero_like(e[0]), zero_like(e[0]), zero_like(e[0])}};
    for (int r = 0; r < 3; ++r) {
      S acc = zero_like(e[0]);
      for (int m = 0; m < 3; ++m) acc = acc + at(r, m) * v[m];
      out[r] = acc;
    }
    return out;
  }

  /// Entrywise scalar multiple. Only central scalars give a well-defined
  /// projective rescaling in the quaternionic case.
  Mat3 operator*(const S& s) const {
    Mat3 out;
    for (size_t n = 0; n < 9; ++n) out.e[n] = e[n] * s;
    return out;
  }

  Mat3 conj_transpose() const {
    Mat3 out;
    for (int r = 0; r < 3; ++r) {
      for (int col = 0; col < 3; ++col) out.at(r, col) = at(col, r).conj();
    }
    return out;
  }

  bool operator==(const Mat3& o) const { return e == o.e; }
  bool operator!=(const Mat3& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string out = "[";
    for (int r = 0; r < 3; ++r) {
      if (r) out += "; ";
      for (int col = 0; col < 3; ++col) {
        if (col) out += ",";
        out += at(r, col).to_string();
      }
    }
    return out + "]";
  }
};

/// The Siegel Hermitian form: <Z,W> = W* J Z with J antidiagonal(1,1,1).
/// J* = J and J^2 = I.
template <class S>
Mat3<S> siegel_form(const S& sample) {
  const S z = zero_like(sample);
  const S o = one_like(sample);
  return {{z, z, o, z, o, z, o, z, z}};
}

/// <Z,W> = W* J Z = conj(W_1) Z_3 + conj(W_2) Z_2 + conj(W_3) Z_1.
template <class S>
S inner(const Vec3<S>& Z, const Vec3<S>& W) {
  return W[0].conj() * Z[2] + W[1].conj() * Z[1] + W[2].conj() * Z[0];
}

/// <Z,Z>, which is provably real; throws if the cancellation fails.
template <class S>
Rational herm_square(const Vec3<S>& Z) {
  return inner(Z, Z).as_rational();
}

enum class PointType { Negative, Null, Positive };

inline const char* to_string(PointType t) {
  switch (t) {
    case PointType::Negative: return "negative";
    case PointType::Null: return "null";
    case PointType::Positive: return "positive";
  }
  return "?";
}

/// Sign class of <Z,Z>: Negative projects into hyperbolic space, Null to its
/// boundary. Throws std::domain_error on the zero vector.
template <class S>
PointType point_type(const Vec3<S>& Z) {
  if (Z.is_zero()) throw std::domain_error("point_type of the zero vector");
  const Rational q = herm_square(Z);
  if (q < 0) return PointType::Negative;
  if (q == 0) return PointType::Null;
  return PointType::Positive;
}

/// True iff A* J A = J exactly.
template <class S>
bool is_isometry(const Mat3<S>& A) {
  const Mat3<S> J = siegel_form(A.e[0]);
  return A.conj_transpose() * J * A == J;
}

/// Inverse of an isometry of the form: A^{-1} = J A* J.
template <class S>
Mat3<S> isometry_inverse(const Mat3<S>& A) {
  const Mat3<S> J = siegel_form(A.e[0]);
  return J * A.conj_transpose() * J;
}

/// cosh^2(d/2) = |<X,Y>|^2 / (<X,X> <Y,Y>), exact and invariant under
/// rescaling either argument. Requires both points negative.
template <class S>
Rational cosh2_half_dist(const Vec3<S>& X, const Vec3<S>& Y) {
  if (point_type(X) != PointType::Negative || point_type(Y) != PointType::Negative) {
    throw std::domain_error("cosh2_half_dist requires negative-type vectors");
  }
  const Rational num = inner(X, Y).norm();
  return num / (herm_square(X) * herm_square(Y));
}

/// A = mu * B for a scalar mu (returned), or nullopt. In the quaternionic
/// case only a real mu commutes with everything; callers that need a
/// projective statement should check mu accordingly.
template <class S>
std::optional<S> scalar_ratio(const Mat3<S>& A, const Mat3<S>& B) {
  int pivot = -1;
  for (int n = 0; n < 9; ++n) {
    if (!B.e[static_cast<size_t>(n)].is_zero()) {
      pivot = n;
      break;
    }
  }
  if (pivot < 0) return std::nullopt;
  const S mu = A.e[static_cast<size_t>(pivot)] * B.e[static_cast<size_t>(pivot)].inverse();
  for (int n = 0; n < 9; ++n) {
    if (A.e[static_cast<size_t>(n)] != mu * B.e[static_cast<size_t>(n)]) return std::nullopt;
  }
  return mu;
}

/// Order of the isometry represented by A in PU(2,1): the least k >= 1 with
/// A^k equal to a unit-modulus scalar matrix. nullopt if no such k <= cap.
std::optional<int> projective_order(const Mat3<QuadElt>& A, int cap = 64);

using QuadMatrix = Mat3<QuadElt>;
using QuatMatrix = Mat3<QuatElt>;
using QuadVector = Vec3<QuadElt>;
using QuatVector = Vec3<QuatElt>;

template <class S>
struct NamedMatrix {
  std::string name;
  Mat3<S> matrix;
};

/// The standard generators with entries in O_d: I0 and the diagonal
/// reflection R = diag(1, u, 1), where u = i for d = 1, u = (1+sqrt(-3))/2
/// for d = 3 (the order-6 unit) and u = -1 otherwise.
std::vector<NamedMatrix<QuadElt>> paper_generators(RingSpec spec);

/// The quaternionic counterparts with Hurwitz entries: I0, Ri = diag(1,i,1)
/// and Rsigma = diag(1,sigma,1).
std::vector<NamedMatrix<QuatElt>> paper_generators_quaternion();

/// Parses the matrix literal syntax "[a,b,c; d,e,f; g,h,i]" (brackets
/// optional) with scalars in the rings syntax.
Mat3<QuadElt> parse_matrix(const std::string& text, RingSpec spec);
Mat3<QuatElt> parse_matrix_quaternion(const std::string& text);

}  // namespace picard::hermitian
