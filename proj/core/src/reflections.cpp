#include "picard/reflections.hpp"

#include <algorithm>

#include "picard/errors.hpp"

namespace picard::reflections {

using hermitian::inner;
using hermitian::is_isometry;
using hermitian::scalar_ratio;
using hermitian::siegel_form;
using hermitian::zero_like;
using poly::FieldOps;
using poly::roots_in_quadratic_field;

namespace {

/// Kernel of a 3x3 matrix by row echelon with left row operations. Valid
/// over a division ring: solutions of Mv = 0 form a right submodule and the
/// returned vectors are a right basis of it.
template <class S>
std::vector<Vec3<S>> kernel3(Mat3<S> M) {
  const S z = zero_like(M.e[0]);
  const S o = hermitian::one_like(M.e[0]);
  std::array<int, 3> pivot_col{-1, -1, -1};
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int pr = -1;
    for (int r = rank; r < 3; ++r) {
      if (!M.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    }
    if (pr < 0) continue;
    for (int c = 0; c < 3; ++c) std::swap(M.at(pr, c), M.at(rank, c));
    const S inv = M.at(rank, col).inverse();
    for (int c = 0; c < 3; ++c) M.at(rank, c) = inv * M.at(rank, c);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || M.at(r, col).is_zero()) continue;
      const S f = M.at(r, col);
      for (int c = 0; c < 3; ++c) M.at(r, c) = M.at(r, c) - f * M.at(rank, c);
    }
    pivot_col[static_cast<size_t>(rank)] = col;
    ++rank;
  }
  std::vector<Vec3<S>> basis;
  for (int col = 0; col < 3; ++col) {
    bool is_pivot = false;
    for (int r = 0; r < rank; ++r) is_pivot |= pivot_col[static_cast<size_t>(r)] == col;
    if (is_pivot) continue;
    Vec3<S> v{{z, z, z}};
    v[col] = o;
    for (int r = 0; r < rank; ++r) v[pivot_col[static_cast<size_t>(r)]] = -M.at(r, col);
    basis.push_back(v);
  }
  return basis;
}

/// Gram matrix of the Siegel form restricted to a basis: G_ij = b_i* J b_j.
template <class S>
std::vector<S> gram_matrix(const std::vector<Vec3<S>>& basis) {
  const size_t m = basis.size();
  std::vector<S> g;
  g.reserve(m * m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) g.push_back(inner(basis[j], basis[i]));
  }
  return g;
}

template <class S>
bool basis_is_negative(const std::vector<Vec3<S>>& basis) {
  if (basis.empty()) return false;
  return form_signature(gram_matrix(basis), static_cast<int>(basis.size())).negative > 0;
}

}  // namespace

template <class S>
Signature form_signature(std::vector<S> gram, int m) {
  Signature sig;
  std::vector<int> active(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) active[static_cast<size_t>(i)] = i;
  auto G = [&](int i, int j) -> S& { return gram[static_cast<size_t>(i * m + j)]; };

  while (!active.empty()) {
    // Nonzero diagonal pivot first.
    int pi = -1;
    for (int i : active) {
      if (!G(i, i).is_zero()) {
        pi = i;
        break;
      }
    }
    if (pi >= 0) {
      const Rational pivot = G(pi, pi).as_rational();
      (pivot > 0 ? sig.positive : sig.negative) += 1;
      const S inv = G(pi, pi).inverse();
      for (int j : active) {
        if (j == pi) continue;
        for (int k : active) {
          if (k == pi) continue;
          G(j, k) = G(j, k) - G(j, pi) * inv * G(pi, k);
        }
      }
      std::erase(active, pi);
      continue;
    }
    // All-zero diagonal: a nonzero off-diagonal entry spans a hyperbolic pair.
    int hi = -1, hj = -1;
    for (size_t a = 0; a < active.size() && hi < 0; ++a) {
      for (size_t b = a + 1; b < active.size(); ++b) {
        if (!G(active[a], active[b]).is_zero()) {
          hi = active[a];
          hj = active[b];
          break;
        }
      }
    }
    if (hi < 0) {
      sig.zero += static_cast<int>(active.size());
      break;
    }
    sig.positive += 1;
    sig.negative += 1;
    const S g = G(hi, hj);  // G(hj, hi) = conj(g)
    const S ginv = g.inverse();
    const S gbar_inv = g.conj().inverse();
    for (int k : active) {
      if (k == hi || k == hj) continue;
      for (int l : active) {
        if (l == hi || l == hj) continue;
        G(k, l) = G(k, l) - G(k, hj) * ginv * G(hi, l) - G(k, hi) * gbar_inv * G(hj, l);
      }
    }
    std::erase(active, hi);
    std::erase(active, hj);
  }
  return sig;
}

template Signature form_signature<QuadElt>(std::vector<QuadElt>, int);
template Signature form_signature<QuatElt>(std::vector<QuatElt>, int);

const char* to_string(IsometryType t) {
  switch (t) {
    case IsometryType::Elliptic: return "elliptic";
    case IsometryType::Parabolic: return "parabolic";
    case IsometryType::Loxodromic: return "loxodromic";
    case IsometryType::Identity: return "identity";
  }
  return "?";
}

KPoly char_poly(const Mat3<QuadElt>& A) {
  const QuadElt one = hermitian::one_like(A.e[0]);
  const QuadElt tr = A.at(0, 0) + A.at(1, 1) + A.at(2, 2);
  // Sum of principal 2x2 minors.
  QuadElt m2 = zero_like(A.e[0]);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      m2 = m2 + A.at(i, i) * A.at(j, j) - A.at(i, j) * A.at(j, i);
    }
  }
  const QuadElt det = A.at(0, 0) * (A.at(1, 1) * A.at(2, 2) - A.at(1, 2) * A.at(2, 1)) -
                      A.at(0, 1) * (A.at(1, 0) * A.at(2, 2) - A.at(1, 2) * A.at(2, 0)) +
                      A.at(0, 2) * (A.at(1, 0) * A.at(2, 1) - A.at(1, 1) * A.at(2, 0));
  return KPoly({-det, m2, -tr, one});
}

std::vector<ComplexEig> eigen_decompose(const Mat3<QuadElt>& A) {
  if (!is_isometry(A)) {
    throw NotIsometryError("eigen_decompose: matrix does not preserve the form");
  }
  const auto fr = roots_in_quadratic_field(char_poly(A));
  if (fr.leftover.degree() > 0) throw IrreducibleFactorError(fr.leftover.str());

  std::vector<ComplexEig> records;
  for (const auto& [value, mult] : fr.roots) {
    Mat3<QuadElt> M = A;
    for (int i = 0; i < 3; ++i) M.at(i, i) = M.at(i, i) - value;
    ComplexEig rec;
    rec.value = value;
    rec.multiplicity = mult;
    rec.basis = kernel3(M);
    rec.negative_type = basis_is_negative(rec.basis);
    records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(), [](const ComplexEig& x, const ComplexEig& y) {
    if (x.value.a() != y.value.a()) return x.value.a() < y.value.a();
    return x.value.b() < y.value.b();
  });
  return records;
}

ComplexReflectionCert is_complex_reflection(const Mat3<QuadElt>& A) {
  ComplexReflectionCert cert;
  cert.eigenvalues = eigen_decompose(A);
  const bool scalar =
      scalar_ratio(A, Mat3<QuadElt>::identity_like(A.e[0])).has_value();
  for (const auto& rec : cert.eigenvalues) {
    if (rec.negative_type && rec.multiplicity == 2 &&
        rec.basis.size() == 2 && !scalar) {
      cert.is_reflection = true;
      cert.mirror = rec;
      break;
    }
  }
  return cert;
}

IsometryType classify_isometry(const Mat3<QuadElt>& A) {
  if (!is_isometry(A)) {
    throw NotIsometryError("classify_isometry: matrix does not preserve the form");
  }
  if (const auto mu = scalar_ratio(A, Mat3<QuadElt>::identity_like(A.e[0]))) {
    if (mu->is_unit_modulus()) return IsometryType::Identity;
  }
  const auto records = eigen_decompose(A);
  bool all_unit = true;
  size_t geometric = 0;
  bool has_negative = false;
  for (const auto& rec : records) {
    all_unit &= rec.value.is_unit_modulus();
    geometric += rec.basis.size();
    has_negative |= rec.negative_type;
  }
  if (!all_unit) return IsometryType::Loxodromic;
  if (geometric == 3 && has_negative) return IsometryType::Elliptic;
  return IsometryType::Parabolic;
}

namespace {

// Minimal dense square-matrix helper over Q(i) for the adjoint computation.
struct Mat6 {
  int n;
  std::vector<QuadElt> e;

  QuadElt& at(int r, int c) { return e[static_cast<size_t>(r * n + c)]; }
  const QuadElt& at(int r, int c) const { return e[static_cast<size_t>(r * n + c)]; }

  static Mat6 zero(int n, const QuadElt& like) {
    return {n, std::vector<QuadElt>(static_cast<size_t>(n * n), poly::FieldOps<QuadElt>::zero(like))};
  }
  static Mat6 identity(int n, const QuadElt& like) {
    Mat6 m = zero(n, like);
    for (int i = 0; i < n; ++i) m.at(i, i) = poly::FieldOps<QuadElt>::one(like);
    return m;
  }
  Mat6 operator*(const Mat6& o) const {
    Mat6 out = zero(n, e[0]);
    for (int r = 0; r < n; ++r) {
      for (int k = 0; k < n; ++k) {
        if (at(r, k).is_zero()) continue;
        for (int c = 0; c < n; ++c) out.at(r, c) = out.at(r, c) + at(r, k) * o.at(k, c);
      }
    }
    return out;
  }
  QuadElt trace() const {
    QuadElt t = poly::FieldOps<QuadElt>::zero(e[0]);
    for (int i = 0; i < n; ++i) t = t + at(i, i);
    return t;
  }
};

}  // namespace

QPoly adjoint_char_poly(const Mat3<QuatElt>& A) {
  // q = c1 + c2 j embeds as [[c1, c2], [-conj(c2), conj(c1)]] over Q(i).
  const RingSpec gauss(1);
  Mat6 M = Mat6::zero(6, QuadElt::zero(gauss));
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const QuatElt& q = A.at(r, c);
      const QuadElt c1(q.w(), q.x(), gauss);
      const QuadElt c2(q.y(), q.z(), gauss);
      M.at(2 * r, 2 * c) = c1;
      M.at(2 * r, 2 * c + 1) = c2;
      M.at(2 * r + 1, 2 * c) = -c2.conj();
      M.at(2 * r + 1, 2 * c + 1) = c1.conj();
    }
  }
  // Faddeev-LeVerrier: p(x) = x^n + a_{n-1} x^{n-1} + ... + a_0.
  const int n = 6;
  std::vector<QuadElt> coeff(static_cast<size_t>(n) + 1, QuadElt::zero(gauss));
  coeff[static_cast<size_t>(n)] = QuadElt::one(gauss);
  Mat6 Mk = Mat6::identity(n, M.e[0]);
  for (int k = 1; k <= n; ++k) {
    Mk = M * Mk;
    const QuadElt a = Mk.trace() * QuadElt::from_rational(Rational(-1, k), gauss);
    coeff[static_cast<size_t>(n - k)] = a;
    for (int i = 0; i < n; ++i) Mk.at(i, i) = Mk.at(i, i) + a;
  }
  std::vector<Rational> out;
  out.reserve(coeff.size());
  for (const auto& c : coeff) out.push_back(c.as_rational());
  return QPoly(std::move(out));
}

namespace {

QuadElt class_representative(const EigenvalueClass& cls) {
  if (cls.imsq == 0) return QuadElt::from_rational(cls.re, RingSpec(1));
  const auto [e, f] = intmath::squarefree_decompose(cls.imsq);
  // re + sqrt(imsq) i = re + e * sqrt(-f) with f square-free.
  return QuadElt(cls.re, e, RingSpec(f.get_si()));
}

std::optional<QuatElt> eigen_witness(const Mat3<QuatElt>& A, const Vec3<QuatElt>& v,
                                     const EigenvalueClass& cls) {
  const Vec3<QuatElt> av = A * v;
  for (int i = 0; i < 3; ++i) {
    if (v[i].is_zero()) continue;
    const QuatElt mu = v[i].inverse() * av[i];
    if (mu.real_part() != cls.re) return std::nullopt;
    if (mu.norm() != cls.re * cls.re + cls.imsq) return std::nullopt;
    if (A * v == v * mu) return mu;
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

QuatEig right_eigenspace(const Mat3<QuatElt>& A, const EigenvalueClass& cls) {
  if (!is_isometry(A)) {
    throw NotIsometryError("right_eigenspace: matrix does not preserve the form");
  }
  if (cls.imsq < 0) {
    throw std::domain_error("right_eigenspace: class representative must have imsq >= 0");
  }
  Mat3<QuatElt> M;
  if (cls.imsq == 0) {
    M = A;
    for (int i = 0; i < 3; ++i) M.at(i, i) = M.at(i, i) - QuatElt::from_rational(cls.re);
  } else {
    // (A - re)^2 + imsq = A^2 - (2 re) A + (re^2 + imsq); rational throughout.
    M = A * A;
    const Rational tr = 2 * cls.re;
    const Rational nrm = cls.re * cls.re + cls.imsq;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        M.at(r, c) = M.at(r, c) - A.at(r, c) * tr;
        if (r == c) M.at(r, c) = M.at(r, c) + QuatElt::from_rational(nrm);
      }
    }
  }
  QuatEig rec;
  rec.value = class_representative(cls);
  rec.basis = kernel3(M);
  rec.multiplicity = static_cast<int>(rec.basis.size());
  rec.negative_type = basis_is_negative(rec.basis);
  rec.witnesses.reserve(rec.basis.size());
  for (const auto& v : rec.basis) rec.witnesses.push_back(eigen_witness(A, v, cls));
  return rec;
}

QuatReflectionCert is_quaternionic_reflection(const Mat3<QuatElt>& A) {
  const QPoly chi = adjoint_char_poly(A);

  std::vector<EigenvalueClass> candidates;
  for (const auto& [root, mult] : poly::rational_roots(chi).roots) {
    (void)mult;
    candidates.push_back({root, Rational(0)});
  }
  for (const auto& mq : poly::quadratic_rational_factors(chi)) {
    const Rational imsq = mq.v - mq.u * mq.u / 4;
    if (imsq > 0) candidates.push_back({mq.u / 2, imsq});
    // Positive-discriminant factors would mean irrational real right
    // eigenvalues, which the exact path cannot separate; they leave the
    // multiplicity count below short and trigger the error.
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const EigenvalueClass& x, const EigenvalueClass& y) {
              if (x.re != y.re) return x.re < y.re;
              return x.imsq < y.imsq;
            });

  QuatReflectionCert cert;
  int total = 0;
  for (const auto& cls : candidates) {
    QuatEig rec = right_eigenspace(A, cls);
    if (rec.multiplicity == 0) continue;
    total += rec.multiplicity;
    cert.classes.push_back(std::move(rec));
  }
  if (total != 3) {
    throw CandidateOutsideQuadraticFieldError(
        "right-eigenvalue classes account for quaternionic dimension " + std::to_string(total) +
        " of 3; characteristic polynomial of the adjoint: " + chi.str());
  }
  for (const auto& rec : cert.classes) {
    if (rec.negative_type && rec.multiplicity == 2) {
      cert.is_reflection = true;
      cert.mirror = rec;
      break;
    }
  }
  return cert;
}

}  // namespace picard::reflections
