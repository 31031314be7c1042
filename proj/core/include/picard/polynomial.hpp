#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "picard/rings.hpp"

namespace picard::poly {

using rings::QuadElt;
using rings::RingSpec;

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  static Rational zero(const Rational&) { return Rational(0); }
  static Rational one(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inverse(const Rational& x) { return Rational(1) / x; }
  static std::string str(const Rational& x) { return intmath::to_string(x); }
};

template <>
struct FieldOps<QuadElt> {
  static QuadElt zero(const QuadElt& like) { return QuadElt::zero(like.spec()); }
  static QuadElt one(const QuadElt& like) { return QuadElt::one(like.spec()); }
  static bool is_zero(const QuadElt& x) { return x.is_zero(); }
  static QuadElt inverse(const QuadElt& x) { return x.inverse(); }
  static std::string str(const QuadElt& x) { return x.to_string(); }
};

/// Dense univariate polynomial over an exact field. Coefficients are stored
/// low degree first; the vector always holds at least one entry and carries
/// no trailing zeros beyond that.
template <class F>
class Poly {
 public:
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::domain_error("Poly needs at least one coefficient");
    trim();
  }
  static Poly constant(F value) { return Poly(std::vector<F>{std::move(value)}); }

  const std::vector<F>& coeffs() const { return c_; }
  /// Degree; the zero polynomial reports -1.
  int degree() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && FieldOps<F>::is_zero(c_[0]); }
  const F& leading() const { return c_.back(); }
  const F& operator[](size_t i) const { return c_[i]; }

  F eval(const F& x) const {
    F acc = FieldOps<F>::zero(c_[0]);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly operator+(const Poly& o) const {
    std::vector<F> out(std::max(c_.size(), o.c_.size()), FieldOps<F>::zero(c_[0]));
    for (size_t i = 0; i < out.size(); ++i) {
      if (i < c_.size()) out[i] = out[i] + c_[i];
      if (i < o.c_.size()) out[i] = out[i] + o.c_[i];
    }
    return Poly(std::move(out));
  }
  Poly operator-(const Poly& o) const {
    std::vector<F> out(std::max(c_.size(), o.c_.size()), FieldOps<F>::zero(c_[0]));
    for (size_t i = 0; i < out.size(); ++i) {
      if (i < c_.size()) out[i] = out[i] + c_[i];
      if (i < o.c_.size()) out[i] = out[i] - o.c_[i];
    }
    return Poly(std::move(out));
  }
  Poly operator*(const Poly& o) const {
    std::vector<F> out(c_.size() + o.c_.size() - 1, FieldOps<F>::zero(c_[0]));
    for (size_t i = 0; i < c_.size(); ++i) {
      for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] = out[i + j] + c_[i] * o.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly operator*(const F& s) const {
    std::vector<F> out = c_;
    for (auto& x : out) x = x * s;
    return Poly(std::move(out));
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }

  /// Exact división with remainder by a nonzero divisor.
  std::pair<Poly, Poly> divmod(const Poly& div) const {
    if (div.is_zero()) throw std::domain_error("polynomial division by zero");
    const F zero = FieldOps<F>::zero(c_[0]);
    std::vector<F> rem = c_;
    const int dd = div.degree();
    const F lead_inv = FieldOps<F>::inverse(div.leading());
    if (degree() < dd) return {Poly::constant(zero), *this};
    std::vector<F> quot(static_cast<size_t>(degree() - dd) + 1, zero);
    for (int i = degree(); i >= dd; --i) {
      const F factor = rem[static_cast<size_t>(i)] * lead_inv;
      quot[static_cast<size_t>(i - dd)] = factor;
      for (int j = 0; j <= dd; ++j) {
        rem[static_cast<size_t>(i - dd + j)] =
            rem[static_cast<size_t>(i - dd + j)] - factor * div.c_[static_cast<size_t>(j)];
      }
    }
    rem.resize(static_cast<size_t>(dd) == 0 ? 1 : static_cast<size_t>(dd));
    if (rem.empty()) rem.push_back(zero);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

  Poly derivative() const {
    if (degree() <= 0) return Poly::constant(FieldOps<F>::zero(c_[0]));
    std::vector<F> out;
    out.reserve(c_.size() - 1);
    F count = FieldOps<F>::one(c_[0]);
    for (size_t i = 1; i < c_.size(); ++i) {
      out.push_back(c_[i] * count);
      count = count + FieldOps<F>::one(c_[0]);
    }
    return Poly(std::move(out));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * FieldOps<F>::inverse(leading());
  }

  std::string str(const std::string& var = "x") const {
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (FieldOps<F>::is_zero(c_[i]) && c_.size() > 1) continue;
      if (!out.empty()) out += " + ";
      out += "(" + FieldOps<F>::str(c_[i]) + ")";
      if (i == 1) out += var;
      if (i > 1) out += var + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void trim() {
    while (c_.size() > 1 && FieldOps<F>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

using QPoly = Poly<Rational>;
using KPoly = Poly<QuadElt>;

/// All rational roots with multiplicities; also returns the deflated quotient.
struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;
  QPoly deflated;
};
RationalRoots rational_roots(const QPoly& p);

/// A monic rational quadratic x^2 - u x + v.
struct MonicQuadratic {
  Rational u;
  Rational v;
  bool operator==(const MonicQuadratic&) const = default;
};

/// The distinct monic quadratic factors of p that are irreducible over Q,
/// found by Kronecker interpolation through x = 0, 1, -1. Rational linear
/// factors are stripped internally first.
std::vector<MonicQuadratic> quadratic_rational_factors(const QPoly& p);

/// Exact square root of delta inside its own quadratic field, if one exists.
std::optional<QuadElt> sqrt_in_field(const QuadElt& delta);

/// Roots of p (degree <= 3) lying in the coefficient field Q(sqrt(-d)), with
/// multiplicities, plus the unsplit remainder (constant iff p splits).
struct FieldRoots {
  std::vector<std::pair<QuadElt, int>> roots;
  KPoly leftover;
};
FieldRoots roots_in_quadratic_field(const KPoly& p);

}  // namespace picard::poly
