#pragma once

#include <string>

#include "picard/errors.hpp"
#include "picard/intmath.hpp"

namespace picard::rings {

using picard::Int;
using picard::Rational;

/// The imaginary quadratic field Q(sqrt(-d)), d square-free and positive.
/// Its ring of integers O_d depends on d mod 4.
struct RingSpec {
  long d = 1;

  RingSpec() = default;
  explicit RingSpec(long d_) : d(d_) {
    if (d < 1) throw std::domain_error("RingSpec: d must be positive");
    if (!intmath::is_squarefree(Int(d))) {
      throw std::domain_error("RingSpec: d must be square-free, got " + std::to_string(d));
    }
  }

  bool operator==(const RingSpec&) const = default;
};

/// An exact element a + b*sqrt(-d) of Q(sqrt(-d)).
///
/// Values are immutable after construction; every binary operation checks
/// that both operands live over the same d and throws DomainMismatchError
/// otherwise.
class QuadElt {
 public:
  /// Zero over d = 1; meant as a placeholder to assign into.
  QuadElt() : a_(0), b_(0) {}
  QuadElt(Rational a, Rational b, RingSpec spec)
      : a_(std::move(a)), b_(std::move(b)), spec_(spec) {}

  static QuadElt zero(RingSpec spec) { return {Rational(0), Rational(0), spec}; }
  static QuadElt one(RingSpec spec) { return {Rational(1), Rational(0), spec}; }
  static QuadElt from_rational(const Rational& q, RingSpec spec) {
    return {q, Rational(0), spec};
  }
  /// The generator sqrt(-d) itself (denoted `r` in the textual syntax).
  static QuadElt root(RingSpec spec) { return {Rational(0), Rational(1), spec}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  RingSpec spec() const { return spec_; }
  long d() const { return spec_.d; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// The rational value, when b = 0. Throws otherwise.
  const Rational& as_rational() const {
    if (b_ != 0) throw std::domain_error("QuadElt is not rational: " + to_string());
    return a_;
  }

  QuadElt conj() const { return {a_, -b_, spec_}; }
  /// Field norm a^2 + d b^2 = x * conj(x); zero iff x = 0.
  Rational norm() const { return a_ * a_ + Rational(spec_.d) * b_ * b_; }
  Rational trace() const { return 2 * a_; }
  /// True iff |x| = 1 (equivalently, norm 1).
  bool is_unit_modulus() const { return norm() == 1; }

  /// Membership in the ring of integers O_d.
  bool is_integral() const;

  QuadElt operator-() const { return {-a_, -b_, spec_}; }
  QuadElt operator+(const QuadElt& o) const {
    check(o);
    return {a_ + o.a_, b_ + o.b_, spec_};
  }
  QuadElt operator-(const QuadElt& o) const {
    check(o);
    return {a_ - o.a_, b_ - o.b_, spec_};
  }
  QuadElt operator*(const QuadElt& o) const {
    check(o);
    return {a_ * o.a_ - Rational(spec_.d) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, spec_};
  }
  QuadElt operator*(const Rational& q) const { return {a_ * q, b_ * q, spec_}; }

  QuadElt inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero QuadElt");
    const Rational n = norm();
    return {a_ / n, -b_ / n, spec_};
  }
  QuadElt operator/(const QuadElt& o) const { return *this * o.inverse(); }

  bool operator==(const QuadElt& o) const {
    check(o);
    return a_ == o.a_ && b_ == o.b_;
  }
  bool operator!=(const QuadElt& o) const { return !(*this == o); }

  QuadElt pow(unsigned long e) const;

  /// Canonical textual form, e.g. "1/2+1/2*r", "-1", "r", "0".
  std::string to_string() const;
  /// Parses the textual syntax over a given d. Throws ParseError.
  static QuadElt parse(const std::string& text, RingSpec spec);

 private:
  void check(const QuadElt& o) const {
    if (spec_ != o.spec_) {
      throw DomainMismatchError("QuadElt domain mismatch: d=" + std::to_string(spec_.d) +
                                " vs d=" + std::to_string(o.spec_.d));
    }
  }

  Rational a_, b_;
  RingSpec spec_;
};

/// An exact rational quaternion w + x*i + y*j + z*k.
class QuatElt {
 public:
  QuatElt() : w_(0), x_(0), y_(0), z_(0) {}
  QuatElt(Rational w, Rational x, Rational y, Rational z)
      : w_(std::move(w)), x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  static QuatElt zero() { return {}; }
  static QuatElt one() { return {1, 0, 0, 0}; }
  static QuatElt i() { return {0, 1, 0, 0}; }
  static QuatElt j() { return {0, 0, 1, 0}; }
  static QuatElt k() { return {0, 0, 0, 1}; }
  /// The Hurwitz unit (1 + i + j + k)/2.
  static QuatElt sigma() {
    const Rational h(1, 2);
    return {h, h, h, h};
  }
  static QuatElt from_rational(const Rational& q) { return {q, 0, 0, 0}; }

  const Rational& w() const { return w_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& z() const { return z_; }

  bool is_zero() const { return w_ == 0 && x_ == 0 && y_ == 0 && z_ == 0; }
  bool is_real() const { return x_ == 0 && y_ == 0 && z_ == 0; }
  const Rational& as_rational() const {
    if (!is_real()) throw std::domain_error("QuatElt is not real: " + to_string());
    return w_;
  }
  const Rational& real_part() const { return w_; }

  QuatElt conj() const { return {w_, -x_, -y_, -z_}; }
  /// Reduced norm w^2 + x^2 + y^2 + z^2 = q * conj(q).
  Rational norm() const { return w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_; }
  Rational trace() const { return 2 * w_; }
  bool is_unit_modulus() const { return norm() == 1; }

  /// Membership in the Hurwitz ring: all coordinates integers, or all four
  /// half-odd-integers.
  bool is_hurwitz() const;

  QuatElt operator-() const { return {-w_, -x_, -y_, -z_}; }
  QuatElt operator+(const QuatElt& o) const {
    return {w_ + o.w_, x_ + o.x_, y_ + o.y_, z_ + o.z_};
  }
  QuatElt operator-(const QuatElt& o) const {
    return {w_ - o.w_, x_ - o.x_, y_ - o.y_, z_ - o.z_};
  }
  /// Hamilton product (non-commutative; i*j = k).
  QuatElt operator*(const QuatElt& o) const {
    return {w_ * o.w_ - x_ * o.x_ - y_ * o.y_ - z_ * o.z_,
            w_ * o.x_ + x_ * o.w_ + y_ * o.z_ - z_ * o.y_,
            w_ * o.y_ - x_ * o.z_ + y_ * o.w_ + z_ * o.x_,
            w_ * o.z_ + x_ * o.y_ - y_ * o.x_ + z_ * o.w_};
  }
  QuatElt operator*(const Rational& q) const { return {w_ * q, x_ * q, y_ * q, z_ * q}; }

  QuatElt inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero QuatElt");
    const Rational n = norm();
    return conj() * (Rational(1) / n);
  }

  bool operator==(const QuatElt& o) const {
    return w_ == o.w_ && x_ == o.x_ && y_ == o.y_ && z_ == o.z_;
  }
  bool operator!=(const QuatElt& o) const { return !(*this == o); }

  QuatElt pow(unsigned long e) const;

  /// Canonical textual form, e.g. "1/2+1/2*i+1/2*j+1/2*k", "3-2*i+k".
  std::string to_string() const;
  static QuatElt parse(const std::string& text);

 private:
  Rational w_, x_, y_, z_;
};

/// Exact product in Q(sqrt(-d)); named per the module's operation table.
inline QuadElt quad_mul(const QuadElt& x, const QuadElt& y) { return x * y; }
inline bool is_integral(const QuadElt& x) { return x.is_integral(); }
inline QuatElt quat_mul(const QuatElt& x, const QuatElt& y) { return x * y; }
inline bool is_hurwitz(const QuatElt& x) { return x.is_hurwitz(); }

}  // namespace picard::rings
