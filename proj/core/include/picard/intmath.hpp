#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace picard {

using Int = mpz_class;
using Rational = mpq_class;

namespace intmath {

/// Builds a canonical rational from numerator and denominator.
/// Throws std::domain_error on a zero denominator.
Rational make_rational(const Int& num, const Int& den);

/// Parses "p", "-p" or "p/q" (arbitrary precision). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

inline bool is_rational_square(const Rational& q) { return rational_sqrt(q).has_value(); }

/// Writes q >= 0 as e^2 * f with f a square-free non-negative integer.
/// Returns (e, f); for q = 0 returns (0, 0).
std::pair<Rational, Int> squarefree_decompose(const Rational& q);

bool is_squarefree(const Int& n);

/// All positive divisors of |n| (n != 0), unsorted order not guaranteed stable;
/// the result is sorted ascending before returning. Intended for the small
/// integers arising from characteristic-polynomial values.
std::vector<Int> positive_divisors(const Int& n);

}  // namespace intmath
}  // namespace picard
