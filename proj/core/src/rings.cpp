#include "picard/rings.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace picard::rings {

namespace {

bool is_int(const Rational& q) { return q.get_den() == 1; }
bool is_half_odd(const Rational& q) { return q.get_den() == 2; }

// One additive term of a scalar literal: coefficient and an optional unit
// symbol ('r', 'i', 'j', 'k'; '\0' for the rational part).
struct Term {
  Rational coef;
  char unit;
};

std::vector<Term> parse_terms(const std::string& raw) {
  std::string text;
  text.reserve(raw.size());
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw ParseError("empty scalar literal");

  std::vector<Term> terms;
  size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    const size_t start = pos;
    while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
    std::string piece = text.substr(start, pos - start);
    if (piece.empty()) throw ParseError("dangling sign in scalar literal: '" + raw + "'");

    char unit = '\0';
    Rational coef;
    const auto star = piece.find('*');
    auto unit_of = [&](const std::string& s) -> char {
      if (s.size() == 1 && (s[0] == 'r' || s[0] == 'i' || s[0] == 'j' || s[0] == 'k')) {
        return s[0];
      }
      throw ParseError("unknown unit '" + s + "' in scalar literal: '" + raw + "'");
    };
    if (star != std::string::npos) {
      unit = unit_of(piece.substr(star + 1));
      coef = intmath::parse_rational(piece.substr(0, star));
    } else if (piece.size() == 1 && !std::isdigit(static_cast<unsigned char>(piece[0]))) {
      unit = unit_of(piece);
      coef = 1;
    } else {
      coef = intmath::parse_rational(piece);
    }
    if (sign < 0) coef = -coef;
    terms.push_back({std::move(coef), unit});
  }
  return terms;
}

// Appends "+c*u" (or its sign-folded form) to out; u == '\0' is the rational part.
void append_term(std::string& out, const Rational& c, char u) {
  if (c == 0) return;
  Rational abs = c < 0 ? Rational(-c) : c;
  const bool neg = c < 0;
  if (out.empty()) {
    if (neg) out += "-";
  } else {
    out += neg ? "-" : "+";
  }
  if (u == '\0') {
    out += intmath::to_string(abs);
  } else if (abs == 1) {
    out += u;
  } else {
    out += intmath::to_string(abs);
    out += '*';
    out += u;
  }
}

}  // namespace

bool QuadElt::is_integral() const {
  if (spec_.d % 4 == 3) {
    // O_d = Z[(1 + sqrt(-d))/2]: coordinates (p/2, q/2) with p = q mod 2.
    const Rational p = 2 * a_;
    const Rational q = 2 * b_;
    if (!is_int(p) || !is_int(q)) return false;
    return mpz_odd_p(p.get_num().get_mpz_t()) == mpz_odd_p(q.get_num().get_mpz_t());
  }
  return is_int(a_) && is_int(b_);
}

QuadElt QuadElt::pow(unsigned long e) const {
  QuadElt result = one(spec_);
  QuadElt base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string QuadElt::to_string() const {
  std::string out;
  append_term(out, a_, '\0');
  append_term(out, b_, 'r');
  return out.empty() ? "0" : out;
}

QuadElt QuadElt::parse(const std::string& text, RingSpec spec) {
  Rational a(0), b(0);
  for (const auto& t : parse_terms(text)) {
    switch (t.unit) {
      case '\0':
        a += t.coef;
        break;
      case 'r':
        b += t.coef;
        break;
      default:
        throw ParseError(std::string("quaternion unit '") + t.unit +
                         "' in a quadratic-field literal: '" + text + "'");
    }
  }
  return {std::move(a), std::move(b), spec};
}

bool QuatElt::is_hurwitz() const {
  if (is_int(w_) && is_int(x_) && is_int(y_) && is_int(z_)) return true;
  return is_half_odd(w_) && is_half_odd(x_) && is_half_odd(y_) && is_half_odd(z_);
}

QuatElt QuatElt::pow(unsigned long e) const {
  QuatElt result = one();
  QuatElt base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string QuatElt::to_string() const {
  std::string out;
  append_term(out, w_, '\0');
  append_term(out, x_, 'i');
  append_term(out, y_, 'j');
  append_term(out, z_, 'k');
  return out.empty() ? "0" : out;
}

QuatElt QuatElt::parse(const std::string& text) {
  Rational w(0), x(0), y(0), z(0);
  for (const auto& t : parse_terms(text)) {
    switch (t.unit) {
      case '\0':
        w += t.coef;
        break;
      case 'i':
        x += t.coef;
        break;
      case 'j':
        y += t.coef;
        break;
      case 'k':
        z += t.coef;
        break;
      default:
        throw ParseError("'r' is not a quaternion unit: '" + text + "'");
    }
  }
  return {std::move(w), std::move(x), std::move(y), std::move(z)};
}

}  // namespace picard::rings
