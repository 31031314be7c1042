#include "picard/hermitian.hpp"

#include <sstream>

namespace picard::hermitian {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip_brackets(const std::string& text) {
  size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  if (lo < hi && text[lo] == '[' && text[hi - 1] == ']') {
    ++lo;
    --hi;
  }
  return text.substr(lo, hi - lo);
}

template <class S, class ParseEntry>
Mat3<S> parse_matrix_impl(const std::string& text, ParseEntry parse_entry) {
  const auto rows = split(strip_brackets(text), ';');
  if (rows.size() != 3) {
    throw ParseError("matrix literal must have 3 rows separated by ';': '" + text + "'");
  }
  Mat3<S> out;
  for (int r = 0; r < 3; ++r) {
    const auto entries = split(rows[static_cast<size_t>(r)], ',');
    if (entries.size() != 3) {
      throw ParseError("matrix row must have 3 entries separated by ',': '" +
                       rows[static_cast<size_t>(r)] + "'");
    }
    for (int c = 0; c < 3; ++c) out.at(r, c) = parse_entry(entries[static_cast<size_t>(c)]);
  }
  return out;
}

}  // namespace

std::optional<int> projective_order(const Mat3<QuadElt>& A, int cap) {
  const Mat3<QuadElt> I = Mat3<QuadElt>::identity_like(A.e[0]);
  Mat3<QuadElt> P = A;
  for (int k = 1; k <= cap; ++k) {
    if (const auto mu = scalar_ratio(P, I); mu && mu->is_unit_modulus()) return k;
    P = P * A;
  }
  return std::nullopt;
}

std::vector<NamedMatrix<QuadElt>> paper_generators(RingSpec spec) {
  const QuadElt z = QuadElt::zero(spec);
  const QuadElt o = QuadElt::one(spec);
  const Mat3<QuadElt> i0{{z, z, o, z, -o, z, o, z, z}};

  QuadElt u = -o;
  if (spec.d == 1) {
    u = QuadElt::root(spec);  // i
  } else if (spec.d == 3) {
    u = QuadElt(Rational(1, 2), Rational(1, 2), spec);  // (1+sqrt(-3))/2, order 6
  }
  const Mat3<QuadElt> r{{o, z, z, z, u, z, z, z, o}};

  return {{"I0", i0}, {"R", r}};
}

std::vector<NamedMatrix<QuatElt>> paper_generators_quaternion() {
  const QuatElt z = QuatElt::zero();
  const QuatElt o = QuatElt::one();
  const Mat3<QuatElt> i0{{z, z, o, z, -o, z, o, z, z}};
  const Mat3<QuatElt> ri{{o, z, z, z, QuatElt::i(), z, z, z, o}};
  const Mat3<QuatElt> rsigma{{o, z, z, z, QuatElt::sigma(), z, z, z, o}};
  return {{"I0", i0}, {"Ri", ri}, {"Rsigma", rsigma}};
}

Mat3<QuadElt> parse_matrix(const std::string& text, RingSpec spec) {
  return parse_matrix_impl<QuadElt>(text,
                                    [&](const std::string& s) { return QuadElt::parse(s, spec); });
}

Mat3<QuatElt> parse_matrix_quaternion(const std::string& text) {
  return parse_matrix_impl<QuatElt>(text, [](const std::string& s) { return QuatElt::parse(s); });
}

}  // namespace picard::hermitian
