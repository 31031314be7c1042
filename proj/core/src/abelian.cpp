#include "picard/abelian.hpp"

#include <algorithm>

namespace picard::fpgroups {

bool AbelianInvariants::has_free_part() const {
  return std::find(factors.begin(), factors.end(), Int(0)) != factors.end();
}

Int AbelianInvariants::torsion_order() const {
  Int n = 1;
  for (const Int& f : factors) {
    if (f != 0) n *= f;
  }
  return n;
}

std::string AbelianInvariants::to_string() const {
  if (factors.empty()) return "trivial";
  std::string out;
  for (const Int& f : factors) {
    if (!out.empty()) out += " ";
    out += f == 0 ? "Z" : "Z/" + f.get_str();
  }
  return out;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

AbelianInvariants abelian_invariants_of_matrix(std::vector<std::vector<Int>> m, size_t cols) {
  const size_t rows = m.size();
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged exponent matrix");
  }

  size_t t = 0;
  const size_t bound = std::min(rows, cols);
  while (t < bound) {
    // Nonzero entry of minimal magnitude into the pivot position.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows; ++i) {
      for (size_t j = t; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (!found || abs_int(m[i][j]) < abs_int(m[pi][pj])) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    std::swap(m[t], m[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
        for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);  // strictly smaller pivot
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
        for (size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // The pivot must divide every remaining entry for the divisibility
      // chain; pull an offending row in and redo.
      for (size_t i = t + 1; i < rows && clean; ++i) {
        for (size_t j = t + 1; j < cols && clean; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
            clean = false;
          }
        }
      }
    }
    if (m[t][t] < 0) {
      for (size_t j = t; j < cols; ++j) m[t][j] = -m[t][j];
    }
    ++t;
  }

  AbelianInvariants out;
  for (size_t k = 0; k < t; ++k) {
    if (m[k][k] != 1) out.factors.push_back(m[k][k]);
  }
  for (size_t k = t; k < cols; ++k) out.factors.push_back(0);
  return out;
}

AbelianInvariants abelianization(const Presentation& p) {
  const size_t cols = p.generators.size();
  std::vector<std::vector<Int>> m;
  m.reserve(p.relators.size());
  for (const Word& w : p.relators) {
    std::vector<Int> row(cols, 0);
    for (Letter l : w) {
      if (l > 0) {
        row[static_cast<size_t>(l - 1)] += 1;
      } else {
        row[static_cast<size_t>(-l - 1)] -= 1;
      }
    }
    m.push_back(std::move(row));
  }
  if (m.empty()) m.emplace_back(cols, 0);
  return abelian_invariants_of_matrix(std::move(m), cols);
}

}  // namespace picard::fpgroups
