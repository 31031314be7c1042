#pragma once

#include <string>
#include <vector>

#include "picard/intmath.hpp"
#include "picard/presentation.hpp"

namespace picard::fpgroups {

/// Invariant factors d1 | d2 | ... of a finitely generated abelian group;
/// 0 denotes an infinite (free) factor and trivial factors 1 are omitted.
struct AbelianInvariants {
  std::vector<Int> factors;

  bool is_trivial() const { return factors.empty(); }
  bool has_free_part() const;
  /// Product of the nonzero factors (order of the torsion part).
  Int torsion_order() const;
  std::string to_string() const;

  bool operator==(const AbelianInvariants&) const = default;
};

/// Smith normal form invariant factors of an integer matrix (rows x cols);
/// the cokernel of the matrix acting on Z^cols.
AbelianInvariants abelian_invariants_of_matrix(std::vector<std::vector<Int>> m, size_t cols);

/// Abelianization of the presented group via the relator exponent matrix.
AbelianInvariants abelianization(const Presentation& p);

}  // namespace picard::fpgroups
