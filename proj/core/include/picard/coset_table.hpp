#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "picard/presentation.hpp"

namespace picard::fpgroups {

enum class Strategy { Hlt, Felsch };

const char* to_string(Strategy s);

struct EnumerationStats {
  std::int64_t cosets_defined = 0;   // cumulative definitions
  std::int64_t live_cosets = 0;
  std::int64_t coincidences = 0;     // dead cosets processed
  std::int64_t max_allocated = 0;    // peak simultaneously allocated rows
  std::int64_t wall_ms = 0;
};

struct EnumerationLimits {
  /// Maximum simultaneously allocated cosets (table rows).
  std::int64_t max_cosets = 10'000'000;
  Strategy strategy = Strategy::Hlt;
  /// Definitions between progress callbacks; 0 disables.
  std::int64_t progress_interval = 0;
  std::function<void(const EnumerationStats&)> progress;
};

/// Outcome of an enumeration over the trivial subgroup. LimitExceeded is an
/// outcome, not an error: the group may still be finite.
struct EnumResult {
  bool finite = false;
  std::int64_t order = 0;        // valid iff finite
  std::int64_t limit = 0;        // the cap that was in force
  EnumerationStats stats;
};

/// Coset enumeration (Todd-Coxeter) over the trivial subgroup. The table
/// maps cosets x generators to cosets, closed under inverses; coincidences
/// are processed through a path-compressed union-find with an eager merge
/// queue, and dead rows are compacted away when they exceed half the table.
///
/// Determinism: cosets are scanned in increasing order; HLT scans relators
/// in presentation order and fills gaps front-first, then fills remaining
/// row entries in column order; Felsch defines at the first undefined entry
/// in row-major order and drains the deduction stack LIFO. Two runs with the
/// same strategy produce identical tables.
class CosetEnumeration {
 public:
  CosetEnumeration(const Presentation& p, EnumerationLimits limits = {});

  /// Runs to closure or to the coset limit. Call once.
  EnumResult run();

  /// After a finite run(): number of live cosets.
  std::int64_t live_count() const;

  /// After a finite run(): re-traces every relator from every live coset and
  /// checks that every generator column is a permutation of the live cosets.
  bool verify_closed_table() const;

 private:
  using Coset = std::int32_t;
  static constexpr Coset kUndef = -1;

  int ncols() const { return static_cast<int>(2 * generator_count_); }
  Coset& entry(Coset c, int col) { return table_[static_cast<size_t>(c) * static_cast<size_t>(ncols()) + static_cast<size_t>(col)]; }
  Coset entry(Coset c, int col) const { return table_[static_cast<size_t>(c) * static_cast<size_t>(ncols()) + static_cast<size_t>(col)]; }

  Coset rep(Coset c);
  Coset define(Coset from, int col);
  void merge(Coset a, Coset b);
  void process_coincidences();
  void set_edge(Coset from, int col, Coset to);
  /// Scans one relator from coset alpha. fill: define cosets to close gaps
  /// (HLT). Returns false if a coincidence was processed (table changed).
  bool scan(Coset alpha, const std::vector<int>& relator_cols, bool fill);
  void lookahead();
  Coset compact(Coset tracked);
  void process_deductions();
  bool at_limit() const;
  void maybe_report_progress();

  std::size_t generator_count_;
  std::vector<std::vector<int>> relators_;           // as column strings
  std::vector<std::vector<std::vector<int>>> rotations_by_col_;  // Felsch
  EnumerationLimits limits_;

  std::vector<Coset> table_;
  std::vector<Coset> parent_;                        // union-find; live iff parent_[c] == c
  std::vector<Coset> coincidence_queue_;
  std::size_t coincidence_head_ = 0;
  std::vector<std::pair<Coset, int>> deductions_;

  std::int64_t live_ = 0;
  std::int64_t allocated_ = 0;
  EnumerationStats stats_;
  std::int64_t next_progress_ = 0;
  bool ran_ = false;
  bool closed_ = false;
  bool limit_hit_ = false;
};

EnumResult todd_coxeter(const Presentation& p, const EnumerationLimits& limits = {});

/// Order of the quotient by the normal closure of the given words, i.e. the
/// index of that closure when the enumeration closes.
EnumResult index_of_normal_closure(const Presentation& p, const std::vector<Word>& ws,
                                   const EnumerationLimits& limits = {});

}  // namespace picard::fpgroups
