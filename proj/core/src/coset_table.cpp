#include "picard/coset_table.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace picard::fpgroups {

namespace {

int col_of(Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }
int inv_col(int c) { return c ^ 1; }

}  // namespace

const char* to_string(Strategy s) { return s == Strategy::Hlt ? "hlt" : "felsch"; }

CosetEnumeration::CosetEnumeration(const Presentation& p, EnumerationLimits limits)
    : generator_count_(p.generators.size()), limits_(std::move(limits)) {
  if (limits_.max_cosets < 1 || limits_.max_cosets > (std::int64_t{1} << 31) - 2) {
    throw std::invalid_argument("max_cosets out of range");
  }
  for (const Word& w : p.relators) {
    std::vector<int> cols;
    cols.reserve(w.size());
    for (Letter l : w) cols.push_back(col_of(l));
    if (!cols.empty()) relators_.push_back(std::move(cols));
  }
  if (limits_.strategy == Strategy::Felsch) {
    rotations_by_col_.resize(static_cast<size_t>(ncols()));
    for (const auto& r : relators_) {
      for (size_t i = 0; i < r.size(); ++i) {
        std::vector<int> rot;
        rot.reserve(r.size());
        rot.insert(rot.end(), r.begin() + static_cast<long>(i), r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + static_cast<long>(i));
        auto& bucket = rotations_by_col_[static_cast<size_t>(rot[0])];
        if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) {
          bucket.push_back(std::move(rot));
        }
      }
    }
  }
  // Coset 0 = the subgroup (trivial) itself.
  table_.assign(static_cast<size_t>(ncols()), kUndef);
  parent_.assign(1, 0);
  live_ = 1;
  allocated_ = 1;
  stats_.max_allocated = 1;
  next_progress_ = limits_.progress_interval;
}

CosetEnumeration::Coset CosetEnumeration::rep(Coset c) {
  Coset r = c;
  while (parent_[static_cast<size_t>(r)] != r) r = parent_[static_cast<size_t>(r)];
  while (parent_[static_cast<size_t>(c)] != r) {
    const Coset nxt = parent_[static_cast<size_t>(c)];
    parent_[static_cast<size_t>(c)] = r;
    c = nxt;
  }
  return r;
}

void CosetEnumeration::maybe_report_progress() {
  if (limits_.progress_interval <= 0 || !limits_.progress) return;
  if (stats_.cosets_defined < next_progress_) return;
  next_progress_ += limits_.progress_interval;
  stats_.live_cosets = live_;
  limits_.progress(stats_);
}

CosetEnumeration::Coset CosetEnumeration::define(Coset from, int col) {
  if (allocated_ >= limits_.max_cosets) {
    limit_hit_ = true;
    return kUndef;
  }
  const Coset n = static_cast<Coset>(allocated_++);
  table_.resize(table_.size() + static_cast<size_t>(ncols()), kUndef);
  parent_.push_back(n);
  ++live_;
  ++stats_.cosets_defined;
  stats_.max_allocated = std::max(stats_.max_allocated, allocated_);
  set_edge(from, col, n);
  maybe_report_progress();
  return n;
}

void CosetEnumeration::set_edge(Coset from, int col, Coset to) {
  entry(from, col) = to;
  entry(to, inv_col(col)) = from;
  if (limits_.strategy == Strategy::Felsch) {
    deductions_.emplace_back(from, col);
    deductions_.emplace_back(to, inv_col(col));
  }
}

void CosetEnumeration::merge(Coset a, Coset b) {
  a = rep(a);
  b = rep(b);
  if (a == b) return;
  if (a > b) std::swap(a, b);
  parent_[static_cast<size_t>(b)] = a;
  --live_;
  ++stats_.coincidences;
  coincidence_queue_.push_back(b);
}

void CosetEnumeration::process_coincidences() {
  while (coincidence_head_ < coincidence_queue_.size()) {
    const Coset gamma = coincidence_queue_[coincidence_head_++];
    for (int c = 0; c < ncols(); ++c) {
      const Coset delta = entry(gamma, c);
      if (delta == kUndef) continue;
      entry(gamma, c) = kUndef;
      // Delete the mirrored edge before re-asserting through representatives.
      if (entry(delta, inv_col(c)) == gamma) entry(delta, inv_col(c)) = kUndef;
      const Coset mu = rep(gamma);
      const Coset nu = rep(delta);
      if (entry(mu, c) != kUndef) {
        merge(nu, entry(mu, c));
      } else if (entry(nu, inv_col(c)) != kUndef) {
        merge(mu, entry(nu, inv_col(c)));
      } else {
        set_edge(mu, c, nu);
      }
    }
  }
  coincidence_queue_.clear();
  coincidence_head_ = 0;
}

bool CosetEnumeration::scan(Coset alpha, const std::vector<int>& relator_cols, bool fill) {
  const int len = static_cast<int>(relator_cols.size());
  Coset f = alpha;
  Coset b = alpha;
  int i = 0;
  int j = len - 1;
  while (true) {
    while (i <= j) {
      const Coset nxt = entry(f, relator_cols[static_cast<size_t>(i)]);
      if (nxt == kUndef) break;
      f = nxt;
      ++i;
    }
    if (i > j) {
      if (f != b) {
        merge(f, b);
        process_coincidences();
        return false;
      }
      return true;
    }
    while (j >= i) {
      const Coset prv = entry(b, inv_col(relator_cols[static_cast<size_t>(j)]));
      if (prv == kUndef) break;
      b = prv;
      --j;
    }
    if (j < i) {
      if (f != b) {
        merge(f, b);
        process_coincidences();
        return false;
      }
      return true;
    }
    if (j == i) {
      set_edge(f, relator_cols[static_cast<size_t>(i)], b);
      return true;
    }
    if (!fill) return true;  // incomplete; lookahead and Felsch scans learn nothing here
    if (define(f, relator_cols[static_cast<size_t>(i)]) == kUndef) return true;  // at limit
  }
}

void CosetEnumeration::lookahead() {
  for (Coset alpha = 0; alpha < allocated_; ++alpha) {
    if (rep(alpha) != alpha) continue;
    for (const auto& r : relators_) {
      while (!scan(alpha, r, false)) {
        if (rep(alpha) != alpha) break;
      }
      if (rep(alpha) != alpha) break;
    }
  }
}

CosetEnumeration::Coset CosetEnumeration::compact(Coset tracked) {
  // Queues must be drained; renumbers live cosets preserving order.
  std::vector<Coset> newindex(static_cast<size_t>(allocated_), kUndef);
  Coset next = 0;
  for (Coset c = 0; c < allocated_; ++c) {
    if (rep(c) == c) newindex[static_cast<size_t>(c)] = next++;
  }
  const Coset tracked_new = tracked == kUndef ? kUndef : newindex[static_cast<size_t>(rep(tracked))];
  for (Coset c = 0; c < allocated_; ++c) {
    if (rep(c) != c) continue;
    const Coset nc = newindex[static_cast<size_t>(c)];
    for (int col = 0; col < ncols(); ++col) {
      const Coset d = entry(c, col);
      entry(nc, col) = d == kUndef ? kUndef : newindex[static_cast<size_t>(rep(d))];
    }
  }
  allocated_ = next;
  table_.resize(static_cast<size_t>(allocated_) * static_cast<size_t>(ncols()));
  table_.shrink_to_fit();
  parent_.resize(static_cast<size_t>(allocated_));
  for (Coset c = 0; c < allocated_; ++c) parent_[static_cast<size_t>(c)] = c;
  // Remap pending deductions (Felsch compaction happens with an empty stack,
  // but keep this safe).
  for (auto& [c, col] : deductions_) c = newindex[static_cast<size_t>(c)];
  return tracked_new;
}

void CosetEnumeration::process_deductions() {
  while (!deductions_.empty()) {
    const auto [c, col] = deductions_.back();
    deductions_.pop_back();
    if (rep(c) != c) continue;
    for (const auto& rot : rotations_by_col_[static_cast<size_t>(col)]) {
      if (!scan(c, rot, false)) {
        if (rep(c) != c) break;
      }
    }
  }
}

bool CosetEnumeration::at_limit() const { return allocated_ >= limits_.max_cosets; }

EnumResult CosetEnumeration::run() {
  if (ran_) throw std::logic_error("CosetEnumeration::run() may be called once");
  ran_ = true;
  const auto t0 = std::chrono::steady_clock::now();
  auto finish = [&](bool finite) {
    stats_.live_cosets = live_;
    stats_.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    closed_ = finite;
    EnumResult res;
    res.finite = finite;
    res.order = finite ? live_ : 0;
    res.limit = limits_.max_cosets;
    res.stats = stats_;
    return res;
  };

  if (generator_count_ == 0) return finish(true);

  if (limits_.strategy == Strategy::Hlt) {
    while (true) {
      bool limit_hit = false;
      for (Coset alpha = 0; alpha < allocated_ && !limit_hit; ++alpha) {
        if (rep(alpha) != alpha) continue;
        if (live_ * 2 < allocated_ && allocated_ > 1024) alpha = compact(alpha);
        for (const auto& r : relators_) {
          // Retry after coincidences until the relator scans cleanly or the
          // coset dies.
          while (!scan(alpha, r, true) && rep(alpha) == alpha) {
          }
          if (rep(alpha) != alpha) break;
          if (limit_hit_) {
            // A scan was left incomplete because the cap was reached.
            limit_hit = true;
            break;
          }
        }
        if (limit_hit || rep(alpha) != alpha) continue;
        for (int col = 0; col < ncols() && !limit_hit; ++col) {
          if (entry(alpha, col) == kUndef) {
            if (define(alpha, col) == kUndef) limit_hit = true;
          }
        }
      }
      if (!limit_hit) return finish(true);
      // Lookahead: coincidence-only scans over the whole table, then compact.
      const std::int64_t live_before = live_;
      lookahead();
      compact(kUndef);
      if (live_ >= live_before || at_limit()) return finish(false);
      limit_hit_ = false;
    }
  }

  // Felsch
  Coset row = 0;
  int col = 0;
  while (true) {
    process_deductions();
    if (live_ * 2 < allocated_ && allocated_ > 1024) {
      const Coset nrow = compact(row < allocated_ ? rep(row) : kUndef);
      row = nrow == kUndef ? allocated_ : nrow;
      col = 0;
    }
    // First undefined entry in row-major order from the cursor.
    bool found = false;
    while (row < allocated_) {
      if (rep(row) != row) {
        ++row;
        col = 0;
        continue;
      }
      while (col < ncols() && entry(row, col) != kUndef) ++col;
      if (col < ncols()) {
        found = true;
        break;
      }
      ++row;
      col = 0;
    }
    if (!found) {
      // Coincidence processing can transiently undefine entries behind the
      // cursor; a final sweep confirms closure.
      for (Coset c = 0; c < allocated_ && !found; ++c) {
        if (rep(c) != c) continue;
        for (int k = 0; k < ncols(); ++k) {
          if (entry(c, k) == kUndef) {
            row = c;
            col = k;
            found = true;
            break;
          }
        }
      }
      if (!found) return finish(true);
    }
    if (define(row, col) == kUndef) return finish(false);
  }
}

std::int64_t CosetEnumeration::live_count() const { return live_; }

bool CosetEnumeration::verify_closed_table() const {
  if (!closed_) return false;
  std::vector<Coset> live_rows;
  for (Coset c = 0; c < allocated_; ++c) {
    if (parent_[static_cast<size_t>(c)] == c) live_rows.push_back(c);
  }
  // Every entry defined, live, and inverse-consistent.
  for (const Coset c : live_rows) {
    for (int col = 0; col < ncols(); ++col) {
      const Coset d = entry(c, col);
      if (d == kUndef) return false;
      if (parent_[static_cast<size_t>(d)] != d) return false;
      if (entry(d, inv_col(col)) != c) return false;
    }
  }
  // Each generator column is a permutation of the live cosets.
  for (int col = 0; col < ncols(); ++col) {
    std::vector<char> seen(static_cast<size_t>(allocated_), 0);
    for (const Coset c : live_rows) {
      const Coset d = entry(c, col);
      if (seen[static_cast<size_t>(d)]) return false;
      seen[static_cast<size_t>(d)] = 1;
    }
  }
  // Every relator traces to the identity permutation.
  for (const auto& r : relators_) {
    for (const Coset c : live_rows) {
      Coset f = c;
      for (const int rc : r) f = entry(f, rc);
      if (f != c) return false;
    }
  }
  return true;
}

EnumResult todd_coxeter(const Presentation& p, const EnumerationLimits& limits) {
  CosetEnumeration enumeration(p, limits);
  return enumeration.run();
}

EnumResult index_of_normal_closure(const Presentation& p, const std::vector<Word>& ws,
                                   const EnumerationLimits& limits) {
  return todd_coxeter(normal_closure_quotient(p, ws), limits);
}

}  // namespace picard::fpgroups
