#pragma once

// Brute-force Cayley-closure oracle, independent of the production
// enumerator: it repeatedly (1) defines every missing product as a fresh
// element, (2) traces every relator at every element and records forced
// identifications, (3) merges by wholesale renumbering and table rebuild.
// For a finite presented group of order at most `cap` this converges to the
// regular Cayley table; the group order is the element count.

#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "picard/presentation.hpp"

namespace naive {

using picard::fpgroups::Letter;
using picard::fpgroups::Presentation;

inline std::optional<long> group_order(const Presentation& p, long cap = 20000,
                                       int max_rounds = 10000) {
  const int n = static_cast<int>(p.generators.size());
  const int ncols = 2 * n;
  auto col = [](Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; };

  std::vector<std::vector<long>> table(1, std::vector<long>(static_cast<size_t>(ncols), -1));

  auto merge_all = [&](std::vector<std::pair<long, long>> pending) {
    while (!pending.empty()) {
      const long m = static_cast<long>(table.size());
      std::vector<long> root(static_cast<size_t>(m));
      std::iota(root.begin(), root.end(), 0L);
      std::function<long(long)> find = [&](long x) {
        while (root[static_cast<size_t>(x)] != x) {
          root[static_cast<size_t>(x)] = root[static_cast<size_t>(root[static_cast<size_t>(x)])];
          x = root[static_cast<size_t>(x)];
        }
        return x;
      };
      for (const auto& [a, b] : pending) {
        const long ra = find(a), rb = find(b);
        if (ra != rb) root[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
      }
      pending.clear();

      std::vector<long> newid(static_cast<size_t>(m), -1);
      long count = 0;
      for (long e = 0; e < m; ++e) {
        if (find(e) == e) newid[static_cast<size_t>(e)] = count++;
      }
      std::vector<std::vector<long>> rebuilt(static_cast<size_t>(count),
                                             std::vector<long>(static_cast<size_t>(ncols), -1));
      for (long e = 0; e < m; ++e) {
        const long ne = newid[static_cast<size_t>(find(e))];
        for (int c = 0; c < ncols; ++c) {
          const long t = table[static_cast<size_t>(e)][static_cast<size_t>(c)];
          if (t < 0) continue;
          const long nt = newid[static_cast<size_t>(find(t))];
          long& slot = rebuilt[static_cast<size_t>(ne)][static_cast<size_t>(c)];
          if (slot == -1) {
            slot = nt;
          } else if (slot != nt) {
            pending.emplace_back(slot, nt);  // conflicting images force a merge
          }
        }
      }
      table = std::move(rebuilt);
    }
  };

  for (int round = 0; round < max_rounds; ++round) {
    // Define missing products of the elements that existed at the start of
    // the pass (one BFS level per round, so merging can prune growth).
    bool defined = false;
    const size_t snapshot = table.size();
    for (size_t e = 0; e < snapshot; ++e) {
      for (int c = 0; c < ncols; ++c) {
        if (table[e][static_cast<size_t>(c)] != -1) continue;
        if (static_cast<long>(table.size()) >= cap) return std::nullopt;
        const long id = static_cast<long>(table.size());
        table.emplace_back(static_cast<size_t>(ncols), -1);
        table[e][static_cast<size_t>(c)] = id;
        table[static_cast<size_t>(id)][static_cast<size_t>(c ^ 1)] = static_cast<long>(e);
        defined = true;
      }
    }
    // Trace every relator from every element; incomplete paths are skipped
    // (they complete in a later round).
    std::vector<std::pair<long, long>> pending;
    for (long e = 0; e < static_cast<long>(table.size()); ++e) {
      for (const auto& w : p.relators) {
        long f = e;
        for (Letter l : w) {
          f = table[static_cast<size_t>(f)][static_cast<size_t>(col(l))];
          if (f < 0) break;
        }
        if (f >= 0 && f != e) pending.emplace_back(f, e);
      }
    }
    if (pending.empty() && !defined) return static_cast<long>(table.size());
    merge_all(std::move(pending));
  }
  return std::nullopt;
}

}  // namespace naive
