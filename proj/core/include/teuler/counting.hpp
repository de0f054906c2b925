#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "teuler/bigint.hpp"
#include "teuler/hypergraph.hpp"

namespace teuler {

// Exact counting of tight Euler trails and tours by inclusion-exclusion
// over edge subsets: for fixed endpoint prefixes, the number of Euler
// trails equals
//
//   sum over W subseteq E of (-1)^|W| * #(tight walks of length m in (V, E\W))
//
// and each per-subset walk count comes from a dynamic program over
// (k-1)-prefix states. Time 2^m * poly(m), space polynomial: DP scratch is
// reused across subsets, never retained.

struct CountOptions {
  int threads = 1;
  // Counting is Theta(2^m); refuse m > 30 unless explicitly forced.
  bool force_large = false;
};

struct CountReport {
  BigInt trail_count{0};
  BigInt tour_count{0};
  std::uint64_t subsets_processed = 0;
  double wall_time_ms = 0.0;
  // Peak bytes of DP scratch + transition tables, sampled once per subset.
  std::size_t peak_workspace_bytes = 0;
};

/// Table of exact tight-walk counts rooted at one start prefix:
/// entry(d, p) is the number of tight start->p walks of length d (edges may
/// repeat). Rows run d = 0..max_len.
class WalkCountTable {
 public:
  const BigInt& entry(int d, const Prefix& p) const;
  int max_len() const { return static_cast<int>(rows_.size()) - 1; }
  std::size_t state_count() const { return states_.size(); }
  const Prefix& start() const { return start_; }

 private:
  friend WalkCountTable walk_counts(const Hypergraph&, const Prefix&, int);

  Prefix start_;
  std::vector<std::vector<int>> states_;
  std::unordered_map<std::vector<int>, int, detail::IntVecHash> state_index_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[d][state]
};

/// Full walk-count table for h from `start`, lengths 0..max_len.
/// T[0][p] is 1 exactly when p equals start and start is contained in some
/// edge of h; a start outside every edge yields an all-zero table.
WalkCountTable walk_counts(const Hypergraph& h, const Prefix& start,
                           int max_len);

/// Number of tight Euler y-x-trails (directed vertex sequences starting
/// with prefix y and ending with suffix x).
BigInt count_trails_between(const Hypergraph& h, const Prefix& y,
                            const Prefix& x, const CountOptions& opt = {});

/// Total number of tight Euler trails as directed sequences; mutually
/// reversed sequences count as two.
BigInt count_euler_trails(const Hypergraph& h, const CountOptions& opt = {});
CountReport count_euler_trails_report(const Hypergraph& h,
                                      const CountOptions& opt = {});

/// Number of tight Euler tours as equivalence classes under rotation and
/// reversal: the closed-trail total divided by 2m. Divisibility by 2m is
/// asserted before dividing; failure throws InternalError rather than
/// truncating.
BigInt count_euler_tours(const Hypergraph& h, const CountOptions& opt = {});
CountReport count_euler_tours_report(const Hypergraph& h,
                                     const CountOptions& opt = {});

/// True iff h has at least one tight Euler tour. Runs divisibility_filter
/// first; beyond the counting size cap it falls back to backtracking search
/// with limit 1.
bool exists_euler_tour(const Hypergraph& h, const CountOptions& opt = {});

}  // namespace teuler
