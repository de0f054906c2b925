#include "teuler/counting.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <thread>
#include <utility>

#include "teuler/errors.hpp"
#include "teuler/search.hpp"

namespace teuler {

namespace {

std::size_t bigint_bytes(const BigInt& v) {
  return v.backend().size() * sizeof(boost::multiprecision::limb_type);
}

// The walk DP runs over ordered (k-1)-tuples of distinct vertices contained
// in an edge. Each edge contributes one arc per ordering of its vertices:
// (x_0..x_{k-2}) -> (x_1..x_{k-1}), labelled with the edge index so subsets
// can switch arcs off.
struct TransitionSystem {
  int k = 0;
  int m = 0;
  std::vector<std::vector<int>> states;
  std::unordered_map<std::vector<int>, int, detail::IntVecHash> index;

  struct Arc {
    int edge;
    int from;
    int to;
  };
  std::vector<Arc> arcs;

  // Bitmask of edges containing each state's vertex set; only built for
  // m <= 62 (the subset loop cannot go further anyway).
  std::vector<std::uint64_t> state_edges;
  bool has_masks = false;

  explicit TransitionSystem(const Hypergraph& h) : k(h.k()), m(h.m()) {
    has_masks = m <= 62;
    for (int e = 0; e < m; ++e) {
      std::vector<int> perm = h.edge(e);
      do {
        int fi = intern({perm.begin(), perm.end() - 1});
        int ti = intern({perm.begin() + 1, perm.end()});
        arcs.push_back({e, fi, ti});
        if (has_masks) {
          std::uint64_t bit = std::uint64_t{1} << e;
          state_edges[fi] |= bit;
          state_edges[ti] |= bit;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  int intern(std::vector<int> tuple) {
    auto it = index.find(tuple);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(states.size());
    index.emplace(tuple, id);
    states.push_back(std::move(tuple));
    if (has_masks) state_edges.push_back(0);
    return id;
  }

  int state_of(const std::vector<int>& tuple) const {
    auto it = index.find(tuple);
    return it == index.end() ? -1 : it->second;
  }

  std::size_t fixed_bytes() const {
    std::size_t b = arcs.size() * sizeof(Arc) +
                    state_edges.size() * sizeof(std::uint64_t);
    for (const auto& s : states) b += s.size() * sizeof(int) + sizeof(s);
    return b;
  }
};

enum class Mode { TrailsAll, ToursDiagonal, Pair };

struct RangeResult {
  BigInt total{0};
  std::size_t peak_bytes = 0;
};

// Accumulates sum over W in [lo, hi) of (-1)^|W| * f(W), where f counts the
// length-m walks of the requested shape in (V, E \ W). DP scratch is reused
// across subsets; nothing is retained per subset.
RangeResult sum_over_subsets(const TransitionSystem& ts, std::uint64_t lo,
                             std::uint64_t hi, Mode mode, int start_state,
                             int end_state) {
  const int nstates = static_cast<int>(ts.states.size());
  std::vector<BigInt> cur(nstates), nxt(nstates);
  std::vector<std::pair<int, int>> live;
  live.reserve(ts.arcs.size());
  BigInt subtotal{0};
  RangeResult out;

  auto run_layers = [&]() {
    for (int d = 1; d <= ts.m; ++d) {
      for (auto& v : nxt) v = 0;
      for (auto [f, t] : live) nxt[t] += cur[f];
      cur.swap(nxt);
    }
  };

  for (std::uint64_t w = lo; w < hi; ++w) {
    live.clear();
    for (const auto& a : ts.arcs) {
      if (!((w >> a.edge) & 1)) live.emplace_back(a.from, a.to);
    }
    subtotal = 0;
    switch (mode) {
      case Mode::TrailsAll:
        for (int i = 0; i < nstates; ++i) {
          cur[i] = (ts.state_edges[i] & ~w) ? 1 : 0;
        }
        run_layers();
        for (const auto& v : cur) subtotal += v;
        break;
      case Mode::Pair:
        if (ts.state_edges[start_state] & ~w) {
          for (auto& v : cur) v = 0;
          cur[start_state] = 1;
          run_layers();
          subtotal = cur[end_state];
        }
        break;
      case Mode::ToursDiagonal:
        for (int s = 0; s < nstates; ++s) {
          if (!(ts.state_edges[s] & ~w)) continue;
          for (auto& v : cur) v = 0;
          cur[s] = 1;
          run_layers();
          subtotal += cur[s];
        }
        break;
    }
    if (std::popcount(w) & 1) {
      out.total -= subtotal;
    } else {
      out.total += subtotal;
    }

    std::size_t bytes = live.capacity() * sizeof(std::pair<int, int>) +
                        static_cast<std::size_t>(nstates) * 2 * sizeof(BigInt) +
                        bigint_bytes(out.total);
    for (const auto& v : cur) bytes += bigint_bytes(v);
    for (const auto& v : nxt) bytes += bigint_bytes(v);
    out.peak_bytes = std::max(out.peak_bytes, bytes);
  }
  return out;
}

void check_countable(const Hypergraph& h, const CountOptions& opt) {
  if (h.m() < 1) throw InputError("counting requires at least one edge");
  if (h.m() > 62) {
    throw InputError("counting is limited to m <= 62 edges (subset masks); "
                     "use the enumeration commands instead");
  }
  if (h.m() > 30 && !opt.force_large) {
    throw InputError("refusing to enumerate 2^" + std::to_string(h.m()) +
                     " edge subsets; pass force_large or use the search "
                     "module");
  }
}

int effective_threads(const CountOptions& opt, std::uint64_t subsets) {
  if (opt.threads < 1) throw InputError("thread count must be >= 1");
  std::uint64_t t = static_cast<std::uint64_t>(opt.threads);
  return static_cast<int>(std::min<std::uint64_t>(t, subsets));
}

// Splits [0, 2^m) across workers and adds the exact partial sums; the
// result is independent of the partition.
RangeResult parallel_sum(const TransitionSystem& ts, const CountOptions& opt,
                         Mode mode, int start_state = -1, int end_state = -1) {
  std::uint64_t subsets = std::uint64_t{1} << ts.m;
  int threads = effective_threads(opt, subsets);
  if (threads == 1) {
    return sum_over_subsets(ts, 0, subsets, mode, start_state, end_state);
  }
  std::vector<RangeResult> parts(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  std::uint64_t chunk = subsets / threads;
  std::uint64_t rem = subsets % threads;
  std::uint64_t lo = 0;
  for (int i = 0; i < threads; ++i) {
    std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(i) < rem);
    workers.emplace_back([&, i, lo, hi]() {
      parts[i] = sum_over_subsets(ts, lo, hi, mode, start_state, end_state);
    });
    lo = hi;
  }
  for (auto& w : workers) w.join();
  RangeResult total;
  for (auto& p : parts) {
    total.total += p.total;
    total.peak_bytes += p.peak_bytes;  // workers are concurrent: sum peaks
  }
  return total;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

}  // namespace

const BigInt& WalkCountTable::entry(int d, const Prefix& p) const {
  static const BigInt zero{0};
  if (d < 0 || d > max_len()) {
    throw InputError("walk length " + std::to_string(d) + " outside table 0.." +
                     std::to_string(max_len()));
  }
  auto it = state_index_.find(p.seq);
  if (it == state_index_.end()) return zero;
  return rows_[d][it->second];
}

WalkCountTable walk_counts(const Hypergraph& h, const Prefix& start,
                           int max_len) {
  validate_prefix(h, start);
  if (max_len < 0) throw InputError("max_len must be nonnegative");

  TransitionSystem ts(h);
  WalkCountTable table;
  table.start_ = start;
  table.states_ = ts.states;
  table.state_index_ = ts.index;
  table.rows_.assign(max_len + 1, std::vector<BigInt>(ts.states.size()));

  int s0 = ts.state_of(start.seq);
  if (s0 < 0) return table;  // start not in E_{k-1}: all zero
  table.rows_[0][s0] = 1;
  for (int d = 1; d <= max_len; ++d) {
    for (const auto& a : ts.arcs) {
      table.rows_[d][a.to] += table.rows_[d - 1][a.from];
    }
  }
  return table;
}

BigInt count_trails_between(const Hypergraph& h, const Prefix& y,
                            const Prefix& x, const CountOptions& opt) {
  validate_prefix(h, y);
  validate_prefix(h, x);
  check_countable(h, opt);
  TransitionSystem ts(h);
  int sy = ts.state_of(y.seq);
  int sx = ts.state_of(x.seq);
  if (sy < 0 || sx < 0) return BigInt{0};
  RangeResult r = parallel_sum(ts, opt, Mode::Pair, sy, sx);
  if (r.total < 0) {
    throw InternalError("signed trail total is negative: " + r.total.str());
  }
  return r.total;
}

CountReport count_euler_trails_report(const Hypergraph& h,
                                      const CountOptions& opt) {
  check_countable(h, opt);
  Timer timer;
  TransitionSystem ts(h);
  RangeResult r = parallel_sum(ts, opt, Mode::TrailsAll);
  if (r.total < 0) {
    throw InternalError("signed trail total is negative: " + r.total.str());
  }
  CountReport report;
  report.trail_count = std::move(r.total);
  report.subsets_processed = std::uint64_t{1} << h.m();
  report.peak_workspace_bytes = r.peak_bytes + ts.fixed_bytes();
  report.wall_time_ms = timer.ms();
  return report;
}

BigInt count_euler_trails(const Hypergraph& h, const CountOptions& opt) {
  return count_euler_trails_report(h, opt).trail_count;
}

CountReport count_euler_tours_report(const Hypergraph& h,
                                     const CountOptions& opt) {
  check_countable(h, opt);
  Timer timer;
  TransitionSystem ts(h);
  RangeResult r = parallel_sum(ts, opt, Mode::ToursDiagonal);
  if (r.total < 0) {
    throw InternalError("signed closed-trail total is negative: " +
                        r.total.str());
  }
  BigInt two_m{2 * h.m()};
  if (r.total % two_m != 0) {
    throw InternalError(
        "closed-trail total " + r.total.str() + " is not divisible by 2m = " +
        two_m.str() +
        "; a tour symmetric under rotation/reversal would cause this");
  }
  CountReport report;
  report.tour_count = r.total / two_m;
  report.subsets_processed = std::uint64_t{1} << h.m();
  report.peak_workspace_bytes = r.peak_bytes + ts.fixed_bytes();
  report.wall_time_ms = timer.ms();
  return report;
}

BigInt count_euler_tours(const Hypergraph& h, const CountOptions& opt) {
  return count_euler_tours_report(h, opt).tour_count;
}

bool exists_euler_tour(const Hypergraph& h, const CountOptions& opt) {
  if (h.m() < 1) throw InputError("existence check requires at least one edge");
  if (!divisibility_filter(h)) return false;
  if (h.m() <= 30 || opt.force_large) {
    return count_euler_tours(h, opt) > 0;
  }
  // Beyond the counter's practical range: backtracking existence proof.
  return !enumerate_euler_tours(h, 1).empty();
}

}  // namespace teuler
