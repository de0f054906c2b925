// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// nonzero exit if anything fails. Run with no arguments for all criteria or
// pass criterion numbers to select.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "teuler/counting.hpp"
#include "teuler/generators.hpp"
#include "teuler/reduction.hpp"
#include "teuler/search.hpp"
#include "teuler/walk.hpp"

#include "oracle.hpp"

using namespace teuler;
using teuler::testing::bounded;

namespace {

struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// 1. count_euler_tours(C_n) = 1 for n = 5..12, single-threaded, < 60 s each.
void criterion_cycle_uniqueness(Check& c) {
  for (int n = 5; n <= 12; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    BigInt tours = count_euler_tours(gen_tight_cycle(n, 3), {1, false});
    double secs = seconds_since(t0);
    c.expect(tours == 1, "C_" + std::to_string(n) + " tour count " +
                             tours.str() + " != 1");
    c.expect(secs < 60.0, "C_" + std::to_string(n) + " took " +
                              std::to_string(secs) + " s (>= 60)");
  }
}

// 2. H_ell has 2 Euler tours for ell in {5,6,8,9,11} and 1 for {7,10,13};
//    forced walks reproduce the type-N tour and the ell=5 type-F tour
//    verbatim; each gadget enumeration stays under a second.
void criterion_gadget_taxonomy(Check& c) {
  auto timed_tours = [&](int ell) {
    auto t0 = std::chrono::steady_clock::now();
    auto tours = enumerate_euler_tours(gen_h_ell(ell).graph);
    double secs = seconds_since(t0);
    c.expect(secs < 1.0, "H_" + std::to_string(ell) + " enumeration took " +
                             std::to_string(secs) + " s (>= 1)");
    return tours.size();
  };
  for (int ell : {5, 6, 8, 9, 11}) {
    std::size_t n = timed_tours(ell);
    c.expect(n == 2, "H_" + std::to_string(ell) + " has " + std::to_string(n) +
                         " tours, expected 2");
  }
  for (int ell : {7, 10, 13}) {
    std::size_t n = timed_tours(ell);
    c.expect(n == 1, "H_" + std::to_string(ell) + " has " + std::to_string(n) +
                         " tours, expected 1");
  }

  HellGadget g5 = gen_h_ell(5);
  ForcedWalk n_walk = forced_walk(g5.graph, WalkSeq{{0, 1, 5}, false});
  c.expect(n_walk.result == ForcedResult::Tour &&
               n_walk.walk == WalkSeq{{0, 1, 5, 7, 6, 11}, true},
           "type-N tour of H_5 not reproduced verbatim");

  const std::vector<int> type_f = {5, 0, 1, 11, 12, 8, 9,  3, 4, 14,
                                   0, 6, 11, 7, 8,  2, 3,  13, 14, 10,
                                   6, 5, 7,  1, 2,  12, 13, 9,  10, 4};
  ForcedWalk f_walk = forced_walk(g5.graph, WalkSeq{{5, 0, 1}, false});
  c.expect(f_walk.result == ForcedResult::Tour &&
               f_walk.walk == WalkSeq{type_f, true},
           "type-F tour of H_5 not reproduced verbatim");
}

// 3. Counter vs backtracking enumeration on 100 seeded random instances
//    (n <= 8, m <= 12), plus the pinned trail counts.
void criterion_oracle_equivalence(Check& c) {
  c.expect(count_euler_trails(gen_tight_cycle(6, 3)) == 12,
           "count_euler_trails(C_6) != 12");
  c.expect(count_euler_trails(Hypergraph(3, 3, {{0, 1, 2}})) == 6,
           "single-edge trail count != 6");

  std::mt19937_64 rng(20170702);
  CountOptions opt{2, false};
  for (int it = 0; it < 100; ++it) {
    int n = 4 + static_cast<int>(bounded(rng, 5));
    int cap = std::min(12, n * (n - 1) * (n - 2) / 6);
    int m = 1 + static_cast<int>(bounded(rng, cap));
    Hypergraph h = gen_random(n, 3, m, rng());

    BigInt trails = count_euler_trails(h, opt);
    BigInt tours = count_euler_tours(h, opt);
    std::size_t trails_bt = enumerate_euler_trails(h).size();
    std::size_t tours_bt = enumerate_euler_tours(h).size();
    std::ostringstream tag;
    tag << "instance " << it << " (n=" << n << ", m=" << m << ")";
    c.expect(trails == BigInt(trails_bt),
             tag.str() + ": trails " + trails.str() + " vs enumeration " +
                 std::to_string(trails_bt));
    c.expect(tours == BigInt(tours_bt),
             tag.str() + ": tours " + tours.str() + " vs enumeration " +
                 std::to_string(tours_bt));
  }
}

// 4. Walk DP vs exhaustive walk enumeration on 50 seeded instances with
//    m <= 8 and random (start, end, d); includes the pinned T[6][(0,1)] = 7.
void criterion_walk_dp(Check& c) {
  Hypergraph c6 = gen_tight_cycle(6, 3);
  c.expect(walk_counts(c6, Prefix{0, 1}, 6).entry(6, Prefix{0, 1}) == 7,
           "pinned T[6][(0,1)] on C_6 != 7");

  std::mt19937_64 rng(424243);
  for (int it = 0; it < 50; ++it) {
    int n = 4 + static_cast<int>(bounded(rng, 5));
    int cap = std::min(8, n * (n - 1) * (n - 2) / 6);
    int m = 1 + static_cast<int>(bounded(rng, cap));
    Hypergraph h = gen_random(n, 3, m, rng());
    int d = static_cast<int>(bounded(rng, m + 1));
    auto pick_pair = [&]() {
      int a = static_cast<int>(bounded(rng, n));
      int b;
      do {
        b = static_cast<int>(bounded(rng, n));
      } while (b == a);
      return std::vector<int>{a, b};
    };
    std::vector<int> y = pick_pair(), x = pick_pair();
    BigInt dp = walk_counts(h, Prefix{y}, d).entry(d, Prefix{x});
    BigInt brute = testing::brute_count_walks(h, y, x, d);
    std::ostringstream tag;
    tag << "instance " << it << " d=" << d << ": DP " << dp << " vs brute "
        << brute;
    c.expect(dp == brute, tag.str());
  }
}

std::vector<CnfFormula> formula_suite() {
  std::mt19937_64 rng(31337);
  std::vector<CnfFormula> out;
  while (out.size() < 50) {
    int pool = 3 + static_cast<int>(bounded(rng, 6));  // t in 3..8 after dense renumbering
    int p = 1 + static_cast<int>(bounded(rng, 6));
    CnfFormula f = preprocess(testing::random_cnf(rng, pool, p));
    if (f.t() < 2 || f.t() > 8) continue;
    out.push_back(std::move(f));
  }
  return out;
}

// 5. Reduction structural identities on 50 random preprocessed formulas.
void criterion_reduction_structure(Check& c) {
  auto suite = formula_suite();
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const CnfFormula& f = suite[i];
    ReducedInstance inst = reduce(f);
    std::vector<int> occ(f.t(), 0);
    for (const auto& clause : f.clauses) {
      for (int lit : clause) ++occ[std::abs(lit) - 1];
    }
    long long sum_ell = 0;
    for (int v = 0; v < f.t(); ++v) sum_ell += ell_for_occurrences(occ[v]);
    std::string tag = "formula " + std::to_string(i);
    c.expect(inst.graph.m() == 6 * sum_ell + 6 * f.p() + 2 * f.t(),
             tag + ": |E| identity violated");
    c.expect(inst.graph.m() <= 42 * f.p() + 26 * f.t(),
             tag + ": |E| exceeds 42p + 26t");
    c.expect(inst.graph.n() == 3 * sum_ell, tag + ": |V| != 3*sum(ell)");
    c.expect(inst.graph.max_codegree() <= 4, tag + ": codegree > 4");
  }
}

// 6. Constructive soundness: for every satisfiable formula of the suite,
//    assignment -> tour -> assignment round-trips within 10 s per instance.
void criterion_soundness_roundtrip(Check& c) {
  auto suite = formula_suite();
  int satisfiable = 0;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const CnfFormula& f = suite[i];
    auto w = sat_brute_force(f);
    if (!w) continue;
    ++satisfiable;
    auto t0 = std::chrono::steady_clock::now();
    ReducedInstance inst = reduce(f);
    WalkSeq tour = tour_from_assignment(f, inst.map, *w);
    VerifyResult v = verify_euler(inst.graph, tour);
    Assignment decoded = assignment_from_tour(f, inst.map, tour);
    double secs = seconds_since(t0);
    std::string tag = "formula " + std::to_string(i);
    c.expect(v.verdict == EulerVerdict::Tour,
             tag + ": constructed walk is not an Euler tour (" + v.reason + ")");
    c.expect(satisfies(f, decoded), tag + ": decoded assignment unsatisfying");
    c.expect(secs < 10.0, tag + ": round trip took " + std::to_string(secs) + " s");
  }
  c.expect(satisfiable > 0, "suite contained no satisfiable formula");
  std::printf("    (%d of %zu formulas satisfiable)\n", satisfiable,
              suite.size());
}

// 7. Polynomial space: peak instrumented workspace of count_euler_tours over
//    m in {6,8,10,12} fits a log-log slope <= 2.5.
void criterion_poly_space(Check& c) {
  std::vector<double> xs, ys;
  for (int m : {6, 8, 10, 12}) {
    CountReport rep = count_euler_tours_report(gen_tight_cycle(m, 3), {1, false});
    c.expect(rep.tour_count == 1, "C_" + std::to_string(m) + " miscounted");
    xs.push_back(std::log(static_cast<double>(m)));
    ys.push_back(std::log(static_cast<double>(rep.peak_workspace_bytes)));
    std::printf("    m=%2d peak workspace %zu bytes\n", m,
                rep.peak_workspace_bytes);
  }
  double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= xs.size();
  ybar /= ys.size();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - xbar) * (ys[i] - ybar);
    den += (xs[i] - xbar) * (xs[i] - xbar);
  }
  double slope = num / den;
  std::printf("    fitted exponent %.3f\n", slope);
  c.expect(slope <= 2.5, "fitted space exponent " + std::to_string(slope) +
                             " exceeds 2.5");
}

// 8. Thread counts 1, 2, 8 give bit-identical counts.
void criterion_parallel_determinism(Check& c) {
  Hypergraph h = gen_random(8, 3, 11, 91);
  CountReport base_trails = count_euler_trails_report(h, {1, false});
  CountReport base_tours = count_euler_tours_report(h, {1, false});
  for (int threads : {2, 8}) {
    CountReport rt = count_euler_trails_report(h, {threads, false});
    CountReport ru = count_euler_tours_report(h, {threads, false});
    c.expect(rt.trail_count == base_trails.trail_count &&
                 rt.trail_count.str() == base_trails.trail_count.str(),
             "trail counts differ at " + std::to_string(threads) + " threads");
    c.expect(ru.tour_count == base_tours.tour_count &&
                 ru.tour_count.str() == base_tours.tour_count.str(),
             "tour counts differ at " + std::to_string(threads) + " threads");
  }
}

struct Criterion {
  int number;
  const char* title;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "cycle uniqueness", criterion_cycle_uniqueness},
      {2, "gadget taxonomy", criterion_gadget_taxonomy},
      {3, "oracle equivalence", criterion_oracle_equivalence},
      {4, "walk-DP correctness", criterion_walk_dp},
      {5, "reduction structural identities", criterion_reduction_structure},
      {6, "constructive soundness round-trip", criterion_soundness_roundtrip},
      {7, "polynomial-space property", criterion_poly_space},
      {8, "parallel determinism", criterion_parallel_determinism},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (auto& criterion : criteria) {
    if (!selected.empty() && !selected.count(criterion.number)) continue;
    Check check;
    auto t0 = std::chrono::steady_clock::now();
    criterion.run(check);
    double secs = seconds_since(t0);
    if (check.failures.empty()) {
      std::printf("criterion %d PASS  %-36s (%.2f s)\n", criterion.number,
                  criterion.title, secs);
    } else {
      ++failed;
      std::printf("criterion %d FAIL  %-36s (%.2f s)\n", criterion.number,
                  criterion.title, secs);
      for (const auto& f : check.failures) {
        std::printf("    %s\n", f.c_str());
      }
    }
    std::fflush(stdout);
  }
  if (failed) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("ACCEPTANCE: all criteria passed\n");
  return 0;
}
