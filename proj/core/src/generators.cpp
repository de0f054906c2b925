#include "teuler/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "teuler/errors.hpp"
#include "teuler/search.hpp"

namespace teuler {

Hypergraph gen_tight_cycle(int n, int k) {
  if (n <= k) {
    throw InputError("tight cycle requires n > k, got n = " +
                     std::to_string(n) + ", k = " + std::to_string(k));
  }
  std::vector<std::vector<int>> edges(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) edges[i].push_back((i + j) % n);
  }
  return Hypergraph(k, n, edges);
}

Hypergraph gen_path(int t) {
  if (t < 2) throw InputError("tight path requires t >= 2");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i <= 2 * t - 3; ++i) {
    edges.push_back({i, i + 1, i + 2});
  }
  return Hypergraph(3, 2 * t, edges);
}

std::string HellLabels::name(int id) const {
  if (id < 0 || id >= count()) {
    throw InputError("H_ell vertex id " + std::to_string(id) + " out of range");
  }
  if (id <= ell + 1) return std::to_string(id);
  if (id <= 2 * ell) return "v" + std::to_string(id - ell - 1) + "a";
  return "v" + std::to_string(id - 2 * ell) + "b";
}

HellGadget gen_h_ell(int ell) {
  if (ell <= 4) throw InputError("H_ell requires ell > 4");
  HellLabels lab{ell};
  std::vector<std::vector<int>> edges;
  edges.reserve(6 * ell);
  // E_1
  edges.push_back({1, 0, ell});
  edges.push_back({1, lab.va(1), ell});
  edges.push_back({lab.va(1), ell, ell + 1});
  edges.push_back({lab.va(1), lab.vb(1), ell + 1});
  edges.push_back({lab.vb(1), ell + 1, 0});
  edges.push_back({lab.vb(1), 1, 0});
  // E_i for 2 <= i <= ell-1
  for (int i = 2; i <= ell - 1; ++i) {
    edges.push_back({i, i - 1, lab.va(i - 1)});
    edges.push_back({i, lab.va(i), lab.va(i - 1)});
    edges.push_back({lab.va(i), lab.va(i - 1), lab.vb(i - 1)});
    edges.push_back({lab.va(i), lab.vb(i), lab.vb(i - 1)});
    edges.push_back({lab.vb(i), lab.vb(i - 1), i - 1});
    edges.push_back({lab.vb(i), i, i - 1});
  }
  // E_ell
  edges.push_back({ell, ell - 1, lab.va(ell - 1)});
  edges.push_back({ell, ell + 1, lab.va(ell - 1)});
  edges.push_back({ell + 1, lab.va(ell - 1), lab.vb(ell - 1)});
  edges.push_back({ell + 1, 0, lab.vb(ell - 1)});
  edges.push_back({0, lab.vb(ell - 1), ell - 1});
  edges.push_back({0, ell, ell - 1});

  return HellGadget{Hypergraph(3, 3 * ell, edges), lab};
}

const char* to_string(TourType t) {
  switch (t) {
    case TourType::N:
      return "N";
    case TourType::T:
      return "T";
    case TourType::F:
      return "F";
  }
  return "?";
}

TypedTour tour_of_type(int ell, TourType type) {
  HellGadget g = gen_h_ell(ell);
  const HellLabels& lab = g.labels;
  WalkSeq walk;
  walk.closed = true;
  switch (type) {
    case TourType::N:
      walk.verts = {0, 1, ell, lab.va(1), ell + 1, lab.vb(1)};
      break;
    case TourType::T:
      walk.verts.reserve(6 * ell);
      walk.verts.push_back(0);
      walk.verts.push_back(ell);
      for (int i = 1; i <= ell - 1; ++i) {
        walk.verts.push_back(i);
        walk.verts.push_back(lab.va(i));
      }
      walk.verts.push_back(ell);
      walk.verts.push_back(ell + 1);
      for (int i = 1; i <= ell - 1; ++i) {
        walk.verts.push_back(lab.va(i));
        walk.verts.push_back(lab.vb(i));
      }
      walk.verts.push_back(ell + 1);
      walk.verts.push_back(0);
      for (int i = 1; i <= ell - 1; ++i) {
        walk.verts.push_back(lab.vb(i));
        walk.verts.push_back(i);
      }
      break;
    case TourType::F: {
      ForcedWalk fw = forced_walk(g.graph, WalkSeq{{ell, 0, 1}, false});
      if (fw.result != ForcedResult::Tour) {
        throw InternalError("forced walk from (ell,0,1) did not close");
      }
      walk = std::move(fw.walk);
      break;
    }
  }
  VerifyResult v = verify_euler(g.graph, walk);
  if (v.verdict == EulerVerdict::NotEuler &&
      (type == TourType::T || (type == TourType::F && ell % 3 != 1))) {
    throw InternalError(std::string("tour of type ") + to_string(type) +
                        " failed verification: " + v.reason);
  }
  return TypedTour{std::move(walk), v.verdict == EulerVerdict::Tour};
}

OrderingClassifier::OrderingClassifier(int ell) : ell_(ell) {
  if (ell <= 4) throw InputError("H_ell requires ell > 4");
  if (ell % 3 == 1) {
    throw InputError("ordering types are defined only for ell != 1 (mod 3), "
                     "where H_ell has both Euler tours");
  }
  HellGadget g = gen_h_ell(ell);
  hell_edges_ = g.graph.edges();
  std::sort(hell_edges_.begin(), hell_edges_.end());

  auto absorb = [&](const WalkSeq& tour, TourType type) {
    std::size_t s = tour.verts.size();
    for (std::size_t i = 0; i < s; ++i) {
      std::vector<int> fwd = {tour.verts[i], tour.verts[(i + 1) % s],
                              tour.verts[(i + 2) % s]};
      std::vector<int> rev = {fwd[2], fwd[1], fwd[0]};
      types_[std::min(fwd, rev)] = type;
    }
  };
  absorb(tour_of_type(ell, TourType::T).walk, TourType::T);
  absorb(tour_of_type(ell, TourType::F).walk, TourType::F);
}

TourType OrderingClassifier::classify(const std::vector<int>& edge,
                                      const std::array<int, 3>& ordering) const {
  std::vector<int> sorted_edge = edge;
  std::sort(sorted_edge.begin(), sorted_edge.end());
  if (!std::binary_search(hell_edges_.begin(), hell_edges_.end(),
                          sorted_edge)) {
    throw InputError("not an edge of H_" + std::to_string(ell_));
  }
  std::vector<int> sorted_ord(ordering.begin(), ordering.end());
  std::sort(sorted_ord.begin(), sorted_ord.end());
  if (sorted_ord != sorted_edge) {
    throw InputError("ordering is not a permutation of the edge");
  }
  std::vector<int> fwd(ordering.begin(), ordering.end());
  std::vector<int> rev(ordering.rbegin(), ordering.rend());
  auto it = types_.find(std::min(fwd, rev));
  return it == types_.end() ? TourType::N : it->second;
}

TourType ordering_type(int ell, const std::vector<int>& edge,
                       const std::array<int, 3>& ordering) {
  return OrderingClassifier(ell).classify(edge, ordering);
}

Hypergraph gen_complete(int n, int k) {
  if (n < k) throw InputError("complete hypergraph requires n >= k");
  std::vector<std::vector<int>> edges;
  std::vector<int> combo(k);
  std::iota(combo.begin(), combo.end(), 0);
  for (;;) {
    edges.push_back(combo);
    int i = k - 1;
    while (i >= 0 && combo[i] == n - k + i) --i;
    if (i < 0) break;
    ++combo[i];
    for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }
  return Hypergraph(k, n, edges);
}

Hypergraph gen_wreath(int n, int k, const std::vector<int>& perm) {
  if (n <= k || k < 2) throw InputError("wreath requires n > k >= 2");
  if (static_cast<int>(perm.size()) != n) {
    throw InputError("permutation must have exactly n entries");
  }
  std::vector<bool> seen(n, false);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) {
      throw InputError("perm is not a permutation of 0..n-1");
    }
    seen[v] = true;
  }
  long long a = std::lcm<long long>(n, k) / k;
  std::vector<std::vector<int>> edges;
  std::set<std::vector<int>> dedupe;
  for (long long j = 1; j <= a; ++j) {
    std::vector<int> block;
    block.reserve(k);
    for (long long r = (j - 1) * k + 1; r <= j * k; ++r) {
      int residue = static_cast<int>((r - 1) % n);  // 1-based wrap to 0-based
      block.push_back(perm[residue]);
    }
    std::sort(block.begin(), block.end());
    if (dedupe.insert(block).second) edges.push_back(std::move(block));
  }
  return Hypergraph(k, n, edges);
}

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // Unbiased rejection sampling; 32-bit distributions are not portable
  // across standard library implementations, this is.
  std::uint64_t mod = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (mod != 0 && r > std::numeric_limits<std::uint64_t>::max() - mod);
  return r % n;
}

// min(C(n,k), cap)
unsigned long long binom_capped(int n, int k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > cap) return cap;
  }
  return static_cast<unsigned long long>(r);
}

}  // namespace

Hypergraph gen_random(int n, int k, int m, std::uint64_t seed) {
  if (n < k) throw InputError("random hypergraph requires n >= k");
  if (m < 0) throw InputError("edge count must be nonnegative");
  constexpr unsigned long long kEnumerable = 1u << 21;
  unsigned long long total = binom_capped(n, k, 1ull << 62);
  if (static_cast<unsigned long long>(m) > total) {
    throw InputError("requested " + std::to_string(m) + " edges but C(n,k) = " +
                     std::to_string(total));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> edges;

  if (total <= kEnumerable) {
    // Exact sampling without replacement: partial Fisher-Yates over the full
    // lexicographic combination list. Handles m == C(n,k) saturation.
    std::vector<std::vector<int>> all = gen_complete(n, k).edges();
    for (int i = 0; i < m; ++i) {
      std::size_t j = i + bounded(rng, all.size() - i);
      std::swap(all[i], all[j]);
    }
    edges.assign(all.begin(), all.begin() + m);
  } else {
    // Collision probability is negligible at this density.
    std::set<std::vector<int>> chosen;
    while (static_cast<int>(chosen.size()) < m) {
      std::set<int> verts;
      while (static_cast<int>(verts.size()) < k) {
        verts.insert(static_cast<int>(bounded(rng, n)));
      }
      chosen.emplace(verts.begin(), verts.end());
    }
    edges.assign(chosen.begin(), chosen.end());
  }
  std::sort(edges.begin(), edges.end());
  return Hypergraph(k, n, edges);
}

}  // namespace teuler
