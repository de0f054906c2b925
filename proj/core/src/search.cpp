#include "teuler/search.hpp"

#include <algorithm>
#include <set>

#include "teuler/errors.hpp"

namespace teuler {

namespace {

// For each (k-1)-subset of an edge: the completing vertex and the edge id,
// sorted by vertex so extension order is reproducible.
struct ExtensionIndex {
  std::unordered_map<std::vector<int>, std::vector<std::pair<int, int>>,
                     detail::IntVecHash>
      by_tail;

  explicit ExtensionIndex(const Hypergraph& h) {
    for (int e = 0; e < h.m(); ++e) {
      const auto& verts = h.edge(e);
      for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        std::vector<int> key;
        key.reserve(verts.size() - 1);
        for (std::size_t i = 0; i < verts.size(); ++i) {
          if (i != drop) key.push_back(verts[i]);
        }
        by_tail[key].emplace_back(verts[drop], e);
      }
    }
    for (auto& [key, exts] : by_tail) {
      std::sort(exts.begin(), exts.end());
    }
  }

  const std::vector<std::pair<int, int>>* find(std::vector<int> tail) const {
    std::sort(tail.begin(), tail.end());
    auto it = by_tail.find(tail);
    return it == by_tail.end() ? nullptr : &it->second;
  }
};

std::vector<int> min_rotation_of(const std::vector<int>& v) {
  std::size_t s = v.size();
  std::vector<int> best = v;
  std::vector<int> rot(s);
  for (std::size_t shift = 1; shift < s; ++shift) {
    for (std::size_t i = 0; i < s; ++i) rot[i] = v[(shift + i) % s];
    if (rot < best) best = rot;
  }
  return best;
}

std::vector<int> canonical_closed(const std::vector<int>& verts) {
  std::vector<int> fwd = min_rotation_of(verts);
  std::vector<int> rev = verts;
  std::reverse(rev.begin(), rev.end());
  rev = min_rotation_of(rev);
  return std::min(fwd, rev);
}

// Depth-first extension over trailing (k-1)-windows with a used-edge set.
// Starts run over every ordering of every edge in lexicographic order, so
// trails come out sorted and each directed trail is generated exactly once
// (its first k vertices determine the starting ordering).
class Enumerator {
 public:
  Enumerator(const Hypergraph& h, std::optional<std::uint64_t> limit,
             bool tours_only)
      : h_(h), ext_(h), limit_(limit), tours_only_(tours_only) {}

  void run() {
    if (h_.m() < 1) throw InputError("enumeration requires at least one edge");
    std::vector<std::pair<std::vector<int>, int>> starts;
    for (int e = 0; e < h_.m(); ++e) {
      std::vector<int> perm = h_.edge(e);
      do {
        starts.emplace_back(perm, e);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::sort(starts.begin(), starts.end());

    used_.assign(h_.m(), false);
    for (const auto& [seq, edge] : starts) {
      if (done()) break;
      seq_ = seq;
      used_[edge] = true;
      used_count_ = 1;
      extend();
      used_[edge] = false;
    }
  }

  std::vector<WalkSeq> trails;
  std::set<std::vector<int>> tours;

 private:
  bool done() const {
    if (!limit_) return false;
    std::uint64_t found = tours_only_ ? tours.size() : trails.size();
    return found >= *limit_;
  }

  void extend() {
    if (used_count_ == h_.m()) {
      emit();
      return;
    }
    int k = h_.k();
    std::vector<int> tail(seq_.end() - (k - 1), seq_.end());
    const auto* exts = ext_.find(std::move(tail));
    if (!exts) return;
    for (auto [v, e] : *exts) {
      if (used_[e] || done()) continue;
      used_[e] = true;
      ++used_count_;
      seq_.push_back(v);
      extend();
      seq_.pop_back();
      --used_count_;
      used_[e] = false;
    }
  }

  void emit() {
    int k = h_.k();
    if (tours_only_) {
      bool closed_shaped =
          std::equal(seq_.begin(), seq_.begin() + (k - 1),
                     seq_.end() - (k - 1), seq_.end());
      if (!closed_shaped) return;
      std::vector<int> tour(seq_.begin(), seq_.end() - (k - 1));
      tours.insert(canonical_closed(tour));
    } else {
      trails.push_back(WalkSeq{seq_, false});
    }
  }

  const Hypergraph& h_;
  ExtensionIndex ext_;
  std::optional<std::uint64_t> limit_;
  bool tours_only_;
  std::vector<int> seq_;
  std::vector<bool> used_;
  int used_count_ = 0;
};

}  // namespace

std::ostream& operator<<(std::ostream& os, const CanonicalTour& t) {
  os << "tour[";
  for (std::size_t i = 0; i < t.verts.size(); ++i) {
    if (i) os << ' ';
    os << t.verts[i];
  }
  return os << ']';
}

std::vector<WalkSeq> enumerate_euler_trails(const Hypergraph& h,
                                            std::optional<std::uint64_t> limit) {
  Enumerator e(h, limit, /*tours_only=*/false);
  e.run();
  return std::move(e.trails);
}

std::vector<CanonicalTour> enumerate_euler_tours(
    const Hypergraph& h, std::optional<std::uint64_t> limit) {
  Enumerator e(h, limit, /*tours_only=*/true);
  e.run();
  std::vector<CanonicalTour> out;
  out.reserve(e.tours.size());
  for (auto& t : e.tours) out.push_back(CanonicalTour{t});
  return out;
}

CanonicalTour canonicalize(const Hypergraph& h, const WalkSeq& w) {
  VerifyResult v = verify_euler(h, w);
  if (v.verdict != EulerVerdict::Tour) {
    throw InputError("canonicalize requires an Euler tour: " +
                     (v.reason.empty() ? std::string("walk is open") : v.reason));
  }
  return CanonicalTour{canonical_closed(w.verts)};
}

std::size_t tour_orbit_size(const WalkSeq& w) {
  if (!w.closed) throw InputError("orbit size is defined for closed walks");
  std::set<std::vector<int>> orbit;
  std::size_t s = w.verts.size();
  std::vector<int> rev = w.verts;
  std::reverse(rev.begin(), rev.end());
  std::vector<int> rot(s);
  for (std::size_t shift = 0; shift < s; ++shift) {
    for (std::size_t i = 0; i < s; ++i) rot[i] = w.verts[(shift + i) % s];
    orbit.insert(rot);
    for (std::size_t i = 0; i < s; ++i) rot[i] = rev[(shift + i) % s];
    orbit.insert(rot);
  }
  return orbit.size();
}

ForcedWalk forced_walk(const Hypergraph& h, const WalkSeq& seed) {
  if (h.k() != 3) throw InputError("forced_walk requires a 3-uniform hypergraph");
  if (h.max_codegree() > 2) {
    throw InputError("forced_walk requires maximum codegree <= 2");
  }
  if (seed.closed || seed.verts.size() != 3) {
    throw InputError("seed must be an open walk of exactly 3 vertices");
  }
  int first = h.find_edge(seed.verts);
  if (first < 0) throw InputError("seed window is not an edge");

  // pair -> up to two (edge, third vertex) continuations
  std::unordered_map<std::vector<int>, std::vector<std::pair<int, int>>,
                     detail::IntVecHash>
      by_pair;
  for (int e = 0; e < h.m(); ++e) {
    const auto& verts = h.edge(e);
    for (int drop = 0; drop < 3; ++drop) {
      std::vector<int> key;
      for (int i = 0; i < 3; ++i) {
        if (i != drop) key.push_back(verts[i]);
      }
      by_pair[key].emplace_back(e, verts[drop]);
    }
  }

  std::vector<int> seq = seed.verts;
  std::vector<bool> used(h.m(), false);
  used[first] = true;
  int steps = 0;
  for (;;) {
    std::vector<int> tail = {seq[seq.size() - 2], seq.back()};
    if (tail[0] > tail[1]) std::swap(tail[0], tail[1]);
    auto it = by_pair.find(tail);
    int next_edge = -1, next_vertex = -1;
    if (it != by_pair.end()) {
      for (auto [e, v] : it->second) {
        if (!used[e]) {
          next_edge = e;
          next_vertex = v;
          break;  // codegree <= 2: at most one unused candidate
        }
      }
    }
    if (next_edge < 0) break;
    used[next_edge] = true;
    seq.push_back(next_vertex);
    ++steps;
  }

  if (steps == 0) return ForcedWalk{ForcedResult::Stuck, seed};
  std::size_t s = seq.size();
  bool closed_shaped = seq[0] == seq[s - 2] && seq[1] == seq[s - 1];
  if (closed_shaped) {
    WalkSeq tour{std::vector<int>(seq.begin(), seq.end() - 2), true};
    return ForcedWalk{ForcedResult::Tour, std::move(tour)};
  }
  return ForcedWalk{ForcedResult::Trail, WalkSeq{std::move(seq), false}};
}

}  // namespace teuler
