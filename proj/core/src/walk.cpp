#include "teuler/walk.hpp"

#include <algorithm>

namespace teuler {

std::ostream& operator<<(std::ostream& os, const WalkSeq& w) {
  os << (w.closed ? "closed[" : "open[");
  for (std::size_t i = 0; i < w.verts.size(); ++i) {
    if (i) os << ' ';
    os << w.verts[i];
  }
  return os << ']';
}

int walk_window_count(const WalkSeq& w, int k) {
  int s = static_cast<int>(w.verts.size());
  if (w.closed) return s;
  return s >= k ? s - k + 1 : 0;
}

WalkSeq reverse_walk(const WalkSeq& w) {
  WalkSeq r = w;
  std::reverse(r.verts.begin(), r.verts.end());
  return r;
}

namespace {

// Collects window i into `buf` sorted; false if the window repeats a vertex
// (and thus cannot be an edge).
bool window_at(const WalkSeq& w, int k, int i, std::vector<int>& buf) {
  int s = static_cast<int>(w.verts.size());
  buf.clear();
  for (int j = 0; j < k; ++j) {
    buf.push_back(w.verts[w.closed ? (i + j) % s : i + j]);
  }
  std::sort(buf.begin(), buf.end());
  return std::adjacent_find(buf.begin(), buf.end()) == buf.end();
}

struct TrailScan {
  bool ok = false;
  std::string reason;
  int distinct_edges = 0;
};

TrailScan scan_trail(const Hypergraph& h, const WalkSeq& w) {
  TrailScan out;
  int k = h.k();
  int s = static_cast<int>(w.verts.size());
  for (int v : w.verts) {
    if (v < 0 || v >= h.n()) {
      out.reason = "vertex " + std::to_string(v) + " out of range";
      return out;
    }
  }
  if (!w.closed && s < k - 1) {
    out.reason = "open walk shorter than k-1 vertices";
    return out;
  }
  if (w.closed && s < 1) {
    out.reason = "closed walk has no vertices";
    return out;
  }
  // s == k-1 open: a bare prefix, zero windows, vacuously a tight trail
  int windows = walk_window_count(w, k);
  std::vector<bool> used(h.m(), false);
  std::vector<int> buf;
  buf.reserve(k);
  for (int i = 0; i < windows; ++i) {
    if (!window_at(w, k, i, buf)) {
      out.reason = "window " + std::to_string(i) + " repeats a vertex";
      return out;
    }
    int id = h.find_edge(buf);
    if (id < 0) {
      out.reason = "window " + std::to_string(i) + " is not an edge";
      return out;
    }
    if (used[id]) {
      out.reason = "edge of window " + std::to_string(i) + " repeats";
      return out;
    }
    used[id] = true;
    ++out.distinct_edges;
  }
  out.ok = true;
  return out;
}

}  // namespace

bool is_tight_trail(const Hypergraph& h, const WalkSeq& w,
                    std::string* reason) {
  TrailScan scan = scan_trail(h, w);
  if (!scan.ok && reason) *reason = scan.reason;
  return scan.ok;
}

const char* to_string(EulerVerdict v) {
  switch (v) {
    case EulerVerdict::Trail:
      return "euler_trail";
    case EulerVerdict::Tour:
      return "euler_tour";
    case EulerVerdict::NotEuler:
      return "not_euler";
  }
  return "not_euler";
}

VerifyResult verify_euler(const Hypergraph& h, const WalkSeq& w) {
  VerifyResult res;
  TrailScan scan = scan_trail(h, w);
  res.edges_covered = scan.distinct_edges;
  if (!scan.ok) {
    res.reason = scan.reason;
    return res;
  }
  if (scan.distinct_edges != h.m()) {
    res.reason = "covers " + std::to_string(scan.distinct_edges) + " of " +
                 std::to_string(h.m()) + " edges";
    return res;
  }
  res.verdict = w.closed ? EulerVerdict::Tour : EulerVerdict::Trail;
  return res;
}

}  // namespace teuler
