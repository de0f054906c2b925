#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "teuler/hypergraph.hpp"

namespace teuler {

/// A vertex sequence. Open walks take windows w_i..w_{i+k-1} for
/// i = 0..s-k; closed walks take all s windows cyclically. Validity is
/// checked by the operations below, never by construction.
struct WalkSeq {
  std::vector<int> verts;
  bool closed = false;

  friend bool operator==(const WalkSeq& a, const WalkSeq& b) {
    return a.closed == b.closed && a.verts == b.verts;
  }
};

std::ostream& operator<<(std::ostream& os, const WalkSeq& w);

/// Number of windows: s-k+1 for an open walk (0 if shorter than k),
/// s for a closed one.
int walk_window_count(const WalkSeq& w, int k);

/// Reversal maps tight trails to tight trails, for open and closed walks.
WalkSeq reverse_walk(const WalkSeq& w);

/// True iff every window of w is an edge of h and no edge repeats.
/// Malformed input yields false; if `reason` is non-null it receives the
/// first violation.
bool is_tight_trail(const Hypergraph& h, const WalkSeq& w,
                    std::string* reason = nullptr);

enum class EulerVerdict { Trail, Tour, NotEuler };

const char* to_string(EulerVerdict v);

struct VerifyResult {
  EulerVerdict verdict = EulerVerdict::NotEuler;
  std::string reason;       // empty unless NotEuler
  int edges_covered = 0;    // distinct edges seen before the first violation
};

/// Classifies w as a tight Euler tour (closed, every edge exactly once),
/// a tight Euler trail (same but open), or neither. Never throws: untrusted
/// certificate files get a structured verdict instead.
VerifyResult verify_euler(const Hypergraph& h, const WalkSeq& w);

}  // namespace teuler
