#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "teuler/hypergraph.hpp"
#include "teuler/walk.hpp"

namespace teuler {

// Backtracking enumeration of tight Euler trails and tours: the brute-force
// oracle the counting module is validated against, plus the forced-extension
// walker that makes the codegree<=2 case polynomial.

/// Lexicographically least sequence among the 2m rotations/reversals of a
/// closed Euler trail. Two closed trails canonicalize equal iff they are the
/// same tour.
struct CanonicalTour {
  std::vector<int> verts;

  friend bool operator==(const CanonicalTour& a, const CanonicalTour& b) {
    return a.verts == b.verts;
  }
  friend bool operator<(const CanonicalTour& a, const CanonicalTour& b) {
    return a.verts < b.verts;
  }
};

std::ostream& operator<<(std::ostream& os, const CanonicalTour& t);

/// All tight Euler trails of h as directed open sequences, in lexicographic
/// order; stops early after `limit` trails if given.
std::vector<WalkSeq> enumerate_euler_trails(
    const Hypergraph& h, std::optional<std::uint64_t> limit = std::nullopt);

/// All distinct tight Euler tours of h in canonical form, ascending.
/// `limit = 1` is the existence prover for instances beyond the counter.
std::vector<CanonicalTour> enumerate_euler_tours(
    const Hypergraph& h, std::optional<std::uint64_t> limit = std::nullopt);

/// Canonical representative of a closed Euler trail. Throws InputError if w
/// does not verify as an Euler tour of h.
CanonicalTour canonicalize(const Hypergraph& h, const WalkSeq& w);

/// Size of the orbit {rotations} u {rotations of the reversal} of a closed
/// walk; 2m unless the tour is symmetric under some rotation/reversal.
std::size_t tour_orbit_size(const WalkSeq& w);

enum class ForcedResult { Tour, Trail, Stuck };

struct ForcedWalk {
  ForcedResult result = ForcedResult::Stuck;
  WalkSeq walk;
};

/// Deterministic forced extension for 3-uniform hypergraphs of maximum
/// codegree <= 2: from a seed edge ordering, repeatedly append the unique
/// unused continuation. Returns the closed tour if the walk re-enters its
/// seed window, the maximal open trail if it runs dry, or Stuck if no
/// extension existed at all.
ForcedWalk forced_walk(const Hypergraph& h, const WalkSeq& seed);

}  // namespace teuler
