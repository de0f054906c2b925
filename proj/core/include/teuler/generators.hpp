#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "teuler/hypergraph.hpp"
#include "teuler/walk.hpp"

namespace teuler {

/// Tight cycle C_n: n vertices, edges {i, i+1, ..., i+k-1} mod n for every
/// i. Requires n > k so the n windows are distinct sets.
Hypergraph gen_tight_cycle(int n, int k);

/// Tight path P_t: 3-uniform, vertices 0..2t-1, edges {i,i+1,i+2} for
/// i = 0..2t-3. Requires t >= 2.
Hypergraph gen_path(int t);

/// Vertex labelling of the torus gadget H_ell. Dense layout: numeric labels
/// 0..ell+1 first, then v_1^a..v_{ell-1}^a, then v_1^b..v_{ell-1}^b.
struct HellLabels {
  int ell = 0;

  int numeric(int r) const { return r; }           // r in 0..ell+1
  int va(int i) const { return ell + 1 + i; }      // i in 1..ell-1
  int vb(int i) const { return 2 * ell + i; }      // i in 1..ell-1
  int count() const { return 3 * ell; }

  /// "0".."ell+1", "v1a".."v{ell-1}a", "v1b".."v{ell-1}b".
  std::string name(int id) const;
};

struct HellGadget {
  Hypergraph graph;
  HellLabels labels;
};

/// The gadget H_ell: 3*ell vertices, 6*ell edges, maximum codegree 2.
/// Requires ell > 4.
HellGadget gen_h_ell(int ell);

/// The three tours of H_ell determined by the orderings of edge {0,1,ell}:
/// N is the short 6-edge tour, T the explicit Euler tour, F the forced
/// walk from seed (ell,0,1), Eulerian iff ell != 1 (mod 3).
enum class TourType { N, T, F };

struct TypedTour {
  WalkSeq walk;         // always closed
  bool eulerian = false;
};

TypedTour tour_of_type(int ell, TourType type);

const char* to_string(TourType t);

/// Classifies an ordering of an H_ell edge by membership in the
/// precomputed type-T and type-F tours (reversals identified); everything
/// else is type N. Only defined for ell != 1 (mod 3), where both Euler
/// tours exist.
class OrderingClassifier {
 public:
  explicit OrderingClassifier(int ell);

  TourType classify(const std::vector<int>& edge,
                    const std::array<int, 3>& ordering) const;

 private:
  int ell_;
  std::vector<std::vector<int>> hell_edges_;  // sorted, for validation
  std::unordered_map<std::vector<int>, TourType, detail::IntVecHash> types_;
};

TourType ordering_type(int ell, const std::vector<int>& edge,
                       const std::array<int, 3>& ordering);

/// Complete k-uniform hypergraph: all C(n,k) k-subsets of 0..n-1.
Hypergraph gen_complete(int n, int k);

/// Wreath: the lcm(n,k)/k consecutive k-blocks mod n, relabelled through
/// `perm` (a permutation of 0..n-1); duplicate blocks collapse. When n and
/// k are coprime this is exactly the tight Hamiltonian cycle.
Hypergraph gen_wreath(int n, int k, const std::vector<int>& perm);

/// m distinct k-subsets of 0..n-1, uniform without replacement,
/// deterministic for a fixed seed. Edges emitted in lexicographic order.
Hypergraph gen_random(int n, int k, int m, std::uint64_t seed);

}  // namespace teuler
