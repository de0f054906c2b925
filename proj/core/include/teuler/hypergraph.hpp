#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace teuler {

// (k-1)-permutation state spaces blow past anything usable beyond this.
inline constexpr int kMaxUniformity = 12;

namespace detail {

struct IntVecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

}  // namespace detail

/// A k-uniform hypergraph on vertices 0..n-1.
///
/// Edges are stored with sorted vertex lists and keep their insertion index.
/// That index is what subset masks in the counting module refer to, so it is
/// stable for the lifetime of the object. Instances are immutable after
/// construction; every query is const and safe to call concurrently.
class Hypergraph {
 public:
  Hypergraph(int k, int n, const std::vector<std::vector<int>>& edge_list);

  int k() const { return k_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  /// Vertices of edge `id`, ascending. `id` must be in 0..m-1.
  const std::vector<int>& edge(int id) const { return edges_[id]; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  /// Index of the edge with this vertex set (any order), or -1.
  int find_edge(const std::vector<int>& verts) const;

  /// Number of edges containing v.
  int degree(int v) const;

  /// Number of edges containing both u and v; u != v required.
  int codegree(int u, int v) const;

  /// Maximum codegree over all vertex pairs; 0 when there are no edges.
  int max_codegree() const;

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<std::vector<int>> edges_;
  std::unordered_map<std::vector<int>, int, detail::IntVecHash> edge_index_;
  std::vector<int> degree_;
};

/// Necessary condition for a tight Euler tour: every vertex that occurs in
/// the tour covers exactly k of the edges containing it, so k must divide
/// every positive vertex degree. Returns false only when no tour can exist.
bool divisibility_filter(const Hypergraph& h);

/// An ordered sequence of k-1 distinct vertices: the endpoint/DP state of
/// tight walks.
struct Prefix {
  std::vector<int> seq;

  Prefix() = default;
  Prefix(std::initializer_list<int> v) : seq(v) {}
  explicit Prefix(std::vector<int> v) : seq(std::move(v)) {}

  friend bool operator==(const Prefix& a, const Prefix& b) {
    return a.seq == b.seq;
  }
};

/// True iff some edge of h contains all vertices of p.
bool prefix_in_edge(const Hypergraph& h, const Prefix& p);

/// Throws InputError unless p has exactly k-1 distinct in-range vertices.
void validate_prefix(const Hypergraph& h, const Prefix& p);

}  // namespace teuler
