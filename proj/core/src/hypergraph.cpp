#include "teuler/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

#include "teuler/errors.hpp"

namespace teuler {

namespace {

std::string edge_to_string(const std::vector<int>& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "}";
}

}  // namespace

Hypergraph::Hypergraph(int k, int n,
                       const std::vector<std::vector<int>>& edge_list)
    : k_(k), n_(n) {
  if (k < 2) throw InputError("uniformity k must be at least 2");
  if (k > kMaxUniformity) {
    throw InputError("uniformity k = " + std::to_string(k) +
                     " exceeds the supported maximum " +
                     std::to_string(kMaxUniformity));
  }
  if (n < k) throw InputError("vertex count n must be at least k");

  edges_.reserve(edge_list.size());
  degree_.assign(n_, 0);
  for (const auto& raw : edge_list) {
    if (static_cast<int>(raw.size()) != k) {
      throw InputError("edge " + edge_to_string(raw) + " has " +
                       std::to_string(raw.size()) + " vertices, expected " +
                       std::to_string(k));
    }
    std::vector<int> e = raw;
    std::sort(e.begin(), e.end());
    for (int v : e) {
      if (v < 0 || v >= n) {
        throw InputError("vertex " + std::to_string(v) + " out of range 0.." +
                         std::to_string(n - 1));
      }
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InputError("repeated vertex in edge " + edge_to_string(raw));
    }
    int id = static_cast<int>(edges_.size());
    auto [it, inserted] = edge_index_.emplace(e, id);
    if (!inserted) {
      throw InputError("duplicate edge " + edge_to_string(e));
    }
    for (int v : e) ++degree_[v];
    edges_.push_back(std::move(e));
  }
}

int Hypergraph::find_edge(const std::vector<int>& verts) const {
  if (static_cast<int>(verts.size()) != k_) return -1;
  std::vector<int> key = verts;
  std::sort(key.begin(), key.end());
  auto it = edge_index_.find(key);
  return it == edge_index_.end() ? -1 : it->second;
}

int Hypergraph::degree(int v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range 0.." +
                     std::to_string(n_ - 1));
  }
  return degree_[v];
}

int Hypergraph::codegree(int u, int v) const {
  if (u == v) throw InputError("codegree requires two distinct vertices");
  degree(u);  // range checks
  degree(v);
  int count = 0;
  for (const auto& e : edges_) {
    if (std::binary_search(e.begin(), e.end(), u) &&
        std::binary_search(e.begin(), e.end(), v)) {
      ++count;
    }
  }
  return count;
}

int Hypergraph::max_codegree() const {
  std::unordered_map<std::uint64_t, int> pair_count;
  pair_count.reserve(edges_.size() * k_ * (k_ - 1) / 2);
  int best = 0;
  for (const auto& e : edges_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        std::uint64_t key = (static_cast<std::uint64_t>(e[i]) << 32) |
                            static_cast<std::uint32_t>(e[j]);
        best = std::max(best, ++pair_count[key]);
      }
    }
  }
  return best;
}

bool divisibility_filter(const Hypergraph& h) {
  if (h.m() < 1) throw InputError("divisibility_filter requires m >= 1");
  for (int v = 0; v < h.n(); ++v) {
    int d = h.degree(v);
    if (d > 0 && d % h.k() != 0) return false;
  }
  return true;
}

bool prefix_in_edge(const Hypergraph& h, const Prefix& p) {
  for (const auto& e : h.edges()) {
    bool all = true;
    for (int v : p.seq) {
      if (!std::binary_search(e.begin(), e.end(), v)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

void validate_prefix(const Hypergraph& h, const Prefix& p) {
  if (static_cast<int>(p.seq.size()) != h.k() - 1) {
    throw InputError("prefix must have exactly k-1 = " +
                     std::to_string(h.k() - 1) + " vertices, got " +
                     std::to_string(p.seq.size()));
  }
  std::unordered_set<int> seen;
  for (int v : p.seq) {
    if (v < 0 || v >= h.n()) {
      throw InputError("prefix vertex " + std::to_string(v) +
                       " out of range 0.." + std::to_string(h.n() - 1));
    }
    if (!seen.insert(v).second) {
      throw InputError("repeated vertex " + std::to_string(v) + " in prefix");
    }
  }
}

}  // namespace teuler
