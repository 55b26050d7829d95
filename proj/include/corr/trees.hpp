#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"

namespace corr {

// A plane trivalent tree with n+1 cyclically ordered leaves 0..n (weight n).
// Vertices 0..n are the leaves; vertices n+1, n+2, ... are the n-1 internal
// trivalent vertices.  Edges are listed in depth-first order starting from the
// edge at leaf 0, visiting children left before right in the plane embedding;
// each edge is (parent, child) in that traversal.  The orientation class of
// the tree is taken to be +1 with respect to this canonical edge order.
struct PlaneTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 2n-1 edges, DFS order

  int num_leaves() const { return n + 1; }
  int num_internal() const { return n - 1; }
  int num_vertices() const { return 2 * n; }
};

namespace detail {
// Enumerate full binary trees over the contiguous leaf range [lo, hi]; each
// result is (root vertex, edge list in DFS order).  Internal vertices are
// numbered from next_vertex in discovery order.
inline std::vector<std::pair<int, std::vector<std::pair<int, int>>>> subtrees(int lo, int hi,
                                                                              int next_vertex) {
  std::vector<std::pair<int, std::vector<std::pair<int, int>>>> out;
  if (lo == hi) {
    out.push_back({lo, {}});
    return out;
  }
  for (int m = lo; m < hi; ++m) {
    for (auto& [lroot, ledges] : subtrees(lo, m, next_vertex + 1)) {
      // left subtree used internal vertices next_vertex+1 .. next_vertex+(m-lo)
      int lused = m - lo;
      for (auto& [rroot, redges] : subtrees(m + 1, hi, next_vertex + 1 + lused)) {
        int v = next_vertex;
        std::vector<std::pair<int, int>> edges;
        edges.push_back({v, lroot});
        for (auto& e : ledges) edges.push_back(e);
        edges.push_back({v, rroot});
        for (auto& e : redges) edges.push_back(e);
        out.push_back({v, std::move(edges)});
      }
    }
  }
  return out;
}
}  // namespace detail

// All plane trivalent trees with leaves 0..n in this cyclic order.  There are
// Catalan(n-1) of them: cutting the tree at leaf 0 leaves a full binary tree
// over the leaf sequence 1..n.
inline std::vector<PlaneTree> enumerate_plane_trees(int n) {
  if (n < 2) throw std::invalid_argument("need weight n >= 2 (at least 3 leaves)");
  std::vector<PlaneTree> out;
  for (auto& [root, edges] : detail::subtrees(1, n, n + 1)) {
    PlaneTree t;
    t.n = n;
    t.edges.push_back({0, root});
    for (auto& e : edges) t.edges.push_back(e);
    out.push_back(std::move(t));
  }
  return out;
}

inline mpz_class catalan(unsigned k) {
  return binomial(2 * k, k) / (k + 1);
}

}  // namespace corr
