#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace corr {

// A quasishuffle of blocks {1..r} and {r+1..r+s}: a surjection
// phi : {1..r+s} -> {1..M} that is strictly increasing on each block, and such
// that every fiber is a singleton or one element of each block.
struct Quasishuffle {
  int r = 0, s = 0, M = 0;
  std::vector<int> phi;  // phi[j] = slot of j+1, 0-based slots
};

inline void enumerate_quasishuffles_rec(int r, int s, int i, int j, std::vector<int>& pa,
                                        std::vector<int>& pb, int slot,
                                        std::vector<Quasishuffle>& out) {
  if (i == r && j == s) {
    Quasishuffle q;
    q.r = r;
    q.s = s;
    q.M = slot;
    q.phi.resize(r + s);
    for (int a = 0; a < r; ++a) q.phi[a] = pa[a];
    for (int b = 0; b < s; ++b) q.phi[r + b] = pb[b];
    out.push_back(q);
    return;
  }
  if (i < r) {
    pa[i] = slot;
    enumerate_quasishuffles_rec(r, s, i + 1, j, pa, pb, slot + 1, out);
  }
  if (j < s) {
    pb[j] = slot;
    enumerate_quasishuffles_rec(r, s, i, j + 1, pa, pb, slot + 1, out);
  }
  if (i < r && j < s) {
    pa[i] = slot;
    pb[j] = slot;
    enumerate_quasishuffles_rec(r, s, i + 1, j + 1, pa, pb, slot + 1, out);
  }
}

inline std::vector<Quasishuffle> enumerate_quasishuffles(int r, int s) {
  std::vector<Quasishuffle> out;
  std::vector<int> pa(r), pb(s);
  enumerate_quasishuffles_rec(r, s, 0, 0, pa, pb, 0, out);
  return out;
}

// |olSigma_{r,s}| = sum_j (r+s-j)! / ((r-j)! (s-j)! j!)  (j = # merged pairs).
inline mpz_class quasishuffle_count(int r, int s) {
  mpz_class total = 0;
  int m = r < s ? r : s;
  for (int j = 0; j <= m; ++j)
    total += factorial(unsigned(r + s - j)) / (factorial(unsigned(r - j)) * factorial(unsigned(s - j)) * factorial(unsigned(j)));
  return total;
}

// Plain (r,s)-shuffles as interleavings: each result lists, for positions
// 1..r+s of the merged word, which source index (0-based over the
// concatenation of block A then block B) lands there.
inline void enumerate_shuffles_rec(int r, int s, int i, int j, std::vector<int>& cur,
                                   std::vector<std::vector<int>>& out) {
  if (i == r && j == s) {
    out.push_back(cur);
    return;
  }
  if (i < r) {
    cur.push_back(i);
    enumerate_shuffles_rec(r, s, i + 1, j, cur, out);
    cur.pop_back();
  }
  if (j < s) {
    cur.push_back(r + j);
    enumerate_shuffles_rec(r, s, i, j + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> enumerate_shuffles(int r, int s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  enumerate_shuffles_rec(r, s, 0, 0, cur, out);
  return out;
}

}  // namespace corr
