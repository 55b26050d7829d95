#pragma once

#include <stdexcept>
#include <vector>

#include "cyclic.hpp"
#include "group.hpp"

namespace corr {

// Depth-graded presentation of a cyclic word: segments (w_0|n_0, ..., w_k|n_k)
// with product w_0 ... w_k = 1 and all w_i nonzero.  The associated word is
//   ( 0^{n_0}, 1, 0^{n_1}, w_1, 0^{n_2}, w_1 w_2, ..., 0^{n_k}, w_1...w_k ),
// i.e. the nonzero letters are the partial products of w_1..w_k, and n_i zeros
// precede the i-th nonzero letter.  Weight = k + sum n_i, depth = k.
struct StarWord {
  std::vector<std::pair<GroupElement, long>> segs;  // segs[0] = (w_0 | n_0)

  int depth() const { return int(segs.size()) - 1; }
  int weight() const {
    long w = depth();
    for (auto& [g, n] : segs) w += n;
    return int(w);
  }
};

inline void validate(const GroupSpec& G, const StarWord& s) {
  if (s.segs.empty()) throw std::invalid_argument("empty star word");
  GroupElement p = G.identity();
  for (auto& [g, n] : s.segs) {
    if (g.zero) throw std::invalid_argument("zero letter in star word segment");
    if (n < 0) throw std::invalid_argument("negative zero-run length");
    p = G.mul(p, g);
  }
  if (!G.is_identity(p)) throw std::invalid_argument("segment product is not the identity");
}

inline CyclicWord star_to_word(const GroupSpec& G, const StarWord& s) {
  validate(G, s);
  std::vector<GroupElement> letters;
  GroupElement partial = G.identity();
  for (size_t i = 0; i < s.segs.size(); ++i) {
    if (i > 0) partial = G.mul(partial, s.segs[i].first);
    for (long z = 0; z < s.segs[i].second; ++z) letters.push_back(G.zero());
    letters.push_back(partial);
  }
  return CyclicWord(std::move(letters));
}

// Inverse direction, defined up to rotation and overall scaling.  Reading the
// word from position base_rotation of its canonical form, the nonzero letters
// y_0, ..., y_k give segments w_i = y_i / y_{i-1} (indices mod k+1) and n_i =
// number of zeros preceding y_i.  star_to_word of the result reproduces the
// input up to rotation and multiplication of every letter by y_0^{-1}.
inline StarWord depth_decompose(const GroupSpec& G, const CyclicWord& w, size_t base_rotation = 0) {
  size_t m = w.size();
  if (m == 0) throw std::invalid_argument("empty word");
  StarWord out;
  // locate nonzero letters in cyclic order starting at base_rotation
  std::vector<size_t> pos;
  for (size_t i = 0; i < m; ++i) {
    size_t j = (base_rotation + i) % m;
    if (!w.letters[j].zero) pos.push_back(j);
  }
  if (pos.empty()) throw std::domain_error("word has no nonzero letter");
  size_t k1 = pos.size();  // = depth + 1
  out.segs.resize(k1);
  for (size_t i = 0; i < k1; ++i) {
    const GroupElement& y = w.letters[pos[i]];
    const GroupElement& yprev = w.letters[pos[(i + k1 - 1) % k1]];
    out.segs[i].first = G.div(y, yprev);
    // zeros strictly between the previous nonzero letter and this one
    size_t prev = pos[(i + k1 - 1) % k1];
    long zeros = long((pos[i] + m - prev) % m);
    if (zeros == 0) zeros = long(m);  // k1 == 1: all other letters are zeros
    out.segs[i].second = zeros - 1;
  }
  validate(G, out);
  return out;
}

}  // namespace corr
