#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "group.hpp"
#include "rational.hpp"

namespace corr {

// A cyclic word over G u {0}, stored as the lexicographically least rotation.
// A word with n+1 letters has weight n; depth = (number of nonzero letters) - 1.
struct CyclicWord {
  std::vector<GroupElement> letters;  // canonical rotation

  CyclicWord() = default;
  explicit CyclicWord(std::vector<GroupElement> raw) : letters(std::move(raw)) { canonicalize(); }

  size_t size() const { return letters.size(); }
  int weight() const { return int(letters.size()) - 1; }

  int depth() const {
    int nz = 0;
    for (auto& l : letters)
      if (!l.zero) ++nz;
    return nz - 1;
  }

  bool all_letters_equal() const {
    for (auto& l : letters)
      if (!(l == letters[0])) return false;
    return true;
  }

  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() <=> b.letters.size();
    for (size_t i = 0; i < a.letters.size(); ++i) {
      auto c = a.letters[i] <=> b.letters[i];
      if (c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

 private:
  void canonicalize() {
    if (letters.empty()) return;
    size_t n = letters.size();
    size_t best = 0;
    for (size_t s = 1; s < n; ++s) {
      for (size_t i = 0; i < n; ++i) {
        auto c = letters[(s + i) % n] <=> letters[(best + i) % n];
        if (c < 0) {
          best = s;
          break;
        }
        if (c > 0) break;
      }
    }
    if (best != 0) {
      std::vector<GroupElement> rot(n);
      for (size_t i = 0; i < n; ++i) rot[i] = letters[(best + i) % n];
      letters = std::move(rot);
    }
  }
};

// Formal Q-linear combination of cyclic words.
struct LinComb {
  std::map<CyclicWord, Rat> terms;

  void add(const CyclicWord& w, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (auto& [w, c] : o.terms) add(w, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (auto& [w, c] : o.terms) add(w, -c);
    return *this;
  }
  LinComb& operator*=(const Rat& s) {
    if (s == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [w, c] : terms) const_cast<Rat&>(c) *= s;
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rat& s, LinComb a) { return a *= s; }
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const LinComb&, const LinComb&) = default;
};

inline LinComb lincomb(const CyclicWord& w) {
  LinComb l;
  l.add(w, 1);
  return l;
}

// Antisymmetrized wedge of pairs of words: keys are ordered pairs a < b.
struct WedgeComb {
  std::map<std::pair<CyclicWord, CyclicWord>, Rat> terms;

  void add(const CyclicWord& a, const CyclicWord& b, const Rat& c) {
    if (c == 0 || a == b) return;
    if (a < b)
      insert({a, b}, c);
    else
      insert({b, a}, -c);
  }

  void add_wedge(const LinComb& x, const LinComb& y, const Rat& c = 1) {
    for (auto& [a, ca] : x.terms)
      for (auto& [b, cb] : y.terms) add(a, b, c * ca * cb);
  }

  WedgeComb& operator+=(const WedgeComb& o) {
    for (auto& [k, c] : o.terms) insert(k, c);
    return *this;
  }
  WedgeComb& operator-=(const WedgeComb& o) {
    for (auto& [k, c] : o.terms) insert(k, -c);
    return *this;
  }
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const WedgeComb&, const WedgeComb&) = default;

 private:
  void insert(const std::pair<CyclicWord, CyclicWord>& k, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
};

// Cobracket of a single cyclic word:
//   delta(x0 ox ... ox xn) = sum_cyc sum_{i=1}^{n-1} (x0..xi) ^ (x0, x_{i+1}..xn).
// Weight 1 words (two letters) map to zero.
inline WedgeComb coproduct(const CyclicWord& w) {
  WedgeComb out;
  size_t m = w.size();  // m = n + 1 letters
  if (m < 3) return out;
  size_t n = m - 1;
  for (size_t rot = 0; rot < m; ++rot) {
    std::vector<GroupElement> x(m);
    for (size_t i = 0; i < m; ++i) x[i] = w.letters[(rot + i) % m];
    for (size_t i = 1; i + 1 <= n; ++i) {
      std::vector<GroupElement> left(x.begin(), x.begin() + i + 1);
      std::vector<GroupElement> right;
      right.push_back(x[0]);
      right.insert(right.end(), x.begin() + i + 1, x.end());
      out.add(CyclicWord(std::move(left)), CyclicWord(std::move(right)), 1);
    }
  }
  return out;
}

inline WedgeComb coproduct(const LinComb& l) {
  WedgeComb out;
  for (auto& [w, c] : l.terms) {
    WedgeComb d = coproduct(w);
    for (auto& [k, cc] : d.terms) out.add(k.first, k.second, c * cc);
  }
  return out;
}

// Plain (ordered) rank-3 tensor combination, used for the co-Jacobi check.
struct TripleComb {
  std::map<std::tuple<CyclicWord, CyclicWord, CyclicWord>, Rat> terms;

  void add(const CyclicWord& a, const CyclicWord& b, const CyclicWord& c, const Rat& coef) {
    if (coef == 0) return;
    auto key = std::make_tuple(a, b, c);
    auto [it, fresh] = terms.emplace(key, coef);
    if (!fresh) {
      it->second += coef;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
};

// (1 + xi + xi^2)(delta ox id) delta(w) where xi rotates the three tensor
// slots; the co-Jacobi identity says this vanishes identically.
inline TripleComb cojacobi_defect(const CyclicWord& w) {
  TripleComb out;
  WedgeComb d = coproduct(w);
  for (auto& [pair, c] : d.terms) {
    // pair.first ^ pair.second stands for first ox second - second ox first.
    for (int side = 0; side < 2; ++side) {
      const CyclicWord& x = side == 0 ? pair.first : pair.second;
      const CyclicWord& y = side == 0 ? pair.second : pair.first;
      Rat outer = side == 0 ? c : -c;
      WedgeComb dx = coproduct(x);
      for (auto& [p2, c2] : dx.terms) {
        // delta(x) ox y with delta(x) term p ^ q expanded in ordered tensors,
        // then all three cyclic rotations of the slots.
        const CyclicWord& p = p2.first;
        const CyclicWord& q = p2.second;
        for (int s = 0; s < 2; ++s) {
          const CyclicWord& u = s == 0 ? p : q;
          const CyclicWord& v = s == 0 ? q : p;
          Rat coef = outer * c2;
          if (s == 1) coef = -coef;
          out.add(u, v, y, coef);
          out.add(y, u, v, coef);
          out.add(v, y, u, coef);
        }
      }
    }
  }
  return out;
}

}  // namespace corr
