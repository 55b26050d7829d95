#pragma once

#include <map>
#include <optional>
#include <set>
#include <variant>

#include "cyclic.hpp"
#include "group.hpp"

namespace corr {

// Normal form for weight-1 words modulo the weight-1 scaling relations
//   C(0,0) = 0   and   C(ab, ac) = C(0,a) + C(b,c).
//
// Setting u(g) = class of C(0,g) and P(g) = class of C(g,1), the relations are
// generated by: u additive in exponents (so u factors through the exponent
// vector; on mu_N this forces u = 0 over Q), and P(g) = P(g^{-1}) + u(g).
// Basis: U_i (one per group generator, free abelian only) and P(g) for g the
// smaller of {g, g^{-1}}.  Every weight-1 word reduces as
//   C(x,y) = u(y) + P(x/y),  C(0,g) = u(g),  C(0,0) = 0.
struct Weight1Key {
  bool is_u = false;
  size_t u_index = 0;   // generator index when is_u
  GroupElement p_arg;   // argument when !is_u

  friend auto operator<=>(const Weight1Key&, const Weight1Key&) = default;
};

using Weight1Comb = std::map<Weight1Key, Rat>;

inline void w1_add(Weight1Comb& m, const Weight1Key& k, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = m.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

inline void w1_add_u(const GroupSpec& G, Weight1Comb& m, const GroupElement& g, const Rat& c) {
  if (G.kind() == GroupSpec::Kind::MuN) return;  // torsion kills u over Q
  for (size_t i = 0; i < G.rank(); ++i)
    if (g.e[i] != 0) w1_add(m, Weight1Key{true, i, {}}, c * g.e[i]);
}

inline void w1_add_p(const GroupSpec& G, Weight1Comb& m, const GroupElement& g, const Rat& c) {
  GroupElement inv = G.inverse(g);
  if (inv < g) {
    w1_add(m, Weight1Key{false, 0, inv}, c);
    w1_add_u(G, m, g, c);
  } else {
    w1_add(m, Weight1Key{false, 0, g}, c);
  }
}

inline Weight1Comb weight1_reduce(const GroupSpec& G, const CyclicWord& w, const Rat& coef = 1) {
  if (w.weight() != 1) throw std::invalid_argument("weight1_reduce needs a weight-1 word");
  Weight1Comb m;
  const GroupElement& x = w.letters[0];
  const GroupElement& y = w.letters[1];
  if (x.zero && y.zero) return m;
  if (x.zero || y.zero) {
    w1_add_u(G, m, x.zero ? y : x, coef);
    return m;
  }
  w1_add_u(G, m, y, coef);
  w1_add_p(G, m, G.div(x, y), coef);
  return m;
}

// Wedge of two weight-1 classes in the scaling-reduced basis.
using Weight1Wedge = std::map<std::pair<Weight1Key, Weight1Key>, Rat>;

inline void w1_wedge_add(Weight1Wedge& m, const Weight1Key& a, const Weight1Key& b, const Rat& c) {
  if (c == 0 || a == b) return;
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  Rat v = a < b ? c : -c;
  auto [it, fresh] = m.emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) m.erase(it);
  }
}

inline Weight1Comb weight1_reduce(const GroupSpec& G, const LinComb& l) {
  Weight1Comb m;
  for (auto& [w, c] : l.terms) {
    Weight1Comb t = weight1_reduce(G, w, c);
    for (auto& [k, v] : t) w1_add(m, k, v);
  }
  return m;
}

// Canonical representative of a word modulo simultaneous multiplication of all
// letters by a group element.  For each distinct nonzero letter g we scale the
// word by g^{-1} (placing an identity letter somewhere) and take the least
// resulting canonical word.  Two words are scaling-equivalent iff their
// canonical forms agree: scaling by a maps the candidate set of one word
// bijectively onto the other's.  All-zero words are fixed by scaling.
inline CyclicWord scale_canonical(const GroupSpec& G, const CyclicWord& w) {
  std::optional<CyclicWord> best;
  std::set<GroupElement> tried;
  for (auto& l : w.letters) {
    if (l.zero || !tried.insert(l).second) continue;
    GroupElement inv = G.inverse(l);
    std::vector<GroupElement> scaled;
    for (auto& x : w.letters) scaled.push_back(x.zero ? x : G.mul(inv, x));
    CyclicWord cand(std::move(scaled));
    if (!best || cand < *best) best = std::move(cand);
  }
  return best ? *best : w;
}

// Reduce a wedge of weight-1 words factorwise into the scaling-reduced basis.
// All words appearing must have weight 1.
inline Weight1Wedge weight1_reduce_wedge(const GroupSpec& G, const WedgeComb& wc) {
  Weight1Wedge out;
  for (auto& [k, c] : wc.terms) {
    Weight1Comb a = weight1_reduce(G, k.first);
    Weight1Comb b = weight1_reduce(G, k.second);
    for (auto& [ka, ca] : a)
      for (auto& [kb, cb] : b) w1_wedge_add(out, ka, kb, c * ca * cb);
  }
  return out;
}

}  // namespace corr
