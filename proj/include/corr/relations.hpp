#pragma once

#include <optional>
#include <string>

#include "cyclic.hpp"
#include "group.hpp"
#include "quasishuffle.hpp"
#include "star.hpp"

namespace corr {

enum class RelationKind {
  FirstShuffle,
  Scaling,
  Distribution,
  SecondShuffle,
  DilogBaseCase,
};

struct RelationElement {
  RelationKind kind;
  LinComb element;
  std::string label;
};

// sum_{sigma in Sigma_{r,s}} C(x0, z_{sigma^{-1}(1)}, ..., z_{sigma^{-1}(r+s)})
// where z = (block A of size r) ++ (block B of size s).
inline RelationElement first_shuffle(const GroupSpec& G, const GroupElement& x0,
                                     const std::vector<GroupElement>& z, int r) {
  int total = int(z.size());
  int s = total - r;
  if (r < 1 || s < 1) throw std::invalid_argument("first shuffle needs r,s >= 1");
  RelationElement out{RelationKind::FirstShuffle, {}, "first_shuffle"};
  for (auto& sh : enumerate_shuffles(r, s)) {
    std::vector<GroupElement> letters;
    letters.push_back(x0);
    for (int src : sh) letters.push_back(z[src]);
    out.element.add(CyclicWord(std::move(letters)), 1);
  }
  return out;
}

// C(0,0) = 0.
inline RelationElement scaling_zero_word(const GroupSpec& G) {
  RelationElement out{RelationKind::Scaling, {}, "scaling_c00"};
  out.element.add(CyclicWord({G.zero(), G.zero()}), 1);
  return out;
}

// Weight 1: C(ab, ac) - C(0,a) - C(b,c) for a in G, b,c in G u {0} not both 0.
inline RelationElement scaling_relation_w1(const GroupSpec& G, const GroupElement& a,
                                           const GroupElement& b, const GroupElement& c) {
  if (a.zero) throw std::invalid_argument("scaling factor must be a group element");
  if (b.zero && c.zero) throw std::invalid_argument("b and c must not both be 0");
  RelationElement out{RelationKind::Scaling, {}, "scaling_w1"};
  out.element.add(CyclicWord({G.mul(a, b), G.mul(a, c)}), 1);
  out.element.add(CyclicWord({G.zero(), a}), -1);
  out.element.add(CyclicWord({b, c}), -1);
  return out;
}

// Weight > 1: C(x) - C(a * x), invariance under simultaneous multiplication.
inline RelationElement scaling_relation_mult(const GroupSpec& G, const CyclicWord& w,
                                             const GroupElement& a) {
  if (w.weight() < 2) throw std::invalid_argument("multiplicative scaling needs weight >= 2");
  if (a.zero) throw std::invalid_argument("scaling factor must be a group element");
  RelationElement out{RelationKind::Scaling, {}, "scaling_mult"};
  out.element.add(w, 1);
  std::vector<GroupElement> scaled;
  for (auto& l : w.letters) scaled.push_back(G.mul(a, l));
  out.element.add(CyclicWord(std::move(scaled)), -1);
  return out;
}

// C(x_0..x_n) - (l^m / |G_l|) sum over l-th root choices, m = # zero letters,
// with the zero letter contributing the single root 0 (its multiplicity l is
// carried by the prefactor).  Requires every letter divisible by l, and
// excludes the degenerate case n = 1, x_0 = x_1.
inline std::optional<RelationElement> distribution_relation_opt(const GroupSpec& G,
                                                                const CyclicWord& w, long l) {
  if (l < 1) throw std::invalid_argument("l >= 1 required");
  if (w.weight() == 1 && w.letters[0] == w.letters[1]) return std::nullopt;
  long order_Gl;  // |G_l|, the l-torsion subgroup; the relation needs l | |G_l|
  if (G.kind() == GroupSpec::Kind::MuN) {
    if (G.N() % l != 0) return std::nullopt;
    order_Gl = l;
  } else {
    // torsion-free: |G_l| = 1, so only l = 1 qualifies
    if (l != 1) return std::nullopt;
    order_Gl = 1;
  }
  long m = 0;
  for (auto& x : w.letters) {
    if (x.zero)
      ++m;
    else if (!G.divisible(x, l))
      return std::nullopt;
  }
  RelationElement out{RelationKind::Distribution, {}, "distribution_l" + std::to_string(l)};
  out.element.add(w, 1);
  Rat pref = 1;
  for (long i = 0; i < m; ++i) pref *= l;
  pref /= order_Gl;
  // expand the product of root choices (zero -> the single choice 0)
  std::vector<std::vector<GroupElement>> choices;
  for (auto& x : w.letters) {
    if (x.zero)
      choices.push_back({G.zero()});
    else
      choices.push_back(G.lth_roots(x, l));
  }
  std::vector<size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<GroupElement> letters;
    for (size_t i = 0; i < choices.size(); ++i) letters.push_back(choices[i][idx[i]]);
    out.element.add(CyclicWord(std::move(letters)), -pref);
    size_t i = 0;
    for (; i < choices.size(); ++i) {
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
    }
    if (i == choices.size()) break;
  }
  return out;
}

inline RelationElement distribution_relation(const GroupSpec& G, const CyclicWord& w, long l) {
  if (w.weight() == 1 && w.letters[0] == w.letters[1])
    throw std::domain_error("distribution relation excluded for C(x,x)");
  auto rel = distribution_relation_opt(G, w, l);
  if (!rel) throw std::domain_error("distribution relation requires l | |G_l| and divisible letters");
  return *rel;
}

namespace detail {
// Merge segments (w|n) of the two blocks according to a quasishuffle, append
// the distinguished segment (w0|n0) and convert to a word.  A merged pair
// (i,j) becomes (w_i w_j | n_i + n_j + 1).
inline StarWord quasishuffled_star(const GroupSpec& G, const Quasishuffle& q,
                                   const std::vector<GroupElement>& ws,
                                   const std::vector<long>& ns, const GroupElement& w0, long n0) {
  std::vector<std::pair<GroupElement, long>> slots(q.M, {G.identity(), -1});
  for (int j = 0; j < q.r + q.s; ++j) {
    auto& slot = slots[q.phi[j]];
    slot.first = G.mul(slot.first, ws[j]);
    slot.second += ns[j] + 1;
  }
  StarWord s;
  s.segs.push_back({w0, n0});
  for (auto& sl : slots) s.segs.push_back(sl);
  return s;
}
}  // namespace detail

// Second shuffle relation in depth-graded form.  Inputs list the segments
// (w_1|n_1, ..., w_{r+s}|n_{r+s}) followed by the distinguished (w_0|n_0);
// the product of all w's must be 1.
//
//   sum_{sigma in olSigma_{r,s}} (-1)^{r+s-M_sigma} C*(merged segments, w_0|n_0)
//     - C*(w_1|n_1,...,w_r|n_r, w_{B,0}|n_{B,0})
//     - C*(w_{r+1}|n_{r+1},...,w_{r+s}|n_{r+s}, w_{A,0}|n_{A,0})
// where for a set S of segment indices including 0,
// n_S = sum_{i in S}(n_i + 1) - 1 and w_S = prod_{i in S} w_i.
// mutate_sign_index >= 0 flips the sign of that quasishuffle term; used only
// as a negative control for the coideal certificate.
inline RelationElement second_shuffle(const GroupSpec& G, int r, int s,
                                      const std::vector<GroupElement>& ws,
                                      const std::vector<long>& ns, int mutate_sign_index = -1) {
  int k = r + s;
  if (int(ws.size()) != k + 1 || int(ns.size()) != k + 1)
    throw std::invalid_argument("need k+1 segments (w_1..w_k, w_0)");
  const GroupElement& w0 = ws[k];
  long n0 = ns[k];
  RelationElement out{RelationKind::SecondShuffle, {}, "second_shuffle"};
  std::vector<GroupElement> blocks(ws.begin(), ws.begin() + k);
  std::vector<long> nblocks(ns.begin(), ns.begin() + k);
  auto quasis = enumerate_quasishuffles(r, s);
  for (size_t qi = 0; qi < quasis.size(); ++qi) {
    const auto& q = quasis[qi];
    StarWord sw = detail::quasishuffled_star(G, q, blocks, nblocks, w0, n0);
    int sign = (r + s - q.M) % 2 == 0 ? 1 : -1;
    if (int(qi) == mutate_sign_index) sign = -sign;
    out.element.add(star_to_word(G, sw), sign);
  }
  // collapse terms: one block kept, the other merged into the w_0 segment
  for (int keep_first = 0; keep_first < 2; ++keep_first) {
    int lo = keep_first ? 0 : r, hi = keep_first ? r : k;  // kept block [lo,hi)
    GroupElement wS = w0;
    long nS = n0 + 1;
    for (int i = 0; i < k; ++i) {
      if (i >= lo && i < hi) continue;
      wS = G.mul(wS, ws[i]);
      nS += ns[i] + 1;
    }
    StarWord sw;
    sw.segs.push_back({wS, nS - 1});
    for (int i = lo; i < hi; ++i) sw.segs.push_back({ws[i], ns[i]});
    out.element.add(star_to_word(G, sw), -1);
  }
  return out;
}

// The weight-2 base case: the (1,1) second shuffle with all n_i = 0, i.e.
//   C*(a|0,b|0,c|0) + C*(b|0,a|0,c|0) - C*(ab|1,c|0) - C*(a|0,bc|1) - C*(b|0,ac|1)
// for abc = 1, whose cobracket vanishes modulo weight-1 scaling.
inline RelationElement dilog_base_case(const GroupSpec& G, const GroupElement& a,
                                       const GroupElement& b) {
  GroupElement c = G.inverse(G.mul(a, b));
  RelationElement out = second_shuffle(G, 1, 1, {a, b, c}, {0, 0, 0});
  out.kind = RelationKind::DilogBaseCase;
  out.label = "dilog_base_case";
  return out;
}

// Depth-graded second shuffle: the image of the second shuffle relation in the
// associated graded by depth, i.e. only the terms of maximal depth r+s+1
// (quasishuffles with no merged pair and the two collapse terms).
inline LinComb depth_graded_second_shuffle(const GroupSpec& G, int r, int s,
                                           const std::vector<GroupElement>& ws,
                                           const std::vector<long>& ns) {
  RelationElement full = second_shuffle(G, r, s, ws, ns);
  int maxdepth = r + s;
  LinComb out;
  for (auto& [w, c] : full.element.terms)
    if (w.depth() == maxdepth) out.add(w, c);
  return out;
}

}  // namespace corr
