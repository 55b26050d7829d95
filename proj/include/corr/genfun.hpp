#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coideal.hpp"
#include "relations.hpp"
#include "star.hpp"
#include "weight1.hpp"

namespace corr {

// Formal monomial in named variables (zero exponents are never stored) and
// polynomials with rational coefficients, truncated by total degree.
using Monomial = std::map<std::string, int>;
using LinearForm = std::map<std::string, Rat>;
using Poly = std::map<Monomial, Rat>;

inline int mon_degree(const Monomial& m) {
  int d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

inline Monomial mon_mul(Monomial a, const Monomial& b) {
  for (auto& [v, e] : b) {
    a[v] += e;
    if (a[v] == 0) a.erase(v);
  }
  return a;
}

inline void poly_add(Poly& p, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

inline Poly poly_mul(const Poly& a, const Poly& b, int max_degree) {
  Poly out;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      Monomial m = mon_mul(ma, mb);
      if (mon_degree(m) > max_degree) continue;
      poly_add(out, m, ca * cb);
    }
  return out;
}

inline Poly form_to_poly(const LinearForm& f) {
  Poly p;
  for (auto& [v, c] : f)
    if (c != 0) p.emplace(Monomial{{v, 1}}, c);
  return p;
}

inline Poly form_power(const LinearForm& f, int n, int max_degree) {
  Poly out{{Monomial{}, Rat(1)}};
  Poly base = form_to_poly(f);
  for (int i = 0; i < n; ++i) out = poly_mul(out, base, max_degree);
  return out;
}

// A generating function with cyclic-word coefficients, truncated by the total
// degree of the variable monomials.
struct TruncatedGenFun {
  int max_degree = 0;
  std::map<Monomial, LinComb> coeffs;

  void add(const Monomial& m, const CyclicWord& w, const Rat& c) {
    if (c == 0 || mon_degree(m) > max_degree) return;
    auto& slot = coeffs[m];
    slot.add(w, c);
    if (slot.is_zero()) coeffs.erase(m);
  }

  void add(const Monomial& m, const LinComb& l, const Rat& scale = 1) {
    for (auto& [w, c] : l.terms) add(m, w, c * scale);
  }

  TruncatedGenFun& operator+=(const TruncatedGenFun& o) {
    for (auto& [m, l] : o.coeffs) add(m, l);
    return *this;
  }
  TruncatedGenFun& operator-=(const TruncatedGenFun& o) {
    for (auto& [m, l] : o.coeffs) add(m, l, -1);
    return *this;
  }
  friend TruncatedGenFun operator+(TruncatedGenFun a, const TruncatedGenFun& b) { return a += b; }
  friend TruncatedGenFun operator-(TruncatedGenFun a, const TruncatedGenFun& b) { return a -= b; }

  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const TruncatedGenFun& a, const TruncatedGenFun& b) {
    return a.coeffs == b.coeffs;
  }
};

// f * variable^power, dropping monomials past the truncation degree.
inline TruncatedGenFun genfun_mul_var(const TruncatedGenFun& f, const std::string& var,
                                      int power = 1) {
  TruncatedGenFun out;
  out.max_degree = f.max_degree;
  for (auto& [m, l] : f.coeffs) {
    Monomial shifted = m;
    shifted[var] += power;
    if (shifted[var] == 0) shifted.erase(var);
    out.add(shifted, l);
  }
  return out;
}

// Linear change of variables: each mapped variable is replaced by a linear
// form (unmapped variables stay themselves).  Total degree is preserved.
inline TruncatedGenFun genfun_substitute(const TruncatedGenFun& f,
                                         const std::map<std::string, LinearForm>& subs) {
  TruncatedGenFun out;
  out.max_degree = f.max_degree;
  for (auto& [m, l] : f.coeffs) {
    Poly p{{Monomial{}, Rat(1)}};
    for (auto& [v, e] : m) {
      auto it = subs.find(v);
      LinearForm form = it != subs.end() ? it->second : LinearForm{{v, Rat(1)}};
      p = poly_mul(p, form_power(form, e, f.max_degree), f.max_degree);
    }
    for (auto& [pm, pc] : p) out.add(pm, l, pc);
  }
  return out;
}

// The depth-graded generating function: segments ws[0..k] (ws[0]
// distinguished) with a nonempty multiset of variable names per segment.  The
// coefficient of prod t^{n} collects the star words whose zero-run on segment
// i is N_i = sum of the exponents assigned to its slot instances plus
// (slot size - 1).
inline TruncatedGenFun lambda_star(const GroupSpec& G, const std::vector<GroupElement>& ws,
                                   const std::vector<std::vector<std::string>>& slots,
                                   int max_degree) {
  if (ws.empty() || ws.size() != slots.size())
    throw std::invalid_argument("lambda_star needs one slot multiset per segment");
  GroupElement prod = G.identity();
  for (auto& w : ws) {
    if (w.zero) throw std::invalid_argument("lambda_star segments must be nonzero");
    prod = G.mul(prod, w);
  }
  if (!G.is_identity(prod)) throw std::domain_error("lambda_star segment product must be 1");
  for (auto& s : slots)
    if (s.empty()) throw std::invalid_argument("lambda_star slot multisets must be nonempty");

  std::vector<std::pair<size_t, std::string>> inst;  // (segment, variable) per slot instance
  for (size_t i = 0; i < slots.size(); ++i)
    for (auto& name : slots[i]) inst.push_back({i, name});

  TruncatedGenFun out;
  out.max_degree = max_degree;
  std::vector<int> e(inst.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t j, int left) {
    if (j == inst.size()) {
      Monomial m;
      std::vector<long> N(ws.size());
      for (size_t i = 0; i < ws.size(); ++i) N[i] = long(slots[i].size()) - 1;
      for (size_t jj = 0; jj < inst.size(); ++jj) {
        N[inst[jj].first] += e[jj];
        if (e[jj] > 0) m[inst[jj].second] += e[jj];
      }
      StarWord sw;
      for (size_t i = 0; i < ws.size(); ++i) sw.segs.push_back({ws[i], N[i]});
      out.add(m, star_to_word(G, sw), 1);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[j] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, max_degree);
  return out;
}

// Adding a variable to a slot multiset inserts one more zero-run:
//   Lstar({t} u T) - Lstar({u} u T) = (t - u) * Lstar({t,u} u T)
// coefficientwise (exactly, at the word level).  mutate flips the sign of the
// u-part of the right-hand side as a negative control.
inline bool check_multiset_identity(const GroupSpec& G, const std::vector<GroupElement>& ws,
                                    std::vector<std::vector<std::string>> slots, size_t seg,
                                    const std::string& t, const std::string& u, int max_degree,
                                    bool mutate = false) {
  if (seg >= slots.size()) throw std::invalid_argument("segment index out of range");
  auto with = [&](std::vector<std::string> extra) {
    auto s = slots;
    for (auto& v : extra) s[seg].push_back(v);
    return s;
  };
  TruncatedGenFun lhs =
      lambda_star(G, ws, with({t}), max_degree) - lambda_star(G, ws, with({u}), max_degree);
  TruncatedGenFun both = lambda_star(G, ws, with({t, u}), max_degree);
  TruncatedGenFun rhs = genfun_mul_var(both, t);
  TruncatedGenFun ub = genfun_mul_var(both, u);
  if (mutate)
    rhs += ub;
  else
    rhs -= ub;
  return lhs == rhs;
}

// The dual generating function: points xs[0..k] with one linear form per
// point; the coefficient of each monomial of prod (t_0+...+t_i)^{n_i} is
// C(x_0, 0^{n_0}, x_1, ..., x_k).  The constraint sum t_i = 0 must hold
// identically (the last prefix sum must vanish), so n_k = 0 throughout.
inline TruncatedGenFun lambda_dual(const GroupSpec& G, const std::vector<GroupElement>& xs,
                                   const std::vector<LinearForm>& ts, int max_degree) {
  if (xs.empty() || xs.size() != ts.size())
    throw std::invalid_argument("lambda_dual needs one form per point");
  for (auto& x : xs)
    if (x.zero) throw std::invalid_argument("lambda_dual points must be nonzero");
  size_t k = xs.size() - 1;
  std::vector<LinearForm> prefix(xs.size());
  LinearForm acc;
  for (size_t i = 0; i <= k; ++i) {
    for (auto& [v, c] : ts[i]) {
      acc[v] += c;
      if (acc[v] == 0) acc.erase(v);
    }
    prefix[i] = acc;
  }
  if (!prefix[k].empty())
    throw std::invalid_argument("lambda_dual requires the t-forms to sum to zero");

  TruncatedGenFun out;
  out.max_degree = max_degree;
  std::vector<int> n(k + 1, 0);  // n[k] stays 0
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i == k) {
      Poly p{{Monomial{}, Rat(1)}};
      for (size_t j = 0; j < k; ++j) {
        if (n[j] == 0) continue;
        p = poly_mul(p, form_power(prefix[j], n[j], max_degree), max_degree);
        if (p.empty()) return;
      }
      std::vector<GroupElement> letters;
      for (size_t j = 0; j <= k; ++j) {
        letters.push_back(xs[j]);
        for (int z = 0; z < n[j]; ++z) letters.push_back(G.zero());
      }
      CyclicWord w(std::move(letters));
      for (auto& [m, c] : p) out.add(m, w, c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      n[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, max_degree);
  return out;
}

// Convenience overload: plain variables with the last one eliminated by the
// constraint (t_k := -(t_0 + ... + t_{k-1})).
inline TruncatedGenFun lambda_dual(const GroupSpec& G, const std::vector<GroupElement>& xs,
                                   const std::vector<std::string>& names, int max_degree) {
  if (xs.size() != names.size()) throw std::invalid_argument("need one name per point");
  std::vector<LinearForm> ts;
  LinearForm last;
  for (size_t i = 0; i + 1 < names.size(); ++i) {
    ts.push_back({{names[i], Rat(1)}});
    last[names[i]] = Rat(-1);
  }
  ts.push_back(last);
  return lambda_dual(G, xs, ts, max_degree);
}

// A linear combination reduced modulo the scaling relations: weight-1 words go
// to the u/P normal form, higher weights to their scaling-canonical word, and
// weight-0 words to a canonical single letter.
struct ReducedComb {
  Weight1Comb w1;
  std::map<CyclicWord, Rat> rest;
  friend bool operator==(const ReducedComb&, const ReducedComb&) = default;
  bool is_zero() const { return w1.empty() && rest.empty(); }
};

inline ReducedComb reduce_mod_scaling(const GroupSpec& G, const LinComb& l) {
  ReducedComb out;
  for (auto& [w, c] : l.terms) {
    if (w.weight() == 1) {
      for (auto& [k, v] : weight1_reduce(G, w, c)) w1_add(out.w1, k, v);
      continue;
    }
    CyclicWord canon = scale_canonical(G, w);
    auto [it, fresh] = out.rest.emplace(canon, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.rest.erase(it);
    }
  }
  return out;
}

// Duality between the two generating functions:
//   Lstar<w_0..w_k; t_0..t_k> = Ldual<1, w_0, w_0w_1, ..., w_0..w_{k-1};
//                                     t_0, t_1-t_0, ..., t_k-t_{k-1}>,
// compared coefficientwise modulo scaling after normalizing t_k = 0 (the
// prefix sums of the right-hand forms are then exactly t_0..t_{k-1}, 0).
inline bool check_duality(const GroupSpec& G, const std::vector<GroupElement>& ws,
                          const std::vector<std::string>& names, int max_degree) {
  if (ws.size() != names.size()) throw std::invalid_argument("need one name per segment");
  size_t k = ws.size() - 1;
  std::vector<std::vector<std::string>> slots;
  for (auto& n : names) slots.push_back({n});
  TruncatedGenFun lhs = lambda_star(G, ws, slots, max_degree);

  std::vector<GroupElement> xs{G.identity()};
  for (size_t i = 0; i < k; ++i) xs.push_back(G.mul(xs.back(), ws[i]));
  std::vector<LinearForm> ts;
  for (size_t i = 0; i <= k; ++i) {
    LinearForm f;
    if (i < k) f[names[i]] = Rat(1);
    if (i > 0) f[names[i - 1]] = Rat(-1);
    ts.push_back(f);
  }
  TruncatedGenFun rhs = lambda_dual(G, xs, ts, max_degree);

  std::set<Monomial> mons;
  for (auto& [m, l] : lhs.coeffs)
    if (!m.count(names[k])) mons.insert(m);  // t_k = 0: drop its monomials
  for (auto& [m, l] : rhs.coeffs) mons.insert(m);
  for (auto& m : mons) {
    auto lit = lhs.coeffs.find(m);
    auto rit = rhs.coeffs.find(m);
    ReducedComb a = reduce_mod_scaling(G, lit != lhs.coeffs.end() ? lit->second : LinComb{});
    ReducedComb b = reduce_mod_scaling(G, rit != rhs.coeffs.end() ? rit->second : LinComb{});
    if (!(a == b)) return false;
  }
  return true;
}

// Membership oracle for weight-homogeneous combinations in the span of the
// relation generators of the given kinds, one row space per weight.
class RelationSpan {
 public:
  RelationSpan(const GroupSpec& G, std::set<RelationKind> kinds) : G_(G) {
    opt_.kinds = std::move(kinds);
  }

  bool contains(const LinComb& l) {
    if (l.is_zero()) return true;
    int w = l.terms.begin()->first.weight();
    for (auto& [word, c] : l.terms)
      if (word.weight() != w) throw std::invalid_argument("span check needs homogeneous input");
    auto& [idx, span] = weight(w);
    RowSpace::Row row;
    for (auto& [word, c] : l.terms) row[idx.index(word)] = c;
    return span.contains(std::move(row));
  }

 private:
  std::pair<Indexer<CyclicWord>, RowSpace>& weight(int w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    auto& entry = cache_[w];
    for (auto& g : relation_generators(G_, w, opt_)) {
      RowSpace::Row row;
      for (auto& [word, c] : g.element.terms) row[entry.first.index(word)] = c;
      entry.second.insert(std::move(row));
    }
    return entry;
  }

  GroupSpec G_;
  CoidealOptions opt_;
  std::map<int, std::pair<Indexer<CyclicWord>, RowSpace>> cache_;
};

// Homogeneity of Lstar: shifting every variable by the same new variable
// changes the function by first shuffle relations only (coefficientwise, per
// monomial in the enlarged variable set).  Finite groups only.
inline bool check_tshift_homogeneity(const GroupSpec& G, const std::vector<GroupElement>& ws,
                                     const std::vector<std::string>& names,
                                     const std::string& shift_var, int max_degree,
                                     std::set<RelationKind> kinds = {RelationKind::FirstShuffle}) {
  std::vector<std::vector<std::string>> slots;
  for (auto& n : names) slots.push_back({n});
  TruncatedGenFun f = lambda_star(G, ws, slots, max_degree);
  std::map<std::string, LinearForm> subs;
  for (auto& n : names) subs[n] = LinearForm{{n, Rat(1)}, {shift_var, Rat(1)}};
  TruncatedGenFun diff = genfun_substitute(f, subs) - f;
  RelationSpan span(G, std::move(kinds));
  for (auto& [m, l] : diff.coeffs)
    if (!span.contains(l)) return false;
  return true;
}

// First shuffle relation for the dual generating function: the sum over
// shuffles of the two blocks (x_1..x_r | x_{r+1}..x_{r+s}), each term listing
// the shuffled points then x_0, lies in the first-shuffle span
// coefficientwise.  t_0 is eliminated by the constraint.
inline TruncatedGenFun first_shuffle_genfun(const GroupSpec& G, const GroupElement& x0,
                                            const std::vector<GroupElement>& xs, int r,
                                            const std::vector<std::string>& names,
                                            int max_degree) {
  int total = int(xs.size());
  int s = total - r;
  if (r < 1 || s < 1) throw std::invalid_argument("need r,s >= 1");
  if (names.size() != xs.size() + 1)
    throw std::invalid_argument("need names for t_0 and each block variable");
  LinearForm t0;
  for (size_t j = 1; j < names.size(); ++j) t0[names[j]] = Rat(-1);
  TruncatedGenFun out;
  out.max_degree = max_degree;
  for (auto& sh : enumerate_shuffles(r, s)) {
    std::vector<GroupElement> pts;
    std::vector<LinearForm> ts;
    for (int src : sh) {
      pts.push_back(xs[size_t(src)]);
      ts.push_back({{names[size_t(src) + 1], Rat(1)}});
    }
    pts.push_back(x0);
    ts.push_back(t0);
    out += lambda_dual(G, pts, ts, max_degree);
  }
  return out;
}

inline bool check_first_shuffle_genfun(const GroupSpec& G, const GroupElement& x0,
                                       const std::vector<GroupElement>& xs, int r,
                                       const std::vector<std::string>& names, int max_degree,
                                       std::set<RelationKind> kinds = {
                                           RelationKind::FirstShuffle, RelationKind::Scaling}) {
  TruncatedGenFun f = first_shuffle_genfun(G, x0, xs, r, names, max_degree);
  RelationSpan span(G, std::move(kinds));
  for (auto& [m, l] : f.coeffs)
    if (!span.contains(l)) return false;
  return true;
}

// Wedge-valued generating function (for the coproduct formula).
struct GenFunWedge {
  int max_degree = 0;
  std::map<Monomial, WedgeComb> coeffs;

  void add(const Monomial& m, const CyclicWord& a, const CyclicWord& b, const Rat& c) {
    if (c == 0 || mon_degree(m) > max_degree) return;
    auto& slot = coeffs[m];
    slot.add(a, b, c);
    if (slot.is_zero()) coeffs.erase(m);
  }
};

namespace detail {
// out += sign * A ^ B (monomialwise product, extra monomial factor applied).
// Weight-0 coefficient words are dropped: they stand for the degenerate cuts
// that the cobracket excludes.
inline void wedge_accumulate(GenFunWedge& out, const TruncatedGenFun& A, const TruncatedGenFun& B,
                             const Monomial& extra, const Rat& sign) {
  for (auto& [ma, la] : A.coeffs)
    for (auto& [mb, lb] : B.coeffs) {
      Monomial m = mon_mul(mon_mul(ma, mb), extra);
      if (mon_degree(m) > out.max_degree) continue;
      for (auto& [wa, ca] : la.terms) {
        if (wa.weight() == 0) continue;
        for (auto& [wb, cb] : lb.terms) {
          if (wb.weight() == 0) continue;
          out.add(m, wa, wb, sign * ca * cb);
        }
      }
    }
}
}  // namespace detail

// The coproduct of X = Lstar<ws[0..k]; ts[0..k]> (singleton slots) expressed
// through generating functions, as a sum of three families:
//  (1) cuts at a nonzero point: over cyclic rotations of the segments and a
//      cut segment i, Lstar<[W_i..W_k], W_0..W_{i-1}; T_i, T_0..T_{i-1}> ^
//      Lstar<W_{i+1}..W_k, [W_0..W_i]; T_{i+1}..T_k, T_i>;
//  (2) cuts at a zero on the distinguished run: prefactor T_0 and the pair
//      sharing the two-variable slot {T_i, T_0} on the merged segments;
//  (3) (weight-1 tails) sum_i L_i ^ C(0, w_i) with
//      L_i = T_i X + Lstar(merge i into i-1) + Lstar(merge i into i+1),
//      the merged segment keeping the neighbour's variable.
// mutate_part (1..3) flips the sign of that family; used as a test control.
inline GenFunWedge genfun_coproduct(const GroupSpec& G, const std::vector<GroupElement>& ws,
                                    const std::vector<std::string>& ts, int max_degree,
                                    int mutate_part = 0) {
  if (ws.size() != ts.size() || ws.empty())
    throw std::invalid_argument("need one variable per segment");
  size_t kk = ws.size();  // k + 1 segments
  GenFunWedge out;
  out.max_degree = max_degree;
  auto sgn = [&](int part) { return Rat(mutate_part == part ? -1 : 1); };
  auto seg_prod = [&](size_t c, size_t from, size_t to) {  // product W_from..W_to (shift c)
    GroupElement p = G.identity();
    for (size_t j = from; j <= to; ++j) p = G.mul(p, ws[(c + j) % kk]);
    return p;
  };

  for (size_t c = 0; c < kk; ++c) {
    auto W = [&](size_t i) { return ws[(c + i) % kk]; };
    auto T = [&](size_t i) { return ts[(c + i) % kk]; };
    for (size_t i = 0; i < kk; ++i) {
      // family (1)
      std::vector<GroupElement> ws1{seg_prod(c, i, kk - 1)};
      std::vector<std::vector<std::string>> sl1{{T(i)}};
      for (size_t j = 0; j < i; ++j) {
        ws1.push_back(W(j));
        sl1.push_back({T(j)});
      }
      std::vector<GroupElement> ws2;
      std::vector<std::vector<std::string>> sl2;
      for (size_t j = i + 1; j < kk; ++j) {
        ws2.push_back(W(j));
        sl2.push_back({T(j)});
      }
      ws2.push_back(seg_prod(c, 0, i));
      sl2.push_back({T(i)});
      detail::wedge_accumulate(out, lambda_star(G, ws1, sl1, max_degree),
                               lambda_star(G, ws2, sl2, max_degree), {}, sgn(1));

      // family (2), i >= 1
      if (i == 0) continue;
      std::vector<GroupElement> wa;
      std::vector<std::vector<std::string>> sa;
      for (size_t j = 1; j < i; ++j) {
        wa.push_back(W(j));
        sa.push_back({T(j)});
      }
      wa.push_back(G.mul(seg_prod(c, i, kk - 1), W(0)));
      sa.push_back({T(i), T(0)});
      std::vector<GroupElement> wb{seg_prod(c, 0, i)};
      std::vector<std::vector<std::string>> sb{{T(i), T(0)}};
      for (size_t j = i + 1; j < kk; ++j) {
        wb.push_back(W(j));
        sb.push_back({T(j)});
      }
      detail::wedge_accumulate(out, lambda_star(G, wa, sa, max_degree),
                               lambda_star(G, wb, sb, max_degree), Monomial{{T(0), 1}}, sgn(2));
    }
  }

  // family (3): no cyclic sum, original indexing, indices mod k+1
  std::vector<std::vector<std::string>> base_slots;
  for (auto& t : ts) base_slots.push_back({t});
  TruncatedGenFun X = lambda_star(G, ws, base_slots, max_degree);
  for (size_t i = 0; i < kk; ++i) {
    TruncatedGenFun Li = genfun_mul_var(X, ts[i]);
    for (int dir = -1; dir <= 1; dir += 2) {
      size_t j = (i + kk + size_t(dir)) % kk;  // neighbour absorbing segment i
      if (j == i) continue;                    // k = 0: nothing to merge
      std::vector<std::pair<GroupElement, std::string>> segs;
      for (size_t p = 0; p < kk; ++p) {
        if (p == i) continue;
        GroupElement g = p == j ? G.mul(ws[i], ws[p]) : ws[p];
        segs.push_back({g, ts[p]});
      }
      // rotate so the segment containing the original index 0 comes first
      size_t start = 0;
      for (size_t p = 0; p < segs.size(); ++p)
        if (segs[p].second == ts[i == 0 ? j : 0]) start = p;
      std::vector<GroupElement> mws;
      std::vector<std::vector<std::string>> msl;
      for (size_t p = 0; p < segs.size(); ++p) {
        auto& s = segs[(start + p) % segs.size()];
        mws.push_back(s.first);
        msl.push_back({s.second});
      }
      Li += lambda_star(G, mws, msl, max_degree);
    }
    TruncatedGenFun logw;
    logw.max_degree = max_degree;
    logw.add(Monomial{}, CyclicWord({G.zero(), ws[i]}), 1);
    detail::wedge_accumulate(out, Li, logw, {}, sgn(3));
  }
  return out;
}

// Signature of a wedge combination modulo scaling of each factor: weight-1
// factors expand in the u/P basis, higher weights canonicalize, weight-0
// factors vanish.  Optionally drops (weight 1) ^ (weight 1) terms (the
// weight-2 caveat of the coproduct formula).
using WedgeSignature = std::map<std::pair<std::string, std::string>, Rat>;

inline void wedge_signature_accumulate(WedgeSignature& sig, const GroupSpec& G,
                                       const WedgeComb& wc, bool drop_w1w1, const Rat& scale = 1) {
  auto expand = [&](const CyclicWord& w) {
    std::vector<std::pair<std::string, Rat>> parts;
    if (w.weight() == 0) return parts;
    if (w.weight() == 1) {
      for (auto& [k, v] : weight1_reduce(G, w)) {
        std::string key = k.is_u ? "u" + std::to_string(k.u_index) : "P " + G.print(k.p_arg);
        parts.push_back({key, v});
      }
      return parts;
    }
    parts.push_back({"W " + to_string(G, scale_canonical(G, w)), Rat(1)});
    return parts;
  };
  for (auto& [key, c] : wc.terms) {
    if (drop_w1w1 && key.first.weight() == 1 && key.second.weight() == 1) continue;
    for (auto& [ka, ca] : expand(key.first))
      for (auto& [kb, cb] : expand(key.second)) {
        if (ka == kb) continue;
        auto pr = ka < kb ? std::make_pair(ka, kb) : std::make_pair(kb, ka);
        Rat v = (ka < kb ? scale : -scale) * c * ca * cb;
        auto [it, fresh] = sig.emplace(pr, v);
        if (!fresh) {
          it->second += v;
          if (it->second == 0) sig.erase(it);
        }
      }
  }
}

// Checks the generating-function coproduct formula against the word-level
// cobracket of every coefficient, modulo scaling of the wedge factors;
// weight-2 coefficients are compared modulo (weight 1)^(weight 1).
inline bool genfun_coproduct_matches(const GroupSpec& G, const std::vector<GroupElement>& ws,
                                     const std::vector<std::string>& ts, int max_degree,
                                     int mutate_part = 0) {
  std::vector<std::vector<std::string>> slots;
  for (auto& t : ts) slots.push_back({t});
  TruncatedGenFun X = lambda_star(G, ws, slots, max_degree);
  GenFunWedge rhs = genfun_coproduct(G, ws, ts, max_degree, mutate_part);
  int k = int(ws.size()) - 1;

  std::set<Monomial> mons;
  for (auto& [m, l] : X.coeffs) mons.insert(m);
  for (auto& [m, w] : rhs.coeffs) mons.insert(m);
  for (auto& m : mons) {
    int weight = k + mon_degree(m);
    bool drop_w1w1 = weight <= 2;
    WedgeSignature sig;
    auto xit = X.coeffs.find(m);
    if (xit != X.coeffs.end())
      wedge_signature_accumulate(sig, G, coproduct(xit->second), drop_w1w1, 1);
    auto rit = rhs.coeffs.find(m);
    if (rit != rhs.coeffs.end()) wedge_signature_accumulate(sig, G, rit->second, drop_w1w1, -1);
    if (!sig.empty()) return false;
  }
  return true;
}

// Second shuffle relation in generating-function form: segments listed as
// (w_1..w_k, w_0) with one slot multiset each (same order).  Quasishuffle
// terms merge both the segment products and the slot multisets; the two
// collapse terms absorb one block and the distinguished slot into a single
// segment.  Coefficientwise this reproduces the word-level second shuffle.
inline TruncatedGenFun second_shuffle_genfun(const GroupSpec& G, int r, int s,
                                             const std::vector<GroupElement>& ws,
                                             const std::vector<std::vector<std::string>>& slots,
                                             int max_degree) {
  int k = r + s;
  if (int(ws.size()) != k + 1 || int(slots.size()) != k + 1)
    throw std::invalid_argument("need k+1 segments (w_1..w_k, w_0)");
  TruncatedGenFun out;
  out.max_degree = max_degree;
  for (auto& q : enumerate_quasishuffles(r, s)) {
    std::vector<GroupElement> merged_w(size_t(q.M), G.identity());
    std::vector<std::vector<std::string>> merged_s(size_t(q.M));
    for (int j = 0; j < k; ++j) {
      auto& slot = merged_s[size_t(q.phi[size_t(j)])];
      merged_w[size_t(q.phi[size_t(j)])] =
          G.mul(merged_w[size_t(q.phi[size_t(j)])], ws[size_t(j)]);
      slot.insert(slot.end(), slots[size_t(j)].begin(), slots[size_t(j)].end());
    }
    std::vector<GroupElement> lws{ws[size_t(k)]};
    std::vector<std::vector<std::string>> lsl{slots[size_t(k)]};
    for (int m = 0; m < q.M; ++m) {
      lws.push_back(merged_w[size_t(m)]);
      lsl.push_back(merged_s[size_t(m)]);
    }
    Rat sign = (r + s - q.M) % 2 == 0 ? 1 : -1;
    TruncatedGenFun term = lambda_star(G, lws, lsl, max_degree);
    for (auto& [m, l] : term.coeffs) out.add(m, l, sign);
  }
  for (int keep_first = 0; keep_first < 2; ++keep_first) {
    int lo = keep_first ? 0 : r, hi = keep_first ? r : k;
    GroupElement wS = ws[size_t(k)];
    std::vector<std::string> sS = slots[size_t(k)];
    for (int i = 0; i < k; ++i) {
      if (i >= lo && i < hi) continue;
      wS = G.mul(wS, ws[size_t(i)]);
      sS.insert(sS.end(), slots[size_t(i)].begin(), slots[size_t(i)].end());
    }
    std::vector<GroupElement> lws{wS};
    std::vector<std::vector<std::string>> lsl{sS};
    for (int i = lo; i < hi; ++i) {
      lws.push_back(ws[size_t(i)]);
      lsl.push_back(slots[size_t(i)]);
    }
    TruncatedGenFun term = lambda_star(G, lws, lsl, max_degree);
    for (auto& [m, l] : term.coeffs) out.add(m, l, -1);
  }
  return out;
}

}  // namespace corr
