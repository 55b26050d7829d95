#pragma once

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "relations.hpp"
#include "weight1.hpp"

namespace corr {

inline std::string to_string(const GroupSpec& G, const CyclicWord& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ",";
    s += G.print(w.letters[i]);
  }
  return s + ")";
}

inline std::string to_string(const GroupSpec& G, const LinComb& l) {
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : l.terms) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(c) << "*" << to_string(G, w);
  }
  if (first) os << "0";
  return os.str();
}

// All cyclic words of the given weight over G u {0} (finite G only).
inline std::vector<CyclicWord> enumerate_words(const GroupSpec& G, int weight,
                                               bool restricted = false) {
  std::vector<GroupElement> alphabet;
  alphabet.push_back(G.zero());
  for (auto& g : G.all_elements()) alphabet.push_back(g);
  size_t len = size_t(weight) + 1;
  std::set<CyclicWord> seen;
  std::vector<size_t> idx(len, 0);
  while (true) {
    std::vector<GroupElement> letters;
    for (size_t i = 0; i < len; ++i) letters.push_back(alphabet[idx[i]]);
    CyclicWord w(std::move(letters));
    if (!restricted || !w.all_letters_equal()) seen.insert(w);
    size_t i = 0;
    for (; i < len; ++i) {
      if (++idx[i] < alphabet.size()) break;
      idx[i] = 0;
    }
    if (i == len) break;
  }
  return {seen.begin(), seen.end()};
}

// Projection onto the restricted subspace: drop words with all letters equal.
inline LinComb restrict_comb(const LinComb& l, bool restricted) {
  if (!restricted) return l;
  LinComb out;
  for (auto& [w, c] : l.terms)
    if (!w.all_letters_equal()) out.add(w, c);
  return out;
}

inline WedgeComb restrict_comb(const WedgeComb& wc, bool restricted) {
  if (!restricted) return wc;
  WedgeComb out;
  for (auto& [k, c] : wc.terms)
    if (!k.first.all_letters_equal() && !k.second.all_letters_equal())
      out.add(k.first, k.second, c);
  return out;
}

struct CoidealOptions {
  bool restricted = false;
  // empty = all families
  std::set<RelationKind> kinds;
  // Negative control: flip the collision-term sign of second-shuffle
  // generators at the given weight (-1 = everywhere).
  bool mutate = false;
  int mutate_weight = -1;
};

inline bool kind_enabled(const CoidealOptions& o, RelationKind k) {
  return o.kinds.empty() || o.kinds.count(k) > 0;
}

// All relation generators of the given weight over finite G.
inline std::vector<RelationElement> relation_generators(const GroupSpec& G, int weight,
                                                        const CoidealOptions& opt) {
  std::vector<RelationElement> out;
  std::set<std::string> seen;
  auto push = [&](RelationElement rel) {
    rel.element = restrict_comb(rel.element, opt.restricted);
    if (rel.element.is_zero()) return;
    std::string key = to_string(G, rel.element);
    if (seen.insert(key).second) out.push_back(std::move(rel));
  };

  std::vector<GroupElement> alphabet;
  alphabet.push_back(G.zero());
  for (auto& g : G.all_elements()) alphabet.push_back(g);

  if (kind_enabled(opt, RelationKind::FirstShuffle)) {
    for (int r = 1; 2 * r <= weight; ++r) {
      // letter tuples (x0, z_1..z_w) over the alphabet
      size_t len = size_t(weight) + 1;
      std::vector<size_t> idx(len, 0);
      while (true) {
        GroupElement x0 = alphabet[idx[0]];
        std::vector<GroupElement> z;
        for (size_t i = 1; i < len; ++i) z.push_back(alphabet[idx[i]]);
        push(first_shuffle(G, x0, z, r));
        size_t i = 0;
        for (; i < len; ++i) {
          if (++idx[i] < alphabet.size()) break;
          idx[i] = 0;
        }
        if (i == len) break;
      }
    }
  }

  if (kind_enabled(opt, RelationKind::Scaling)) {
    if (weight == 1) {
      push(scaling_zero_word(G));
      for (auto& a : G.all_elements())
        for (auto& b : alphabet)
          for (auto& c : alphabet) {
            if (b.zero && c.zero) continue;
            push(scaling_relation_w1(G, a, b, c));
          }
    } else {
      for (auto& w : enumerate_words(G, weight))
        for (auto& a : G.all_elements()) {
          if (G.is_identity(a)) continue;
          push(scaling_relation_mult(G, w, a));
        }
    }
  }

  if (kind_enabled(opt, RelationKind::Distribution)) {
    for (long l = 2; l <= G.N(); ++l) {
      if (G.N() % l != 0) continue;
      for (auto& w : enumerate_words(G, weight))
        if (auto rel = distribution_relation_opt(G, w, l)) push(std::move(*rel));
    }
  }

  if (kind_enabled(opt, RelationKind::SecondShuffle)) {
    auto elements = G.all_elements();
    bool mutate_here = opt.mutate && (opt.mutate_weight < 0 || opt.mutate_weight == weight);
    for (int k = 2; k <= weight; ++k) {
      for (int r = 1; 2 * r <= k; ++r) {
        int s = k - r;
        // all (w_1..w_k) in G^k, w_0 forced
        std::vector<size_t> widx(size_t(k), 0);
        while (true) {
          std::vector<GroupElement> ws;
          GroupElement prod = G.identity();
          for (int i = 0; i < k; ++i) {
            ws.push_back(elements[widx[i]]);
            prod = G.mul(prod, ws.back());
          }
          ws.push_back(G.inverse(prod));
          // compositions of weight - k into k+1 parts
          int rem = weight - k;
          std::vector<long> ns(size_t(k) + 1, 0);
          std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == k) {
              ns[size_t(k)] = left;
              int flip = -1;
              if (mutate_here) {
                // flip the first collision term (quasishuffle with M < r+s)
                auto qs = enumerate_quasishuffles(r, s);
                for (size_t qi = 0; qi < qs.size(); ++qi)
                  if (qs[qi].M < r + s) {
                    flip = int(qi);
                    break;
                  }
              }
              push(second_shuffle(G, r, s, ws, ns, flip));
              return;
            }
            for (int v = 0; v <= left; ++v) {
              ns[size_t(pos)] = v;
              rec(pos + 1, left - v);
            }
          };
          rec(0, rem);
          size_t i = 0;
          for (; i < widx.size(); ++i) {
            if (++widx[i] < elements.size()) break;
            widx[i] = 0;
          }
          if (i == widx.size()) break;
        }
      }
    }
  }

  return out;
}

struct CoidealWeightReport {
  int weight = 0;
  size_t dim_space = 0;
  size_t dim_relations = 0;
  bool contained = true;
  std::string witness;
  long elapsed_ms = 0;
};

// Certificate for "the relations form a coideal": for each weight w,
// delta(R_w) must lie in sum_{a+b=w} R_a ^ C_b + C_a ^ R_b, checked by exact
// rational row reduction.
inline std::vector<CoidealWeightReport> verify_coideal(const GroupSpec& G, int max_weight,
                                                       const CoidealOptions& opt = {}) {
  if (G.kind() != GroupSpec::Kind::MuN)
    throw std::domain_error("verify_coideal needs a finite group");
  std::vector<std::vector<CyclicWord>> words(size_t(max_weight) + 1);
  std::vector<std::vector<RelationElement>> gens(size_t(max_weight) + 1);
  for (int a = 1; a <= max_weight; ++a) {
    words[size_t(a)] = enumerate_words(G, a, opt.restricted);
    gens[size_t(a)] = relation_generators(G, a, opt);
  }

  std::vector<CoidealWeightReport> reports;
  for (int w = 1; w <= max_weight; ++w) {
    auto start = std::chrono::steady_clock::now();
    CoidealWeightReport rep;
    rep.weight = w;
    rep.dim_space = words[size_t(w)].size();

    {
      Indexer<CyclicWord> widx;
      RowSpace rel_space;
      for (auto& g : gens[size_t(w)]) {
        RowSpace::Row row;
        for (auto& [word, c] : g.element.terms) row[widx.index(word)] = c;
        rel_space.insert(std::move(row));
      }
      rep.dim_relations = rel_space.rank();
    }

    // span of R_a ^ C_b over all splits a + b = w
    Indexer<std::pair<CyclicWord, CyclicWord>> pidx;
    RowSpace span;
    for (int a = 1; a < w; ++a) {
      int b = w - a;
      for (auto& g : gens[size_t(a)]) {
        for (auto& c : words[size_t(b)]) {
          WedgeComb wc;
          wc.add_wedge(g.element, lincomb(c));
          if (wc.is_zero()) continue;
          RowSpace::Row row;
          for (auto& [k, v] : wc.terms) row[pidx.index(k)] = v;
          span.insert(std::move(row));
        }
      }
    }

    for (auto& g : gens[size_t(w)]) {
      WedgeComb d = restrict_comb(coproduct(g.element), opt.restricted);
      if (d.is_zero()) continue;
      RowSpace::Row row;
      for (auto& [k, v] : d.terms) row[pidx.index(k)] = v;
      if (!span.contains(std::move(row))) {
        rep.contained = false;
        rep.witness = g.label + ": " + to_string(G, g.element);
        break;
      }
    }

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace corr
