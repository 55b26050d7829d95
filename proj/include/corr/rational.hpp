#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace corr {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Serialized as "p/q" (or just "p" when q == 1); never as a float.
inline std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

inline mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Bernoulli numbers B_0..B_n (B_1 = -1/2), via the standard recurrence
// sum_{j=0}^{m} binom(m+1, j) B_j = 0 for m >= 1.
inline std::vector<Rat> bernoulli_numbers(unsigned n) {
  std::vector<Rat> B(n + 1);
  B[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    Rat s = 0;
    for (unsigned j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * B[j];
    B[m] = -s / Rat(binomial(m + 1, m));
  }
  return B;
}

}  // namespace corr
