#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "quasishuffle.hpp"
#include "rational.hpp"

namespace corr {

using Cplx = std::complex<double>;

// Coefficients beta_k of 2x/(e^{2x}-1) = sum_k beta_k x^k, i.e.
// beta_k = 2^k B_k / k!  (beta_0 = 1, beta_1 = -1, beta_2 = 1/3, ...).
inline std::vector<Rat> beta_coefficients(unsigned n) {
  std::vector<Rat> B = bernoulli_numbers(n);
  std::vector<Rat> beta(n + 1);
  mpz_class p2 = 1;
  for (unsigned k = 0; k <= n; ++k) {
    beta[k] = B[k] * Rat(p2) / Rat(factorial(k));
    p2 *= 2;
  }
  return beta;
}

// zeta(s) for integer s != 1.  Negative/zero arguments via Bernoulli numbers,
// positive via Euler-Maclaurin off a short partial sum.
inline double zeta_int(int s) {
  if (s == 1) throw std::invalid_argument("zeta(1) diverges");
  if (s <= 0) {
    unsigned m = unsigned(-s);
    // zeta(-m) = (-1)^m B_{m+1}/(m+1)   (with B_1 = -1/2)
    std::vector<Rat> B = bernoulli_numbers(m + 1);
    Rat v = B[m + 1] / Rat(m + 1);
    if (m % 2 == 1) v = -v;
    return v.get_d();
  }
  const int K = 20, J = 7;
  double sum = 0;
  for (int k = 1; k < K; ++k) sum += std::pow(double(k), -s);
  double Ks = std::pow(double(K), -s);
  sum += Ks / 2 + Ks * K / (s - 1);
  std::vector<Rat> B = bernoulli_numbers(2 * J);
  double rising = 1;  // s (s+1) ... (s+2j-2)
  for (int j = 1; j <= J; ++j) {
    rising *= (j == 1) ? s : double(s + 2 * j - 3) * (s + 2 * j - 2);
    sum += Rat(B[2 * j] / Rat(factorial(2 * j))).get_d() * rising *
           std::pow(double(K), -(s + 2 * j - 1));
  }
  return sum;
}

namespace detail {
inline double harmonic(int n) {
  double h = 0;
  for (int k = 1; k <= n; ++k) h += 1.0 / k;
  return h;
}
}  // namespace detail

// Classical polylogarithm Li_n(z), principal branch, for n >= 1.
// Direct series for |z| <= 0.5; expansion in mu = log z otherwise (|mu| < 2pi).
inline Cplx li_n(int n, Cplx z) {
  if (n < 1) throw std::invalid_argument("li_n needs n >= 1");
  if (n == 1) return -std::log(Cplx(1) - z);
  if (z == Cplx(0)) return 0;
  if (std::abs(z) <= 0.5) {
    Cplx sum = 0, zk = 1;
    for (int k = 1; k < 200; ++k) {
      zk *= z;
      Cplx term = zk / std::pow(double(k), n);
      sum += term;
      if (std::abs(term) < 1e-18 * (1 + std::abs(sum))) break;
    }
    return sum;
  }
  Cplx mu = std::log(z);
  if (mu == Cplx(0)) return zeta_int(n);
  if (std::abs(mu) >= 2 * M_PI - 1e-9)
    throw std::domain_error("li_n log-series out of range");
  // Li_n(e^mu) = mu^{n-1}/(n-1)! (H_{n-1} - log(-mu))
  //              + sum_{k>=0, k != n-1} zeta(n-k) mu^k / k!
  Cplx sum = std::pow(mu, n - 1) / double(factorial(unsigned(n - 1)).get_d()) *
             (detail::harmonic(n - 1) - std::log(-mu));
  Cplx muk = 1;
  double kfact = 1;
  for (int k = 0; k < 120; ++k) {
    if (k > 0) {
      muk *= mu;
      kfact *= k;
    }
    if (k != n - 1) {
      double zv = zeta_int(n - k);
      Cplx term = zv * muk / kfact;
      sum += term;
      // zeta vanishes at negative even integers, so judge convergence on the
      // size of mu^k/k! alone
      if (k > 4 && std::abs(muk) / kfact < 1e-18 * (1 + std::abs(sum))) break;
    }
  }
  return sum;
}

// Single-valued polylogarithm
//   L_n(z) = (Re if n odd, Im if n even) sum_{k=0}^{n-1} beta_k log^k|z| Li_{n-k}(z)
// with the inversion L_n(1/z) = (-1)^{n-1} L_n(z) used for |z| > 1.
inline double l_n(int n, Cplx z) {
  if (n < 2) throw std::invalid_argument("l_n needs n >= 2");
  if (z == Cplx(0)) return 0;
  double az = std::abs(z);
  if (az > 1) {
    double v = l_n(n, Cplx(1) / z);
    return (n % 2 == 1) ? v : -v;
  }
  std::vector<Rat> beta = beta_coefficients(unsigned(n - 1));
  double lg = std::log(az);
  Cplx sum = 0;
  double lgk = 1;
  for (int k = 0; k < n; ++k) {
    if (k > 0) lgk *= lg;
    if (lgk == 0 && k > 0) break;  // |z| = 1: only k = 0 contributes
    sum += beta[unsigned(k)].get_d() * lgk * li_n(n - k, z);
  }
  return (n % 2 == 1) ? sum.real() : sum.imag();
}

// Bloch-Wigner dilogarithm: L_2(z) = Im Li_2(z) + log|z| arg(1-z).
inline double dilog_sv(Cplx z) {
  if (z == Cplx(0) || z == Cplx(1)) return 0;
  double az = std::abs(z);
  if (az > 1) return -dilog_sv(Cplx(1) / z);
  return std::imag(li_n(2, z)) + std::log(az) * std::arg(Cplx(1) - z);
}

// Multiple polylogarithm Li_{n_1,...,n_r}(z_1,...,z_r)
//   = sum_{0 < k_1 < ... < k_r} prod z_i^{k_i} / k_i^{n_i}.
// Requires |z_i| <= 0.9 for honest convergence of the truncated nested sum.
inline Cplx multi_li(const std::vector<int>& ns, const std::vector<Cplx>& zs) {
  size_t r = ns.size();
  if (zs.size() != r || r == 0) throw std::invalid_argument("multi_li shape mismatch");
  for (auto& z : zs)
    if (std::abs(z) > 0.9) throw std::domain_error("multi_li needs |z_i| <= 0.9");
  const int K = 600;
  // partial[j] = sum over 0 < k_1 < ... < k_j <= current k of the inner product
  std::vector<Cplx> partial(r + 1, 0);
  partial[0] = 1;
  std::vector<Cplx> zpow(r, 1);
  for (int k = 1; k <= K; ++k) {
    for (size_t i = 0; i < r; ++i) zpow[i] *= zs[i];
    for (size_t j = r; j >= 1; --j)
      partial[j] += partial[j - 1] * zpow[j - 1] / std::pow(double(k), ns[j - 1]);
  }
  return partial[r];
}

// Quasishuffle product of multiple polylogarithms:
//   Li_A(z_A) Li_B(z_B) = sum over quasishuffles of the index sequences, with
// merged slots adding the weights and multiplying the arguments (no signs).
// Returns the right-hand side; the product itself is the oracle in tests.
inline Cplx multi_li_quasishuffle_rhs(const std::vector<int>& nA, const std::vector<Cplx>& zA,
                                      const std::vector<int>& nB, const std::vector<Cplx>& zB) {
  int r = int(nA.size()), s = int(nB.size());
  Cplx total = 0;
  for (auto& q : enumerate_quasishuffles(r, s)) {
    std::vector<int> n(q.M, 0);
    std::vector<Cplx> z(q.M, 1);
    for (int j = 0; j < r; ++j) {
      n[q.phi[j]] += nA[j];
      z[q.phi[j]] *= zA[j];
    }
    for (int j = 0; j < s; ++j) {
      n[q.phi[r + j]] += nB[j];
      z[q.phi[r + j]] *= zB[j];
    }
    total += multi_li(n, z);
  }
  return total;
}

}  // namespace corr
