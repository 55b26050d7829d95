#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "polylog.hpp"

namespace corr {

struct UnsupportedClosedForm : std::domain_error {
  using std::domain_error::domain_error;
};

// Depth-one correlator value F_n(z) (weight n >= 3), normalized so that the
// correlator of (1, 0^{n-1}, z) equals (2 pi i)^{-n} F_n(z):
//   F_n(z) = -binom(2n-2, n-1)^{-1} sum_{k even, 0 <= k <= n-2}
//              binom(2n-k-3, n-1) 2^{k+1}/(k+1)!  L_{n-k}(z) log^k |z|.
// For n = 3 this is -L_3(z).
inline double depth_one_value(int n, Cplx z) {
  if (n < 3) throw std::invalid_argument("depth_one_value needs n >= 3");
  if (z == Cplx(0)) return 0;
  double lg = std::log(std::abs(z));
  double sum = 0;
  double inv = 1.0 / binomial(unsigned(2 * n - 2), unsigned(n - 1)).get_d();
  for (int k = 0; k <= n - 2; k += 2) {
    double coef = binomial(unsigned(2 * n - k - 3), unsigned(n - 1)).get_d() *
                  std::pow(2.0, k + 1) / factorial(unsigned(k + 1)).get_d();
    sum += coef * l_n(n - k, z) * std::pow(lg, k);
  }
  return -inv * sum;
}

// Closed-form correlator of the points (z_0, ..., z_n), normalized by
// (2 pi i)^{-weight}:
//   weight 1: log |z_0 - z_1|
//   weight 2: L_2((z_1 - z_0)/(z_2 - z_0))
//   weight >= 3: only configurations that are a dihedral transform of
//     (x, c, ..., c, y) -- a run of n-1 equal points -- via the shift and
//     scale invariances: value = sign * F_n((y - c)/(x - c)), where sign is
//     (-1)^{n+1} for reflections.  Anything else raises UnsupportedClosedForm.
inline double correlator_closed(const std::vector<Cplx>& zs) {
  int n = int(zs.size()) - 1;
  if (n < 1) throw std::invalid_argument("need at least two points");
  if (n == 1) {
    if (zs[0] == zs[1]) throw std::invalid_argument("coincident points");
    return std::log(std::abs(zs[0] - zs[1]));
  }
  if (n == 2) {
    if (zs[0] == zs[1] || zs[0] == zs[2]) {
      // shift so the repeated point is 0 and use the dihedral symmetry:
      // Cor(a,a,b) = Cor(a,b,a); L_2 of a real ratio is 0
      return 0;
    }
    return dilog_sv((zs[1] - zs[0]) / (zs[2] - zs[0]));
  }
  int m = n + 1;
  for (int refl = 0; refl < 2; ++refl) {
    for (int rot = 0; rot < m; ++rot) {
      std::vector<Cplx> w(m);
      for (int i = 0; i < m; ++i) {
        int src = refl ? (rot - i % m + 2 * m) % m : (rot + i) % m;
        w[i] = zs[src];
      }
      // pattern (x, c, c, ..., c, y): positions 1..n-1 equal
      Cplx c = w[1];
      bool run = true;
      for (int i = 2; i < n; ++i)
        if (w[i] != c) run = false;
      if (!run || w[0] == c || w[n] == c) continue;
      double v = depth_one_value(n, (w[n] - c) / (w[0] - c));
      if (refl && n % 2 == 0) v = -v;
      return v;
    }
  }
  throw UnsupportedClosedForm("no closed form for this configuration");
}

}  // namespace corr
