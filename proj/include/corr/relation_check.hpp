#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "closed_form.hpp"
#include "feynman.hpp"

namespace corr {

// --- closed-form functional equations ------------------------------------

// Five-term relation for the Bloch-Wigner dilogarithm:
//   L2((1-a)/(1-ab)) + L2((1-b)/(1-ab)) + L2(1-ab) + L2(a) + L2(b) = 0.
inline double five_term_residual(Cplx a, Cplx b) {
  Cplx ab = a * b;
  return dilog_sv((Cplx(1) - a) / (Cplx(1) - ab)) + dilog_sv((Cplx(1) - b) / (Cplx(1) - ab)) +
         dilog_sv(Cplx(1) - ab) + dilog_sv(a) + dilog_sv(b);
}

// Normalized depth-one weight-3 correlator of (1, 0, 0, z).
inline double f3(Cplx z) { return depth_one_value(3, z); }

// Weight-3 depth-one three-term relation:
//   f(x) + f(1-x) + f(1-x^{-1}) = f(1).
inline double corr27_residual(Cplx x) {
  return f3(x) + f3(Cplx(1) - x) + f3(Cplx(1) - Cplx(1) / x) - f3(Cplx(1));
}

// Two closed forms for the weight-3 correlator of (0, x, 1, y): the final
// six-term expression and the intermediate one produced by the lower-depth
// reduction.  Their equality is a trilogarithm functional equation.
inline double corr29_final(Cplx x, Cplx y) {
  return -f3(Cplx(1) - Cplx(1) / x) - f3(Cplx(1) - Cplx(1) / y) - f3(y / x) -
         f3((Cplx(1) - y) / (Cplx(1) - x)) +
         f3((Cplx(1) - Cplx(1) / y) / (Cplx(1) - Cplx(1) / x)) + f3(Cplx(1));
}

inline double corr29_intermediate(Cplx x, Cplx y) {
  return f3((Cplx(1) - y) / (x - y)) + f3((Cplx(1) - Cplx(1) / x) / (Cplx(1) - Cplx(1) / y)) +
         f3((x - Cplx(1)) / (x - y)) - f3(Cplx(1) - Cplx(1) / y) - f3(Cplx(1) - Cplx(1) / x) -
         f3(x / y);
}

inline double corr29_residual(Cplx x, Cplx y) {
  return corr29_final(x, y) - corr29_intermediate(x, y);
}

// Lower-depth reduction in weight 3 applied to (x, 1, y, 0).  Every term on
// the right-hand side has a cyclic run of two equal points, hence a closed
// form; the left-hand side Cor(x,1,y,0) = Cor(0,x,1,y) is evaluated by the
// six-term expression above.  Returns LHS - RHS.
inline double gr28_weight3_residual(Cplx x, Cplx y) {
  Cplx q = x / y;  // z = (z_1, z_2, z_3) = (x, 1, y), so z_3 q = x exactly
  double rhs = 0;
  // sum_i Cor(z_1..z_{i-1}, z_i, z_i q, ..., z_n q)
  rhs += correlator_closed({x, x * q, q, x});
  rhs += correlator_closed({x, Cplx(1), q, x});
  rhs += correlator_closed({x, Cplx(1), y, x});
  // - sum_{i>=2} Cor(z_1..z_{i-1}, 0, z_i q, ..., z_n q)
  rhs -= correlator_closed({x, Cplx(0), q, x});
  rhs -= correlator_closed({x, Cplx(1), Cplx(0), x});
  // - Cor(z_1, z_1 q, 0, ..., 0)
  rhs -= correlator_closed({x, x * q, Cplx(0), Cplx(0)});
  return corr29_final(x, y) - rhs;
}

// Weight-1 distribution relation on the level of periods:
//   log|x-y| = 1/2 (log|sx-sy| + log|sx+sy| + log|-sx-sy| + log|-sx+sy|)
// for any choice of square roots sx, sy.
inline double distribution_log_residual(Cplx x, Cplx y) {
  Cplx sx = std::sqrt(x), sy = std::sqrt(y);
  double rhs = 0.5 * (std::log(std::abs(sx - sy)) + std::log(std::abs(sx + sy)) +
                      std::log(std::abs(-sx - sy)) + std::log(std::abs(-sx + sy)));
  return std::log(std::abs(x - y)) - rhs;
}

// Weight-2 first shuffle (equivalently the additive shuffle with m = n = 1):
//   Cor(z0, a, b) + Cor(z0, b, a) = 0.
inline double first_shuffle_w2_residual(Cplx z0, Cplx a, Cplx b) {
  return correlator_closed({z0, a, b}) + correlator_closed({z0, b, a});
}

// --- generic numeric evaluation of relation combinations ------------------

struct NumericTerm {
  double coef = 1;
  std::vector<Cplx> zs;
};

struct CombinationResult {
  double residual = 0;
  double sigma = 0;    // 0 when everything was closed-form
  bool used_mc = false;
};

// Evaluate sum coef_i * Cor(zs_i) using closed forms where available and the
// Feynman Monte Carlo integrator otherwise (or always, if force_mc).
inline CombinationResult evaluate_combination(const std::vector<NumericTerm>& terms,
                                              const IntegrationConfig& cfg,
                                              bool force_mc = false) {
  CombinationResult out;
  double var = 0;
  for (auto& t : terms) {
    if (!force_mc) {
      try {
        out.residual += t.coef * correlator_closed(t.zs);
        continue;
      } catch (const UnsupportedClosedForm&) {
        // fall through to MC
      }
    }
    MCResult r = feynman_correlator(t.zs, cfg);
    out.residual += t.coef * r.value;
    var += t.coef * t.coef * r.sigma * r.sigma;
    out.used_mc = true;
  }
  out.sigma = std::sqrt(var);
  return out;
}

}  // namespace corr
