#pragma once

#include <cstdint>
#include <vector>

#include "bezout/multi.hpp"
#include "bezout/poly.hpp"

namespace bezout {

inline constexpr double kFrTol = 1e-8;      // |a|^2+|b|^2=1 identity tolerance
inline constexpr double kCircleTol = 1e-7;  // classification of unimodular roots
inline constexpr int kMateSamples = 512;    // circle samples for checks/calibration

struct RationalFunction {
  Polynomial num, den;
  Complex operator()(Complex z) const { return num(z) / den(z); }
};

/// z^deg * conj(r(1/conj(z))): coefficients conjugated and reversed at the
/// given degree (missing high coefficients count as zero).
Polynomial conj_reversed(const Polynomial& r, int deg);

/// Mate a of b with a(0) > 0, no zeros on the open disk, |a|^2 + |b|^2 = 1 on
/// the circle, plus its unimodular zeros and the polynomial a1 they span.
struct PythagoreanMate {
  RationalFunction b;
  RationalFunction a;
  Polynomial a1;           // monic, prod (z - xi_j)^{m_j}
  RootSet boundary_roots;  // (xi_j, m_j) on |z| = 1
  int n_total = 0;         // N = sum m_j
  double identity_dev = 0.0;  // max over samples of ||a|^2 + |b|^2 - 1|
};

/// Fejer-Riesz construction by root splitting of the Laurent symbol
/// q q# - p p# for b = p/q.
PythagoreanMate pythagorean_mate(const RationalFunction& b);

/// f = a1 * f_tilde + p with deg p < N (p = f, f_tilde = ... for N = 0: f_tilde = f, p = 0).
struct HbElement {
  Polynomial f_tilde, p;
};

HbElement hb_decompose(const Polynomial& f, const PythagoreanMate& mate);

/// sqrt(|f_tilde|_{H^2}^2 + |p|_{H^2}^2).
double hb_norm(const Polynomial& f, const PythagoreanMate& mate);

struct BoundaryBoundReport {
  double c_k = 0.0;          // 2 max(|a_k^#|_inf^2, ctilde_k)
  double a_sharp_sup = 0.0;  // |a_1/(z - xi_k)|_inf on the circle
  double ctilde_k = 0.0;     // squared operator norm of p -> (p - p(xi_k))/(z - xi_k)
  double max_violation = 0.0;  // max over samples of lhs - rhs (expected <= 0)
  int samples = 0;
};

/// Checks |f(z)|^2 <= (1+eta)|f(xi_k)|^2 + c_k (1+1/eta) |z-xi_k|^2/(1-|z|^2) |f|_b^2
/// at the given disk samples, with c_k computed from the mate.
BoundaryBoundReport boundary_bound_check(const Polynomial& f, const PythagoreanMate& mate,
                                         int k, const std::vector<Complex>& samples,
                                         double eta);

/// Solves q a1 + sum_j q_j p_j = 1 through the several-polynomial solver with
/// A = a1; requires sum_j |p_j(xi_i)|^2 >= delta^2/2 at every boundary root.
MultiBezoutSolution corona_polynomial_data(const PythagoreanMate& mate,
                                           const std::vector<Polynomial>& p_list, double delta,
                                           SolveMethod method = SolveMethod::sylvester,
                                           uint64_t seed = 0);

}  // namespace bezout
