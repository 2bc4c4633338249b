#pragma once

#include <cstdint>
#include <vector>

#include "bezout/poly.hpp"
#include "bezout/sylvester.hpp"

namespace bezout {

/// Certified unit vector y with min_i |<v_i, y>| at least 1/sqrt(n) for
/// vectors of norm at least 1. Inner product: <v, y> = sum_k v_k conj(y_k).
struct PlankCertificate {
  std::vector<Complex> y;
  double achieved = 0.0;  // min_i |<v_i, y>|
  double bound = 0.0;     // 1/sqrt(n)
};

PlankCertificate plank_vector(const std::vector<std::vector<Complex>>& vectors,
                              uint64_t seed = 0);

/// Solution of R*A + sum_j S_j*B_j = 1 with the rank-one structure S_j = conj(y_j)*S.
struct MultiBezoutSolution {
  Polynomial r;
  std::vector<Polynomial> s_list;
  PlankCertificate y;
  Polynomial combined_b;  // B = sum_j conj(y_j) B_j
  double residual = 0.0;  // coeff-max norm of R*A + sum S_j B_j - 1
  double joint_norm = 0.0;         // sqrt(|R|^2 + sum_j |S_j|^2)
  double single_joint_norm = 0.0;  // sqrt(|R|^2 + |S|^2) from the collapsed solve
  SolveMethod method = SolveMethod::sylvester;
};

/// Collapses B_1..B_L to one polynomial via the plank vector, solves the
/// single Bezout identity, and fans the solution back out.
/// Requires sum |B_j|^2 <= 1 and sum_j |B_j(alpha_i)|^2 >= delta^2 at every
/// distinct root alpha_i of A.
MultiBezoutSolution solve_multi_bezout(const Polynomial& a,
                                       const std::vector<Polynomial>& b_list, double delta,
                                       SolveMethod method = SolveMethod::sylvester,
                                       uint64_t seed = 0);

}  // namespace bezout
