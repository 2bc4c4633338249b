#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bezout/exact.hpp"
#include "bezout/poly.hpp"

namespace bezout {

inline constexpr double kSingularTol = 1e-12;
inline constexpr double kBezoutTol = 1e-9;

enum class SolveMethod { sylvester, interpolation };
enum class ScalarMode { approximate, exact };

const char* solve_method_name(SolveMethod m);
const char* scalar_mode_name(ScalarMode m);

/// (N+K)x(N+K) matrix: the first K columns are downward shifts of A's
/// coefficient column, the last N columns downward shifts of B's.
struct SylvesterMatrix {
  int n_a = 0;  // N = deg A
  int n_b = 0;  // K = deg B
  std::vector<Complex> entries;  // row-major, dim() x dim()

  int dim() const { return n_a + n_b; }
  Complex at(int i, int j) const { return entries[static_cast<size_t>(i) * dim() + j]; }
};

/// Minimal-degree solution of R*A + S*B = 1.
struct BezoutSolution {
  Polynomial r;  // deg <= K-1
  Polynomial s;  // deg <= N-1
  double residual = 0.0;  // coeff-max norm of R*A + S*B - 1
  SolveMethod method = SolveMethod::sylvester;
  ScalarMode mode = ScalarMode::approximate;
  double condition = 0.0;  // 1/rcond estimate of the solved system (0 when exact/closed-form)
  std::optional<ExactPolynomial> r_exact, s_exact;  // present in exact mode

  double joint_norm() const;  // sqrt(|R|^2 + |S|^2) in coeff-max norms
};

SylvesterMatrix build_sylvester(const Polynomial& a, const Polynomial& b);
std::vector<std::vector<ExactComplex>> build_sylvester_exact(const ExactPolynomial& a,
                                                             const ExactPolynomial& b);

/// det of the Sylvester matrix (LU with partial pivoting).
Complex resultant(const Polynomial& a, const Polynomial& b);
ExactComplex resultant_exact(const ExactPolynomial& a, const ExactPolynomial& b);

/// Unique minimal solution via the Sylvester system. Near-singular systems
/// retry with exact arithmetic (doubles are Gaussian-rational); exact
/// singularity reports CommonRoots.
BezoutSolution solve_minimal_bezout(const Polynomial& a, const Polynomial& b);
BezoutSolution solve_minimal_bezout_exact(const ExactPolynomial& a, const ExactPolynomial& b);

/// Right-hand side of the symmetric coefficient estimate
/// sqrt(2) (N+K-1)! / min{|A_N|^K delta^N, |B_K|^N delta^K},
/// delta = min of all cross evaluations |A(beta_j)|, |B(alpha_i)|.
double rough_bound(const Polynomial& a, const Polynomial& b);

}  // namespace bezout
