#include "bezout/sylvester.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace bezout {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Retry in exact arithmetic when the LU rcond predicts forward error above this.
constexpr double kForwardErrTol = 1e-11;

void check_not_both_constant(int deg_a, int deg_b) {
  if (deg_a < 1 && deg_b < 1)
    raise(Errc::both_constant, "A and B must not both be constant polynomials");
  if (deg_a < 0 || deg_b < 0)
    raise(Errc::common_roots, "the zero polynomial shares every root");
}

Eigen::MatrixXcd to_eigen(const SylvesterMatrix& m) {
  const int n = m.dim();
  Eigen::MatrixXcd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = m.at(i, j);
  return out;
}

double residual_of(const Polynomial& r, const Polynomial& s, const Polynomial& a,
                   const Polynomial& b) {
  return norm_coeff(r * a + s * b - Polynomial::constant(1.0));
}

BezoutSolution closed_form_constant(const Polynomial& a, const Polynomial& b) {
  // Exactly one of the two is constant; the identity is R=0, S=1/const (or
  // the symmetric form), bypassing the degenerate matrix layout.
  BezoutSolution sol;
  if (b.degree() == 0) {
    sol.r = Polynomial();
    sol.s = Polynomial::constant(1.0 / b.coeff(0));
  } else {
    sol.r = Polynomial::constant(1.0 / a.coeff(0));
    sol.s = Polynomial();
  }
  sol.residual = residual_of(sol.r, sol.s, a, b);
  return sol;
}

BezoutSolution exact_to_solution(const ExactPolynomial& r, const ExactPolynomial& s,
                                 const ExactPolynomial& a, const ExactPolynomial& b) {
  BezoutSolution sol;
  sol.mode = ScalarMode::exact;
  sol.r_exact = r;
  sol.s_exact = s;
  sol.r = r.to_polynomial();
  sol.s = s.to_polynomial();
  const ExactPolynomial res = r * a + s * b - ExactPolynomial({ExactComplex(1)});
  if (!res.is_zero())
    raise(Errc::numeric_failure, "exact Bezout solve left a nonzero residual");
  sol.residual = 0.0;
  return sol;
}

}  // namespace

const char* solve_method_name(SolveMethod m) {
  return m == SolveMethod::sylvester ? "sylvester" : "interpolation";
}

const char* scalar_mode_name(ScalarMode m) {
  return m == ScalarMode::approximate ? "approximate" : "exact";
}

double BezoutSolution::joint_norm() const {
  const double nr = norm_coeff(r), ns = norm_coeff(s);
  return std::sqrt(nr * nr + ns * ns);
}

SylvesterMatrix build_sylvester(const Polynomial& a, const Polynomial& b) {
  const int n = a.degree(), k = b.degree();
  check_not_both_constant(n, k);
  SylvesterMatrix m;
  m.n_a = n;
  m.n_b = k;
  const int dim = n + k;
  m.entries.assign(static_cast<size_t>(dim) * dim, Complex{});
  for (int j = 0; j < k; ++j)
    for (int i = j; i <= j + n && i < dim; ++i)
      m.entries[static_cast<size_t>(i) * dim + j] = a.coeff(i - j);
  for (int j = 0; j < n; ++j)
    for (int i = j; i <= j + k && i < dim; ++i)
      m.entries[static_cast<size_t>(i) * dim + (k + j)] = b.coeff(i - j);
  return m;
}

std::vector<std::vector<ExactComplex>> build_sylvester_exact(const ExactPolynomial& a,
                                                             const ExactPolynomial& b) {
  const int n = a.degree(), k = b.degree();
  check_not_both_constant(n, k);
  const int dim = n + k;
  std::vector<std::vector<ExactComplex>> m(dim, std::vector<ExactComplex>(dim));
  for (int j = 0; j < k; ++j)
    for (int i = j; i <= j + n && i < dim; ++i) m[i][j] = a.coeff(i - j);
  for (int j = 0; j < n; ++j)
    for (int i = j; i <= j + k && i < dim; ++i) m[i][k + j] = b.coeff(i - j);
  return m;
}

Complex resultant(const Polynomial& a, const Polynomial& b) {
  const SylvesterMatrix m = build_sylvester(a, b);
  if (m.dim() == 0) return Complex(1.0, 0.0);
  return to_eigen(m).partialPivLu().determinant();
}

ExactComplex resultant_exact(const ExactPolynomial& a, const ExactPolynomial& b) {
  auto m = build_sylvester_exact(a, b);
  if (m.empty()) return ExactComplex(1);
  return exact_determinant(std::move(m));
}

BezoutSolution solve_minimal_bezout_exact(const ExactPolynomial& a, const ExactPolynomial& b) {
  const int n = a.degree(), k = b.degree();
  check_not_both_constant(n, k);
  if (n < 1 || k < 1) {
    const ExactPolynomial& constant = n < 1 ? a : b;
    const ExactPolynomial inv({ExactComplex(1) / constant.coeff(0)});
    return n < 1 ? exact_to_solution(inv, ExactPolynomial(), a, b)
                 : exact_to_solution(ExactPolynomial(), inv, a, b);
  }
  auto m = build_sylvester_exact(a, b);
  std::vector<ExactComplex> rhs(m.size());
  rhs[0] = ExactComplex(1);
  auto x = exact_solve(std::move(m), std::move(rhs));
  if (!x) raise(Errc::common_roots, "singular Sylvester system: A and B share a root");
  std::vector<ExactComplex> rc(x->begin(), x->begin() + k);
  std::vector<ExactComplex> sc(x->begin() + k, x->end());
  return exact_to_solution(ExactPolynomial(std::move(rc)), ExactPolynomial(std::move(sc)), a, b);
}

BezoutSolution solve_minimal_bezout(const Polynomial& a, const Polynomial& b) {
  const int n = a.degree(), k = b.degree();
  check_not_both_constant(n, k);
  if (n < 1 || k < 1) return closed_form_constant(a, b);

  const SylvesterMatrix m = build_sylvester(a, b);
  const Eigen::MatrixXcd mat = to_eigen(m);
  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(mat);
  const double scale = mat.cwiseAbs().rowwise().sum().maxCoeff();
  const Complex det = lu.determinant();
  const double rcond = lu.rcond();
  const bool near_singular = std::abs(det) <= kSingularTol * scale;
  const bool ill_conditioned = !(rcond > 0.0) || kEps / rcond > kForwardErrTol;

  if (near_singular || ill_conditioned) {
    // Doubles are Gaussian-rational, so the exact retry is always available.
    BezoutSolution sol = solve_minimal_bezout_exact(ExactPolynomial::from_polynomial(a),
                                                    ExactPolynomial::from_polynomial(b));
    sol.condition = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    sol.residual = residual_of(sol.r, sol.s, a, b);
    return sol;
  }

  Eigen::VectorXcd e = Eigen::VectorXcd::Zero(m.dim());
  e(0) = Complex(1.0, 0.0);
  Eigen::VectorXcd x = lu.solve(e);
  x += lu.solve(e - mat * x);  // one step of iterative refinement

  BezoutSolution sol;
  std::vector<Complex> rc(k), sc(n);
  for (int j = 0; j < k; ++j) rc[j] = x(j);
  for (int j = 0; j < n; ++j) sc[j] = x(k + j);
  sol.r = Polynomial(std::move(rc));
  sol.s = Polynomial(std::move(sc));
  sol.condition = 1.0 / rcond;
  sol.residual = residual_of(sol.r, sol.s, a, b);
  return sol;
}

double rough_bound(const Polynomial& a, const Polynomial& b) {
  const int n = a.degree(), k = b.degree();
  check_not_both_constant(n, k);
  const double tol = 1e-12;
  if (norm_coeff(a) > 1.0 + tol || norm_coeff(b) > 1.0 + tol)
    raise(Errc::norm_too_large, "rough_bound requires coefficient norms at most 1");

  double delta = std::numeric_limits<double>::infinity();
  if (n >= 1)
    for (const RootEntry& e : find_roots(a).entries)
      delta = std::min(delta, std::abs(b(e.root)));
  if (k >= 1)
    for (const RootEntry& e : find_roots(b).entries)
      delta = std::min(delta, std::abs(a(e.root)));
  if (!(delta > 1e-14)) raise(Errc::common_roots, "rough_bound: A and B share a root");

  double factorial = 1.0;
  for (int i = 2; i <= n + k - 1; ++i) factorial *= i;
  const double lead_a = std::abs(a.leading()), lead_b = std::abs(b.leading());
  const double denom = std::min(std::pow(lead_a, k) * std::pow(delta, n),
                                std::pow(lead_b, n) * std::pow(delta, k));
  return std::sqrt(2.0) * factorial / denom;
}

}  // namespace bezout
