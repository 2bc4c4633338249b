#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "bezout/error.hpp"

namespace bezout {

using Complex = std::complex<double>;

// Numerical knobs shared across modules.
inline constexpr double kTrimRel = 1e-13;      // trailing-coefficient trim, relative to max |c_j|
inline constexpr double kDivEps = 1e-9;        // allowed |p(u)|/‖p‖ in divide_by_linear
inline constexpr double kClusterEps = 1e-6;    // base root-clustering radius
inline constexpr double kRootNewtonTol = 1e-13;
inline constexpr int kRootMaxIter = 200;
inline constexpr int kCircleSamples = 4096;

/// Dense univariate complex polynomial, coefficients in ascending degree.
/// The zero polynomial has an empty coefficient vector; otherwise the last
/// coefficient is nonzero after relative trimming.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  /// c * z^k
  static Polynomial monomial(int k, Complex c = Complex(1.0, 0.0));

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex coeff(int j) const {
    return j >= 0 && j < static_cast<int>(coeffs_.size()) ? coeffs_[j] : Complex{};
  }
  Complex leading() const { return is_zero() ? Complex{} : coeffs_.back(); }

  /// Horner evaluation.
  Complex operator()(Complex z) const;

  Polynomial derivative(int order = 1) const;
  Polynomial conjugate() const;  // conjugates every coefficient

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex c, const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, Complex c) { return c * p; }

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

struct RootEntry {
  Complex root;
  int multiplicity = 1;
};

/// Pairwise-distinct roots with multiplicities summing to the degree.
struct RootSet {
  std::vector<RootEntry> entries;
  int total_multiplicity() const;
  int max_multiplicity() const;
};

/// leading * prod (z - root)^multiplicity, expanded.
Polynomial from_roots(const RootSet& roots, Complex leading = Complex(1.0, 0.0));

/// Synthetic division by (z - u); requires u to be a root of p within kDivEps.
Polynomial divide_by_linear(const Polynomial& p, Complex u);

/// f = g*quotient + remainder with deg remainder < deg g.
std::pair<Polynomial, Polynomial> poly_div_rem(const Polynomial& f, const Polynomial& g);

double norm_coeff(const Polynomial& p);  // max_j |c_j|
double norm_h2(const Polynomial& p);     // sqrt(sum |c_j|^2)
/// max |p(z)| on |z| = radius, dense sampling plus golden-section refinement.
double norm_sup_circle(const Polynomial& p, double radius);

/// All complex roots with multiplicities (Aberth-Ehrlich plus cluster merging).
RootSet find_roots(const Polynomial& p);

}  // namespace bezout
