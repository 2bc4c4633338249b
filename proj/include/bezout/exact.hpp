#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bezout/poly.hpp"

namespace bezout {

/// Gaussian rational: exact complex number with rational real/imaginary parts.
struct ExactComplex {
  mpq_class re, im;

  ExactComplex() : re(0), im(0) {}
  ExactComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
  explicit ExactComplex(long r) : re(r), im(0) {}

  /// Lossless: every finite double is a dyadic rational.
  static ExactComplex from_double(double r, double i);

  bool is_zero() const { return re == 0 && im == 0; }
  ExactComplex conj() const { return {re, -im}; }
  Complex to_complex() const { return {re.get_d(), im.get_d()}; }

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b);
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Parse a decimal/scientific literal ("-12.5e-3") into an exact rational.
mpq_class rational_from_decimal(std::string_view text);

/// Exact polynomial over Gaussian rationals, ascending degree, trailing zeros trimmed.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<ExactComplex> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static ExactPolynomial from_polynomial(const Polynomial& p);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ExactComplex>& coeffs() const { return coeffs_; }
  ExactComplex coeff(int j) const {
    return j >= 0 && j < static_cast<int>(coeffs_.size()) ? coeffs_[j] : ExactComplex{};
  }
  ExactComplex leading() const { return is_zero() ? ExactComplex{} : coeffs_.back(); }

  ExactComplex operator()(const ExactComplex& z) const;
  ExactPolynomial derivative(int order = 1) const;
  Polynomial to_polynomial() const;

  friend ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend ExactPolynomial operator*(const ExactComplex& c, const ExactPolynomial& p);

 private:
  void trim();
  std::vector<ExactComplex> coeffs_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
ExactComplex exact_determinant(std::vector<std::vector<ExactComplex>> m);

/// Solve m x = rhs exactly; nullopt when the matrix is singular.
std::optional<std::vector<ExactComplex>> exact_solve(std::vector<std::vector<ExactComplex>> m,
                                                     std::vector<ExactComplex> rhs);

}  // namespace bezout
