#include "bezout/exact.hpp"

#include <cctype>
#include <cmath>

namespace bezout {

ExactComplex ExactComplex::from_double(double r, double i) {
  if (!std::isfinite(r) || !std::isfinite(i))
    raise(Errc::exact_unavailable, "non-finite value has no exact representation");
  return {mpq_class(r), mpq_class(i)};
}

ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
  if (b.is_zero()) raise(Errc::invalid_argument, "exact division by zero");
  const mpq_class den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

mpq_class rational_from_decimal(std::string_view text) {
  size_t pos = 0;
  const auto fail = [&]() {
    raise(Errc::exact_unavailable,
          "not a Gaussian-rational literal: '" + std::string(text) + "'");
  };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_len = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
    digits.push_back(text[pos++]);
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      digits.push_back(text[pos++]);
      ++frac_len;
    }
  }
  if (digits.empty()) fail();
  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size()) fail();
    std::string exp_digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      exp_digits.push_back(text[pos++]);
    if (exp_digits.empty() || exp_digits.size() > 6) fail();
    exponent = std::stol(exp_digits);
    if (exp_neg) exponent = -exponent;
  }
  if (pos != text.size()) fail();

  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  const long shift = exponent - frac_len;
  mpq_class value(mantissa);
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  if (shift >= 0)
    value *= mpq_class(pow10);
  else
    value /= mpq_class(pow10);
  value.canonicalize();
  return value;
}

void ExactPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactPolynomial ExactPolynomial::from_polynomial(const Polynomial& p) {
  std::vector<ExactComplex> c;
  c.reserve(p.coeffs().size());
  for (const Complex& v : p.coeffs()) c.push_back(ExactComplex::from_double(v.real(), v.imag()));
  return ExactPolynomial(std::move(c));
}

ExactComplex ExactPolynomial::operator()(const ExactComplex& z) const {
  ExactComplex acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ExactPolynomial ExactPolynomial::derivative(int order) const {
  if (order < 0) raise(Errc::invalid_argument, "derivative order must be nonnegative");
  std::vector<ExactComplex> c = coeffs_;
  for (int k = 0; k < order; ++k) {
    if (c.empty()) break;
    for (size_t j = 1; j < c.size(); ++j)
      c[j - 1] = ExactComplex(static_cast<long>(j)) * c[j];
    c.pop_back();
  }
  return ExactPolynomial(std::move(c));
}

Polynomial ExactPolynomial::to_polynomial() const {
  std::vector<Complex> c(coeffs_.size());
  for (size_t j = 0; j < coeffs_.size(); ++j) c[j] = coeffs_[j].to_complex();
  return Polynomial(std::move(c));
}

ExactPolynomial operator+(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<ExactComplex> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t j = 0; j < a.coeffs_.size(); ++j) c[j] = c[j] + a.coeffs_[j];
  for (size_t j = 0; j < b.coeffs_.size(); ++j) c[j] = c[j] + b.coeffs_[j];
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator-(const ExactPolynomial& a, const ExactPolynomial& b) {
  return a + (ExactComplex(-1) * b);
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return ExactPolynomial();
  std::vector<ExactComplex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return ExactPolynomial(std::move(c));
}

ExactPolynomial operator*(const ExactComplex& c, const ExactPolynomial& p) {
  std::vector<ExactComplex> v(p.coeffs_.size());
  for (size_t j = 0; j < p.coeffs_.size(); ++j) v[j] = c * p.coeffs_[j];
  return ExactPolynomial(std::move(v));
}

ExactComplex exact_determinant(std::vector<std::vector<ExactComplex>> m) {
  const size_t n = m.size();
  ExactComplex prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return ExactComplex{};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      m[i][k] = ExactComplex{};
    }
    prev = m[k][k];
  }
  ExactComplex det = m[n - 1][n - 1];
  return negate ? -det : det;
}

std::optional<std::vector<ExactComplex>> exact_solve(std::vector<std::vector<ExactComplex>> m,
                                                     std::vector<ExactComplex> rhs) {
  const size_t n = m.size();
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[k], m[pivot]);
    std::swap(rhs[k], rhs[pivot]);
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      const ExactComplex factor = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - factor * m[k][j];
      rhs[i] = rhs[i] - factor * rhs[k];
    }
  }
  std::vector<ExactComplex> x(n);
  for (size_t k = n; k-- > 0;) {
    ExactComplex acc = rhs[k];
    for (size_t j = k + 1; j < n; ++j) acc = acc - m[k][j] * x[j];
    x[k] = acc / m[k][k];
  }
  return x;
}

}  // namespace bezout
