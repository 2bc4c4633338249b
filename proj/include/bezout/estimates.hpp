#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bezout/poly.hpp"
#include "bezout/sylvester.hpp"

namespace bezout {

/// Measurements of one solved pair against the sharp and rough bounds.
struct EstimateReport {
  double delta = 0.0;       // min_j |B(alpha_j)| over distinct roots of A
  int max_mult = 0;         // max root multiplicity of A
  double joint_norm = 0.0;  // sqrt(|R|^2 + |S|^2), coeff-max norms
  double sharp_ratio = 0.0;  // joint_norm * delta^max_mult
  std::optional<double> rough_bound;  // present when the rough-bound hypotheses hold
  bool norms_ok = false;  // |A|, |B| <= 1
  bool delta_ok = false;
  double residual = 0.0;
  SolveMethod method = SolveMethod::sylvester;
  ScalarMode mode = ScalarMode::approximate;
};

/// min over distinct roots alpha_j of A of |B(alpha_j)|.
double delta_of(const Polynomial& a, const Polynomial& b);

EstimateReport estimate_report(const Polynomial& a, const Polynomial& b,
                               SolveMethod method = SolveMethod::sylvester);

struct SweepPoint {
  double delta = 0.0;
  double joint_norm = 0.0;
  double sharp_ratio = 0.0;
  double residual = 0.0;
};

struct SweepResult {
  std::string family;
  std::vector<SweepPoint> points;  // sorted by delta descending
  double fitted_slope = 0.0;       // OLS slope of log joint_norm vs log(1/delta)
};

struct FamilyInstance {
  Polynomial a, b;
};

/// Families: "example12" (A=z^n, B=z-delta; param=delta),
/// "example24" (A=z(z-1), B=(z-eta)(z-1+eta); param=eta),
/// "mult2" (A=(z-1)^2(z+1), B=z-(1-delta); param=delta).
FamilyInstance family_instance(const std::string& family, int n, double param);

SweepResult sharpness_sweep(const std::string& family, int n,
                            const std::vector<double>& params,
                            SolveMethod method = SolveMethod::sylvester, int jobs = 1);

}  // namespace bezout
