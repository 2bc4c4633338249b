#include "bezout/estimates.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "bezout/interpolation.hpp"

namespace bezout {

double delta_of(const Polynomial& a, const Polynomial& b) {
  if (a.degree() < 1) raise(Errc::constant_polynomial, "delta_of: A must be nonconstant");
  double delta = std::numeric_limits<double>::infinity();
  for (const RootEntry& e : find_roots(a).entries)
    delta = std::min(delta, std::abs(b(e.root)));
  if (delta <= 1e-14 * std::max(1.0, norm_coeff(b)))
    raise(Errc::common_roots, "delta_of: B vanishes at a root of A");
  return delta;
}

EstimateReport estimate_report(const Polynomial& a, const Polynomial& b, SolveMethod method) {
  EstimateReport rep;
  rep.method = method;
  const RootSet roots_a = find_roots(a);
  rep.max_mult = roots_a.max_multiplicity();
  rep.delta = delta_of(a, b);
  rep.delta_ok = rep.delta > 0.0;
  rep.norms_ok = norm_coeff(a) <= 1.0 + 1e-12 && norm_coeff(b) <= 1.0 + 1e-12;

  const BezoutSolution sol = method == SolveMethod::interpolation
                                 ? bezout_by_interpolation(a, b)
                                 : solve_minimal_bezout(a, b);
  rep.mode = sol.mode;
  rep.residual = sol.residual;
  rep.joint_norm = sol.joint_norm();
  rep.sharp_ratio = rep.joint_norm * std::pow(rep.delta, rep.max_mult);
  if (rep.norms_ok && rep.delta_ok) rep.rough_bound = rough_bound(a, b);
  return rep;
}

FamilyInstance family_instance(const std::string& family, int n, double param) {
  if (!(param > 0.0 && param < 1.0))
    raise(Errc::invalid_argument, "family parameter must lie in (0, 1)");
  if (family == "example12") {
    if (n < 1) raise(Errc::invalid_argument, "example12 requires n >= 1");
    return {Polynomial::monomial(n), Polynomial({-param, 1.0})};
  }
  if (family == "example24") {
    const Polynomial a = Polynomial({Complex{}, 1.0}) * Polynomial({-1.0, 1.0});
    const Polynomial b = Polynomial({-param, 1.0}) * Polynomial({param - 1.0, 1.0});
    return {a, b};
  }
  if (family == "mult2") {
    const Polynomial a =
        Polynomial({1.0, -2.0, 1.0}) * Polynomial({1.0, 1.0});  // (z-1)^2 (z+1)
    return {a, Polynomial({param - 1.0, 1.0})};
  }
  raise(Errc::invalid_argument, "unknown sweep family: " + family);
}

SweepResult sharpness_sweep(const std::string& family, int n,
                            const std::vector<double>& params, SolveMethod method, int jobs) {
  if (params.empty()) raise(Errc::empty_input, "sharpness_sweep: no parameters");
  SweepResult result;
  result.family = family;
  result.points.resize(params.size());

  std::exception_ptr failure;
  const auto run_point = [&](size_t i) {
    const FamilyInstance inst = family_instance(family, n, params[i]);
    const EstimateReport rep = estimate_report(inst.a, inst.b, method);
    result.points[i] = {rep.delta, rep.joint_norm, rep.sharp_ratio, rep.residual};
  };

  if (jobs <= 1 || params.size() < 2) {
    for (size_t i = 0; i < params.size(); ++i) run_point(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    std::mutex mu;
    const int workers = std::min<int>(jobs, static_cast<int>(params.size()));
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (size_t i = next.fetch_add(1); i < params.size(); i = next.fetch_add(1)) {
          try {
            run_point(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::sort(result.points.begin(), result.points.end(),
            [](const SweepPoint& a, const SweepPoint& b) { return a.delta > b.delta; });

  // OLS of log joint_norm against log(1/delta), skipping points whose solver
  // residual is too large to trust the exponent.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const SweepPoint& p : result.points) {
    if (p.residual > 1e-8 * std::max(p.joint_norm, 1.0)) continue;
    const double x = std::log(1.0 / p.delta), y = std::log(p.joint_norm);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count >= 2 && sxx * count - sx * sx > 1e-12)
    result.fitted_slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  else
    result.fitted_slope = std::numeric_limits<double>::quiet_NaN();
  return result;
}

}  // namespace bezout
