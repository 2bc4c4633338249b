#include "bezout/capi.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "bezout/debranges.hpp"
#include "bezout/estimates.hpp"
#include "bezout/interpolation.hpp"
#include "bezout/json_io.hpp"
#include "bezout/multi.hpp"
#include "bezout/sylvester.hpp"

struct bz_poly {
  bezout::Polynomial p;
  std::optional<bezout::ExactPolynomial> exact;
};
struct bz_ratfun {
  bezout::RationalFunction f;
};
struct bz_bezout {
  bezout::BezoutSolution sol;
};
struct bz_multi {
  bezout::MultiBezoutSolution sol;
};
struct bz_plank {
  bezout::PlankCertificate cert;
};
struct bz_mate {
  bezout::PythagoreanMate mate;
};
struct bz_estimate {
  bezout::EstimateReport rep;
};
struct bz_sweep {
  bezout::SweepResult result;
};

namespace {

thread_local std::string g_last_error;

bz_status map_errc(bezout::Errc code) {
  using bezout::Errc;
  switch (code) {
    case Errc::invalid_argument: return BZ_ERR_INVALID_ARGUMENT;
    case Errc::json_error: return BZ_ERR_JSON;
    case Errc::both_constant: return BZ_ERR_BOTH_CONSTANT;
    case Errc::common_roots: return BZ_ERR_COMMON_ROOTS;
    case Errc::not_a_root: return BZ_ERR_NOT_A_ROOT;
    case Errc::division_by_zero_polynomial: return BZ_ERR_DIVISION_BY_ZERO_POLYNOMIAL;
    case Errc::constant_polynomial: return BZ_ERR_CONSTANT_POLYNOMIAL;
    case Errc::duplicate_nodes: return BZ_ERR_DUPLICATE_NODES;
    case Errc::norm_too_large: return BZ_ERR_NORM_TOO_LARGE;
    case Errc::hypothesis_violated: return BZ_ERR_HYPOTHESIS_VIOLATED;
    case Errc::vector_too_short: return BZ_ERR_VECTOR_TOO_SHORT;
    case Errc::empty_input: return BZ_ERR_EMPTY_INPUT;
    case Errc::not_schur_class: return BZ_ERR_NOT_SCHUR_CLASS;
    case Errc::blaschke_product: return BZ_ERR_BLASCHKE_PRODUCT;
    case Errc::odd_circle_multiplicity: return BZ_ERR_ODD_CIRCLE_MULTIPLICITY;
    case Errc::common_roots_after_combination: return BZ_ERR_COMMON_ROOTS_AFTER_COMBINATION;
    case Errc::index_out_of_range: return BZ_ERR_INDEX_OUT_OF_RANGE;
    case Errc::sample_outside_disk: return BZ_ERR_SAMPLE_OUTSIDE_DISK;
    case Errc::exact_unavailable: return BZ_ERR_EXACT_UNAVAILABLE;
    case Errc::numeric_failure: return BZ_ERR_NUMERIC;
  }
  return BZ_ERR_NUMERIC;
}

template <typename Fn>
bz_status guarded(Fn&& fn) {
  try {
    fn();
    return BZ_OK;
  } catch (const bezout::Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BZ_ERR_NUMERIC;
  }
}

bz_status require(bool ok, const char* message) {
  if (ok) return BZ_OK;
  g_last_error = message;
  return BZ_ERR_INVALID_ARGUMENT;
}

bezout::SolveMethod method_of(int m) {
  return m == BZ_METHOD_INTERPOLATION ? bezout::SolveMethod::interpolation
                                      : bezout::SolveMethod::sylvester;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bz_poly* wrap_poly(bezout::Polynomial p) { return new bz_poly{std::move(p), std::nullopt}; }

bz_poly* wrap_exact(bezout::ExactPolynomial e) {
  bz_poly* out = new bz_poly;
  out->p = e.to_polynomial();
  out->exact = std::move(e);
  return out;
}

}  // namespace

extern "C" {

const char* bz_status_name(bz_status status) {
  switch (status) {
    case BZ_OK: return "Ok";
    case BZ_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case BZ_ERR_JSON: return "JsonError";
    case BZ_ERR_BOTH_CONSTANT: return "BothConstant";
    case BZ_ERR_COMMON_ROOTS: return "CommonRoots";
    case BZ_ERR_NOT_A_ROOT: return "NotARoot";
    case BZ_ERR_DIVISION_BY_ZERO_POLYNOMIAL: return "DivisionByZeroPolynomial";
    case BZ_ERR_CONSTANT_POLYNOMIAL: return "ConstantPolynomial";
    case BZ_ERR_DUPLICATE_NODES: return "DuplicateNodes";
    case BZ_ERR_NORM_TOO_LARGE: return "NormTooLarge";
    case BZ_ERR_HYPOTHESIS_VIOLATED: return "HypothesisViolated";
    case BZ_ERR_VECTOR_TOO_SHORT: return "VectorTooShort";
    case BZ_ERR_EMPTY_INPUT: return "EmptyInput";
    case BZ_ERR_NOT_SCHUR_CLASS: return "NotSchurClass";
    case BZ_ERR_BLASCHKE_PRODUCT: return "BlaschkeProduct";
    case BZ_ERR_ODD_CIRCLE_MULTIPLICITY: return "OddCircleMultiplicity";
    case BZ_ERR_COMMON_ROOTS_AFTER_COMBINATION: return "CommonRootsAfterCombination";
    case BZ_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case BZ_ERR_SAMPLE_OUTSIDE_DISK: return "SampleOutsideDisk";
    case BZ_ERR_EXACT_UNAVAILABLE: return "ExactUnavailable";
    case BZ_ERR_NUMERIC: return "NumericFailure";
  }
  return "UnknownError";
}

int bz_status_is_validation(bz_status status) {
  switch (status) {
    case BZ_OK:
    case BZ_ERR_NUMERIC:
    case BZ_ERR_ODD_CIRCLE_MULTIPLICITY:
    case BZ_ERR_COMMON_ROOTS_AFTER_COMBINATION:
      return 0;
    default:
      return 1;
  }
}

const char* bz_last_error(void) { return g_last_error.c_str(); }

const char* bz_version(void) { return "1.0.0"; }

void bz_string_free(char* s) { std::free(s); }

/* ---- polynomials -------------------------------------------------------- */

bz_status bz_poly_create(const double* re, const double* im, size_t n, bz_poly** out) {
  if (bz_status st = require(out && (n == 0 || re), "bz_poly_create: null argument")) return st;
  return guarded([&] {
    std::vector<bezout::Complex> c(n);
    for (size_t j = 0; j < n; ++j) c[j] = {re[j], im ? im[j] : 0.0};
    *out = wrap_poly(bezout::Polynomial(std::move(c)));
  });
}

bz_status bz_poly_from_json(const char* json_text, int exact, bz_poly** out) {
  if (bz_status st = require(json_text && out, "bz_poly_from_json: null argument")) return st;
  return guarded([&] {
    if (exact) {
      *out = wrap_exact(bezout::exact_poly_from_json_text(json_text));
    } else {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(json_text);
      } catch (const std::exception& e) {
        bezout::raise(bezout::Errc::json_error, e.what());
      }
      *out = wrap_poly(bezout::poly_from_json(j));
    }
  });
}

bz_status bz_poly_to_json(const bz_poly* p, char** out) {
  if (bz_status st = require(p && out, "bz_poly_to_json: null argument")) return st;
  return guarded([&] {
    const bezout::ordered_json j =
        p->exact ? bezout::exact_poly_to_json(*p->exact) : bezout::poly_to_json(p->p);
    *out = dup_string(j.dump());
  });
}

void bz_poly_free(bz_poly* p) { delete p; }

size_t bz_poly_length(const bz_poly* p) { return p ? p->p.coeffs().size() : 0; }

int bz_poly_is_exact(const bz_poly* p) { return p && p->exact ? 1 : 0; }

bz_status bz_poly_coeffs(const bz_poly* p, double* re, double* im, size_t capacity) {
  if (bz_status st = require(p, "bz_poly_coeffs: null polynomial")) return st;
  if (bz_status st = require(capacity >= p->p.coeffs().size() && (re || p->p.coeffs().empty()),
                             "bz_poly_coeffs: buffer too small"))
    return st;
  for (size_t j = 0; j < p->p.coeffs().size(); ++j) {
    re[j] = p->p.coeffs()[j].real();
    if (im) im[j] = p->p.coeffs()[j].imag();
  }
  return BZ_OK;
}

bz_status bz_poly_eval(const bz_poly* p, double zre, double zim, double* out_re,
                       double* out_im) {
  if (bz_status st = require(p && out_re && out_im, "bz_poly_eval: null argument")) return st;
  const bezout::Complex v = p->p(bezout::Complex(zre, zim));
  *out_re = v.real();
  *out_im = v.imag();
  return BZ_OK;
}

double bz_poly_norm_coeff(const bz_poly* p) { return p ? bezout::norm_coeff(p->p) : 0.0; }

double bz_poly_norm_h2(const bz_poly* p) { return p ? bezout::norm_h2(p->p) : 0.0; }

bz_status bz_poly_norm_sup_circle(const bz_poly* p, double radius, double* out) {
  if (bz_status st = require(p && out, "bz_poly_norm_sup_circle: null argument")) return st;
  return guarded([&] { *out = bezout::norm_sup_circle(p->p, radius); });
}

bz_status bz_poly_roots(const bz_poly* p, double* re, double* im, int* mult, size_t capacity,
                        size_t* count) {
  if (bz_status st = require(p && count, "bz_poly_roots: null argument")) return st;
  return guarded([&] {
    const bezout::RootSet rs = bezout::find_roots(p->p);
    *count = rs.entries.size();
    if (capacity < rs.entries.size())
      bezout::raise(bezout::Errc::invalid_argument, "bz_poly_roots: buffer too small");
    for (size_t i = 0; i < rs.entries.size(); ++i) {
      if (re) re[i] = rs.entries[i].root.real();
      if (im) im[i] = rs.entries[i].root.imag();
      if (mult) mult[i] = rs.entries[i].multiplicity;
    }
  });
}

/* ---- Sylvester ----------------------------------------------------------- */

bz_status bz_sylvester_dim(const bz_poly* a, const bz_poly* b, size_t* dim) {
  if (bz_status st = require(a && b && dim, "bz_sylvester_dim: null argument")) return st;
  return guarded([&] { *dim = bezout::build_sylvester(a->p, b->p).dim(); });
}

bz_status bz_sylvester_entries(const bz_poly* a, const bz_poly* b, double* re, double* im,
                               size_t capacity) {
  if (bz_status st = require(a && b, "bz_sylvester_entries: null argument")) return st;
  return guarded([&] {
    const bezout::SylvesterMatrix m = bezout::build_sylvester(a->p, b->p);
    if (capacity < m.entries.size())
      bezout::raise(bezout::Errc::invalid_argument, "bz_sylvester_entries: buffer too small");
    for (size_t i = 0; i < m.entries.size(); ++i) {
      if (re) re[i] = m.entries[i].real();
      if (im) im[i] = m.entries[i].imag();
    }
  });
}

bz_status bz_resultant(const bz_poly* a, const bz_poly* b, int mode, double* out_re,
                       double* out_im) {
  if (bz_status st = require(a && b && out_re && out_im, "bz_resultant: null argument"))
    return st;
  return guarded([&] {
    bezout::Complex det;
    if (mode == BZ_MODE_EXACT) {
      if (!a->exact || !b->exact)
        bezout::raise(bezout::Errc::exact_unavailable,
                      "exact resultant requires exact polynomial inputs");
      det = bezout::resultant_exact(*a->exact, *b->exact).to_complex();
    } else {
      det = bezout::resultant(a->p, b->p);
    }
    *out_re = det.real();
    *out_im = det.imag();
  });
}

bz_status bz_solve(const bz_poly* a, const bz_poly* b, int method, int mode, bz_bezout** out) {
  if (bz_status st = require(a && b && out, "bz_solve: null argument")) return st;
  return guarded([&] {
    bezout::BezoutSolution sol;
    if (mode == BZ_MODE_EXACT) {
      if (!a->exact || !b->exact)
        bezout::raise(bezout::Errc::exact_unavailable,
                      "exact solve requires exact polynomial inputs");
      if (method == BZ_METHOD_INTERPOLATION)
        bezout::raise(bezout::Errc::exact_unavailable,
                      "the interpolation method is approximate-only; use sylvester in exact mode");
      sol = bezout::solve_minimal_bezout_exact(*a->exact, *b->exact);
    } else if (method == BZ_METHOD_INTERPOLATION) {
      sol = bezout::bezout_by_interpolation(a->p, b->p);
    } else {
      sol = bezout::solve_minimal_bezout(a->p, b->p);
    }
    *out = new bz_bezout{std::move(sol)};
  });
}

void bz_bezout_free(bz_bezout* sol) { delete sol; }

bz_status bz_bezout_r(const bz_bezout* sol, bz_poly** out) {
  if (bz_status st = require(sol && out, "bz_bezout_r: null argument")) return st;
  *out = sol->sol.r_exact ? wrap_exact(*sol->sol.r_exact) : wrap_poly(sol->sol.r);
  return BZ_OK;
}

bz_status bz_bezout_s(const bz_bezout* sol, bz_poly** out) {
  if (bz_status st = require(sol && out, "bz_bezout_s: null argument")) return st;
  *out = sol->sol.s_exact ? wrap_exact(*sol->sol.s_exact) : wrap_poly(sol->sol.s);
  return BZ_OK;
}

double bz_bezout_residual(const bz_bezout* sol) { return sol ? sol->sol.residual : 0.0; }

double bz_bezout_condition(const bz_bezout* sol) { return sol ? sol->sol.condition : 0.0; }

const char* bz_bezout_method(const bz_bezout* sol) {
  return sol ? bezout::solve_method_name(sol->sol.method) : "";
}

const char* bz_bezout_mode(const bz_bezout* sol) {
  return sol ? bezout::scalar_mode_name(sol->sol.mode) : "";
}

bz_status bz_rough_bound(const bz_poly* a, const bz_poly* b, double* out) {
  if (bz_status st = require(a && b && out, "bz_rough_bound: null argument")) return st;
  return guarded([&] { *out = bezout::rough_bound(a->p, b->p); });
}

/* ---- Hermite -------------------------------------------------------------- */

bz_status bz_hermite_interpolate(const char* json_text, bz_poly** out) {
  if (bz_status st = require(json_text && out, "bz_hermite_interpolate: null argument"))
    return st;
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
      bezout::raise(bezout::Errc::json_error, e.what());
    }
    *out = wrap_poly(bezout::hermite_interpolate(bezout::hermite_from_json(j)));
  });
}

/* ---- estimates ------------------------------------------------------------ */

bz_status bz_delta_of(const bz_poly* a, const bz_poly* b, double* out) {
  if (bz_status st = require(a && b && out, "bz_delta_of: null argument")) return st;
  return guarded([&] { *out = bezout::delta_of(a->p, b->p); });
}

bz_status bz_estimate_compute(const bz_poly* a, const bz_poly* b, int method, bz_estimate** out) {
  if (bz_status st = require(a && b && out, "bz_estimate: null argument")) return st;
  return guarded([&] {
    *out = new bz_estimate{bezout::estimate_report(a->p, b->p, method_of(method))};
  });
}

void bz_estimate_free(bz_estimate* rep) { delete rep; }

double bz_estimate_delta(const bz_estimate* rep) { return rep ? rep->rep.delta : 0.0; }
int bz_estimate_max_mult(const bz_estimate* rep) { return rep ? rep->rep.max_mult : 0; }
double bz_estimate_joint_norm(const bz_estimate* rep) { return rep ? rep->rep.joint_norm : 0.0; }
double bz_estimate_sharp_ratio(const bz_estimate* rep) {
  return rep ? rep->rep.sharp_ratio : 0.0;
}
int bz_estimate_has_rough_bound(const bz_estimate* rep) {
  return rep && rep->rep.rough_bound ? 1 : 0;
}
double bz_estimate_rough_bound(const bz_estimate* rep) {
  return rep && rep->rep.rough_bound ? *rep->rep.rough_bound : 0.0;
}
double bz_estimate_residual(const bz_estimate* rep) { return rep ? rep->rep.residual : 0.0; }

bz_status bz_sweep_run(const char* family, int n, const double* params, size_t count,
                       int method, int jobs, bz_sweep** out) {
  if (bz_status st = require(family && params && out, "bz_sweep_run: null argument")) return st;
  return guarded([&] {
    const std::vector<double> p(params, params + count);
    *out = new bz_sweep{bezout::sharpness_sweep(family, n, p, method_of(method), jobs)};
  });
}

void bz_sweep_free(bz_sweep* sweep) { delete sweep; }

size_t bz_sweep_size(const bz_sweep* sweep) { return sweep ? sweep->result.points.size() : 0; }

bz_status bz_sweep_point(const bz_sweep* sweep, size_t i, double* delta, double* joint_norm,
                         double* sharp_ratio, double* residual) {
  if (bz_status st = require(sweep, "bz_sweep_point: null sweep")) return st;
  if (i >= sweep->result.points.size()) {
    g_last_error = "bz_sweep_point: index out of range";
    return BZ_ERR_INDEX_OUT_OF_RANGE;
  }
  const bezout::SweepPoint& p = sweep->result.points[i];
  if (delta) *delta = p.delta;
  if (joint_norm) *joint_norm = p.joint_norm;
  if (sharp_ratio) *sharp_ratio = p.sharp_ratio;
  if (residual) *residual = p.residual;
  return BZ_OK;
}

double bz_sweep_slope(const bz_sweep* sweep) {
  return sweep ? sweep->result.fitted_slope : 0.0;
}

/* ---- plank / multi --------------------------------------------------------- */

bz_status bz_plank_compute(const double* vre, const double* vim, size_t n, size_t dim, uint64_t seed,
                   bz_plank** out) {
  if (bz_status st = require(vre && vim && out, "bz_plank: null argument")) return st;
  return guarded([&] {
    std::vector<std::vector<bezout::Complex>> v(n, std::vector<bezout::Complex>(dim));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < dim; ++k) v[i][k] = {vre[i * dim + k], vim[i * dim + k]};
    *out = new bz_plank{bezout::plank_vector(v, seed)};
  });
}

void bz_plank_free(bz_plank* cert) { delete cert; }

bz_status bz_plank_y(const bz_plank* cert, double* re, double* im, size_t capacity) {
  if (bz_status st = require(cert && re && im, "bz_plank_y: null argument")) return st;
  if (bz_status st = require(capacity >= cert->cert.y.size(), "bz_plank_y: buffer too small"))
    return st;
  for (size_t k = 0; k < cert->cert.y.size(); ++k) {
    re[k] = cert->cert.y[k].real();
    im[k] = cert->cert.y[k].imag();
  }
  return BZ_OK;
}

double bz_plank_achieved(const bz_plank* cert) { return cert ? cert->cert.achieved : 0.0; }
double bz_plank_bound(const bz_plank* cert) { return cert ? cert->cert.bound : 0.0; }

bz_status bz_solve_multi(const bz_poly* a, const bz_poly* const* bs, size_t count,
                         double delta, int method, uint64_t seed, bz_multi** out) {
  if (bz_status st = require(a && bs && out, "bz_solve_multi: null argument")) return st;
  return guarded([&] {
    std::vector<bezout::Polynomial> list;
    list.reserve(count);
    for (size_t j = 0; j < count; ++j) {
      if (!bs[j]) bezout::raise(bezout::Errc::invalid_argument, "bz_solve_multi: null B_j");
      list.push_back(bs[j]->p);
    }
    *out = new bz_multi{bezout::solve_multi_bezout(a->p, list, delta, method_of(method), seed)};
  });
}

void bz_multi_free(bz_multi* sol) { delete sol; }

bz_status bz_multi_r(const bz_multi* sol, bz_poly** out) {
  if (bz_status st = require(sol && out, "bz_multi_r: null argument")) return st;
  *out = wrap_poly(sol->sol.r);
  return BZ_OK;
}

size_t bz_multi_count(const bz_multi* sol) { return sol ? sol->sol.s_list.size() : 0; }

bz_status bz_multi_s(const bz_multi* sol, size_t j, bz_poly** out) {
  if (bz_status st = require(sol && out, "bz_multi_s: null argument")) return st;
  if (j >= sol->sol.s_list.size()) {
    g_last_error = "bz_multi_s: index out of range";
    return BZ_ERR_INDEX_OUT_OF_RANGE;
  }
  *out = wrap_poly(sol->sol.s_list[j]);
  return BZ_OK;
}

bz_status bz_multi_combined_b(const bz_multi* sol, bz_poly** out) {
  if (bz_status st = require(sol && out, "bz_multi_combined_b: null argument")) return st;
  *out = wrap_poly(sol->sol.combined_b);
  return BZ_OK;
}

bz_status bz_multi_y(const bz_multi* sol, double* re, double* im, size_t capacity) {
  if (bz_status st = require(sol && re && im, "bz_multi_y: null argument")) return st;
  if (bz_status st = require(capacity >= sol->sol.y.y.size(), "bz_multi_y: buffer too small"))
    return st;
  for (size_t k = 0; k < sol->sol.y.y.size(); ++k) {
    re[k] = sol->sol.y.y[k].real();
    im[k] = sol->sol.y.y[k].imag();
  }
  return BZ_OK;
}

double bz_multi_residual(const bz_multi* sol) { return sol ? sol->sol.residual : 0.0; }
double bz_multi_joint_norm(const bz_multi* sol) { return sol ? sol->sol.joint_norm : 0.0; }
double bz_multi_single_joint_norm(const bz_multi* sol) {
  return sol ? sol->sol.single_joint_norm : 0.0;
}
double bz_multi_plank_achieved(const bz_multi* sol) { return sol ? sol->sol.y.achieved : 0.0; }
double bz_multi_plank_bound(const bz_multi* sol) { return sol ? sol->sol.y.bound : 0.0; }

/* ---- de Branges ------------------------------------------------------------ */

bz_status bz_ratfun_create(const bz_poly* num, const bz_poly* den, bz_ratfun** out) {
  if (bz_status st = require(num && den && out, "bz_ratfun_create: null argument")) return st;
  return guarded([&] {
    if (den->p.is_zero())
      bezout::raise(bezout::Errc::invalid_argument, "bz_ratfun_create: zero denominator");
    *out = new bz_ratfun{bezout::RationalFunction{num->p, den->p}};
  });
}

bz_status bz_ratfun_from_json(const char* json_text, bz_ratfun** out) {
  if (bz_status st = require(json_text && out, "bz_ratfun_from_json: null argument")) return st;
  return guarded([&] {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
      bezout::raise(bezout::Errc::json_error, e.what());
    }
    *out = new bz_ratfun{bezout::ratfun_from_json(j)};
  });
}

bz_status bz_ratfun_to_json(const bz_ratfun* f, char** out) {
  if (bz_status st = require(f && out, "bz_ratfun_to_json: null argument")) return st;
  return guarded([&] { *out = dup_string(bezout::ratfun_to_json(f->f).dump()); });
}

void bz_ratfun_free(bz_ratfun* f) { delete f; }

bz_status bz_mate_compute(const bz_ratfun* b, bz_mate** out) {
  if (bz_status st = require(b && out, "bz_mate_compute: null argument")) return st;
  return guarded([&] { *out = new bz_mate{bezout::pythagorean_mate(b->f)}; });
}

void bz_mate_free(bz_mate* mate) { delete mate; }

bz_status bz_mate_a(const bz_mate* mate, bz_ratfun** out) {
  if (bz_status st = require(mate && out, "bz_mate_a: null argument")) return st;
  *out = new bz_ratfun{mate->mate.a};
  return BZ_OK;
}

bz_status bz_mate_a1(const bz_mate* mate, bz_poly** out) {
  if (bz_status st = require(mate && out, "bz_mate_a1: null argument")) return st;
  *out = wrap_poly(mate->mate.a1);
  return BZ_OK;
}

size_t bz_mate_boundary_count(const bz_mate* mate) {
  return mate ? mate->mate.boundary_roots.entries.size() : 0;
}

bz_status bz_mate_boundary_root(const bz_mate* mate, size_t i, double* re, double* im,
                                int* mult) {
  if (bz_status st = require(mate, "bz_mate_boundary_root: null mate")) return st;
  if (i >= mate->mate.boundary_roots.entries.size()) {
    g_last_error = "bz_mate_boundary_root: index out of range";
    return BZ_ERR_INDEX_OUT_OF_RANGE;
  }
  const bezout::RootEntry& e = mate->mate.boundary_roots.entries[i];
  if (re) *re = e.root.real();
  if (im) *im = e.root.imag();
  if (mult) *mult = e.multiplicity;
  return BZ_OK;
}

int bz_mate_n_total(const bz_mate* mate) { return mate ? mate->mate.n_total : 0; }

double bz_mate_identity_dev(const bz_mate* mate) {
  return mate ? mate->mate.identity_dev : 0.0;
}

bz_status bz_hb_decompose(const bz_poly* f, const bz_mate* mate, bz_poly** f_tilde,
                          bz_poly** p) {
  if (bz_status st = require(f && mate && f_tilde && p, "bz_hb_decompose: null argument"))
    return st;
  return guarded([&] {
    bezout::HbElement e = bezout::hb_decompose(f->p, mate->mate);
    *f_tilde = wrap_poly(std::move(e.f_tilde));
    *p = wrap_poly(std::move(e.p));
  });
}

bz_status bz_hb_norm(const bz_poly* f, const bz_mate* mate, double* out) {
  if (bz_status st = require(f && mate && out, "bz_hb_norm: null argument")) return st;
  return guarded([&] { *out = bezout::hb_norm(f->p, mate->mate); });
}

bz_status bz_boundary_bound_check(const bz_poly* f, const bz_mate* mate, int k,
                                  const double* zre, const double* zim, size_t count,
                                  double eta, double* c_k, double* max_violation) {
  if (bz_status st = require(f && mate && zre && zim && c_k && max_violation,
                             "bz_boundary_bound_check: null argument"))
    return st;
  return guarded([&] {
    std::vector<bezout::Complex> samples(count);
    for (size_t i = 0; i < count; ++i) samples[i] = {zre[i], zim[i]};
    const bezout::BoundaryBoundReport rep =
        bezout::boundary_bound_check(f->p, mate->mate, k, samples, eta);
    *c_k = rep.c_k;
    *max_violation = rep.max_violation;
  });
}

bz_status bz_corona_poly(const bz_mate* mate, const bz_poly* const* ps, size_t count,
                         double delta, int method, uint64_t seed, bz_multi** out) {
  if (bz_status st = require(mate && ps && out, "bz_corona_poly: null argument")) return st;
  return guarded([&] {
    std::vector<bezout::Polynomial> list;
    list.reserve(count);
    for (size_t j = 0; j < count; ++j) {
      if (!ps[j]) bezout::raise(bezout::Errc::invalid_argument, "bz_corona_poly: null p_j");
      list.push_back(ps[j]->p);
    }
    *out = new bz_multi{
        bezout::corona_polynomial_data(mate->mate, list, delta, method_of(method), seed)};
  });
}

} /* extern "C" */
