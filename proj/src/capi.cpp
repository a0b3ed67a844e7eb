#include "convsolve/convsolve.h"

#include <cstring>
#include <new>
#include <string>

#include "config.hpp"
#include "conv.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"
#include "filters.hpp"
#include "selfcheck.hpp"
#include "solvers.hpp"
#include "spectra.hpp"

using namespace convsolve;

struct convsolve_matrix {
  DenseMatrix value;
};

namespace {

void copy_string(char* dst, std::size_t cap, const std::string& src) {
  const std::size_t n = std::min(cap - 1, src.size());
  std::memcpy(dst, src.data(), n);
  dst[n] = '\0';
}

convsolve_status status_of(const std::exception& e) {
  if (dynamic_cast<const DimensionTooSmall*>(&e)) return CONVSOLVE_ERROR_DIMENSION_TOO_SMALL;
  if (dynamic_cast<const SizeCapExceeded*>(&e)) return CONVSOLVE_ERROR_SIZE_CAP_EXCEEDED;
  if (dynamic_cast<const ShapeMismatch*>(&e)) return CONVSOLVE_ERROR_SHAPE_MISMATCH;
  if (dynamic_cast<const UnknownFilter*>(&e)) return CONVSOLVE_ERROR_UNKNOWN_FILTER;
  if (const auto* sf = dynamic_cast<const SingularFactor*>(&e)) {
    return sf->side() == FactorSide::Left ? CONVSOLVE_ERROR_SINGULAR_FACTOR_LEFT
                                          : CONVSOLVE_ERROR_SINGULAR_FACTOR_RIGHT;
  }
  if (dynamic_cast<const CommonEigenvalue*>(&e)) return CONVSOLVE_ERROR_COMMON_EIGENVALUE;
  if (dynamic_cast<const ResonantPair*>(&e)) return CONVSOLVE_ERROR_RESONANT_PAIR;
  if (dynamic_cast<const SingularOperator*>(&e)) return CONVSOLVE_ERROR_SINGULAR_OPERATOR;
  if (dynamic_cast<const NotUniquelySolvable*>(&e)) return CONVSOLVE_ERROR_NOT_UNIQUELY_SOLVABLE;
  if (dynamic_cast<const ResidualCheckFailed*>(&e)) return CONVSOLVE_ERROR_RESIDUAL_CHECK_FAILED;
  if (dynamic_cast<const ConvergenceFailure*>(&e)) return CONVSOLVE_ERROR_CONVERGENCE_FAILURE;
  if (dynamic_cast<const SingularMatrix*>(&e)) return CONVSOLVE_ERROR_SINGULAR_MATRIX;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  return CONVSOLVE_ERROR_INTERNAL;
}

template <typename Fn>
convsolve_status guarded(Fn&& fn) {
  try {
    fn();
    return CONVSOLVE_OK;
  } catch (const std::exception& e) {
    return status_of(e);
  } catch (...) {
    return CONVSOLVE_ERROR_INTERNAL;
  }
}

Filter3x3 kernel_from(const double kernel[9]) {
  std::array<double, 9> entries;
  std::memcpy(entries.data(), kernel, sizeof(entries));
  return Filter3x3(entries);
}

BoundaryCondition bc_from(convsolve_bc bc) {
  switch (bc) {
    case CONVSOLVE_BC_ZERO: return BoundaryCondition::Zero;
    case CONVSOLVE_BC_PERIODIC: return BoundaryCondition::Periodic;
    case CONVSOLVE_BC_REFLEXIVE: return BoundaryCondition::Reflexive;
  }
  throw std::invalid_argument("invalid boundary condition tag");
}

void fill_verdict(const SolvabilityVerdict& v, convsolve_verdict* out) {
  out->solvable = v.solvable == Solvability::Yes ? CONVSOLVE_SOLVABLE
                  : v.solvable == Solvability::No
                      ? CONVSOLVE_UNSOLVABLE
                      : CONVSOLVE_CONJECTURED_SOLVABLE;
  out->has_witness = v.witness.has_value() ? 1 : 0;
  out->witness_re = v.witness ? v.witness->real() : 0.0;
  out->witness_im = v.witness ? v.witness->imag() : 0.0;
  copy_string(out->condition, sizeof(out->condition), v.condition);
  copy_string(out->rule, sizeof(out->rule), v.rule);
}

void write_eigs(const std::vector<ComplexScalar>& eigs, double* re_out,
                double* im_out) {
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    re_out[i] = eigs[i].real();
    im_out[i] = eigs[i].imag();
  }
}

convsolve_matrix* wrap(DenseMatrix&& m) {
  return new convsolve_matrix{std::move(m)};
}

}  // namespace

extern "C" {

const char* convsolve_status_name(convsolve_status status) {
  switch (status) {
    case CONVSOLVE_OK: return "ok";
    case CONVSOLVE_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case CONVSOLVE_ERROR_DIMENSION_TOO_SMALL: return "dimension too small";
    case CONVSOLVE_ERROR_SIZE_CAP_EXCEEDED: return "size cap exceeded";
    case CONVSOLVE_ERROR_SHAPE_MISMATCH: return "shape mismatch";
    case CONVSOLVE_ERROR_UNKNOWN_FILTER: return "unknown filter";
    case CONVSOLVE_ERROR_SINGULAR_MATRIX: return "singular matrix";
    case CONVSOLVE_ERROR_SINGULAR_FACTOR_LEFT: return "singular left factor";
    case CONVSOLVE_ERROR_SINGULAR_FACTOR_RIGHT: return "singular right factor";
    case CONVSOLVE_ERROR_COMMON_EIGENVALUE: return "common eigenvalue";
    case CONVSOLVE_ERROR_RESONANT_PAIR: return "resonant eigenvalue pair";
    case CONVSOLVE_ERROR_SINGULAR_OPERATOR: return "singular operator";
    case CONVSOLVE_ERROR_NOT_UNIQUELY_SOLVABLE: return "not uniquely solvable";
    case CONVSOLVE_ERROR_RESIDUAL_CHECK_FAILED: return "residual check failed";
    case CONVSOLVE_ERROR_CONVERGENCE_FAILURE: return "convergence failure";
    case CONVSOLVE_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

int64_t convsolve_size_cap(void) { return size_cap(); }

convsolve_status convsolve_matrix_create(int64_t rows, int64_t cols,
                                         const double* data,
                                         convsolve_matrix** out) {
  if (out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    DenseMatrix m(rows, cols);
    if (data != nullptr) {
      std::memcpy(m.data(), data, sizeof(double) * static_cast<std::size_t>(rows * cols));
    }
    *out = wrap(std::move(m));
  });
}

void convsolve_matrix_free(convsolve_matrix* matrix) { delete matrix; }

int64_t convsolve_matrix_rows(const convsolve_matrix* matrix) {
  return matrix == nullptr ? 0 : matrix->value.rows();
}

int64_t convsolve_matrix_cols(const convsolve_matrix* matrix) {
  return matrix == nullptr ? 0 : matrix->value.cols();
}

convsolve_status convsolve_matrix_data(const convsolve_matrix* matrix,
                                       double* out) {
  if (matrix == nullptr || out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  std::memcpy(out, matrix->value.data(),
              sizeof(double) * static_cast<std::size_t>(matrix->value.size()));
  return CONVSOLVE_OK;
}

int convsolve_filter_is_known(const char* name) {
  return name != nullptr && parse_filter_id(name).has_value() ? 1 : 0;
}

convsolve_status convsolve_filter_kernel(const char* name, double out[9]) {
  if (name == nullptr || out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  const auto id = parse_filter_id(name);
  if (!id) return CONVSOLVE_ERROR_UNKNOWN_FILTER;
  const Filter3x3 f = filter_kernel(*id);
  std::memcpy(out, f.entries().data(), sizeof(double) * 9);
  return CONVSOLVE_OK;
}

convsolve_status convsolve_convolve(const double kernel[9], convsolve_bc bc,
                                    const convsolve_matrix* x,
                                    convsolve_matrix** b_out) {
  if (kernel == nullptr || x == nullptr || b_out == nullptr) {
    return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  }
  *b_out = nullptr;
  return guarded([&] {
    *b_out = wrap(convolve(kernel_from(kernel), x->value, bc_from(bc)));
  });
}

convsolve_status convsolve_assemble_operator(const double kernel[9],
                                             convsolve_bc bc, int64_t m,
                                             int64_t n,
                                             convsolve_matrix** op_out) {
  if (kernel == nullptr || op_out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  *op_out = nullptr;
  return guarded([&] {
    *op_out = wrap(assemble_operator(kernel_from(kernel), bc_from(bc), m, n));
  });
}

convsolve_status convsolve_analyze_filter(const char* name, convsolve_bc bc,
                                          int64_t m, int64_t n,
                                          convsolve_verdict* out) {
  if (name == nullptr || out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  const auto id = parse_filter_id(name);
  if (!id) return CONVSOLVE_ERROR_UNKNOWN_FILTER;
  return guarded([&] {
    fill_verdict(filter_solvability(*id, bc_from(bc), m, n), out);
  });
}

convsolve_status convsolve_analyze_numeric(const double kernel[9],
                                           convsolve_bc bc, int64_t m,
                                           int64_t n, convsolve_verdict* out) {
  if (kernel == nullptr || out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    const auto form = build_form(kernel_from(kernel), bc_from(bc), m, n);
    fill_verdict(numeric_solvability(form), out);
  });
}

convsolve_status convsolve_solve(const char* filter_name,
                                 const double kernel[9], convsolve_bc bc,
                                 const convsolve_matrix* b,
                                 convsolve_matrix** x_out,
                                 convsolve_report* report_out) {
  if (b == nullptr || x_out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  if (filter_name == nullptr && kernel == nullptr) {
    return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  }
  *x_out = nullptr;
  if (report_out != nullptr) *report_out = convsolve_report{};
  try {
    SolveResult result = [&] {
      if (filter_name != nullptr) {
        const auto id = parse_filter_id(filter_name);
        if (!id) throw UnknownFilter("unknown filter name");
        return solve_convolution(*id, b->value, bc_from(bc));
      }
      return solve_convolution(kernel_from(kernel), b->value, bc_from(bc));
    }();
    *x_out = wrap(std::move(result.solution));
    if (report_out != nullptr) {
      fill_verdict(result.report.verdict, &report_out->verdict);
      report_out->residual = result.report.residual;
      copy_string(report_out->path, sizeof(report_out->path), result.report.path);
    }
    return CONVSOLVE_OK;
  } catch (const NotUniquelySolvable& e) {
    if (report_out != nullptr) {
      fill_verdict(e.verdict(), &report_out->verdict);
      copy_string(report_out->path, sizeof(report_out->path), "none");
    }
    return CONVSOLVE_ERROR_NOT_UNIQUELY_SOLVABLE;
  } catch (const std::exception& e) {
    return status_of(e);
  } catch (...) {
    return CONVSOLVE_ERROR_INTERNAL;
  }
}

convsolve_status convsolve_tridiag_toeplitz_eigs(double alpha, double beta,
                                                 double gamma, int64_t n,
                                                 double* re_out,
                                                 double* im_out) {
  if (re_out == nullptr || im_out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    write_eigs(tridiag_toeplitz_eigs({alpha, beta, gamma, n}), re_out, im_out);
  });
}

convsolve_status convsolve_circulant_eigs(const double* first_row, int64_t n,
                                          double* re_out, double* im_out) {
  if (first_row == nullptr || re_out == nullptr || im_out == nullptr) {
    return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    std::vector<double> row(first_row, first_row + n);
    write_eigs(circulant_eigs(row), re_out, im_out);
  });
}

convsolve_status convsolve_perturbed_tridiag_eigs(double alpha, double beta,
                                                  double gamma, int64_t n,
                                                  double* re_out,
                                                  double* im_out) {
  if (re_out == nullptr || im_out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    write_eigs(perturbed_tridiag_eigs({alpha, beta, gamma, n}), re_out, im_out);
  });
}

convsolve_status convsolve_emboss_reflexive_spectrum(int64_t m, int64_t n,
                                                     double* re_out,
                                                     double* im_out) {
  if (re_out == nullptr || im_out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    write_eigs(emboss_reflexive_spectrum(m, n), re_out, im_out);
  });
}

convsolve_status convsolve_run_suite(convsolve_suite suite, uint64_t trials,
                                     uint64_t seed, int64_t max_size,
                                     convsolve_suite_result* out) {
  if (out == nullptr) return CONVSOLVE_ERROR_INVALID_ARGUMENT;
  return guarded([&] {
    CheckSuite id;
    switch (suite) {
      case CONVSOLVE_SUITE_SHIFT_IDENTITIES: id = CheckSuite::ShiftIdentities; break;
      case CONVSOLVE_SUITE_FORM_EQUIVALENCE: id = CheckSuite::FormEquivalence; break;
      case CONVSOLVE_SUITE_CLOSED_FORM_SPECTRA: id = CheckSuite::ClosedFormSpectra; break;
      case CONVSOLVE_SUITE_DETERMINANT_SPLIT: id = CheckSuite::DeterminantSplit; break;
      default: throw std::invalid_argument("invalid suite tag");
    }
    const SuiteResult r = run_suite(id, SuiteOptions{trials, seed, max_size});
    out->checks = static_cast<int64_t>(r.checks);
    out->failures = static_cast<int64_t>(r.failures);
    copy_string(out->name, sizeof(out->name), r.name);
    copy_string(out->first_failure, sizeof(out->first_failure), r.first_failure);
  });
}

}  // extern "C"
