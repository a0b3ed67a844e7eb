/* convsolve — structured solvers and solvability analysis for 3x3-kernel
 * deconvolution under zero, periodic, and reflexive boundary conditions.
 *
 * C API over the core library. All matrices travel through opaque handles;
 * every function returns a status code, with CONVSOLVE_OK == 0 on success.
 * Output handles written by a call must be released with
 * convsolve_matrix_free. Scalars are doubles; matrix buffers are row-major.
 */
#ifndef CONVSOLVE_H
#define CONVSOLVE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CONVSOLVE_BUILD)
#define CONVSOLVE_API __declspec(dllexport)
#else
#define CONVSOLVE_API __declspec(dllimport)
#endif
#else
#define CONVSOLVE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum convsolve_status {
  CONVSOLVE_OK = 0,
  CONVSOLVE_ERROR_INVALID_ARGUMENT = 1,
  CONVSOLVE_ERROR_DIMENSION_TOO_SMALL = 2,
  CONVSOLVE_ERROR_SIZE_CAP_EXCEEDED = 3,
  CONVSOLVE_ERROR_SHAPE_MISMATCH = 4,
  CONVSOLVE_ERROR_UNKNOWN_FILTER = 5,
  CONVSOLVE_ERROR_SINGULAR_MATRIX = 6,
  CONVSOLVE_ERROR_SINGULAR_FACTOR_LEFT = 7,
  CONVSOLVE_ERROR_SINGULAR_FACTOR_RIGHT = 8,
  CONVSOLVE_ERROR_COMMON_EIGENVALUE = 9,
  CONVSOLVE_ERROR_RESONANT_PAIR = 10,
  CONVSOLVE_ERROR_SINGULAR_OPERATOR = 11,
  CONVSOLVE_ERROR_NOT_UNIQUELY_SOLVABLE = 12,
  CONVSOLVE_ERROR_RESIDUAL_CHECK_FAILED = 13,
  CONVSOLVE_ERROR_CONVERGENCE_FAILURE = 14,
  CONVSOLVE_ERROR_INTERNAL = 15
} convsolve_status;

typedef enum convsolve_bc {
  CONVSOLVE_BC_ZERO = 0,
  CONVSOLVE_BC_PERIODIC = 1,
  CONVSOLVE_BC_REFLEXIVE = 2
} convsolve_bc;

typedef enum convsolve_solvable {
  CONVSOLVE_UNSOLVABLE = 0,
  CONVSOLVE_SOLVABLE = 1,
  CONVSOLVE_CONJECTURED_SOLVABLE = 2
} convsolve_solvable;

/* Static descriptive name for a status code. */
CONVSOLVE_API const char* convsolve_status_name(convsolve_status status);

/* Current m*n cap for materialized operators (default 4096; the environment
 * variable CONVSOLVE_SIZE_CAP overrides it at first use). */
CONVSOLVE_API int64_t convsolve_size_cap(void);

/* ---- matrices -------------------------------------------------------- */

typedef struct convsolve_matrix convsolve_matrix;

/* Creates a rows x cols matrix; data (row-major, rows*cols entries) may be
 * NULL for a zero matrix. */
CONVSOLVE_API convsolve_status convsolve_matrix_create(
    int64_t rows, int64_t cols, const double* data, convsolve_matrix** out);
CONVSOLVE_API void convsolve_matrix_free(convsolve_matrix* matrix);
CONVSOLVE_API int64_t convsolve_matrix_rows(const convsolve_matrix* matrix);
CONVSOLVE_API int64_t convsolve_matrix_cols(const convsolve_matrix* matrix);
/* Copies all entries, row-major, into out (rows*cols doubles). */
CONVSOLVE_API convsolve_status convsolve_matrix_data(
    const convsolve_matrix* matrix, double* out);

/* ---- filters ---------------------------------------------------------- */

/* Catalog filter names: "box", "gus", "eda", "edb", "edc", "shp", "emb". */
CONVSOLVE_API int convsolve_filter_is_known(const char* name);
/* Writes the 3x3 kernel of a catalog filter into out (row-major). */
CONVSOLVE_API convsolve_status convsolve_filter_kernel(const char* name,
                                                       double out[9]);

/* ---- forward convolution ---------------------------------------------- */

CONVSOLVE_API convsolve_status convsolve_convolve(const double kernel[9],
                                                  convsolve_bc bc,
                                                  const convsolve_matrix* x,
                                                  convsolve_matrix** b_out);

/* The mn x mn matrix of the vectorized convolution. */
CONVSOLVE_API convsolve_status convsolve_assemble_operator(
    const double kernel[9], convsolve_bc bc, int64_t m, int64_t n,
    convsolve_matrix** op_out);

/* ---- solvability ------------------------------------------------------ */

typedef struct convsolve_verdict {
  convsolve_solvable solvable;
  int has_witness;
  double witness_re;
  double witness_im;
  char condition[160];
  char rule[64];
} convsolve_verdict;

/* Analytic verdict for a catalog filter at size m x n. */
CONVSOLVE_API convsolve_status convsolve_analyze_filter(const char* name,
                                                        convsolve_bc bc,
                                                        int64_t m, int64_t n,
                                                        convsolve_verdict* out);

/* Numeric verdict from the spectrum of the vectorized operator of an
 * arbitrary kernel. */
CONVSOLVE_API convsolve_status convsolve_analyze_numeric(
    const double kernel[9], convsolve_bc bc, int64_t m, int64_t n,
    convsolve_verdict* out);

/* ---- solving ----------------------------------------------------------- */

typedef struct convsolve_report {
  convsolve_verdict verdict;
  double residual;
  char path[24]; /* "product", "sylvester", "stein", "general" */
} convsolve_report;

/* Solves F*X = B. When filter_name is non-NULL it selects a catalog filter
 * (analytic verdict, reduced-form solver); otherwise kernel must point at 9
 * doubles and the numeric/general path is used. On
 * CONVSOLVE_ERROR_NOT_UNIQUELY_SOLVABLE the report (if given) still carries
 * the verdict. */
CONVSOLVE_API convsolve_status convsolve_solve(const char* filter_name,
                                               const double kernel[9],
                                               convsolve_bc bc,
                                               const convsolve_matrix* b,
                                               convsolve_matrix** x_out,
                                               convsolve_report* report_out);

/* ---- spectra ----------------------------------------------------------- */

/* Eigenvalues lambda_k = alpha + 2 sqrt(beta gamma) cos(k pi/(n+1)),
 * k = 1..n, of the tridiagonal Toeplitz matrix (alpha diagonal, beta above,
 * gamma below). re_out/im_out receive n doubles each. */
CONVSOLVE_API convsolve_status convsolve_tridiag_toeplitz_eigs(
    double alpha, double beta, double gamma, int64_t n, double* re_out,
    double* im_out);

/* Eigenvalues of the circulant matrix with the given first row (n doubles);
 * k = n yields the row sum. */
CONVSOLVE_API convsolve_status convsolve_circulant_eigs(const double* first_row,
                                                        int64_t n,
                                                        double* re_out,
                                                        double* im_out);

/* Eigenvalues of the tridiagonal Toeplitz matrix perturbed by alpha+gamma at
 * (1,1) and alpha+beta at (n,n). */
CONVSOLVE_API convsolve_status convsolve_perturbed_tridiag_eigs(
    double alpha, double beta, double gamma, int64_t n, double* re_out,
    double* im_out);

/* All m*n eigenvalues of the vectorized emboss-reflexive operator, computed
 * in extended precision and sorted by (re, im). */
CONVSOLVE_API convsolve_status convsolve_emboss_reflexive_spectrum(
    int64_t m, int64_t n, double* re_out, double* im_out);

/* ---- property suites --------------------------------------------------- */

typedef enum convsolve_suite {
  CONVSOLVE_SUITE_SHIFT_IDENTITIES = 0,
  CONVSOLVE_SUITE_FORM_EQUIVALENCE = 1,
  CONVSOLVE_SUITE_CLOSED_FORM_SPECTRA = 2,
  CONVSOLVE_SUITE_DETERMINANT_SPLIT = 3
} convsolve_suite;

typedef struct convsolve_suite_result {
  int64_t checks;
  int64_t failures;
  char name[32];
  char first_failure[240];
} convsolve_suite_result;

CONVSOLVE_API convsolve_status convsolve_run_suite(
    convsolve_suite suite, uint64_t trials, uint64_t seed, int64_t max_size,
    convsolve_suite_result* out);

#ifdef __cplusplus
}
#endif

#endif /* CONVSOLVE_H */
