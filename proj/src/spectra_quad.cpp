// Extended-precision spectrum of the vectorized emboss-reflexive operator.
//
// The operator is the identity plus a highly non-normal perturbation whose
// eigenvalues cluster defectively: a double-precision general eigensolver
// resolves their real parts only to ~1e-5 at sizes as small as 4x4. The
// computation therefore runs on 113-bit floats, which brings the deviation
// down to ~1e-11 through at least 12x12 grids, and the results are rounded
// to double on output. No structural assumption about the spectrum is made.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <string>

#include "config.hpp"
#include "errors.hpp"
#include "spectra.hpp"

namespace convsolve {

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;
using QuadMatrix = Eigen::Matrix<Quad, Eigen::Dynamic, Eigen::Dynamic>;

QuadMatrix reflexive_lower_tilde(Index k) {
  // I + 2 L^(R)
  QuadMatrix m = QuadMatrix::Identity(k, k);
  m(0, 0) += 2;
  for (Index i = 1; i < k; ++i) m(i, i - 1) += 2;
  return m;
}

QuadMatrix reflexive_upper_tilde(Index k) {
  // I + 2 U^(R)
  QuadMatrix m = QuadMatrix::Identity(k, k);
  m(k - 1, k - 1) += 2;
  for (Index i = 0; i + 1 < k; ++i) m(i, i + 1) += 2;
  return m;
}

}  // namespace

std::vector<ComplexScalar> emboss_reflexive_spectrum(Index m, Index n) {
  if (m < 2 || n < 2) {
    throw DimensionTooSmall("emboss_reflexive_spectrum requires m, n >= 2");
  }
  const Index size = m * n;
  if (size > size_cap()) {
    throw SizeCapExceeded("operator size " + std::to_string(size) +
                          " exceeds cap " + std::to_string(size_cap()));
  }

  const QuadMatrix ltm = reflexive_lower_tilde(m);
  const QuadMatrix utm = reflexive_upper_tilde(m);
  const QuadMatrix ltn = reflexive_lower_tilde(n);
  const QuadMatrix utn = reflexive_upper_tilde(n);

  QuadMatrix op = QuadMatrix::Identity(size, size);
  const Quad half = Quad(1) / 2;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (ltn(i, j) != 0) {
        op.block(i * m, j * m, m, m) += half * ltn(i, j) * ltm;
      }
      if (utn(i, j) != 0) {
        op.block(i * m, j * m, m, m) -= half * utn(i, j) * utm;
      }
    }
  }

  Eigen::EigenSolver<QuadMatrix> solver(op, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("extended-precision eigenvalue iteration failed");
  }

  std::vector<ComplexScalar> out;
  out.reserve(static_cast<std::size_t>(size));
  for (Index i = 0; i < size; ++i) {
    const auto& v = solver.eigenvalues()(i);
    out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
  }
  std::sort(out.begin(), out.end(), [](ComplexScalar a, ComplexScalar b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace convsolve
