#pragma once

#include <doctest.h>

#include <complex>
#include <vector>

#include "dense_matrix.hpp"
#include "linalg.hpp"
#include "selfcheck.hpp"

namespace testsupport {

using convsolve::ComplexScalar;
using convsolve::DenseMatrix;
using convsolve::Index;

inline double max_diff(const DenseMatrix& a, const DenseMatrix& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  return (a - b).max_abs();
}

inline DenseMatrix random_matrix(convsolve::CheckRng& rng, Index rows, Index cols) {
  return rng.matrix(rows, cols);
}

inline std::vector<ComplexScalar> to_complex(const std::vector<double>& values) {
  std::vector<ComplexScalar> out;
  out.reserve(values.size());
  for (double v : values) out.emplace_back(v, 0.0);
  return out;
}

}  // namespace testsupport
