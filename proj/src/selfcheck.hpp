#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dense_matrix.hpp"
#include "linalg.hpp"

namespace convsolve {

/// Cross-module property suites, runnable on seeded random inputs.
enum class CheckSuite {
  /// The displayed actions and products of the shift, cyclic-shift, and
  /// reflexive matrix families against direct index-mapping oracles.
  ShiftIdentities,
  /// Entrywise equality of forward convolution and the generalized
  /// Sylvester form, for the catalog filters and random kernels.
  FormEquivalence,
  /// Closed-form tridiagonal/circulant/perturbed spectra against the dense
  /// eigensolver.
  ClosedFormSpectra,
  /// The characteristic-polynomial factorization of the perturbed
  /// tridiagonal matrix at random sample points.
  DeterminantSplit,
};

struct SuiteOptions {
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  Index max_size = 7;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// Reproduction string for the first failing check (empty when clean).
  std::string first_failure;
};

SuiteResult run_suite(CheckSuite suite, const SuiteOptions& options);
std::vector<SuiteResult> run_all_suites(const SuiteOptions& options);

/// Deterministic uniform generator (identical streams across platforms).
class CheckRng {
 public:
  explicit CheckRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_bits();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [-1, 1).
  double symmetric();
  Index integer(Index lo, Index hi);
  DenseMatrix matrix(Index rows, Index cols);

 private:
  std::uint64_t state_;
};

/// True when the two complex multisets admit a perfect pairing with every
/// pair at distance <= tol (checked by bipartite matching, not greedily).
bool multiset_match(const std::vector<ComplexScalar>& a,
                    const std::vector<ComplexScalar>& b, double tol);

}  // namespace convsolve
