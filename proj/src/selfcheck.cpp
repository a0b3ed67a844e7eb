#include "selfcheck.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <optional>

#include "conv.hpp"
#include "filters.hpp"
#include "shifts.hpp"
#include "spectra.hpp"
#include "sylvester.hpp"

namespace convsolve {

std::uint64_t CheckRng::next_bits() {
  // splitmix64; chosen for reproducibility across standard libraries.
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double CheckRng::uniform() {
  return static_cast<double>(next_bits() >> 11) * 0x1.0p-53;
}

double CheckRng::symmetric() { return 2.0 * uniform() - 1.0; }

Index CheckRng::integer(Index lo, Index hi) {
  return lo + static_cast<Index>(next_bits() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
}

DenseMatrix CheckRng::matrix(Index rows, Index cols) {
  DenseMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = symmetric();
  return m;
}

bool multiset_match(const std::vector<ComplexScalar>& a,
                    const std::vector<ComplexScalar>& b, double tol) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<int> match_of_b(n, -1);
  std::vector<char> visited(n, 0);
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (visited[j] || std::abs(a[i] - b[j]) > tol) continue;
      visited[j] = 1;
      if (match_of_b[j] < 0 || augment(static_cast<std::size_t>(match_of_b[j]))) {
        match_of_b[j] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment(i)) return false;
  }
  return true;
}

namespace {

std::string format(const char* fmt, ...) {
  char buf[240];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

void record(SuiteResult& result, bool ok, const std::string& repro) {
  ++result.checks;
  if (!ok) {
    ++result.failures;
    if (result.first_failure.empty()) result.first_failure = repro;
  }
}

// Index-mapping rule for one displayed product: returns the source entry of
// X feeding output cell (i, j), or nullopt for a zeroed cell.
using IndexRule = std::function<std::optional<std::pair<Index, Index>>(
    Index i, Index j, Index m, Index n)>;

DenseMatrix expected_from_rule(const DenseMatrix& x, const IndexRule& rule) {
  const Index m = x.rows();
  const Index n = x.cols();
  DenseMatrix out(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      if (auto src = rule(i, j, m, n)) out(i, j) = x(src->first, src->second);
  return out;
}

SuiteResult check_shift_identities(const SuiteOptions& options) {
  SuiteResult result;
  result.name = "shift-identities";
  CheckRng rng(options.seed);

  struct Display {
    const char* name;
    // left family (or nullopt), right family with transpose flag (or nullopt)
    std::optional<ShiftFamily> left;
    std::optional<ShiftFamily> right;
    bool transpose_right;
    IndexRule rule;
  };

  auto up = [](Index i, Index m) { return i + 1 < m ? std::optional(i + 1) : std::nullopt; };
  auto dn = [](Index i, Index) { return i >= 1 ? std::optional(i - 1) : std::nullopt; };
  auto upc = [](Index i, Index m) { return std::optional((i + 1) % m); };
  auto dnc = [](Index i, Index m) { return std::optional((i - 1 + m) % m); };
  auto upr = [](Index i, Index m) { return std::optional(std::min(i + 1, m - 1)); };
  auto dnr = [](Index i, Index) { return std::optional(std::max<Index>(i - 1, 0)); };
  auto keep = [](Index i, Index) { return std::optional(i); };

  using RowMap = std::function<std::optional<Index>(Index, Index)>;
  auto rule_of = [](RowMap rmap, RowMap cmap) {
    return [rmap, cmap](Index i, Index j, Index m,
                        Index n) -> std::optional<std::pair<Index, Index>> {
      auto r = rmap(i, m);
      auto c = cmap(j, n);
      if (!r || !c) return std::nullopt;
      return std::make_pair(*r, *c);
    };
  };

  const std::vector<Display> displays = {
      {"U_m X", ShiftFamily::PlainUpper, std::nullopt, false, rule_of(up, keep)},
      {"L_m X", ShiftFamily::PlainLower, std::nullopt, false, rule_of(dn, keep)},
      {"X L_n", std::nullopt, ShiftFamily::PlainLower, false, rule_of(keep, up)},
      {"X U_n", std::nullopt, ShiftFamily::PlainUpper, false, rule_of(keep, dn)},
      {"U_m X L_n", ShiftFamily::PlainUpper, ShiftFamily::PlainLower, false,
       rule_of(up, up)},
      {"U_m X U_n", ShiftFamily::PlainUpper, ShiftFamily::PlainUpper, false,
       rule_of(up, dn)},
      {"L_m X L_n", ShiftFamily::PlainLower, ShiftFamily::PlainLower, false,
       rule_of(dn, up)},
      {"L_m X U_n", ShiftFamily::PlainLower, ShiftFamily::PlainUpper, false,
       rule_of(dn, dn)},
      {"U_m^(P) X", ShiftFamily::CyclicUpper, std::nullopt, false, rule_of(upc, keep)},
      {"L_m^(P) X", ShiftFamily::CyclicLower, std::nullopt, false, rule_of(dnc, keep)},
      {"X L_n^(P)", std::nullopt, ShiftFamily::CyclicLower, false, rule_of(keep, upc)},
      {"X U_n^(P)", std::nullopt, ShiftFamily::CyclicUpper, false, rule_of(keep, dnc)},
      {"U_m^(P) X L_n^(P)", ShiftFamily::CyclicUpper, ShiftFamily::CyclicLower,
       false, rule_of(upc, upc)},
      {"U_m^(P) X U_n^(P)", ShiftFamily::CyclicUpper, ShiftFamily::CyclicUpper,
       false, rule_of(upc, dnc)},
      {"L_m^(P) X L_n^(P)", ShiftFamily::CyclicLower, ShiftFamily::CyclicLower,
       false, rule_of(dnc, upc)},
      {"L_m^(P) X U_n^(P)", ShiftFamily::CyclicLower, ShiftFamily::CyclicUpper,
       false, rule_of(dnc, dnc)},
      {"U_m^(R) X", ShiftFamily::ReflexiveUpper, std::nullopt, false,
       rule_of(upr, keep)},
      {"L_m^(R) X", ShiftFamily::ReflexiveLower, std::nullopt, false,
       rule_of(dnr, keep)},
      {"X (U_n^(R))^T", std::nullopt, ShiftFamily::ReflexiveUpper, true,
       rule_of(keep, upr)},
      {"X (L_n^(R))^T", std::nullopt, ShiftFamily::ReflexiveLower, true,
       rule_of(keep, dnr)},
      {"U_m^(R) X (U_n^(R))^T", ShiftFamily::ReflexiveUpper,
       ShiftFamily::ReflexiveUpper, true, rule_of(upr, upr)},
      {"U_m^(R) X (L_n^(R))^T", ShiftFamily::ReflexiveUpper,
       ShiftFamily::ReflexiveLower, true, rule_of(upr, dnr)},
      {"L_m^(R) X (U_n^(R))^T", ShiftFamily::ReflexiveLower,
       ShiftFamily::ReflexiveUpper, true, rule_of(dnr, upr)},
      {"L_m^(R) X (L_n^(R))^T", ShiftFamily::ReflexiveLower,
       ShiftFamily::ReflexiveLower, true, rule_of(dnr, dnr)},
  };

  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const Index m = rng.integer(2, std::max<Index>(2, options.max_size));
    const Index n = rng.integer(2, std::max<Index>(2, options.max_size));
    const DenseMatrix x = rng.matrix(m, n);
    for (const auto& d : displays) {
      DenseMatrix actual = x;
      if (d.left) actual = build_shift(*d.left, m) * actual;
      if (d.right) {
        DenseMatrix r = build_shift(*d.right, n);
        if (d.transpose_right) r = r.transpose();
        actual = actual * r;
      }
      const double err = (actual - expected_from_rule(x, d.rule)).max_abs();
      record(result, err == 0.0,
             format("shift-identities: %s m=%lld n=%lld err=%g seed=%llu trial=%llu",
                    d.name, static_cast<long long>(m), static_cast<long long>(n),
                    err, static_cast<unsigned long long>(options.seed),
                    static_cast<unsigned long long>(t)));
    }
    // Structural identities.
    const DenseMatrix prod = build_shift(ShiftFamily::CyclicUpper, n) *
                             build_shift(ShiftFamily::CyclicLower, n);
    record(result, (prod - DenseMatrix::identity(n)).max_abs() == 0.0,
           format("shift-identities: cyclic up*down != I at n=%lld",
                  static_cast<long long>(n)));
    record(result,
           (build_shift(ShiftFamily::PlainUpper, m) -
            build_shift(ShiftFamily::PlainLower, m).transpose())
                   .max_abs() == 0.0,
           format("shift-identities: upper != lower^T at m=%lld",
                  static_cast<long long>(m)));
  }
  return result;
}

SuiteResult check_form_equivalence(const SuiteOptions& options) {
  SuiteResult result;
  result.name = "form-equivalence";
  CheckRng rng(options.seed);
  const BoundaryCondition bcs[] = {BoundaryCondition::Zero,
                                   BoundaryCondition::Periodic,
                                   BoundaryCondition::Reflexive};
  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const Index m = rng.integer(2, std::max<Index>(2, options.max_size));
    const Index n = rng.integer(2, std::max<Index>(2, options.max_size));
    const DenseMatrix x = rng.matrix(m, n);

    auto run_one = [&](const Filter3x3& f, const char* label,
                       BoundaryCondition bc) {
      const DenseMatrix direct = convolve(f, x, bc);
      const DenseMatrix via_form = apply_form(build_form(f, bc, m, n), x);
      const double err = (direct - via_form).max_abs();
      const double tol = 1e-12 * (1.0 + x.max_abs());
      record(result, err <= tol,
             format("form-equivalence: filter=%s bc=%s m=%lld n=%lld err=%g "
                    "seed=%llu trial=%llu",
                    label, std::string(bc_name(bc)).c_str(),
                    static_cast<long long>(m), static_cast<long long>(n), err,
                    static_cast<unsigned long long>(options.seed),
                    static_cast<unsigned long long>(t)));
    };

    for (BoundaryCondition bc : bcs) {
      for (FilterId id : kFilterCatalog) {
        run_one(filter_kernel(id), std::string(filter_name(id)).c_str(), bc);
      }
      Filter3x3 random_kernel;
      for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) random_kernel(i, j) = rng.symmetric();
      run_one(random_kernel, "random", bc);
    }
  }
  return result;
}

// Coefficient triples of the reduced matrices: (diagonal, super, sub).
struct Triple {
  const char* label;
  double alpha, beta, gamma;
};

const Triple kTriples[] = {
    {"L+I+U", 1.0, 1.0, 1.0},        {"L+2I+U", 2.0, 1.0, 1.0},
    {"U-L", 0.0, 1.0, -1.0},         {"2I-U-L", 2.0, -1.0, -1.0},
    {"(5/2)I-U-L", 2.5, -1.0, -1.0}, {"I+2L", 1.0, 0.0, 2.0},
    {"I+2U", 1.0, 2.0, 0.0},
};

SuiteResult check_closed_form_spectra(const SuiteOptions& options) {
  SuiteResult result;
  result.name = "closed-form-spectra";
  const Index max_n = std::max<Index>(16, options.max_size);
  for (const Triple& c : kTriples) {
    const bool bidiagonal = c.beta * c.gamma == 0.0;
    for (Index n = 1; n <= max_n; ++n) {
      const SpectrumRequest req{c.alpha, c.beta, c.gamma, n};
      if (bidiagonal) {
        // Triangular matrices: the exact spectrum is the diagonal. A general
        // eigensolver cannot resolve the size-n Jordan block here (its
        // eigenvalue perturbation scales as eps^(1/n)), so compare against
        // the diagonal directly.
        std::vector<ComplexScalar> plain_exact(
            static_cast<std::size_t>(n), ComplexScalar(c.alpha, 0.0));
        record(result,
               multiset_match(tridiag_toeplitz_eigs(req), plain_exact, 1e-12),
               format("closed-form-spectra: tridiagonal %s n=%lld", c.label,
                      static_cast<long long>(n)));
        std::vector<ComplexScalar> perturbed_exact(
            static_cast<std::size_t>(n - 1), ComplexScalar(c.alpha, 0.0));
        perturbed_exact.emplace_back(c.alpha + c.beta + c.gamma, 0.0);
        record(result,
               multiset_match(perturbed_tridiag_eigs(req), perturbed_exact,
                              1e-12),
               format("closed-form-spectra: perturbed %s n=%lld", c.label,
                      static_cast<long long>(n)));
      } else {
        record(result,
               multiset_match(tridiag_toeplitz_eigs(req),
                              eig_dense(tridiag_toeplitz_matrix(req)), 1e-8),
               format("closed-form-spectra: tridiagonal %s n=%lld", c.label,
                      static_cast<long long>(n)));
        record(result,
               multiset_match(perturbed_tridiag_eigs(req),
                              eig_dense(perturbed_tridiag_matrix(req)), 1e-8),
               format("closed-form-spectra: perturbed %s n=%lld", c.label,
                      static_cast<long long>(n)));
      }
      // Circulant matrices are normal, so the eigensolver comparison is well
      // conditioned for every triple.
      std::vector<double> row(static_cast<std::size_t>(n), 0.0);
      row[0] += c.alpha;
      row[static_cast<std::size_t>(1 % n)] += c.beta;
      row[static_cast<std::size_t>((n - 1) % n)] += c.gamma;
      record(result,
             multiset_match(circulant_eigs(row), eig_dense(circulant_matrix(row)),
                            1e-8),
             format("closed-form-spectra: circulant %s n=%lld", c.label,
                    static_cast<long long>(n)));
    }
  }
  return result;
}

std::complex<double> char_poly_det(const DenseMatrix& a,
                                   std::complex<double> lambda) {
  const Index n = a.rows();
  Eigen::MatrixXcd z(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) z(i, j) = a(i, j);
  z -= lambda * Eigen::MatrixXcd::Identity(n, n);
  return z.determinant();
}

SuiteResult check_determinant_split(const SuiteOptions& options) {
  SuiteResult result;
  result.name = "determinant-split";
  CheckRng rng(options.seed);
  const Index max_n = std::max<Index>(8, options.max_size);
  for (const Triple& c : kTriples) {
    for (Index n = 2; n <= max_n; ++n) {
      const DenseMatrix perturbed =
          perturbed_tridiag_matrix({c.alpha, c.beta, c.gamma, n});
      const DenseMatrix plain =
          tridiag_toeplitz_matrix({c.alpha, c.beta, c.gamma, n - 1});
      for (int s = 0; s < 20; ++s) {
        const std::complex<double> lambda(4.0 * rng.symmetric(),
                                          4.0 * rng.symmetric());
        const std::complex<double> lhs = char_poly_det(perturbed, lambda);
        const std::complex<double> rhs =
            (c.alpha + c.beta + c.gamma - lambda) *
            (n >= 2 ? char_poly_det(plain, lambda) : 1.0);
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        record(result, std::abs(lhs - rhs) <= 1e-8 * scale,
               format("determinant-split: %s n=%lld lambda=(%g,%g) rel=%g "
                      "seed=%llu",
                      c.label, static_cast<long long>(n), lambda.real(),
                      lambda.imag(), std::abs(lhs - rhs) / scale,
                      static_cast<unsigned long long>(options.seed)));
      }
    }
  }
  return result;
}

}  // namespace

SuiteResult run_suite(CheckSuite suite, const SuiteOptions& options) {
  switch (suite) {
    case CheckSuite::ShiftIdentities: return check_shift_identities(options);
    case CheckSuite::FormEquivalence: return check_form_equivalence(options);
    case CheckSuite::ClosedFormSpectra: return check_closed_form_spectra(options);
    case CheckSuite::DeterminantSplit: return check_determinant_split(options);
  }
  throw std::invalid_argument("unknown check suite");
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& options) {
  return {run_suite(CheckSuite::ShiftIdentities, options),
          run_suite(CheckSuite::FormEquivalence, options),
          run_suite(CheckSuite::ClosedFormSpectra, options),
          run_suite(CheckSuite::DeterminantSplit, options)};
}

}  // namespace convsolve
