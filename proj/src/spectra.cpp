#include "spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "config.hpp"
#include "conv.hpp"
#include "errors.hpp"
#include "shifts.hpp"

namespace convsolve {

namespace {

constexpr double kPi = std::numbers::pi;

void require_size(const SpectrumRequest& req) {
  if (req.n < 1) throw std::invalid_argument("spectrum size must be >= 1");
}

}  // namespace

std::vector<ComplexScalar> tridiag_toeplitz_eigs(const SpectrumRequest& req) {
  require_size(req);
  const ComplexScalar root = std::sqrt(ComplexScalar(req.beta * req.gamma, 0.0));
  std::vector<ComplexScalar> out;
  out.reserve(static_cast<std::size_t>(req.n));
  for (Index k = 1; k <= req.n; ++k) {
    out.push_back(req.alpha +
                  2.0 * root * std::cos(k * kPi / static_cast<double>(req.n + 1)));
  }
  return out;
}

std::vector<ComplexScalar> circulant_eigs(const std::vector<double>& first_row) {
  const Index n = static_cast<Index>(first_row.size());
  if (n < 1) throw std::invalid_argument("circulant first row must be nonempty");
  std::vector<ComplexScalar> out;
  out.reserve(static_cast<std::size_t>(n));
  for (Index k = 1; k <= n; ++k) {
    ComplexScalar sum = 0.0;
    for (Index l = 0; l < n; ++l) {
      sum += first_row[static_cast<std::size_t>(l)] *
             std::polar(1.0, -2.0 * kPi * static_cast<double>(k) *
                                 static_cast<double>(l) / static_cast<double>(n));
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<ComplexScalar> perturbed_tridiag_eigs(const SpectrumRequest& req) {
  require_size(req);
  const ComplexScalar root = std::sqrt(ComplexScalar(req.beta * req.gamma, 0.0));
  std::vector<ComplexScalar> out;
  out.reserve(static_cast<std::size_t>(req.n));
  for (Index k = 1; k <= req.n - 1; ++k) {
    out.push_back(req.alpha +
                  2.0 * root * std::cos(k * kPi / static_cast<double>(req.n)));
  }
  out.push_back(ComplexScalar(req.alpha + req.beta + req.gamma, 0.0));
  return out;
}

DenseMatrix tridiag_toeplitz_matrix(const SpectrumRequest& req) {
  require_size(req);
  DenseMatrix m(req.n, req.n);
  for (Index i = 0; i < req.n; ++i) {
    m(i, i) = req.alpha;
    if (i + 1 < req.n) {
      m(i, i + 1) = req.beta;
      m(i + 1, i) = req.gamma;
    }
  }
  return m;
}

DenseMatrix circulant_matrix(const std::vector<double>& first_row) {
  const Index n = static_cast<Index>(first_row.size());
  if (n < 1) throw std::invalid_argument("circulant first row must be nonempty");
  DenseMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      m(i, j) = first_row[static_cast<std::size_t>(((j - i) % n + n) % n)];
  return m;
}

DenseMatrix perturbed_tridiag_matrix(const SpectrumRequest& req) {
  DenseMatrix m = tridiag_toeplitz_matrix(req);
  m(0, 0) += req.gamma;
  m(req.n - 1, req.n - 1) += req.beta;
  return m;
}

std::string_view solvability_name(Solvability s) {
  switch (s) {
    case Solvability::No: return "no";
    case Solvability::Yes: return "yes";
    case Solvability::ConjecturedYes: return "conjectured-yes";
  }
  return "?";
}

namespace {

std::string fired_clause(bool m_bad, bool n_bad, const std::string& family) {
  if (m_bad && n_bad) return "m,n in " + family;
  return (m_bad ? "m in " : "n in ") + family;
}

// Minimal-|value| element of a closed-form spectrum.
ComplexScalar min_abs_of(const std::vector<ComplexScalar>& eigs) {
  ComplexScalar best = eigs.front();
  for (const auto& v : eigs) {
    if (std::abs(v) < std::abs(best)) best = v;
  }
  return best;
}

SolvabilityVerdict yes_verdict(std::string condition, std::string rule) {
  return SolvabilityVerdict{Solvability::Yes, std::move(condition), std::nullopt,
                            std::move(rule)};
}

SolvabilityVerdict no_verdict(std::string condition, ComplexScalar witness,
                              std::string rule) {
  return SolvabilityVerdict{Solvability::No, std::move(condition), witness,
                            std::move(rule)};
}

// Eigenvalues of the relevant factor family at size k, per boundary
// condition: the closed-form spectra of the plain, cyclic, and perturbed
// variants of L + d*I + U scaled by `off` on the off-diagonals.
std::vector<ComplexScalar> banded_family_eigs(double d, double off,
                                              BoundaryCondition bc, Index k) {
  if (bc == BoundaryCondition::Zero) {
    return tridiag_toeplitz_eigs({d, off, off, k});
  }
  if (bc == BoundaryCondition::Periodic) {
    std::vector<double> row(static_cast<std::size_t>(k), 0.0);
    row[0] += d;
    row[static_cast<std::size_t>(1 % k)] += off;
    row[static_cast<std::size_t>((k - 1) % k)] += off;
    return circulant_eigs(row);
  }
  return perturbed_tridiag_eigs({d, off, off, k});
}

}  // namespace

SolvabilityVerdict filter_solvability(FilterId id, BoundaryCondition bc,
                                      Index m, Index n) {
  if (m < 2 || n < 2) {
    throw DimensionTooSmall("filter_solvability requires m >= 2 and n >= 2");
  }
  const std::string rule =
      std::string(filter_name(id)) + "/" + std::string(bc_name(bc));

  switch (id) {
    case FilterId::Box: {
      if (bc == BoundaryCondition::Zero) {
        const bool mb = m % 3 == 2, nb = n % 3 == 2;
        if (!mb && !nb) return yes_verdict("m,n not in {3l-1}", rule);
        const Index bad = mb ? m : n;
        return no_verdict(fired_clause(mb, nb, "{3l-1}"),
                          min_abs_of(banded_family_eigs(1.0, 1.0, bc, bad)), rule);
      }
      const bool mb = m % 3 == 0, nb = n % 3 == 0;
      if (!mb && !nb) return yes_verdict("m,n not in {3l}", rule);
      const Index bad = mb ? m : n;
      return no_verdict(fired_clause(mb, nb, "{3l}"),
                        min_abs_of(banded_family_eigs(1.0, 1.0, bc, bad)), rule);
    }
    case FilterId::Gus: {
      if (bc != BoundaryCondition::Periodic) {
        return yes_verdict("solvable for every m,n", rule);
      }
      const bool mb = m % 2 == 0, nb = n % 2 == 0;
      if (!mb && !nb) return yes_verdict("m,n not in {2l}", rule);
      const Index bad = mb ? m : n;
      return no_verdict(fired_clause(mb, nb, "{2l}"),
                        min_abs_of(banded_family_eigs(2.0, 1.0, bc, bad)), rule);
    }
    case FilterId::Eda: {
      if (bc == BoundaryCondition::Zero) {
        const bool mb = m % 2 == 1, nb = n % 2 == 1;
        if (!mb && !nb) return yes_verdict("m,n not in {2l-1}", rule);
        const Index bad = mb ? m : n;
        // S = U - L: spectrum 2i cos(k pi/(k+1)); vanishes at odd sizes.
        return no_verdict(fired_clause(mb, nb, "{2l-1}"),
                          min_abs_of(tridiag_toeplitz_eigs({0.0, 1.0, -1.0, bad})),
                          rule);
      }
      if (bc == BoundaryCondition::Periodic) {
        std::vector<double> row(static_cast<std::size_t>(m), 0.0);
        row[static_cast<std::size_t>(1 % m)] += 1.0;
        row[static_cast<std::size_t>((m - 1) % m)] += -1.0;
        return no_verdict("difference factor singular for every size",
                          min_abs_of(circulant_eigs(row)), rule);
      }
      return no_verdict("difference factor singular for every size",
                        min_abs_of(perturbed_tridiag_eigs({0.0, 1.0, -1.0, m})),
                        rule);
    }
    case FilterId::Edb: {
      if (bc == BoundaryCondition::Zero) {
        return yes_verdict("solvable for every m,n", rule);
      }
      // 2I - U - L (cyclic/reflexive variants) always has eigenvalue 0.
      return no_verdict("common eigenvalue 0",
                        min_abs_of(banded_family_eigs(2.0, -1.0, bc, m)), rule);
    }
    case FilterId::Edc: {
      if (bc == BoundaryCondition::Zero) {
        return yes_verdict("solvable for every m,n", rule);
      }
      const ComplexScalar lm = banded_family_eigs(1.0, 1.0, bc, m).back();
      const ComplexScalar ln = banded_family_eigs(1.0, 1.0, bc, n).back();
      return no_verdict("resonant eigenvalue pair: lambda_m * lambda_n = 9",
                        lm * ln - 9.0, rule);
    }
    case FilterId::Shp:
      return yes_verdict("solvable for every m,n", rule);
    case FilterId::Emb: {
      if (bc != BoundaryCondition::Reflexive) {
        return yes_verdict("identity plus skew-symmetric operator", rule);
      }
      return SolvabilityVerdict{Solvability::ConjecturedYes,
                                "conjectured: all operator eigenvalues 1 + i*a",
                                std::nullopt, rule};
    }
  }
  throw UnknownFilter("unknown filter id");
}

SolvabilityVerdict numeric_solvability(const DenseMatrix& op) {
  // The fast path only has to separate analytic zeros (~1e-15 relative) from
  // genuinely nonzero minima (>= 1e-3 at these sizes); double precision is
  // ample. The extended-precision solver covers the rare operator on which
  // the double-precision iteration stalls.
  std::vector<ComplexScalar> eigs;
  try {
    eigs = eig_dense_fast(op);
  } catch (const ConvergenceFailure&) {
    eigs = eig_dense(op);
  }
  ComplexScalar smallest = min_abs_of(eigs);
  const double threshold = 1e-8 * op.inf_norm();
  const bool ok = std::abs(smallest) > threshold;
  SolvabilityVerdict v;
  v.solvable = ok ? Solvability::Yes : Solvability::No;
  v.condition = "min |lambda| = " + std::to_string(std::abs(smallest)) +
                (ok ? " > " : " <= ") + std::to_string(threshold);
  v.witness = smallest;
  v.rule = "numeric";
  return v;
}

SolvabilityVerdict numeric_solvability(const SylvesterForm& form) {
  return numeric_solvability(form_to_operator(form));
}

}  // namespace convsolve
