#include "sylvester.hpp"

#include <string>
#include <utility>

#include "config.hpp"
#include "errors.hpp"
#include "shifts.hpp"

namespace convsolve {

namespace {

// Tridiagonal Toeplitz with `super` above, `diag` on, `sub` below the
// diagonal.
DenseMatrix tridiag(double super, double diag, double sub, Index n) {
  DenseMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    m(i, i) = diag;
    if (i + 1 < n) {
      m(i, i + 1) = super;
      m(i + 1, i) = sub;
    }
  }
  return m;
}

// Coefficient matrix paired with the i-th right multiplier (i = 0,1,2 for
// the kernel columns): tridiagonal from the column entries, plus the
// boundary-specific correction.
DenseMatrix coefficient_matrix(const Filter3x3& f, Index i,
                               BoundaryCondition bc, Index m) {
  DenseMatrix a = tridiag(f(0, i), f(1, i), f(2, i), m);
  switch (bc) {
    case BoundaryCondition::Zero:
      break;
    case BoundaryCondition::Periodic:
      a(0, m - 1) += f(2, i);
      a(m - 1, 0) += f(0, i);
      break;
    case BoundaryCondition::Reflexive:
      a(0, 0) += f(2, i);
      a(m - 1, m - 1) += f(0, i);
      break;
  }
  return a;
}

void check_size_cap(Index m, Index n) {
  if (m * n > size_cap()) {
    throw SizeCapExceeded("operator size " + std::to_string(m * n) +
                          " exceeds cap " + std::to_string(size_cap()));
  }
}

}  // namespace

SylvesterForm build_form(const Filter3x3& f, BoundaryCondition bc, Index m,
                         Index n) {
  if (m < 2 || n < 2) {
    throw DimensionTooSmall("build_form requires m >= 2 and n >= 2");
  }
  SylvesterForm form;
  form.rows = m;
  form.cols = n;
  DenseMatrix a1 = coefficient_matrix(f, 0, bc, m);
  DenseMatrix a2 = coefficient_matrix(f, 1, bc, m);
  DenseMatrix a3 = coefficient_matrix(f, 2, bc, m);
  switch (bc) {
    case BoundaryCondition::Zero:
      form.terms.push_back({std::move(a1), build_shift(ShiftFamily::PlainLower, n)});
      form.terms.push_back({std::move(a2), DenseMatrix::identity(n)});
      form.terms.push_back({std::move(a3), build_shift(ShiftFamily::PlainUpper, n)});
      break;
    case BoundaryCondition::Periodic:
      form.terms.push_back({std::move(a1), build_shift(ShiftFamily::CyclicLower, n)});
      form.terms.push_back({std::move(a2), DenseMatrix::identity(n)});
      form.terms.push_back({std::move(a3), build_shift(ShiftFamily::CyclicUpper, n)});
      break;
    case BoundaryCondition::Reflexive:
      // The first coefficient matrix pairs with the transposed reflexive
      // *upper* matrix (and the third with the transposed lower one); the
      // right-shift roles swap relative to the zero case.
      form.terms.push_back(
          {std::move(a1), build_shift(ShiftFamily::ReflexiveUpper, n).transpose()});
      form.terms.push_back({std::move(a2), DenseMatrix::identity(n)});
      form.terms.push_back(
          {std::move(a3), build_shift(ShiftFamily::ReflexiveLower, n).transpose()});
      break;
  }
  return form;
}

DenseMatrix apply_form(const SylvesterForm& form, const DenseMatrix& x) {
  if (x.rows() != form.rows || x.cols() != form.cols) {
    throw ShapeMismatch("apply_form operand shape mismatch");
  }
  DenseMatrix out(form.rows, form.cols);
  for (const auto& term : form.terms) {
    out += term.left * x * term.right;
  }
  return out;
}

DenseMatrix form_to_operator(const SylvesterForm& form) {
  check_size_cap(form.rows, form.cols);
  DenseMatrix op(form.rows * form.cols, form.rows * form.cols);
  for (const auto& term : form.terms) {
    op += kron(term.right.transpose(), term.left);
  }
  return op;
}

ReducedForm reduce_form(FilterId id, BoundaryCondition bc, Index m, Index n) {
  if (m < 2 || n < 2) {
    throw DimensionTooSmall("reduce_form requires m >= 2 and n >= 2");
  }
  const ShiftFamily up = bc == BoundaryCondition::Zero ? ShiftFamily::PlainUpper
                         : bc == BoundaryCondition::Periodic
                             ? ShiftFamily::CyclicUpper
                             : ShiftFamily::ReflexiveUpper;
  const ShiftFamily lo = bc == BoundaryCondition::Zero ? ShiftFamily::PlainLower
                         : bc == BoundaryCondition::Periodic
                             ? ShiftFamily::CyclicLower
                             : ShiftFamily::ReflexiveLower;
  const std::string variant =
      bc == BoundaryCondition::Zero ? "" : bc == BoundaryCondition::Periodic ? "^(P)" : "^(R)";
  // sum = L + d*I + U for the requested family, at size k.
  auto banded_sum = [&](double d, double off, Index k) {
    DenseMatrix s = DenseMatrix::identity(k);
    s *= d;
    DenseMatrix u = build_shift(up, k);
    u *= off;
    DenseMatrix l = build_shift(lo, k);
    l *= off;
    s += u;
    s += l;
    return s;
  };

  switch (id) {
    case FilterId::Box: {
      // T_m X T_n = 9 B, T = L + I + U.
      return ReducedForm{ProductForm{banded_sum(1.0, 1.0, m), banded_sum(1.0, 1.0, n), 9.0},
                         "T_m X T_n = 9B with T = L + I + U" + variant};
    }
    case FilterId::Gus: {
      // V_m X V_n = 16 B, V = L + 2I + U.
      return ReducedForm{ProductForm{banded_sum(2.0, 1.0, m), banded_sum(2.0, 1.0, n), 16.0},
                         "V_m X V_n = 16B with V = L + 2I + U" + variant};
    }
    case FilterId::Eda: {
      // S_m X S_n^T = B, S = U - L.
      DenseMatrix sm = build_shift(up, m);
      sm -= build_shift(lo, m);
      DenseMatrix sn = build_shift(up, n);
      sn -= build_shift(lo, n);
      return ReducedForm{ProductForm{std::move(sm), sn.transpose(), 1.0},
                         "S_m X S_n^T = B with S = U - L" + variant};
    }
    case FilterId::Edb: {
      // C_m X + X C_n = B, C = 2I - U - L.
      return ReducedForm{SylvesterPairForm{banded_sum(2.0, -1.0, m), banded_sum(2.0, -1.0, n)},
                         "C_m X + X C_n = B with C = 2I - U - L" + variant};
    }
    case FilterId::Edc: {
      // 9 X - T_m X T_n = B.
      return ReducedForm{SteinForm{banded_sum(1.0, 1.0, m), banded_sum(1.0, 1.0, n), 9.0},
                         "9X - T_m X T_n = B with T = L + I + U" + variant};
    }
    case FilterId::Shp: {
      // C~_m X + X C~_n = B, C~ = (5/2)I - U - L.
      return ReducedForm{SylvesterPairForm{banded_sum(2.5, -1.0, m), banded_sum(2.5, -1.0, n)},
                         "C~_m X + X C~_n = B with C~ = (5/2)I - U - L" + variant};
    }
    case FilterId::Emb: {
      SylvesterForm form;
      form.rows = m;
      form.cols = n;
      form.terms.push_back({DenseMatrix::identity(m), DenseMatrix::identity(n)});
      if (bc == BoundaryCondition::Reflexive) {
        // X + (1/2)(L~_m X L~_n^T - U~_m X U~_n^T) = B with
        // L~ = I + 2L^(R), U~ = I + 2U^(R).
        DenseMatrix ltm = DenseMatrix::identity(m);
        ltm += 2.0 * build_shift(ShiftFamily::ReflexiveLower, m);
        DenseMatrix ltn = DenseMatrix::identity(n);
        ltn += 2.0 * build_shift(ShiftFamily::ReflexiveLower, n);
        DenseMatrix utm = DenseMatrix::identity(m);
        utm += 2.0 * build_shift(ShiftFamily::ReflexiveUpper, m);
        DenseMatrix utn = DenseMatrix::identity(n);
        utn += 2.0 * build_shift(ShiftFamily::ReflexiveUpper, n);
        form.terms.push_back({0.5 * ltm, ltn.transpose()});
        form.terms.push_back({-0.5 * utm, utn.transpose()});
        return ReducedForm{GeneralForm{std::move(form)},
                           "X + (1/2)(L~_m X L~_n^T - U~_m X U~_n^T) = B, "
                           "L~ = I + 2L^(R), U~ = I + 2U^(R)"};
      }
      // X + (1/2)(L~_m X L~_n^T - L~_m^T X L~_n) = B with L~ = I + 2L; the
      // vectorized operator is the identity plus a skew-symmetric matrix.
      DenseMatrix ltm = DenseMatrix::identity(m);
      ltm += 2.0 * build_shift(lo, m);
      DenseMatrix ltn = DenseMatrix::identity(n);
      ltn += 2.0 * build_shift(lo, n);
      form.terms.push_back({0.5 * ltm, ltn.transpose()});
      form.terms.push_back({-0.5 * ltm.transpose(), std::move(ltn)});
      return ReducedForm{GeneralForm{std::move(form)},
                         "X + (1/2)(L~_m X L~_n^T - L~_m^T X L~_n) = B, "
                         "L~ = I + 2L" + variant};
    }
  }
  throw UnknownFilter("unknown filter id");
}

SylvesterForm reduced_to_form(const ReducedForm& reduced, Index m, Index n) {
  SylvesterForm form;
  form.rows = m;
  form.cols = n;
  if (const auto* p = std::get_if<ProductForm>(&reduced.shape)) {
    form.terms.push_back({(1.0 / p->scale) * p->left, p->right});
  } else if (const auto* s = std::get_if<SylvesterPairForm>(&reduced.shape)) {
    form.terms.push_back({s->left, DenseMatrix::identity(n)});
    form.terms.push_back({DenseMatrix::identity(m), s->right});
  } else if (const auto* st = std::get_if<SteinForm>(&reduced.shape)) {
    form.terms.push_back({st->sigma * DenseMatrix::identity(m), DenseMatrix::identity(n)});
    form.terms.push_back({-1.0 * st->left, st->right});
  } else {
    form = std::get<GeneralForm>(reduced.shape).form;
  }
  return form;
}

}  // namespace convsolve
