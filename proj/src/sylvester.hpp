#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dense_matrix.hpp"
#include "filters.hpp"

namespace convsolve {

/// Left-hand side of a generalized Sylvester equation as an ordered sum of
/// terms: LHS(X) = sum_i left_i * X * right_i, acting on m x n matrices.
/// Term order is preserved exactly as constructed and never normalized.
struct SylvesterForm {
  struct Term {
    DenseMatrix left;   // m x m
    DenseMatrix right;  // n x n
  };
  std::vector<Term> terms;
  Index rows = 0;
  Index cols = 0;
};

/// Builds the generalized Sylvester equivalent of convolution by F under the
/// given boundary condition:
///   zero:      A1 X L_n + A2 X + A3 X U_n,           A_i = coefficient
///              tridiagonal with f(1,i) above, f(2,i) on, f(3,i) below the
///              diagonal;
///   periodic:  same with cyclic right multipliers and corner entries
///              f(3,i) at (1,m), f(1,i) at (m,1) added to each A_i;
///   reflexive: right multipliers (U_n^(R))^T and (L_n^(R))^T, with f(3,i)
///              added at (1,1) and f(1,i) at (m,m) of each A_i.
SylvesterForm build_form(const Filter3x3& f, BoundaryCondition bc, Index m,
                         Index n);

/// Evaluates sum_i left_i * X * right_i.
DenseMatrix apply_form(const SylvesterForm& form, const DenseMatrix& x);

/// The mn x mn matrix sum_i kron(right_i^T, left_i); satisfies
/// form_to_operator(form) * vec(X) = vec(apply_form(form, X)).
DenseMatrix form_to_operator(const SylvesterForm& form);

/// Reduced matrix-equation shapes for the catalog filters.
struct ProductForm {
  DenseMatrix left;   // A: m x m
  DenseMatrix right;  // C: n x n
  double scale;       // A X C = scale * B
};

struct SylvesterPairForm {
  DenseMatrix left;   // A X + X C = B
  DenseMatrix right;
};

struct SteinForm {
  DenseMatrix left;  // sigma X - A X C = B
  DenseMatrix right;
  double sigma;
};

struct GeneralForm {
  SylvesterForm form;  // LHS(X) = B
};

struct ReducedForm {
  std::variant<ProductForm, SylvesterPairForm, SteinForm, GeneralForm> shape;
  std::string note;  // which reduced equation this instantiates
};

/// The per-filter reduced form: box/gus/eda give product equations (scales
/// 9, 16, 1), edb/shp Sylvester pairs, edc a Stein equation with sigma = 9,
/// emb a general three-term form. The boundary condition selects the plain,
/// cyclic, or reflexive constituent matrices.
ReducedForm reduce_form(FilterId id, BoundaryCondition bc, Index m, Index n);

/// Expands a reduced form back into an equivalent SylvesterForm with
/// LHS(X) = B (the product scale is folded into the left factor).
SylvesterForm reduced_to_form(const ReducedForm& reduced, Index m, Index n);

}  // namespace convsolve
