#pragma once

#include "dense_matrix.hpp"

namespace convsolve {

/// The three families of structural 0/1 matrices, upper and lower variants:
///  - PlainUpper/PlainLower: ones on the super-/subdiagonal.
///  - CyclicUpper/CyclicLower: plain variant plus a corner 1 at (n,1)/(1,n),
///    turning the truncating shift into a rotation.
///  - ReflexiveUpper/ReflexiveLower: plain variant plus a diagonal 1 at
///    (n,n)/(1,1), so the shifted-out row or column is replicated instead
///    of dropped.
enum class ShiftFamily {
  PlainUpper,
  PlainLower,
  CyclicUpper,
  CyclicLower,
  ReflexiveUpper,
  ReflexiveLower,
};

struct ShiftKind {
  ShiftFamily family;
  Index n;
};

/// Materializes the n x n matrix of the requested family.
/// n = 1 degenerates to [0] for the plain variants and [1] for the cyclic
/// and reflexive variants.
DenseMatrix build_shift(ShiftKind kind);

inline DenseMatrix build_shift(ShiftFamily family, Index n) {
  return build_shift(ShiftKind{family, n});
}

}  // namespace convsolve
