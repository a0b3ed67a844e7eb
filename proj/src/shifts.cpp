#include "shifts.hpp"

#include <stdexcept>

namespace convsolve {

DenseMatrix build_shift(ShiftKind kind) {
  const Index n = kind.n;
  if (n < 1) throw std::invalid_argument("shift matrix size must be >= 1");
  DenseMatrix m(n, n);
  switch (kind.family) {
    case ShiftFamily::PlainUpper:
      for (Index i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
      break;
    case ShiftFamily::PlainLower:
      for (Index i = 1; i < n; ++i) m(i, i - 1) = 1.0;
      break;
    case ShiftFamily::CyclicUpper:
      for (Index i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
      m(n - 1, 0) += 1.0;
      break;
    case ShiftFamily::CyclicLower:
      for (Index i = 1; i < n; ++i) m(i, i - 1) = 1.0;
      m(0, n - 1) += 1.0;
      break;
    case ShiftFamily::ReflexiveUpper:
      for (Index i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
      m(n - 1, n - 1) += 1.0;
      break;
    case ShiftFamily::ReflexiveLower:
      for (Index i = 1; i < n; ++i) m(i, i - 1) = 1.0;
      m(0, 0) += 1.0;
      break;
  }
  return m;
}

}  // namespace convsolve
