#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

#include "shifts.hpp"

using namespace convsolve;
using testsupport::max_diff;

TEST_CASE("displayed 0/1 patterns at n=3") {
  CHECK(max_diff(build_shift(ShiftFamily::PlainUpper, 3),
                 DenseMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}})) == 0.0);
  CHECK(max_diff(build_shift(ShiftFamily::PlainLower, 3),
                 DenseMatrix::from_rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})) == 0.0);
  CHECK(max_diff(build_shift(ShiftFamily::CyclicUpper, 3),
                 DenseMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})) == 0.0);
  CHECK(max_diff(build_shift(ShiftFamily::CyclicLower, 3),
                 DenseMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})) == 0.0);
  CHECK(max_diff(build_shift(ShiftFamily::ReflexiveUpper, 3),
                 DenseMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 1}})) == 0.0);
  CHECK(max_diff(build_shift(ShiftFamily::ReflexiveLower, 3),
                 DenseMatrix::from_rows({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}})) == 0.0);
}

TEST_CASE("n=1 degenerate cases") {
  CHECK(build_shift(ShiftFamily::PlainUpper, 1)(0, 0) == 0.0);
  CHECK(build_shift(ShiftFamily::PlainLower, 1)(0, 0) == 0.0);
  CHECK(build_shift(ShiftFamily::CyclicUpper, 1)(0, 0) == 1.0);
  CHECK(build_shift(ShiftFamily::CyclicLower, 1)(0, 0) == 1.0);
  CHECK(build_shift(ShiftFamily::ReflexiveUpper, 1)(0, 0) == 1.0);
  CHECK(build_shift(ShiftFamily::ReflexiveLower, 1)(0, 0) == 1.0);
}

TEST_CASE("row actions on a fixed 3x4 sample") {
  const DenseMatrix x = DenseMatrix::from_rows(
      {{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}});

  // Upper shift drops the first row and appends zeros; lower shift prepends
  // zeros and drops the last row.
  CHECK(max_diff(build_shift(ShiftFamily::PlainUpper, 3) * x,
                 DenseMatrix::from_rows(
                     {{5, 6, 7, 8}, {9, 10, 11, 12}, {0, 0, 0, 0}})) == 0.0);
  CHECK(max_diff(build_shift(ShiftFamily::PlainLower, 3) * x,
                 DenseMatrix::from_rows(
                     {{0, 0, 0, 0}, {1, 2, 3, 4}, {5, 6, 7, 8}})) == 0.0);

  // Column actions.
  CHECK(max_diff(x * build_shift(ShiftFamily::PlainLower, 4),
                 DenseMatrix::from_rows(
                     {{2, 3, 4, 0}, {6, 7, 8, 0}, {10, 11, 12, 0}})) == 0.0);
  CHECK(max_diff(x * build_shift(ShiftFamily::PlainUpper, 4),
                 DenseMatrix::from_rows(
                     {{0, 1, 2, 3}, {0, 5, 6, 7}, {0, 9, 10, 11}})) == 0.0);

  // Cyclic actions rotate instead of truncating.
  CHECK(max_diff(build_shift(ShiftFamily::CyclicUpper, 3) * x,
                 DenseMatrix::from_rows(
                     {{5, 6, 7, 8}, {9, 10, 11, 12}, {1, 2, 3, 4}})) == 0.0);
  CHECK(max_diff(build_shift(ShiftFamily::CyclicLower, 3) * x,
                 DenseMatrix::from_rows(
                     {{9, 10, 11, 12}, {1, 2, 3, 4}, {5, 6, 7, 8}})) == 0.0);

  // Reflexive actions replicate the border row/column.
  CHECK(max_diff(build_shift(ShiftFamily::ReflexiveUpper, 3) * x,
                 DenseMatrix::from_rows(
                     {{5, 6, 7, 8}, {9, 10, 11, 12}, {9, 10, 11, 12}})) == 0.0);
  CHECK(max_diff(build_shift(ShiftFamily::ReflexiveLower, 3) * x,
                 DenseMatrix::from_rows(
                     {{1, 2, 3, 4}, {1, 2, 3, 4}, {5, 6, 7, 8}})) == 0.0);
  CHECK(max_diff(x * build_shift(ShiftFamily::ReflexiveUpper, 4).transpose(),
                 DenseMatrix::from_rows(
                     {{2, 3, 4, 4}, {6, 7, 8, 8}, {10, 11, 12, 12}})) == 0.0);
  CHECK(max_diff(x * build_shift(ShiftFamily::ReflexiveLower, 4).transpose(),
                 DenseMatrix::from_rows(
                     {{1, 1, 2, 3}, {5, 5, 6, 7}, {9, 9, 10, 11}})) == 0.0);
}

TEST_CASE("two-sided products on a fixed sample") {
  const DenseMatrix x = DenseMatrix::from_rows(
      {{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}});
  const DenseMatrix um = build_shift(ShiftFamily::PlainUpper, 3);
  const DenseMatrix lm = build_shift(ShiftFamily::PlainLower, 3);
  const DenseMatrix un = build_shift(ShiftFamily::PlainUpper, 4);
  const DenseMatrix ln = build_shift(ShiftFamily::PlainLower, 4);

  CHECK(max_diff(um * x * ln, DenseMatrix::from_rows({{6, 7, 8, 0},
                                                      {10, 11, 12, 0},
                                                      {0, 0, 0, 0}})) == 0.0);
  CHECK(max_diff(um * x * un, DenseMatrix::from_rows({{0, 5, 6, 7},
                                                      {0, 9, 10, 11},
                                                      {0, 0, 0, 0}})) == 0.0);
  CHECK(max_diff(lm * x * ln, DenseMatrix::from_rows({{0, 0, 0, 0},
                                                      {2, 3, 4, 0},
                                                      {6, 7, 8, 0}})) == 0.0);
  CHECK(max_diff(lm * x * un, DenseMatrix::from_rows({{0, 0, 0, 0},
                                                      {0, 1, 2, 3},
                                                      {0, 5, 6, 7}})) == 0.0);

  const DenseMatrix upm = build_shift(ShiftFamily::CyclicUpper, 3);
  const DenseMatrix lpn = build_shift(ShiftFamily::CyclicLower, 4);
  CHECK(max_diff(upm * x * lpn, DenseMatrix::from_rows({{6, 7, 8, 5},
                                                        {10, 11, 12, 9},
                                                        {2, 3, 4, 1}})) == 0.0);

  const DenseMatrix urm = build_shift(ShiftFamily::ReflexiveUpper, 3);
  const DenseMatrix lrn = build_shift(ShiftFamily::ReflexiveLower, 4);
  CHECK(max_diff(urm * x * lrn.transpose(),
                 DenseMatrix::from_rows({{5, 5, 6, 7},
                                         {9, 9, 10, 11},
                                         {9, 9, 10, 11}})) == 0.0);
}

TEST_CASE("structural identities") {
  for (Index n = 1; n <= 8; ++n) {
    CHECK(max_diff(build_shift(ShiftFamily::CyclicUpper, n) *
                       build_shift(ShiftFamily::CyclicLower, n),
                   DenseMatrix::identity(n)) == 0.0);
    CHECK(max_diff(build_shift(ShiftFamily::PlainUpper, n),
                   build_shift(ShiftFamily::PlainLower, n).transpose()) == 0.0);
  }
}

TEST_CASE("bulk action identities hold on seeded random inputs") {
  const SuiteResult result =
      run_suite(CheckSuite::ShiftIdentities, SuiteOptions{40, 2024, 7});
  CHECK(result.checks > 0);
  CHECK(result.failures == 0);
  INFO(result.first_failure);
}
