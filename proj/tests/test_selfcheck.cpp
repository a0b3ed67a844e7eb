#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace convsolve;

TEST_CASE("multiset matcher accepts permuted values within tolerance") {
  const std::vector<ComplexScalar> a = {{1, 0}, {0, 1}, {0, -1}};
  const std::vector<ComplexScalar> b = {{0, -1}, {1, 1e-10}, {0, 1}};
  CHECK(multiset_match(a, b, 1e-9));
  CHECK(multiset_match(a, a, 0.0));
}

TEST_CASE("multiset matcher rejects unmatched multiplicities") {
  const std::vector<ComplexScalar> a = {{1, 0}, {1, 0}, {2, 0}};
  const std::vector<ComplexScalar> b = {{1, 0}, {2, 0}, {2, 0}};
  CHECK(!multiset_match(a, b, 1e-9));
  CHECK(!multiset_match(a, {{1, 0}, {2, 0}}, 1e-9));
}

TEST_CASE("multiset matcher survives greedy-adversarial pairings") {
  // A greedy nearest-neighbour pairing fails here; the matching search
  // must backtrack: a2 only fits b1, while a1 fits both.
  const std::vector<ComplexScalar> a = {{0.0, 0}, {0.4, 0}};
  const std::vector<ComplexScalar> b = {{0.5, 0}, {-0.4, 0}};
  CHECK(multiset_match(a, b, 0.5));
}

TEST_CASE("rng streams are deterministic") {
  CheckRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_bits() == b.next_bits());
  CheckRng c(43);
  bool differs = false;
  CheckRng a2(42);
  for (int i = 0; i < 100; ++i) differs = differs || (a2.next_bits() != c.next_bits());
  CHECK(differs);
}

TEST_CASE("all suites pass on seeded inputs") {
  const SuiteOptions options{25, 7, 6};
  for (const auto& result : run_all_suites(options)) {
    INFO(result.name << ": " << result.first_failure);
    CHECK(result.checks > 0);
    CHECK(result.failures == 0);
  }
}

TEST_CASE("suite results are reproducible for a fixed seed") {
  const SuiteOptions options{10, 123, 5};
  const auto first = run_suite(CheckSuite::FormEquivalence, options);
  const auto second = run_suite(CheckSuite::FormEquivalence, options);
  CHECK(first.checks == second.checks);
  CHECK(first.failures == second.failures);
  CHECK(first.first_failure == second.first_failure);
}

TEST_CASE("smallest legal sizes are exercised") {
  const SuiteOptions options{5, 99, 2};
  const auto result = run_suite(CheckSuite::FormEquivalence, options);
  CHECK(result.checks > 0);
  CHECK(result.failures == 0);
}
