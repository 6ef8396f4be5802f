#include <doctest.h>

#include <random>

#include "arimat/canonical.hpp"
#include "arimat/oracle.hpp"
#include "fixtures.hpp"

using namespace arimat;
using fixtures::error_kind;

TEST_CASE("same arithmetic matroid") {
  const Representation x(fixtures::example_x());
  CHECK(oracle::same_arithmetic_matroid(x, x));
  CHECK(oracle::same_arithmetic_matroid(x, Representation(fixtures::example_x_prime())));
  CHECK(oracle::same_arithmetic_matroid(Representation(fixtures::x_ab(1, 5)), Representation(fixtures::x_ab(2, 5))));
  CHECK_FALSE(oracle::same_arithmetic_matroid(Representation(fixtures::x_ab(1, 5)), Representation(fixtures::x_ab(1, 6))));
}

TEST_CASE("brute-force equivalence on the two-column family") {
  const Representation x15(fixtures::x_ab(1, 5));
  const auto r = oracle::equivalent_bruteforce(x15, Representation(fixtures::x_ab(2, 5)));
  CHECK(r.same_matroid);
  CHECK_FALSE(r.equivalent);
  CHECK_FALSE(r.witness);

  const auto r4 = oracle::equivalent_bruteforce(x15, Representation(fixtures::x_ab(4, 5)));
  CHECK(r4.equivalent);
  REQUIRE(r4.witness);
  CHECK(r4.witness->apply(x15.matrix()) == fixtures::x_ab(4, 5));
  REQUIRE(r4.witness_sign_pattern);
  CHECK((*r4.witness_sign_pattern)[0] * (*r4.witness_sign_pattern)[1] == -1);

  // Classes {1,4} and {2,3} mod 5.
  for (long a = 1; a < 5; ++a)
    for (long b = 1; b < 5; ++b) {
      const bool expected = a == b || a + b == 5;
      CHECK(oracle::equivalent_bruteforce(Representation(fixtures::x_ab(a, 5)), Representation(fixtures::x_ab(b, 5)))
                .equivalent == expected);
    }

  CHECK(error_kind([] {
          oracle::equivalent_bruteforce(Representation(IntMatrix(1, 20)), Representation(IntMatrix(1, 20)));
        }) == ErrorKind::TooLarge);
  CHECK(error_kind([&] { oracle::equivalent_bruteforce(x15, Representation(fixtures::example_x())); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("brute force collects every sign pattern") {
  const Representation x(IntMatrix::identity(2));
  const auto r = oracle::equivalent_bruteforce(x, x, 16, true);
  // Any D works, with T = D.
  CHECK(r.all_sign_patterns.size() == 4);
}

TEST_CASE("gcd of minors") {
  const Representation x(fixtures::example_x());
  CHECK(oracle::multiplicity_gcd_minors(x, {}) == 1);
  CHECK(oracle::multiplicity_gcd_minors(x, {1, 4}) == 2);
  CHECK(oracle::multiplicity_gcd_minors(x, {3, 4, 5}) == 11);
  CHECK(oracle::multiplicity_gcd_minors(x, {0, 1, 2}) == 6);
  CHECK(error_kind([&] { oracle::multiplicity_gcd_minors(x, {7}); }) == ErrorKind::BadIndex);
  CHECK(oracle::cofactor_det(IntMatrix{{1, 2}, {3, 4}}) == -2);
}

TEST_CASE("uniqueness harness") {
  const auto r = oracle::verify_uniqueness_theorem(Representation(fixtures::example_x()), 100, 0);
  CHECK(r.trials == 100);
  CHECK(r.failures.empty());
  CHECK(r.canonical == fixtures::example_x_prime());

  const auto fn = oracle::verify_uniqueness_theorem(Representation(fixtures::six_cycle_x()), 100, 7);
  CHECK(fn.passed() == 100);

  const auto none = oracle::verify_uniqueness_theorem(Representation(fixtures::example_x()), 0, 0);
  CHECK(none.trials == 0);
  CHECK(none.failures.empty());

  CHECK(error_kind([] { oracle::verify_uniqueness_theorem(Representation(fixtures::x_ab(2, 5)), 1, 0); }) ==
        ErrorKind::NotWeaklyMultiplicative);
}

TEST_CASE("random transforms are reproducible") {
  const TransformWitness a = oracle::random_transform(3, 5, 99);
  const TransformWitness b = oracle::random_transform(3, 5, 99);
  CHECK(a.left == b.left);
  CHECK(a.column_signs == b.column_signs);
  CHECK(abs(det(a.left.matrix())) == 1);
}

TEST_CASE("canonical equivalence matches brute force") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = fixtures::random_weakly_multiplicative(rng, 3, 6, 3);
    const Representation x(m);
    IntMatrix other = m;
    // Perturb one entry half of the time.
    if (trial % 2) other(rng() % m.rows(), rng() % m.cols()) += 1;
    const IntMatrix y = oracle::random_transform(m.rows(), m.cols(), rng()).apply(other);
    const Representation ry(y);
    const auto fast = equivalent(x, ry);
    const auto slow = oracle::equivalent_bruteforce(x, ry);
    CHECK(fast.has_value() == slow.equivalent);
    if (slow.equivalent) CHECK(slow.same_matroid);
    if (fast) CHECK(fast->apply(m) == y);
  }
}
