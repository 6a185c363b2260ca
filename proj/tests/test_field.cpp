#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detlab/field.hpp"
#include "detlab/rng.hpp"

using namespace detlab;

namespace {

// independent polynomial-reduction oracle for F_9 = F_3[x]/(x^2+1):
// elements a+bx, product reduced by x^2 = -1
Elem f9_mul_oracle(Elem u, Elem v) {
  const int a = u % 3, b = u / 3, c = v % 3, d = v / 3;
  const int lo = ((a * c - b * d) % 3 + 3) % 3;
  const int hi = (a * d + b * c) % 3;
  return Elem(lo + 3 * hi);
}

}  // namespace

TEST_CASE("construction") {
  const FiniteField f3(3, 1);
  CHECK(f3.q() == 3);
  CHECK(f3.modulus().empty());

  const FiniteField f9(3, 2);
  CHECK(f9.q() == 9);
  // x^2+1 is the first irreducible candidate in index order
  CHECK(f9.modulus() == std::vector<std::uint32_t>{1, 0, 1});

  CHECK_THROWS_AS(FiniteField(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(FiniteField(3, 0), std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
  const FiniteField f5(5, 1);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.inv(2) == 3);
  CHECK(f5.sub(0, 2) == 3);
  CHECK_THROWS_AS(f5.inv(0), std::domain_error);
}

TEST_CASE("extension field matches the reduction oracle") {
  const FiniteField f9(3, 2);
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b) CHECK(f9.mul(a, b) == f9_mul_oracle(a, b));
  // x * x = x^2 = -1 = 2
  CHECK(f9.mul(3, 3) == 2);
}

TEST_CASE("trace") {
  const FiniteField f7(7, 1);
  CHECK(f7.trace(4) == 4);

  const FiniteField f9(3, 2);
  CHECK(f9.trace(3) == 0);  // Tr(x) = x + x^3 = 0
  CHECK(f9.trace(1) == 2);
  // additivity
  for (Elem a = 0; a < 9; ++a)
    for (Elem b = 0; b < 9; ++b)
      CHECK(f9.trace(f9.add(a, b)) == f9.add(f9.trace(a), f9.trace(b)));
}

TEST_CASE("character") {
  const FiniteField f7(7, 1);
  CHECK(f7.chi(0) == std::complex<double>(1, 0));
  std::complex<double> sum = 0;
  for (Elem a = 0; a < 7; ++a) sum += f7.chi(a);
  CHECK(std::abs(sum) < 1e-12);

  const FiniteField f9(3, 2);
  CHECK(std::abs(f9.chi(3) - std::complex<double>(1, 0)) < 1e-12);
}

TEST_CASE("character orthogonality") {
  for (auto [p, r] : {std::pair{3u, 1u}, {7u, 1u}, {3u, 2u}, {5u, 2u}}) {
    const FiniteField F(p, r);
    for (Elem c = 0; c < F.q(); ++c) {
      std::complex<double> sum = 0;
      for (Elem a = 0; a < F.q(); ++a) sum += F.chi(F.mul(c, a));
      const double expect = c == 0 ? double(F.q()) : 0.0;
      CHECK(std::abs(sum - expect) < 1e-9 * F.q());
    }
  }
}

TEST_CASE("field axioms on random triples") {
  const FiniteField F(5, 2);
  SplitMix64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const Elem a = Elem(rng.below(F.q()));
    const Elem b = Elem(rng.below(F.q()));
    const Elem c = Elem(rng.below(F.q()));
    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    CHECK(F.mul(a, b) == F.mul(b, a));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    // Frobenius
    CHECK(F.pow(F.add(a, b), F.p()) ==
          F.add(F.pow(a, F.p()), F.pow(b, F.p())));
  }
}

TEST_CASE("inverses, exhaustive for small q") {
  for (auto [p, r] : {std::pair{3u, 1u}, {11u, 1u}, {3u, 2u}, {11u, 2u}}) {
    const FiniteField F(p, r);
    for (Elem a = 1; a < F.q(); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  }
}
