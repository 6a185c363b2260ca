#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detlab/inequalities.hpp"
#include "detlab/rng.hpp"

using namespace detlab;

namespace {

const CheckRecord& find_check(const RecursionReport& rep,
                              const std::string& id) {
  for (const auto& c : rep.checks)
    if (c.id == id) return c;
  throw std::logic_error("missing check " + id);
}

void expect_all(const RecursionReport& rep) {
  for (const auto& c : rep.checks) {
    INFO(rep.instance << " " << c.id << " lhs=" << c.lhs << " rhs=" << c.rhs
                      << " " << c.witness);
    CHECK(c.pass);
  }
}

void run_suite(const FiniteField& F, const EntrySet& A, int d) {
  expect_all(check_g_pointwise(F, A, d));
  expect_all(check_tail_sum(F, A, d));
  expect_all(check_lemma1_and_e7(F, A, d));
  expect_all(check_m4_chain(F, A, d));
  for (Elem t = 1; t < F.q(); ++t) {
    expect_all(check_e8(F, A, d, t));
    expect_all(check_composed(F, A, d, t));
  }
}

}  // namespace

TEST_CASE("worked instance, exact sides") {
  const FiniteField f3(3, 1);
  const EntrySet A = make_list_set(f3, {0, 1});

  const RecursionReport e7 = check_lemma1_and_e7(f3, A, 2);
  const CheckRecord& geo = find_check(e7, "e7_geometric");
  CHECK(geo.lhs == "3");  // sum over y != 0 of g^2
  CHECK(geo.rhs == "3");  // (1 + |A|) * sum_{l!=0} N_1^2
  CHECK(geo.pass);

  // (q N_2(A;1) - |A|^4)^2 = 49 <= q^3 |A|^2 ||g||_2^2 = 27*4*4
  const RecursionReport e8 = check_e8(f3, A, 2, 1);
  REQUIRE(e8.checks.size() == 1);
  CHECK(e8.checks[0].lhs == "49");
  CHECK(e8.checks[0].rhs == "432");
  CHECK(e8.checks[0].pass);

  expect_all(check_g_pointwise(f3, A, 2));
  expect_all(check_tail_sum(f3, A, 2));
  expect_all(check_m4_chain(f3, A, 2));
}

TEST_CASE("suite over small sets, exhaustive") {
  for (std::uint32_t p : {3u, 5u}) {
    const FiniteField F(p, 1);
    for (int d = 2; d <= 3; ++d) {
      // every singleton and pair
      for (Elem a = 0; a < p; ++a) {
        run_suite(F, make_list_set(F, {a}), d);
        for (Elem b = Elem(a + 1); b < p; ++b)
          run_suite(F, make_list_set(F, {a, b}), d);
      }
    }
  }
}

TEST_CASE("suite on random larger sets") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 6; ++trial) {
    const std::uint32_t p = trial % 2 == 0 ? 7 : 5;
    const FiniteField F(p, 1);
    const int d = 2 + trial % 2;
    const std::size_t n = 3 + rng.below(2);
    run_suite(F, random_set(F, n, rng.next()), d);
  }
  // extension field
  const FiniteField f9(3, 2);
  run_suite(f9, random_set(f9, 4, 77), 2);
}

TEST_CASE("composed check needs the origin correction for degenerate sets") {
  const FiniteField F(3, 1);
  const EntrySet Z = make_list_set(F, {0});
  // N_1 vanishes off 0, so the recursion term alone is zero while the
  // deviation is not; the g(0)^2 correction carries the whole bound.
  const RecursionReport rep = check_composed(F, Z, 2, 1);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].pass);
  CHECK(rep.checks[0].lhs == "1");   // (3*0 - 1)^2
  CHECK(rep.checks[0].rhs == "27");  // q^3 |A|^2 (0 + g(0)^2)
}

TEST_CASE("epsilon") {
  const FiniteField F(5, 1);
  const DistributionTable full = count_bruteforce(F, make_full_set(F), 2);
  // |5*120 - 625| / 625 = 1/25
  CHECK(epsilon_of(F, full, 5) == Rational{BigInt(1), BigInt(25)});

  // synthetic exactly-flat table: deviation zero
  DistributionTable exact;
  exact.d = 1;
  exact.counts = {1, 1, 1, 1, 1};
  CHECK(epsilon_of(F, exact, 5) == Rational{BigInt(0), BigInt(5)});
}

TEST_CASE("convergence rows") {
  const FiniteField F(7, 1);
  const std::vector<std::size_t> sizes{2, 3};
  const std::vector<std::uint64_t> seeds{1, 2};
  const auto rows = convergence_experiment(F, 2, sizes, seeds);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].set_size == 2);
  CHECK(rows[0].seed == 1);
  CHECK(rows[3].set_size == 3);
  CHECK(rows[3].seed == 2);
  for (const auto& row : rows) {
    const EntrySet A = random_set(F, row.set_size, row.seed);
    const DistributionTable t = count_via_cofactors(F, A, 2);
    CHECK(row.eps == epsilon_of(F, t, row.set_size));
    CHECK(row.s_d == pair_statistic_S(t));
  }

  // full field: epsilon is exactly 1/q^2 for d = 2
  const auto full = convergence_experiment(F, 2, {7}, {1});
  REQUIRE(full.size() == 1);
  CHECK(full[0].eps == Rational{BigInt(1), BigInt(49)});
}

TEST_CASE("argument validation") {
  const FiniteField F(3, 1);
  const EntrySet A = make_list_set(F, {0, 1});
  CHECK_THROWS_AS(check_e8(F, A, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_composed(F, A, 2, 0), std::invalid_argument);
}
