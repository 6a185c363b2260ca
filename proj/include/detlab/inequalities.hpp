#ifndef DETLAB_INEQUALITIES_HPP
#define DETLAB_INEQUALITIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "detlab/detcount.hpp"
#include "detlab/spectral.hpp"

namespace detlab {

struct CheckRecord {
  std::string id;
  std::string lhs, rhs;  // exact integers/rationals as decimal strings
  bool pass = true;
  std::string witness;  // empty unless the check failed
};

struct RecursionReport {
  std::string instance;  // "p=.. r=.. d=.. set=.."
  std::vector<CheckRecord> checks;

  bool all_pass() const;
};

// g(0,..,0,y_i,..,y_d) <= N_{d-1}(A; (-1)^i y_i) for every i and every
// y_i != 0, with g in the alternating sign convention.
RecursionReport check_g_pointwise(const FiniteField& F, const EntrySet& A,
                                  int d, std::uint64_t budget = kDefaultBudget);

// sum over tails of g(0,..,0,y_i,..,y_d) <= |A|^{d-i} N_{d-1}(A;(-1)^i y_i)
RecursionReport check_tail_sum(const FiniteField& F, const EntrySet& A, int d,
                               std::uint64_t budget = kDefaultBudget);

// per-i squared-tail bound and the geometric-sum form of the restricted
// norm bound: sum_{y != 0} g^2(y) <= (sum_{j<d} |A|^j) sum_{l!=0} N_{d-1}^2
RecursionReport check_lemma1_and_e7(const FiniteField& F, const EntrySet& A,
                                    int d,
                                    std::uint64_t budget = kDefaultBudget);

// |N_d(A;t) - |A|^{d^2}/q|^2 <= q^{d-1} |A|^d ||g||_2^2 (full norm), t != 0
RecursionReport check_e8(const FiniteField& F, const EntrySet& A, int d,
                         Elem t, std::uint64_t budget = kDefaultBudget);

// exact chain behind the second-moment recursion:
//  (a) sum_{l!=0} N_d^2 <= sum_t nu^2(t), nu from origin-punctured f, g
//  (b) sum_t nu^2(t) <= dot-product second-moment bound
//  (c) that bound <= |A|^{2d^2}/q + q^{d-1}|A|^{d+1} sum_{y!=0} g^2(y)
RecursionReport check_m4_chain(const FiniteField& F, const EntrySet& A, int d,
                               std::uint64_t budget = kDefaultBudget);

// Composition of the e8 and e7 checks, with the exact correction term for
// the mass that g carries at the origin:
// |N_d - |A|^{d^2}/q|^2 <= q^{d-1}|A|^d ((sum_j |A|^j) sum N_{d-1}^2 + g(0)^2)
RecursionReport check_composed(const FiniteField& F, const EntrySet& A, int d,
                               Elem t, std::uint64_t budget = kDefaultBudget);

struct TrendRow {
  std::size_t set_size = 0;
  std::uint64_t seed = 0;
  Rational eps;   // max over t != 0 of |q N_d(A;t)/|A|^{d^2} - 1|
  BigInt s_d;     // pair statistic
  double elapsed_ms = 0;
};

// one row per (size, seed); random sets drawn from the seeded shuffle
std::vector<TrendRow> convergence_experiment(
    const FiniteField& F, int d, const std::vector<std::size_t>& sizes,
    const std::vector<std::uint64_t>& seeds,
    std::uint64_t budget = kDefaultBudget, int workers = 1);

Rational epsilon_of(const FiniteField& F, const DistributionTable& table,
                    std::size_t set_size);

}  // namespace detlab

#endif
