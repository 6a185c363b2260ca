#ifndef DETLAB_DETCOUNT_HPP
#define DETLAB_DETCOUNT_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "detlab/bigint.hpp"
#include "detlab/entryset.hpp"
#include "detlab/matrix.hpp"

namespace detlab {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

/// Exact counts t -> N_d(A;t), indexed by the element encoding of t.
struct DistributionTable {
  int d = 0;
  std::string set_descriptor;
  std::vector<std::uint64_t> counts;  // size q

  BigInt total_mass() const;
};

/// Integer-valued function on F_q^d. Dense array when q^d <= 2^24,
/// sparse map otherwise; the two are logically identical.
class DensityFunction {
public:
  DensityFunction(std::uint32_t q, int d);

  std::uint32_t q() const { return q_; }
  int dim() const { return d_; }
  std::uint64_t domain_size() const { return size_; }

  std::uint64_t at(std::uint64_t idx) const;
  void add(std::uint64_t idx, std::uint64_t v);
  void clear_at(std::uint64_t idx);

  // (index, value) pairs with value > 0, in increasing index order
  std::vector<std::pair<std::uint64_t, std::uint64_t>> support() const;

  BigInt norm1() const;
  BigInt norm2_squared() const;

  // point index = sum x_i q^i, first coordinate least significant
  static std::uint64_t point_index(const std::vector<Elem>& x,
                                   std::uint32_t q);
  static std::vector<Elem> point_coords(std::uint64_t idx, std::uint32_t q,
                                        int d);

private:
  std::uint32_t q_;
  int d_;
  std::uint64_t size_;
  bool dense_;
  std::vector<std::uint64_t> dvals_;
  std::unordered_map<std::uint64_t, std::uint64_t> svals_;
};

// indicator of A^d
DensityFunction indicator_power(const FiniteField& F, const EntrySet& A,
                                int d);

// Exact N_d(A;t) by enumerating all |A|^{d^2} matrices and bucketing by
// determinant. Deterministic for any worker count.
DistributionTable count_bruteforce(const FiniteField& F, const EntrySet& A,
                                   int d,
                                   std::uint64_t budget = kDefaultBudget,
                                   int workers = 1);

// histogram of cofactor vectors over all M in M_{d-1,d}(A)
DensityFunction g_histogram(const FiniteField& F, const EntrySet& A, int d,
                            Convention conv,
                            std::uint64_t budget = kDefaultBudget);

// N_d(A;t) via the exact decomposition over (top block, last row):
// counts[t] = sum over x in A^d, y in support(g_laplace), x.y = t.
DistributionTable count_via_cofactors(const FiniteField& F, const EntrySet& A,
                                      int d,
                                      std::uint64_t budget = kDefaultBudget,
                                      int workers = 1);

// S_d(A) = sum over l != 0 of counts[l]^2
BigInt pair_statistic_S(const DistributionTable& table);

}  // namespace detlab

#endif
