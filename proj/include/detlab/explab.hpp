#ifndef DETLAB_EXPLAB_HPP
#define DETLAB_EXPLAB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "detlab/io.hpp"
#include "detlab/productset.hpp"
#include "detlab/rng.hpp"
#include "detlab/spectral.hpp"

namespace detlab {

// random integer-valued function on F_q^d, values in 0..max_value,
// ~half the points in the support
DensityFunction random_density(const FiniteField& F, int d, SplitMix64& rng,
                               std::uint64_t max_value = 3);

// random nondegenerate bilinear form
BilinearForm random_form(const FiniteField& F, int d, SplitMix64& rng);

struct VerifyAllResult {
  bool pass = true;
  json data;  // deterministic for fixed config + seed
};

// Full verification battery on one instance: both counting routes,
// distribution invariants, the recursion suite, the second-moment chain,
// randomized incidence bounds and the productset checks.
VerifyAllResult verify_all(const FiniteField& F, const EntrySet& A, int d,
                           std::uint64_t seed,
                           std::uint64_t budget = kDefaultBudget,
                           int workers = 1);

}  // namespace detlab

#endif
