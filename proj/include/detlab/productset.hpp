#ifndef DETLAB_PRODUCTSET_HPP
#define DETLAB_PRODUCTSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detlab/entryset.hpp"
#include "detlab/spectral.hpp"

namespace detlab {

/// Nontrivial 3-term progression (a, a+delta, a+2*delta) inside the
/// productset AB, with a factorization of each term. Terms are pairwise
/// distinct since delta != 0 and p is odd.
struct APWitness {
  Elem start = 0;
  Elem delta = 0;
  std::vector<Elem> terms;      // the three AP terms
  std::vector<Elem> factors_a;  // x with term = x*y, x in A
  std::vector<Elem> factors_b;  // matching y in B
};

// number of (x0,y0,x2,y2) in AxBxAxB with x0 y0 + x2 y2 = 2 x1 y1,
// via the d=2 incidence table for (x0,x2).(y0,y2)
BigInt quadruple_count(const FiniteField& F, const EntrySet& A,
                       const EntrySet& B, Elem x1, Elem y1);

struct QuadrupleReport {
  bool pass = true;
  BigInt count;
  std::string bound;  // |A|^2|B|^2/q - sqrt(q)|A||B|
};

// quadruple_count >= |A|^2|B|^2/q - sqrt(q)|A||B|; compared by squaring
// the radical side, exactly
QuadrupleReport check_quadruple_lower_bound(const FiniteField& F,
                                            const EntrySet& A,
                                            const EntrySet& B, Elem x1,
                                            Elem y1);

// #{(x0,y0,x2,y2) : x0 y0 = x2 y2 = x1 y1}, at most |A||B|
BigInt trivial_quadruple_count(const FiniteField& F, const EntrySet& A,
                               const EntrySet& B, Elem x1, Elem y1);

std::optional<APWitness> find_3ap_in_productset(const FiniteField& F,
                                                const EntrySet& A,
                                                const EntrySet& B);

struct ThresholdReport {
  int trials = 0;
  int witnesses = 0;
  int skipped = 0;  // degenerate draws with no valid pivot x1 y1 != 0
  bool pass = true;
  std::string failure;  // descriptor of a counterexample draw
};

// for random A, B with |A||B| > q(sqrt(q)+1), a 3-AP witness must exist
ThresholdReport check_ap_threshold(const FiniteField& F, int trials,
                                   std::uint64_t seed);

}  // namespace detlab

#endif
