#ifndef DETLAB_ENTRYSET_HPP
#define DETLAB_ENTRYSET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "detlab/field.hpp"

namespace detlab {

/// A subset of F_q with a canonical (sorted-index) ordering.
///
/// The descriptor records how the set was produced so output files can
/// reproduce it: "list:...", "interval:H", "full", "random:N" (+seed).
struct EntrySet {
  std::vector<Elem> members;  // sorted, distinct
  std::string descriptor;

  std::size_t size() const { return members.size(); }
  bool contains(Elem a) const;
};

EntrySet make_list_set(const FiniteField& F, std::vector<Elem> elems);
EntrySet make_full_set(const FiniteField& F);

// the 2H+1 residues {p-H,...,p-1,0,1,...,H}; prime fields only
EntrySet interval_set(const FiniteField& F, std::uint32_t H);

// size-n subset drawn by a seeded Fisher-Yates shuffle of the canonical
// element order (splitmix64 stream), keeping the first n entries
EntrySet random_set(const FiniteField& F, std::size_t n, std::uint64_t seed);

// parse "list:0,1", "interval:2", "full", "random:4"
EntrySet parse_set(const FiniteField& F, const std::string& descriptor,
                   std::uint64_t seed);

}  // namespace detlab

#endif
