#include "detlab/entryset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "detlab/rng.hpp"

namespace detlab {

bool EntrySet::contains(Elem a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

EntrySet make_list_set(const FiniteField& F, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) throw std::invalid_argument("empty entry set");
  if (elems.back() >= F.q())
    throw std::invalid_argument("entry out of field range");
  std::string d = "list:";
  for (std::size_t i = 0; i < elems.size(); ++i)
    d += (i ? "," : "") + std::to_string(elems[i]);
  return {std::move(elems), std::move(d)};
}

EntrySet make_full_set(const FiniteField& F) {
  std::vector<Elem> all(F.q());
  std::iota(all.begin(), all.end(), 0);
  return {std::move(all), "full"};
}

EntrySet interval_set(const FiniteField& F, std::uint32_t H) {
  if (F.r() != 1)
    throw std::invalid_argument("interval sets require a prime field");
  if (H < 1 || H > (F.p() - 1) / 2)
    throw std::invalid_argument("H out of range 1..(p-1)/2");
  std::vector<Elem> elems;
  for (std::uint32_t v = 0; v <= H; ++v) elems.push_back(v);
  for (std::uint32_t v = 1; v <= H; ++v) elems.push_back(F.p() - v);
  std::sort(elems.begin(), elems.end());
  return {std::move(elems), "interval:" + std::to_string(H)};
}

EntrySet random_set(const FiniteField& F, std::size_t n, std::uint64_t seed) {
  if (n < 1 || n > F.q())
    throw std::invalid_argument("random set size out of range");
  std::vector<Elem> all(F.q());
  std::iota(all.begin(), all.end(), 0);
  SplitMix64 rng(seed);
  for (std::size_t i = all.size() - 1; i > 0; --i)
    std::swap(all[i], all[rng.below(i + 1)]);
  all.resize(n);
  std::sort(all.begin(), all.end());
  return {std::move(all), "random:" + std::to_string(n)};
}

EntrySet parse_set(const FiniteField& F, const std::string& descriptor,
                   std::uint64_t seed) {
  if (descriptor == "full") return make_full_set(F);
  const auto colon = descriptor.find(':');
  const std::string kind = descriptor.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? "" : descriptor.substr(colon + 1);
  if (kind == "interval") return interval_set(F, std::stoul(arg));
  if (kind == "random") return random_set(F, std::stoul(arg), seed);
  if (kind == "list") {
    std::vector<Elem> elems;
    std::size_t pos = 0;
    while (pos < arg.size()) {
      auto comma = arg.find(',', pos);
      if (comma == std::string::npos) comma = arg.size();
      elems.push_back(Elem(std::stoul(arg.substr(pos, comma - pos))));
      pos = comma + 1;
    }
    return make_list_set(F, std::move(elems));
  }
  throw std::invalid_argument("unknown set descriptor: " + descriptor);
}

}  // namespace detlab
