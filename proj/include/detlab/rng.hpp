#ifndef DETLAB_RNG_HPP
#define DETLAB_RNG_HPP

#include <cstdint>

namespace detlab {

// splitmix64 stream; pinned so seeded draws are reproducible across
// platforms and language bindings.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound) by rejection, bound > 0
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

private:
  std::uint64_t state_;
};

}  // namespace detlab

#endif
