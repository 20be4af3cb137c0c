#ifndef BRAIDORBITS_RNG_HPP
#define BRAIDORBITS_RNG_HPP

#include <cstdint>

namespace braidorbits {

// splitmix64. Deterministic across platforms, unlike the standard library
// distributions; all sampling in the library goes through this so that a
// seed fully pins a run. Independent streams are derived from
// (seed, stream id) so results do not depend on scheduling order.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    Rng base(seed ^ (0x9e3779b97f4a7c15ull * (stream_id + 1)));
    base.next();  // decorrelate nearby stream ids
    return base;
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound > 0; rejection keeps it unbiased
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace braidorbits

#endif  // BRAIDORBITS_RNG_HPP
