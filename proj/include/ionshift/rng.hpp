#ifndef IONSHIFT_RNG_HPP
#define IONSHIFT_RNG_HPP

#include <cstdint>

namespace ionshift {

/// Counter-based 64-bit generator (SplitMix64). Cheap to construct, so every
/// independent Monte Carlo draw or dwell block can own a private stream seeded
/// from (seed, stream, index); results are then independent of execution order.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~std::uint64_t{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Derive a sub-stream seed from (seed, stream id, counter) by chaining the
/// SplitMix64 output function. Distinct inputs give uncorrelated streams.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t counter) {
  SplitMix64 g(seed);
  std::uint64_t a = g();
  SplitMix64 h(a ^ (stream + 0x632be59bd9b4e019ULL));
  std::uint64_t b = h();
  SplitMix64 k(b ^ (counter + 0x9e3779b97f4a7c15ULL));
  return k();
}

}  // namespace ionshift

#endif
