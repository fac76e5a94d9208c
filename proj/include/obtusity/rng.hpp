#pragma once

#include <cstdint>
#include <random>

namespace obtusity::mc {

// splitmix64 output function; full-period 64-bit mixer.
inline uint64_t splitmix64_mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// The chunk_index-th output of the splitmix64 stream started at base_seed.
// Chunks get decorrelated generator seeds no matter which worker runs them.
inline uint64_t chunk_seed(uint64_t base_seed, uint64_t chunk_index) {
    return splitmix64_mix(base_seed + (chunk_index + 1) * 0x9e3779b97f4a7c15ull);
}

// Uniform doubles in [0, 1) with 53 random bits per draw.
class UniformStream {
  public:
    explicit UniformStream(uint64_t seed) : gen_(seed) {}
    double operator()() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 gen_;
};

}  // namespace obtusity::mc
