#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace yf {

// Seedable, splittable generator: stream i of seed s is
// mt19937_64(seed_seq{s, i}).  Reports record (seed, stream) so every
// stochastic result is reproducible bit for bit.
class Rng {
  public:
    explicit Rng(uint64_t seed, uint64_t stream = 0) : seed_(seed), stream_(stream) {
        std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                          static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
        eng_.seed(seq);
    }

    static std::string name() { return "mt19937_64/seed_seq(seed,stream)"; }

    uint64_t seed() const { return seed_; }
    uint64_t stream() const { return stream_; }
    Rng split(uint64_t stream) const { return Rng(seed_, stream); }

    double uniform() { return std::generate_canonical<double, 53>(eng_); }

    // Uniform in {0, ..., m-1}.
    uint64_t below(uint64_t m) { return std::uniform_int_distribution<uint64_t>(0, m - 1)(eng_); }

    std::mt19937_64& engine() { return eng_; }

  private:
    uint64_t seed_, stream_;
    std::mt19937_64 eng_;
};

}  // namespace yf
