#pragma once

#include <cstdint>
#include <random>

namespace artin {

// Seeded generator with platform-stable draws (std::uniform_int_distribution
// is implementation-defined, so modulo reduction is used on purpose).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    long uniform(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::uint64_t raw() { return gen_(); }

    Rng derive(std::uint64_t salt) { return Rng(gen_() ^ (salt * 0x9e3779b97f4a7c15ull)); }

  private:
    std::mt19937_64 gen_;
};

}  // namespace artin
