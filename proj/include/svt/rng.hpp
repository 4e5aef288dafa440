#pragma once

// Seeded randomness. Every Monte Carlo verdict derives its stream from a
// master seed plus integer tags, so table cells are reproducible in isolation
// and independent of execution order.

#include <cstdint>
#include <initializer_list>
#include <random>

#include "svt/field.hpp"

namespace svt {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> tags) {
    std::uint64_t h = splitmix64(master);
    for (auto t : tags) h = splitmix64(h ^ (t + 0x9e3779b97f4a7c15ull));
    return h;
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    Fp fp() { return Fp::from_reduced(eng_() % field_modulus()); }

    Fp fp_nonzero() {
        for (;;) {
            Fp x = fp();
            if (!x.is_zero()) return x;
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace svt
