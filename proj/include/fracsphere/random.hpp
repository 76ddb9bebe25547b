#pragma once

#include <cstdint>
#include <random>

namespace fracsphere {

// Portable draws on top of mt19937_64: the standard distributions are
// implementation-defined, these are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // [0, 1)
    double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    // [lo, hi]
    int integer(int lo, int hi) { return lo + int(gen_() % std::uint64_t(hi - lo + 1)); }

private:
    std::mt19937_64 gen_;
};

} // namespace fracsphere
