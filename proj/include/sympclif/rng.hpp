#pragma once

#include "sympclif/gaussian.hpp"

#include <cstdint>
#include <random>

namespace sympclif {

// Thin wrapper over mt19937_64 that draws values through raw engine output
// only; std::mt19937_64 output is pinned by the standard, so every sequence
// here is reproducible from the seed across platforms and library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t raw() { return eng_(); }

    // Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant for
    // test-case generation and keeps the sequence implementation-independent.
    int uniform(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("Rng: empty range");
        return lo + static_cast<int>(raw() % static_cast<uint64_t>(hi - lo + 1));
    }

    // Nonzero rational with numerator in [-3,3] and denominator in [1,3].
    Rational small_rational() {
        int num = 0;
        while (num == 0) num = uniform(-3, 3);
        return Rational(num) / Rational(uniform(1, 3));
    }

    GaussianRational small_gaussian() {
        int pick = uniform(0, 2);
        if (pick == 0) return GaussianRational(small_rational());
        if (pick == 1) return GaussianRational(Rational(0), small_rational());
        return GaussianRational(small_rational(), small_rational());
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace sympclif
