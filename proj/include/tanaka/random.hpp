#pragma once

#include <cstdint>
#include <random>

#include "tanaka/matrix.hpp"

namespace tanaka {

/// Seeded integer stream; values depend only on the seed, not on the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}
    /// Uniform-ish integer in [lo, hi].
    long long integer(long long lo, long long hi) {
        return lo + static_cast<long long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Vector vector(std::size_t n, long long lo, long long hi) {
        Vector v(n);
        for (auto& x : v) x = Scalar(integer(lo, hi));
        return v;
    }
    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

} // namespace tanaka
