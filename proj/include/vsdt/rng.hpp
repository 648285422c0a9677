#pragma once

#include <cstdint>
#include <random>

#include "vsdt/error.hpp"

namespace vsdt {

// Thin wrapper around mt19937_64 with a rejection-sampled bounded draw, so
// results do not depend on the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        require(n > 0, errc::invalid_input, "Rng::below needs n > 0");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        require(lo <= hi, errc::invalid_input, "Rng::uniform needs lo <= hi");
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 eng_;
};

} // namespace vsdt
