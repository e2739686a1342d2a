#pragma once

#include <cstdint>

namespace simra {

// splitmix64: tiny deterministic generator for the property suites.
// Sequences must be reproducible byte-for-byte across platforms and
// standard libraries, which rules out <random> distributions.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n) via rejection-free modulo (bias negligible for
    // the tiny ranges used here and fully deterministic)
    uint64_t below(uint64_t n) { return next() % n; }

    // uniform integer in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

private:
    uint64_t state_;
};

} // namespace simra
