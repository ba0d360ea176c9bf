#pragma once
#include <cstdint>
#include <random>

namespace pnm {

// Seeded generator with a platform-independent bounded draw (the standard
// distributions are implementation-defined, the raw engine output is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    std::uint64_t next() { return g_(); }
    // Uniform integer in [lo, hi].
    int uniform(int lo, int hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do x = g_(); while (x >= limit);
        return lo + static_cast<int>(x % span);
    }
    bool coin() { return uniform(0, 1) == 1; }

private:
    std::mt19937_64 g_;
};

}  // namespace pnm
