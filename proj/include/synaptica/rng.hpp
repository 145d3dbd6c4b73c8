#ifndef SYNAPTICA_RNG_HPP
#define SYNAPTICA_RNG_HPP

#include <cstdint>
#include <random>

namespace synaptica {

/// Seed-deterministic random stream. The raw engine is the standard
/// mt19937_64; the real-valued draws are derived from raw 64-bit output
/// directly so that the stream does not depend on the standard library's
/// (implementation-defined) distribution algorithms. Audit reports must be
/// reproducible from (model, seed, trials) alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n) {
        return static_cast<std::size_t>(next_u64() % n);
    }

    bool coin() { return (next_u64() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

} // namespace synaptica

#endif
