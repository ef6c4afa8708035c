#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace dnacode {

// Seedable generator with a fully pinned output sequence: the engine is the
// standard-specified mt19937_64, uniforms take the top 53 bits, and normals
// come from the Marsaglia polar transform. Identical seeds give identical
// streams on every conforming platform (up to libm rounding of log/sqrt in
// the normal path).
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1) with 53-bit resolution.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound) by rejection; bound must be nonzero.
    std::uint64_t next_below(std::uint64_t bound);

    // Standard normal deviate (Marsaglia polar method, spare cached).
    double normal();

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

}  // namespace dnacode
