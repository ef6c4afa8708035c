#include "dnacode/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dnacode {

std::uint64_t PortableRng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below(0)");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % bound + 1) % bound;
    const std::uint64_t limit = max - rem;
    for (;;) {
        std::uint64_t r = next_u64();
        if (r <= limit) return r % bound;
    }
}

double PortableRng::normal() {
    if (spare_) {
        double s = *spare_;
        spare_.reset();
        return s;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    return u * f;
}

}  // namespace dnacode
