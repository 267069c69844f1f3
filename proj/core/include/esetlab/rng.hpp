#pragma once

#include <cstdint>
#include <random>

namespace esetlab {

// Seeded draws used by the generators. std::uniform_real_distribution is
// implementation-defined, so experiments that promise byte-identical output
// derive uniforms from raw engine words instead.

inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// Uniform in [lo, hi).
inline double uniform_in(std::mt19937_64& eng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(eng);
}

}  // namespace esetlab
