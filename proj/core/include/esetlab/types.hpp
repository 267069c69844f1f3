#pragma once

#include <complex>

namespace esetlab {

using Complex = std::complex<double>;

/// Ambient space a disc collection or curve family lives in.
enum class Ambient { Plane, UnitDisc };

/// Euclidean disc D(center, radius), radius > 0.
struct Disc {
    Complex center;
    double radius = 0.0;
};

inline const char* ambient_name(Ambient a) {
    return a == Ambient::Plane ? "plane" : "unit_disc";
}

/// Size coordinate of a disc center: |z| in the plane, 1-|z| in the unit disc.
inline double size_coordinate(Ambient a, const Complex& z) {
    return a == Ambient::Plane ? std::abs(z) : 1.0 - std::abs(z);
}

inline Complex rotate(const Complex& z, double angle) {
    return z * std::polar(1.0, angle);
}

}  // namespace esetlab
