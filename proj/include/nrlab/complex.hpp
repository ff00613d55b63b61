#ifndef NRLAB_COMPLEX_HPP
#define NRLAB_COMPLEX_HPP

#include <cmath>
#include <complex>

namespace nrlab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

inline bool is_finite(double x) { return std::isfinite(x); }

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace nrlab

#endif  // NRLAB_COMPLEX_HPP
