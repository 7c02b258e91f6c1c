#pragma once

#include <cmath>
#include <complex>

namespace idxt {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;

inline constexpr cplx I{0.0, 1.0};

// True when z sits exactly on a pole of Gamma (0, -1, -2, ...).
inline bool is_nonpositive_integer(const cplx& z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::rint(z.real());
}

// Distance from z to the nearest integer (both components).
inline double integer_distance(const cplx& z) {
    return std::hypot(z.real() - std::rint(z.real()), z.imag());
}

inline bool is_finite(const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline double abs2(const cplx& z) {
    return z.real() * z.real() + z.imag() * z.imag();
}

} // namespace idxt
