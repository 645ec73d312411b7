#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they are used to check.

#include <cmath>
#include <complex>
#include <random>

namespace oracle {

using cxd = std::complex<double>;

// sinh by its power series, truncated when terms stop contributing
inline double sinh_series(double x) {
    double term = x, sum = x;
    for (int k = 1; k < 60; ++k) {
        term *= x * x / ((2.0 * k) * (2.0 * k + 1.0));
        const double next = sum + term;
        if (next == sum) break;
        sum = next;
    }
    return sum;
}

// cos/sin through the exponential, using the std complex exp only
inline cxd cos_exp(cxd z) {
    const cxd iz(-z.imag(), z.real());
    return 0.5 * (std::exp(iz) + std::exp(-iz));
}

inline cxd sin_exp(cxd z) {
    const cxd iz(-z.imag(), z.real());
    return (std::exp(iz) - std::exp(-iz)) / cxd(0.0, 2.0);
}

// uniform point of the cut plane with |re|,|im| <= box (resampled off the rays)
inline cxd random_b_point(std::mt19937_64& rng, double box = 10.0) {
    std::uniform_real_distribution<double> u(-box, box);
    for (;;) {
        const cxd z(u(rng), u(rng));
        if (z.imag() != 0.0 || std::abs(z.real()) <= 1.0) return z;
    }
}

// uniform interior point of the strip, |im| <= box
inline cxd random_a_point(std::mt19937_64& rng, double box = 10.0) {
    std::uniform_real_distribution<double> ua(1e-9, 3.141592653589793 - 1e-9);
    std::uniform_real_distribution<double> ub(-box, box);
    return {ua(rng), ub(rng)};
}

}  // namespace oracle
