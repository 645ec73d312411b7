#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace cangle {

using cx = std::complex<double>;
using cvec = std::vector<cx>;

inline cvec add(const cvec& a, const cvec& b) {
    cvec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline cvec sub(const cvec& a, const cvec& b) {
    cvec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline cvec scaled(cx z, const cvec& a) {
    cvec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = z * a[i];
    return r;
}

inline cvec neg(const cvec& a) { return scaled(cx(-1.0, 0.0), a); }

// y += z*x
inline void axpy(cx z, const cvec& x, cvec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += z * x[i];
}

inline bool is_zero(const cvec& a) {
    for (const cx& z : a)
        if (z != cx(0.0, 0.0)) return false;
    return true;
}

inline double norm2_sq(const cvec& a) {
    double s = 0.0;
    for (const cx& z : a) s += std::norm(z);
    return s;
}

inline double norm2(const cvec& a) { return std::sqrt(norm2_sq(a)); }

// standard complex dot, conjugate-linear in the second argument
inline cx dot(const cvec& a, const cvec& b) {
    cx s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

inline cvec gaussian_vector(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    cvec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = cx(g(rng), g(rng));
    return v;
}

}  // namespace cangle
