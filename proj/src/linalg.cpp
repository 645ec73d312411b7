#include "cangle/detail/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace cangle::detail {

bool cholesky(std::vector<cx>& a, std::size_t n, double pivot_floor) {
    for (std::size_t j = 0; j < n; ++j) {
        double d = a[j * n + j].real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(a[j * n + k]);
        if (!(d > pivot_floor)) return false;
        const double lj = std::sqrt(d);
        a[j * n + j] = cx(lj, 0.0);
        for (std::size_t i = j + 1; i < n; ++i) {
            cx s = a[i * n + j];
            for (std::size_t k = 0; k < j; ++k)
                s -= a[i * n + k] * std::conj(a[j * n + k]);
            a[i * n + j] = s / lj;
        }
    }
    // zero the strictly upper part so the factor is unambiguous
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) a[i * n + j] = cx(0.0, 0.0);
    return true;
}

void cholesky_solve(const std::vector<cx>& l, std::size_t n, cvec& b) {
    for (std::size_t i = 0; i < n; ++i) {
        cx s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= l[i * n + k] * b[k];
        b[i] = s / l[i * n + i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
        cx s = b[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(l[k * n + ii]) * b[k];
        b[ii] = s / l[ii * n + ii];
    }
}

bool lu_solve(std::vector<double>& a, std::vector<double>& b, std::size_t m) {
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < m; ++r)
            if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
        if (a[piv * m + col] == 0.0) return false;
        if (piv != col) {
            for (std::size_t c2 = 0; c2 < m; ++c2) std::swap(a[col * m + c2], a[piv * m + c2]);
            std::swap(b[col], b[piv]);
        }
        const double p = a[col * m + col];
        for (std::size_t r = col + 1; r < m; ++r) {
            const double f = a[r * m + col] / p;
            if (f == 0.0) continue;
            for (std::size_t c2 = col; c2 < m; ++c2) a[r * m + c2] -= f * a[col * m + c2];
            b[r] -= f * b[col];
        }
    }
    for (std::size_t ri = m; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t c2 = ri + 1; c2 < m; ++c2) s -= a[ri * m + c2] * b[c2];
        b[ri] = s / a[ri * m + ri];
    }
    return true;
}

std::size_t column_rank(const std::vector<cvec>& cols, std::size_t n, double rel_tol) {
    std::vector<cvec> m = cols;  // work on a copy, column major
    const std::size_t k = m.size();
    double scale = 0.0;
    for (const cvec& c : m) scale = std::max(scale, norm2(c));
    if (scale == 0.0) return 0;
    const double tol = rel_tol * scale;

    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < n; ++col) {
        std::size_t piv = rank;
        double best = 0.0;
        for (std::size_t row = rank; row < n; ++row) {
            const double v = std::abs(m[col][row]);
            if (v > best) {
                best = v;
                piv = row;
            }
        }
        if (best <= tol) continue;
        for (std::size_t c2 = col; c2 < k; ++c2) std::swap(m[c2][rank], m[c2][piv]);
        const cx p = m[col][rank];
        for (std::size_t row = rank + 1; row < n; ++row) {
            const cx f = m[col][row] / p;
            if (f == cx(0.0, 0.0)) continue;
            for (std::size_t c2 = col; c2 < k; ++c2) m[c2][row] -= f * m[c2][rank];
        }
        ++rank;
    }
    return rank;
}

}  // namespace cangle::detail
