#include "cangle/hermitian.hpp"

#include <cmath>
#include <stdexcept>

#include "cangle/detail/linalg.hpp"

namespace cangle {

HermitianForm::HermitianForm(std::size_t dim, std::vector<cx> row_major_entries)
    : dim_(dim), h_(std::move(row_major_entries)) {
    if (dim_ == 0) throw std::invalid_argument("HermitianForm: dimension must be positive");
    if (h_.size() != dim_ * dim_)
        throw std::invalid_argument("HermitianForm: entry count does not match dimension");
    double scale = 0.0;
    for (const cx& v : h_) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) throw std::invalid_argument("HermitianForm: zero matrix");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const cx d = h_[i * dim_ + j] - std::conj(h_[j * dim_ + i]);
            if (std::abs(d) > 1e-12 * scale)
                throw std::invalid_argument("HermitianForm: matrix is not Hermitian");
        }
    std::vector<cx> chol = h_;
    if (!detail::cholesky(chol, dim_, 0.0))
        throw std::invalid_argument("HermitianForm: matrix is not positive definite");
}

HermitianForm HermitianForm::identity(std::size_t dim) {
    std::vector<cx> h(dim * dim, cx(0.0, 0.0));
    for (std::size_t i = 0; i < dim; ++i) h[i * dim + i] = cx(1.0, 0.0);
    return HermitianForm(dim, std::move(h));
}

HermitianForm HermitianForm::diagonal(const std::vector<double>& d) {
    const std::size_t n = d.size();
    std::vector<cx> h(n * n, cx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) h[i * n + i] = cx(d[i], 0.0);
    return HermitianForm(n, std::move(h));
}

cx HermitianForm::inner(const cvec& x, const cvec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("HermitianForm::inner: dimension mismatch");
    cx s(0.0, 0.0);
    for (std::size_t i = 0; i < dim_; ++i) {
        cx row(0.0, 0.0);
        for (std::size_t j = 0; j < dim_; ++j) row += h_[i * dim_ + j] * std::conj(y[j]);
        s += x[i] * row;
    }
    return s;
}

double HermitianForm::norm(const cvec& x) const {
    const double q = inner(x, x).real();
    return std::sqrt(std::max(q, 0.0));
}

}  // namespace cangle
