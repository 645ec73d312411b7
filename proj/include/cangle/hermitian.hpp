#pragma once

#include <cstddef>
#include <vector>

#include "cangle/vec.hpp"

namespace cangle {

// A Hermitian positive definite form H on C^n with the inner product
// <x|y> = x^T H conj(y), linear in the first argument. Construction verifies
// H = H* to 1e-12 and positive definiteness by Cholesky pivots.
class HermitianForm {
public:
    HermitianForm(std::size_t dim, std::vector<cx> row_major_entries);
    static HermitianForm identity(std::size_t dim);
    static HermitianForm diagonal(const std::vector<double>& d);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<cx>& entries() const noexcept { return h_; }

    cx inner(const cvec& x, const cvec& y) const;
    double norm(const cvec& x) const;

private:
    std::size_t dim_;
    std::vector<cx> h_;
};

}  // namespace cangle
