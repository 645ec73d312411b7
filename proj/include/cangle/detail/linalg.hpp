#pragma once

#include <cstddef>
#include <vector>

#include "cangle/vec.hpp"

namespace cangle::detail {

// Dense lower Cholesky of a Hermitian matrix stored row-major (n x n).
// Returns false if a pivot drops to or below `pivot_floor` (not positive
// definite to working precision).
bool cholesky(std::vector<cx>& a, std::size_t n, double pivot_floor = 0.0);

// Solves L L^H x = b in place, with L from cholesky().
void cholesky_solve(const std::vector<cx>& l, std::size_t n, cvec& b);

// Rank of an n x k complex matrix given by columns, via row-reduction with
// partial pivoting. `rel_tol` is relative to the largest column norm.
std::size_t column_rank(const std::vector<cvec>& cols, std::size_t n,
                        double rel_tol = 1e-12);

// Solves the dense real system a x = b in place (a row-major m x m, b length
// m) by Gaussian elimination with partial pivoting. Returns false on a
// vanishing pivot.
bool lu_solve(std::vector<double>& a, std::vector<double>& b, std::size_t m);

}  // namespace cangle::detail
