#include "cangle/space.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cangle {

namespace {

// randomized axiom audit at construction, debug builds only; per-call checks
// would be quadratic in the test suites
void debug_audit(const Space& s) {
#ifndef NDEBUG
    assert(audit_norm_axioms(s, 8, 0x5eedULL) < 1e-7);
#else
    (void)s;
#endif
}

}  // namespace

Space Space::l2(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("Space: dimension must be positive");
    Space s(Kind::l2, dim);
    debug_audit(s);
    return s;
}

Space Space::lp(std::size_t dim, double p) {
    if (dim == 0) throw std::invalid_argument("Space: dimension must be positive");
    if (!(p >= 1.0)) throw std::invalid_argument("Space: lp needs p >= 1");
    Space s(Kind::lp, dim);
    s.p_ = p;
    debug_audit(s);
    return s;
}

Space Space::linf(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("Space: dimension must be positive");
    Space s(Kind::linf, dim);
    debug_audit(s);
    return s;
}

Space Space::gram(HermitianForm h) {
    Space s(Kind::gram, h.dim());
    s.gram_.emplace(std::move(h));
    debug_audit(s);
    return s;
}

Space Space::gauge(GeneratorSet g) {
    Space s(Kind::gauge, g.dim());
    s.gens_.emplace(std::move(g));
    debug_audit(s);
    return s;
}

double Space::norm(const cvec& x) const {
    if (x.size() != dim_) throw std::invalid_argument("Space::norm: dimension mismatch");
    switch (kind_) {
        case Kind::l2:
            return norm2(x);
        case Kind::lp: {
            double s = 0.0;
            for (const cx& z : x) s += std::pow(std::abs(z), p_);
            return std::pow(s, 1.0 / p_);
        }
        case Kind::linf: {
            double m = 0.0;
            for (const cx& z : x) m = std::max(m, std::abs(z));
            return m;
        }
        case Kind::gram:
            return gram_->norm(x);
        case Kind::gauge:
            return atomic_gauge(*gens_, x).value;
    }
    return 0.0;
}

double Space::norm_slack() const noexcept {
    return kind_ == Kind::gauge ? 8.0 * gens_->tol() : 0.0;
}

std::string Space::describe() const {
    switch (kind_) {
        case Kind::l2:
            return "l2";
        case Kind::lp:
            return "lp(p=" + std::to_string(p_) + ")";
        case Kind::linf:
            return "linf";
        case Kind::gram:
            return "gram(n=" + std::to_string(dim_) + ")";
        case Kind::gauge:
            return "gauge(" + std::to_string(gens_->count()) + " generators)";
    }
    return "?";
}

double audit_norm_axioms(const Space& s, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const cvec x = gaussian_vector(s.dim(), rng);
        const cvec y = gaussian_vector(s.dim(), rng);
        const double nx = s.norm(x), ny = s.norm(y);
        if (!(nx > 0.0)) return 1.0;  // definiteness fails on a random draw
        const cx z(uni(rng) * 2.0, uni(rng) * 2.0);
        const double hom = std::abs(s.norm(scaled(z, x)) - std::abs(z) * nx) /
                           std::max(1.0, std::abs(z) * nx);
        const double tri = (s.norm(add(x, y)) - nx - ny) / std::max(1.0, nx + ny);
        worst = std::max({worst, hom, tri});
    }
    if (s.norm(cvec(s.dim(), cx(0.0, 0.0))) != 0.0) worst = std::max(worst, 1.0);
    return worst;
}

}  // namespace cangle
