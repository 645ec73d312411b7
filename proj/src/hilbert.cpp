#include "cangle/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cangle {

namespace {

constexpr double kPi = std::numbers::pi;

cx unit_product(const HermitianForm& h, const cvec& x, const cvec& y, double& nx,
                double& ny) {
    nx = h.norm(x);
    ny = h.norm(y);
    if (!(nx > 0.0) || !(ny > 0.0))
        throw std::domain_error("hermitian angle: zero vector");
    cx w = h.inner(x, y) / (nx * ny);
    // CSB holds here, so any overshoot of the square is rounding
    w = cx(detail::clamp_unit(w.real(), 1e-12), detail::clamp_unit(w.imag(), 1e-12));
    return w;
}

}  // namespace

cx inner_eval(const HermitianForm& h, const cvec& x, const cvec& y) {
    return h.inner(x, y);
}

cx hermitian_angle(const HermitianForm& h, const cvec& x, const cvec& y) {
    double nx, ny;
    return carccos(unit_product(h, x, y, nx, ny));
}

std::vector<cvec> gram_schmidt(const HermitianForm& h, const std::vector<cvec>& input,
                               double rank_tol) {
    std::vector<cvec> out;
    out.reserve(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        cvec v = input[i];
        const double scale = h.norm(v);
        if (!(scale > 0.0)) throw rank_error("gram_schmidt: zero input vector", i);
        for (const cvec& e : out) axpy(-h.inner(v, e), e, v);
        // one re-pass when the first sweep left visible overlap
        double overlap = 0.0;
        for (const cvec& e : out) overlap = std::max(overlap, std::abs(h.inner(v, e)));
        if (overlap > 1e-8 * scale)
            for (const cvec& e : out) axpy(-h.inner(v, e), e, v);
        const double n = h.norm(v);
        if (n <= rank_tol * scale)
            throw rank_error("gram_schmidt: rank loss at input index " + std::to_string(i), i);
        for (cx& z : v) z /= n;
        out.push_back(std::move(v));
    }
    return out;
}

bool is_orthonormal_system(const HermitianForm& h, const std::vector<cvec>& vecs,
                           double tol) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const cx p = h.inner(vecs[i], vecs[j]);
            const cx want = i == j ? cx(1.0, 0.0) : cx(0.0, 0.0);
            if (std::abs(p - want) > tol) return false;
        }
    return true;
}

RealSpanAudit real_span_angle_audit(const HermitianForm& h, const std::vector<cvec>& t,
                                    int trials, std::uint64_t seed) {
    if (t.empty()) throw std::invalid_argument("real_span_angle_audit: empty system");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    RealSpanAudit audit;
    const std::size_t k = t.size();
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> rc(k), sc(k);
        cvec y(h.dim(), cx(0, 0)), z(h.dim(), cx(0, 0));
        double ry = 0.0, rz = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            rc[i] = uni(rng);
            sc[i] = uni(rng);
            ry += rc[i] * rc[i];
            rz += sc[i] * sc[i];
            axpy(cx(rc[i], 0.0), t[i], y);
            axpy(cx(sc[i], 0.0), t[i], z);
        }
        if (ry < 1e-6 || rz < 1e-6) {
            --trial;
            continue;
        }
        double ny, nz;
        const cx w = unit_product(h, y, z, ny, nz);
        const cx theta = carccos(w);
        audit.max_im_residual = std::max(audit.max_im_residual, std::abs(theta.imag()));
        double dotrs = 0.0;
        for (std::size_t i = 0; i < k; ++i) dotrs += rc[i] * sc[i];
        audit.max_cos_mismatch =
            std::max(audit.max_cos_mismatch, std::abs(w - cx(dotrs / (ny * nz), 0.0)));
    }
    return audit;
}

cx angle_additivity_residual(const HermitianForm& h, const cvec& x, const cvec& y) {
    const double nx = h.norm(x), ny = h.norm(y);
    if (std::abs(nx - 1.0) > 1e-9 || std::abs(ny - 1.0) > 1e-9)
        throw std::invalid_argument("angle_additivity_residual: expects unit vectors");
    const cvec xy = add(x, y);
    if (h.norm(xy) <= 1e-12)
        throw std::domain_error("angle_additivity_residual: antipodal pair");
    const cx lhs = hermitian_angle(h, x, xy) + hermitian_angle(h, xy, y);
    return lhs - hermitian_angle(h, x, y);
}

cx triangle_angle_sum(const HermitianForm& h, const cvec& x, const cvec& y) {
    const cvec ymx = sub(y, x);
    if (h.norm(x) <= 0.0 || h.norm(y) <= 0.0 || h.norm(ymx) <= 1e-14)
        throw std::domain_error("triangle_angle_sum: degenerate triangle");
    return hermitian_angle(h, x, y) + hermitian_angle(h, neg(x), ymx) +
           hermitian_angle(h, neg(y), neg(ymx));
}

cx law_of_cosines_residual(const HermitianForm& h, const cvec& x, const cvec& y) {
    double nx, ny;
    const cx w = unit_product(h, x, y, nx, ny);  // = cos angle(x,y)
    const double lhs = h.norm(sub(x, y));
    return cx(lhs * lhs - nx * nx - ny * ny, 0.0) + 2.0 * nx * ny * w;
}

cx law_of_cosines_symmetric_residual(const HermitianForm& h, const cvec& x, const cvec& y) {
    double nx, ny;
    const cx w = unit_product(h, x, y, nx, ny);
    const double lhs = h.norm(sub(x, y));
    return cx(lhs * lhs - nx * nx - ny * ny, 0.0) + nx * ny * (w + std::conj(w));
}

RealAnglePhases two_real_angle_phases(const HermitianForm& h, const cvec& x, const cvec& y) {
    double nx, ny;
    const cx w = unit_product(h, x, y, nx, ny);
    RealAnglePhases out;
    const double rho = std::abs(w);
    if (rho <= 1e-14) {
        out.orthogonal_degenerate = true;
        out.angle_at_phi = out.angle_opposite = kPi / 2.0;
        return out;
    }
    out.a = std::asin(detail::clamp_unit(rho));
    const double psi = std::arg(w);
    if (std::abs(psi) <= 1e-14) {
        // already real and positive: keep phi = 0, the pi/2 - a branch
        out.phi = 0.0;
        out.angle_at_phi = kPi / 2.0 - out.a;
        out.angle_opposite = kPi / 2.0 + out.a;
        return out;
    }
    double phi = kPi - psi;
    if (phi >= 2.0 * kPi) phi -= 2.0 * kPi;
    if (phi < 0.0) phi += 2.0 * kPi;
    out.phi = phi;
    out.angle_at_phi = kPi / 2.0 + out.a;
    out.angle_opposite = kPi / 2.0 - out.a;
    return out;
}

AltAngles alt_angles(const HermitianForm& h, const cvec& x, const cvec& y) {
    double nx, ny;
    const cx w = unit_product(h, x, y, nx, ny);
    AltAngles out;
    out.a1 = carccos(w).real();
    out.a2 = std::acos(detail::clamp_unit(w.real()));
    out.a3 = std::acos(detail::clamp_unit(std::abs(w)));
    out.a4 = cx(std::acos(detail::clamp_unit(w.real())),
                std::asin(detail::clamp_unit(w.imag())));
    return out;
}

}  // namespace cangle
