#include "cangle/angle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cangle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cx kI(0.0, 1.0);

cvec unit(const Space& s, const cvec& x, double& n_out) {
    n_out = s.norm(x);
    if (!(n_out > 0.0)) throw std::domain_error("angle: zero vector");
    cvec u(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) u[i] = x[i] / n_out;
    return u;
}

double sq(double v) { return v * v; }

}  // namespace

cx gproduct(const Space& s, const cvec& x, const cvec& y) {
    if (x.size() != s.dim() || y.size() != s.dim())
        throw std::invalid_argument("gproduct: dimension mismatch");
    const double nx = s.norm(x), ny = s.norm(y);
    if (nx == 0.0 || ny == 0.0) return {0.0, 0.0};
    cvec u(x.size()), v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        u[i] = x[i] / nx;
        v[i] = y[i] / ny;
    }
    const double a = s.norm(add(u, v));
    const double b = s.norm(sub(u, v));
    const cvec iv = scaled(kI, v);
    const double c = s.norm(add(u, iv));
    const double d = s.norm(sub(u, iv));
    return nx * ny * 0.25 * cx(sq(a) - sq(b), sq(c) - sq(d));
}

cx normalized_product(const Space& s, const cvec& x, const cvec& y) {
    double nx, ny;
    const cvec u = unit(s, x, nx);
    const cvec v = unit(s, y, ny);
    const double a = s.norm(add(u, v));
    const double b = s.norm(sub(u, v));
    const cvec iv = scaled(kI, v);
    const double c = s.norm(add(u, iv));
    const double d = s.norm(sub(u, iv));
    cx w = 0.25 * cx(sq(a) - sq(b), sq(c) - sq(d));
    // Rounding (and, for gauge norms, the solver gap) can move a real cosine
    // off +-1 in either direction. Snap it back inside the window: outward
    // excursions larger than the window are genuine CSB violations and must
    // pass through untouched, inward ones merely cost the arccos a sqrt of
    // the noise, so the window keeps angle(x,x) exact.
    if (w.imag() == 0.0) {
        const double slack = std::max(4.0 * std::numeric_limits<double>::epsilon(),
                                      8.0 * s.norm_slack());
        if (std::abs(std::abs(w.real()) - 1.0) <= slack)
            w.real(w.real() > 0.0 ? 1.0 : -1.0);
    }
    return w;
}

cx angle(const Space& s, const cvec& x, const cvec& y) {
    return carccos(normalized_product(s, x, y));
}

AngleParts decompose_angle(cx theta) {
    if (!in_strip_a(theta))
        throw std::domain_error("decompose_angle: value not in the strip");
    return {theta.real() - kPi / 2.0, theta.imag()};
}

CosineParts decompose_cos(cx c) {
    if (!in_square_sq(c))
        throw std::domain_error("decompose_cos: value not in the square");
    return {c.real(), c.imag()};
}

cx compose_angle(const AngleParts& p) { return {kPi / 2.0 + p.a, p.b}; }

cx angle_ix_predicted(const AngleParts& d) {
    if (std::abs(d.a) > kPi / 2.0)
        throw std::domain_error("angle_ix_predicted: |a| exceeds pi/2");
    if (std::abs(d.a) == kPi / 2.0 && d.b != 0.0)
        throw std::domain_error("angle_ix_predicted: |a| = pi/2 forces b = 0");
    // H-/H+ are G-/G+ of the rotated cosine -s + i r, whose components are
    // cos(a) sinh(b) and -sin(a) cosh(b)
    const double rp = std::cos(d.a) * std::sinh(d.b);
    const double sp = -std::sin(d.a) * std::cosh(d.b);
    const auto [acos_hm, arcosh_hp] = detail::stable_asin_parts(rp, sp);
    return {kPi / 2.0 - 0.5 * sgn(d.b) * acos_hm, 0.5 * sgn(d.a) * arcosh_hp};
}

std::array<TableRow, 8> angle_table(const Space& s, const cvec& x, const cvec& y) {
    const cvec mx = neg(x), my = neg(y);
    const cvec ix = scaled(kI, x), iy = scaled(kI, y);
    const std::array<std::pair<std::string, std::pair<const cvec*, const cvec*>>, 8> pairs{{
        {"(x,y)", {&x, &y}},
        {"(-x,y)", {&mx, &y}},
        {"(y,x)", {&y, &x}},
        {"(-y,x)", {&my, &x}},
        {"(ix,y)", {&ix, &y}},
        {"(y,ix)", {&y, &ix}},
        {"(x,iy)", {&x, &iy}},
        {"(iy,x)", {&iy, &x}},
    }};
    std::array<TableRow, 8> rows;
    for (std::size_t i = 0; i < 8; ++i) {
        const cx w = normalized_product(s, *pairs[i].second.first, *pairs[i].second.second);
        rows[i] = {pairs[i].first, carccos(w), w};
    }
    return rows;
}

std::vector<OvalSample> oval_sample(const Space& s, const cvec& x, const cvec& y,
                                    std::size_t m) {
    if (m < 2) throw std::invalid_argument("oval_sample: need m >= 2");
    std::vector<OvalSample> out;
    out.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double phi = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(m);
        const cvec xr = scaled(cx(std::cos(phi), std::sin(phi)), x);
        const cx w = normalized_product(s, xr, y);
        out.push_back({phi, carccos(w), w});
    }
    return out;
}

double find_real_angle_phase(const Space& s, const cvec& x, const cvec& y, double tol) {
    const double nx = s.norm(x), ny = s.norm(y);
    if (nx == 0.0 || ny == 0.0)
        throw std::domain_error("find_real_angle_phase: zero vector");
    const double target = tol * nx * ny;

    auto im_at = [&](double phi) {
        const cvec xr = scaled(cx(std::cos(phi), std::sin(phi)), x);
        return gproduct(s, xr, y).imag();
    };

    constexpr int kScan = 64;
    std::array<double, kScan + 1> f{};
    for (int k = 0; k <= kScan; ++k) {
        const double phi = 2.0 * kPi * k / kScan;
        f[k] = im_at(phi);
        if (std::abs(f[k]) < target) return k == kScan ? 0.0 : phi;
    }
    for (int k = 0; k < kScan; ++k) {
        if (!(f[k] > 0.0) == !(f[k + 1] > 0.0)) continue;  // same sign, no crossing
        double lo = 2.0 * kPi * k / kScan, hi = 2.0 * kPi * (k + 1) / kScan;
        double flo = f[k];
        double best_phi = lo;
        double best = std::abs(flo);
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = im_at(mid);
            if (std::abs(fm) < best) {
                best = std::abs(fm);
                best_phi = mid;
            }
            if (best < target) return best_phi;
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return best_phi;  // noise floor; the antipodal flip guarantees this crossing
    }
    // no strict sign change found: every sample was at the noise floor
    return 0.0;
}

std::vector<ThetaPoint> theta_profile(const Space& s, const cvec& x, const cvec& y,
                                      const std::vector<double>& grid) {
    // complex linear dependence check via the 2x2 euclidean Gram determinant
    const double xx = norm2_sq(x), yy = norm2_sq(y);
    const cx xy = dot(x, y);
    if (!(xx > 0.0) || !(yy > 0.0) || xx * yy - std::norm(xy) <= 1e-20 * xx * yy)
        throw std::domain_error("theta_profile: inputs are linearly dependent");
    std::vector<ThetaPoint> out;
    out.reserve(grid.size());
    for (double t : grid) {
        cvec z = y;
        axpy(cx(t, 0.0), x, z);
        const cx w = normalized_product(s, x, z);
        out.push_back({t, carccos(w), w.real()});
    }
    return out;
}

std::vector<double> default_theta_grid() {
    std::vector<double> g;
    g.reserve(101);
    for (int i = 49; i >= 0; --i) g.push_back(-std::pow(10.0, -4.0 + 8.0 * i / 49.0));
    g.push_back(0.0);
    for (int i = 0; i < 50; ++i) g.push_back(std::pow(10.0, -4.0 + 8.0 * i / 49.0));
    return g;
}

namespace {

double pair_objective(const Space& s, const cvec& a, const cvec& b) {
    return std::abs(gproduct(s, a, b));
}

// golden-section maximization of g on [lo, hi]
template <typename F>
double golden_max(F&& g, double lo, double hi, int iters) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double gc = g(c), gd = g(d);
    for (int i = 0; i < iters; ++i) {
        if (gc > gd) {
            hi = d;
            d = c;
            gd = gc;
            c = hi - inv_phi * (hi - lo);
            gc = g(c);
        } else {
            lo = c;
            c = d;
            gc = gd;
            d = lo + inv_phi * (hi - lo);
            gd = g(d);
        }
    }
    return gc > gd ? c : d;
}

}  // namespace

DeformationEstimate deformation_estimate(const Space& s, int n_samples, int n_refine,
                                         std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("deformation_estimate: need samples >= 1");
    std::mt19937_64 rng(seed);

    auto draw_unit = [&]() {
        for (;;) {
            cvec v = gaussian_vector(s.dim(), rng);
            const double n = s.norm(v);
            if (n > 1e-8) {
                for (cx& z : v) z /= n;
                return v;
            }
        }
    };

    struct Candidate {
        double value;
        cvec a, b;
    };
    std::vector<Candidate> top;
    auto offer = [&](double val, const cvec& a, const cvec& b) {
        top.push_back({val, a, b});
        std::sort(top.begin(), top.end(),
                  [](const Candidate& l, const Candidate& r) { return l.value > r.value; });
        if (top.size() > 10) top.pop_back();
    };

    {
        // (a, a) and (a, i a) reach modulus 1 in every space
        const cvec a0 = draw_unit();
        offer(pair_objective(s, a0, a0), a0, a0);
        offer(pair_objective(s, a0, scaled(cx(0.0, 1.0), a0)), a0, scaled(cx(0.0, 1.0), a0));
    }
    for (int t = 0; t < n_samples; ++t) {
        const cvec a = draw_unit();
        const cvec b = draw_unit();
        offer(pair_objective(s, a, b), a, b);
    }

    for (Candidate& cand : top) {
        double step = 0.5;
        for (int round = 0; round < n_refine; ++round) {
            for (std::size_t pi = 0; pi < 4 * s.dim(); ++pi) {
                const bool on_b = pi >= 2 * s.dim();
                cvec& vec = on_b ? cand.b : cand.a;
                const std::size_t ci = (pi % (2 * s.dim())) / 2;
                const bool im_part = pi % 2;
                auto eval = [&](double delta) {
                    cvec va = cand.a, vb = cand.b;
                    cvec& tgt = on_b ? vb : va;
                    if (im_part)
                        tgt[ci] += cx(0.0, delta);
                    else
                        tgt[ci] += cx(delta, 0.0);
                    const double na = s.norm(va), nb = s.norm(vb);
                    if (na < 1e-10 || nb < 1e-10) return -1.0;
                    for (cx& z : va) z /= na;
                    for (cx& z : vb) z /= nb;
                    return pair_objective(s, va, vb);
                };
                const double d = golden_max(eval, -step, step, 24);
                const double moved = eval(d);
                if (moved > cand.value) {
                    if (im_part)
                        vec[ci] += cx(0.0, d);
                    else
                        vec[ci] += cx(d, 0.0);
                    const double n = s.norm(vec);
                    for (cx& z : vec) z /= n;
                    cand.value = pair_objective(s, cand.a, cand.b);
                }
            }
            step *= 0.5;
        }
    }

    const Candidate& best = *std::max_element(
        top.begin(), top.end(),
        [](const Candidate& l, const Candidate& r) { return l.value < r.value; });
    return {best.value, best.a, best.b};
}

double csb_margin(const Space& s, const cvec& x, const cvec& y) {
    return std::abs(gproduct(s, x, y)) - s.norm(x) * s.norm(y);
}

double parallelogram_defect(const Space& s, const cvec& x, const cvec& y) {
    const double a = s.norm(add(x, y));
    const double b = s.norm(sub(x, y));
    const double nx = s.norm(x), ny = s.norm(y);
    return sq(a) + sq(b) - 2.0 * (sq(nx) + sq(ny));
}

}  // namespace cangle
