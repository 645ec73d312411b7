#include "cangle/complex_fn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cangle {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUlpSlack = 4.0 * std::numeric_limits<double>::epsilon();

bool finite(cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

[[noreturn]] void throw_nonfinite(const char* fn) {
    throw std::domain_error(std::string(fn) + ": non-finite argument");
}

}  // namespace

int sgn(double x) {
    if (x > 0.0) return 1;
    if (x < 0.0) return -1;
    return 0;  // covers -0.0 as well
}

bool in_strip_a(cx z) {
    if (!finite(z)) return false;
    if (z.imag() == 0.0 && (z.real() == 0.0 || z.real() == kPi)) return true;
    return z.real() > 0.0 && z.real() < kPi;
}

bool in_cut_plane_b(cx z) {
    if (!finite(z)) return false;
    if (z.imag() != 0.0) return true;
    return z.real() >= -1.0 && z.real() <= 1.0;
}

bool in_square_sq(cx z) {
    if (!finite(z)) return false;
    return std::abs(z.real()) <= 1.0 && std::abs(z.imag()) <= 1.0;
}

RegionTag region_classify(cx z, RegionQuery which) {
    switch (which) {
        case RegionQuery::strip_a:
            if (!finite(z)) return RegionTag::outside;
            if (z.imag() == 0.0 && (z.real() == 0.0 || z.real() == kPi))
                return RegionTag::a_boundary;
            if (z.real() > 0.0 && z.real() < kPi) return RegionTag::a_interior;
            return RegionTag::outside;
        case RegionQuery::plane_b:
            return in_cut_plane_b(z) ? RegionTag::b : RegionTag::outside;
        case RegionQuery::square_sq:
            return in_square_sq(z) ? RegionTag::sq : RegionTag::outside;
    }
    return RegionTag::outside;
}

cx ccos(cx z) {
    if (!finite(z)) throw_nonfinite("ccos");
    const double a = z.real(), b = z.imag();
    const double re = std::cos(a) * std::cosh(b);
    const double im = -std::sin(a) * std::sinh(b);
    if (!std::isfinite(re) || !std::isfinite(im))
        throw std::range_error("ccos: cosh/sinh overflow");
    return {re, im};
}

cx csin(cx z) {
    if (!finite(z)) throw_nonfinite("csin");
    const double a = z.real(), b = z.imag();
    const double re = std::sin(a) * std::cosh(b);
    const double im = std::cos(a) * std::sinh(b);
    if (!std::isfinite(re) || !std::isfinite(im))
        throw std::range_error("csin: cosh/sinh overflow");
    return {re, im};
}

double arcosh(double x) {
    if (!std::isfinite(x)) throw std::domain_error("arcosh: non-finite argument");
    if (x < 1.0) {
        if (x >= 1.0 - kUlpSlack) return 0.0;
        throw std::domain_error("arcosh: argument " + std::to_string(x) + " < 1");
    }
    // log1p form of log(x + sqrt(x^2-1)); (x-1)(x+1) avoids the x*x-1 rounding
    const double t = x - 1.0;
    return std::log1p(t + std::sqrt(t * (x + 1.0)));
}

namespace detail {

double clamp_unit(double v, double slack) {
    const double window = std::max(slack, kUlpSlack);
    if (v > 1.0) {
        if (v - 1.0 <= window) return 1.0;
        throw std::domain_error("argument " + std::to_string(v) + " above 1 beyond slack");
    }
    if (v < -1.0) {
        if (-1.0 - v <= window) return -1.0;
        throw std::domain_error("argument " + std::to_string(v) + " below -1 beyond slack");
    }
    return v;
}

AsinParts stable_asin_parts(double r, double s) {
    const double qm1 = (r - 1.0) * (r + 1.0) + s * s;  // r^2 + s^2 - 1
    const double d = std::hypot(qm1, 2.0 * s);
    // ep = G+ - 1; the division form avoids d - |qm1| cancellation
    const double ep = qm1 >= 0.0 ? d + qm1 : (4.0 * s * s) / (d - qm1);
    // em = 1 - G- through (1 - G-)(G+ + 1) = 4 r^2
    double em = (4.0 * r * r) / (ep + 2.0);
    if (em > 2.0) em = 2.0;
    const double acos_gm =
        2.0 * std::atan2(std::sqrt(em), std::sqrt(std::max(2.0 - em, 0.0)));
    const double arcosh_gp = std::log1p(ep + std::sqrt(ep * (ep + 2.0)));
    return {acos_gm, arcosh_gp};
}

}  // namespace detail

cx carcsin(cx w) {
    if (!finite(w)) throw_nonfinite("carcsin");
    const double r = w.real(), s = w.imag();
    if (s == 0.0 && (r < -1.0 || r > 1.0))
        throw std::domain_error("carcsin: argument on an excluded real ray");
    const auto [acos_gm, arcosh_gp] = detail::stable_asin_parts(r, s);
    return {0.5 * sgn(r) * acos_gm, 0.5 * sgn(s) * arcosh_gp};
}

cx carccos(cx w) {
    const cx as = carcsin(w);
    return {kPi / 2.0 - as.real(), -as.imag()};
}

}  // namespace cangle
