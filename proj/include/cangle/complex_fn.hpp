#pragma once

#include "cangle/vec.hpp"

namespace cangle {

// Branch-exact complex elementary functions on two regions of the plane:
//
//   strip A     = { a + i*b : 0 < a < pi } united with the two points {0, pi}
//   cut plane B = C minus the real rays r < -1 and r > +1
//   square SQ   = [-1,1] x [-1,1], a subset of B
//
// cos maps A homeomorphically onto B and the arccos below is its inverse.
// All functions work on principal-style explicit real formulas; there is no
// multivalued machinery anywhere.

enum class RegionTag { a_interior, a_boundary, b, sq, outside };
enum class RegionQuery { strip_a, plane_b, square_sq };

// Three-valued signum; both +0.0 and -0.0 map to 0.
int sgn(double x);

// Exact membership per the set definitions above, no tolerance. Callers that
// need fuzz apply it before classifying. Non-finite input is `outside`.
RegionTag region_classify(cx z, RegionQuery which);

bool in_strip_a(cx z);
bool in_cut_plane_b(cx z);
bool in_square_sq(cx z);

// cos(a+ib) = cos(a)cosh(b) - i sin(a)sinh(b).
// Throws std::domain_error on non-finite input, std::range_error when
// cosh/sinh overflow.
cx ccos(cx z);

// sin(a+ib) = sin(a)cosh(b) + i cos(a)sinh(b). Errors as ccos.
cx csin(cx z);

// Real area hyperbolic cosine log(x + sqrt(x^2-1)) for x >= 1.
// Arguments below 1 by at most a few ulps are clamped; anything lower throws
// std::domain_error.
double arcosh(double x);

// arcsin(r+is) = 1/2 [ sgn(r) acos(G-) + i sgn(s) arcosh(G+) ] with
// G-/+ = sqrt((r^2+s^2-1)^2 + 4 s^2) -/+ (r^2+s^2).
// Defined on B; throws std::domain_error outside.
cx carcsin(cx w);

// arccos(w) = pi/2 - arcsin(w); maps B onto A.
cx carccos(cx w);

namespace detail {
// arccos(G-) and arcosh(G+) evaluated without cancellation. The identities
// (1 - G-)(G+ + 1) = 4 r^2 and (1 + G-)(G+ - 1) = 4 s^2 give the distances
// of G-/G+ from the arccos/arcosh branch points directly, so both outputs
// stay accurate to a few ulps even where the naive route loses half the
// digits (G- near +-1, G+ near 1).
struct AsinParts {
    double acos_gm;    // arccos(G-), in [0, pi]
    double arcosh_gp;  // arcosh(G+), >= 0
};
AsinParts stable_asin_parts(double r, double s);

// Clamp v into [-1,1] when it overshoots by at most `slack` (at least 4 ulps);
// larger overshoot throws std::domain_error.
double clamp_unit(double v, double slack = 0.0);
}  // namespace detail

}  // namespace cangle
