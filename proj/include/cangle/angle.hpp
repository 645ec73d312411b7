#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cangle/complex_fn.hpp"
#include "cangle/space.hpp"

namespace cangle {

// The norm-derived product
//   <x|y> = ||x|| ||y|| * 1/4 [ ||u+v||^2 - ||u-v||^2
//                               + i (||u+iv||^2 - ||u-iv||^2) ],  u=x/||x||, v=y/||y||,
// zero when either argument is zero. Reduces to the inner product whenever
// the norm satisfies the parallelogram identity.
cx gproduct(const Space& s, const cvec& x, const cvec& y);

// cos of the angle: gproduct(x,y)/(||x|| ||y||), nudged back into the cut
// plane when rounding pushes a real cosine past +-1 by no more than the
// space's evaluation slack. Throws std::domain_error on zero vectors.
cx normalized_product(const Space& s, const cvec& x, const cvec& y);

// The complex angle arccos(<x|y>/(||x|| ||y||)), always in the strip A.
cx angle(const Space& s, const cvec& x, const cvec& y);

// angle = pi/2 + a + i*b with a in [-pi/2, pi/2]
struct AngleParts {
    double a = 0.0;
    double b = 0.0;
};
// cosine = r + i*s inside the square SQ
struct CosineParts {
    double r = 0.0;
    double s = 0.0;
};

AngleParts decompose_angle(cx theta);     // theta must lie in A
CosineParts decompose_cos(cx c);          // c must lie in SQ
cx compose_angle(const AngleParts& p);    // pi/2 + a + i b

// Predicted angle of (i*x, y) from the decomposition of angle(x, y):
//   pi/2 + 1/2 [ -sgn(b) acos(H-) + i sgn(a) arcosh(H+) ]
// with H-' and H+ built from cos^2(pi/2+a) and cosh^2(b).
cx angle_ix_predicted(const AngleParts& d);

struct TableRow {
    std::string label;
    cx theta;
    cx cosine;
};

// The eight pairs (x,y), (-x,y), (y,x), (-y,x), (ix,y), (y,ix), (x,iy), (iy,x)
// with their angles and cosines. All eight cosines share one modulus.
std::array<TableRow, 8> angle_table(const Space& s, const cvec& x, const cvec& y);

struct OvalSample {
    double phi = 0.0;
    cx theta;
    cx cosine;
};

// m samples of angle(e^{i phi} x, y) at phi_k = 2 pi k / m.
std::vector<OvalSample> oval_sample(const Space& s, const cvec& x, const cvec& y,
                                    std::size_t m);

// phi in [0, 2pi) with |Im <e^{i phi} x | y>| < tol * ||x|| ||y||, found by a
// 64-point scan plus sign-change bisection. Existence is guaranteed because
// the imaginary part flips sign between phi and phi + pi.
double find_real_angle_phase(const Space& s, const cvec& x, const cvec& y,
                             double tol = 1e-10);

struct ThetaPoint {
    double t = 0.0;
    cx theta;
    double re_cos = 0.0;
};

// angle(x, y + t x) along a grid; the real part of the cosine is strictly
// increasing in t with limits -1 and 1.
std::vector<ThetaPoint> theta_profile(const Space& s, const cvec& x, const cvec& y,
                                      const std::vector<double>& grid);

// 101 log-spaced points, symmetric about 0, spanning +-[1e-4, 1e4].
std::vector<double> default_theta_grid();

struct DeformationEstimate {
    double value = 0.0;
    cvec witness_a;
    cvec witness_b;
};

// sup |<a|b>| over unit pairs, estimated by seeded random unit sampling plus
// coordinate-wise golden-section refinement of the best candidates. Always in
// [1, sqrt(2)] up to tolerance.
DeformationEstimate deformation_estimate(const Space& s, int n_samples, int n_refine,
                                         std::uint64_t seed);

// |<x|y>| - ||x|| ||y||; a positive value certifies a CSB violation.
double csb_margin(const Space& s, const cvec& x, const cvec& y);

// ||x+y||^2 + ||x-y||^2 - 2(||x||^2 + ||y||^2)
double parallelogram_defect(const Space& s, const cvec& x, const cvec& y);

}  // namespace cangle
