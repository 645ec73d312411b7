#pragma once

#include <cstdint>
#include <vector>

#include "cangle/complex_fn.hpp"
#include "cangle/errors.hpp"
#include "cangle/hermitian.hpp"

namespace cangle {

// Geometry of inner-product spaces: orthonormal systems, real spans with
// all-real angles, angle additivity, triangle sum, law of cosines, and the
// alternative angle notions. Angles here are computed straight from the
// inner product; the norm-derived product agrees with it (polarization).

cx inner_eval(const HermitianForm& h, const cvec& x, const cvec& y);

// arccos(<x|y>/(||x|| ||y||)) with the inner product evaluated directly.
cx hermitian_angle(const HermitianForm& h, const cvec& x, const cvec& y);

// Modified Gram-Schmidt with one re-orthogonalization pass when orthogonality
// loss exceeds 1e-8. Output spans the same real span whenever all pairwise
// inner products of the input are real. Throws rank_error (with the failing
// index) when the input is dependent over C.
std::vector<cvec> gram_schmidt(const HermitianForm& h, const std::vector<cvec>& input,
                               double rank_tol = 1e-10);

bool is_orthonormal_system(const HermitianForm& h, const std::vector<cvec>& vecs,
                           double tol);

struct RealSpanAudit {
    double max_im_residual = 0.0;   // max |Im angle(y,z)| over the trials
    double max_cos_mismatch = 0.0;  // max |cos angle - sum r_i s_i/(|y||z|)|
};

// Draws `trials` random real-coefficient pairs from the span of the
// orthonormal system T and audits that every angle is real.
RealSpanAudit real_span_angle_audit(const HermitianForm& h, const std::vector<cvec>& t,
                                    int trials, std::uint64_t seed);

// angle(x, x+y) + angle(x+y, y) - angle(x, y) for unit vectors; zero exactly
// when the product <x|y> is real.
cx angle_additivity_residual(const HermitianForm& h, const cvec& x, const cvec& y);

// angle(x,y) + angle(-x, y-x) + angle(-y, x-y); equals pi for real angles.
cx triangle_angle_sum(const HermitianForm& h, const cvec& x, const cvec& y);

// ||x-y||^2 - [||x||^2 + ||y||^2 - 2 ||x|| ||y|| cos angle(x,y)]
cx law_of_cosines_residual(const HermitianForm& h, const cvec& x, const cvec& y);

// symmetrized form with cos angle(x,y) + cos angle(y,x); identically ~0
cx law_of_cosines_symmetric_residual(const HermitianForm& h, const cvec& x, const cvec& y);

struct RealAnglePhases {
    double phi = 0.0;           // phase with a real angle at e^{i phi} x
    double angle_at_phi = 0.0;  // real angle of (e^{i phi} x, y)
    double angle_opposite = 0.0;  // real angle at phi + pi
    double a = 0.0;             // the two angles are pi/2 + a and pi/2 - a
    bool orthogonal_degenerate = false;  // <x|y> = 0: every phase gives pi/2
};

// The oval of an inner-product pair crosses the real axis exactly twice; for
// an already-real positive product phi = 0 is returned.
RealAnglePhases two_real_angle_phases(const HermitianForm& h, const cvec& x, const cvec& y);

struct AltAngles {
    double a1 = 0.0;  // Re angle(x,y)
    double a2 = 0.0;  // arccos of Re of the normalized product
    double a3 = 0.0;  // arccos(rho), polar modulus of the normalized product
    cx a4;            // arccos(r) + i arcsin(s)
};

AltAngles alt_angles(const HermitianForm& h, const cvec& x, const cvec& y);

}  // namespace cangle
