#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cangle/angle.hpp"
#include "cangle/hilbert.hpp"

using namespace cangle;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double dist(cx a, cx b) { return std::abs(a - b); }

// random orthonormal system of size k in dimension n
std::vector<cvec> random_ons(const HermitianForm& h, std::size_t k, std::mt19937_64& rng) {
    std::vector<cvec> raw;
    for (std::size_t i = 0; i < k; ++i) raw.push_back(gaussian_vector(h.dim(), rng));
    return gram_schmidt(h, raw);
}

// real random combination of a system
cvec real_combo(const std::vector<cvec>& t, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    cvec v(t.front().size(), cx(0, 0));
    for (const cvec& e : t) axpy(cx(u(rng), 0.0), e, v);
    return v;
}

}  // namespace

TEST_CASE("inner product pinned values") {
    const HermitianForm id2 = HermitianForm::identity(2);
    CHECK(dist(inner_eval(id2, {cx(1, 0), cx(0, 0)}, {cx(0, 0), cx(1, 0)}), cx(0, 0)) == 0.0);
    CHECK(dist(inner_eval(id2, {cx(0, 1), cx(0, 0)}, {cx(1, 0), cx(0, 0)}), cx(0, 1)) == 0.0);
    const HermitianForm d = HermitianForm::diagonal({2.0, 1.0});
    CHECK(dist(inner_eval(d, {cx(1, 0), cx(0, 0)}, {cx(1, 0), cx(0, 0)}), cx(2, 0)) == 0.0);
}

TEST_CASE("polarization: the norm-derived product recovers the inner product") {
    const HermitianForm h(3,
                          {cx(2, 0), cx(0.4, 0.3), cx(0, 0), cx(0.4, -0.3), cx(1.5, 0),
                           cx(0.1, -0.2), cx(0, 0), cx(0.1, 0.2), cx(1, 0)});
    const Space s = Space::gram(h);
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t) {
        const cvec x = gaussian_vector(3, rng), y = gaussian_vector(3, rng);
        CHECK(dist(gproduct(s, x, y), inner_eval(h, x, y)) < 1e-10);
    }
}

TEST_CASE("e^{i phi}-homogeneity holds with an inner product") {
    const HermitianForm h(2, {cx(1.5, 0), cx(0.2, 0.6), cx(0.2, -0.6), cx(2, 0)});
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> uphi(0.0, 2.0 * kPi);
    for (int t = 0; t < 200; ++t) {
        const cvec x = gaussian_vector(2, rng), y = gaussian_vector(2, rng);
        const double phi = uphi(rng);
        const cx e(std::cos(phi), std::sin(phi));
        CHECK(dist(inner_eval(h, scaled(e, x), y), e * inner_eval(h, x, y)) < 1e-12);
    }
}

TEST_CASE("gram-schmidt pinned and randomized") {
    const HermitianForm id2 = HermitianForm::identity(2);
    const auto out = gram_schmidt(id2, {{cx(1, 0), cx(0, 0)}, {cx(1, 0), cx(1, 0)}});
    REQUIRE(out.size() == 2);
    CHECK(dist(out[0][0], cx(1, 0)) < 1e-15);
    CHECK(dist(out[1][1], cx(1, 0)) < 1e-15);
    CHECK(std::abs(out[1][0]) < 1e-15);

    // already orthonormal input passes through
    const HermitianForm id4 = HermitianForm::identity(4);
    std::mt19937_64 rng(33);
    const auto ons = random_ons(id4, 3, rng);
    const auto again = gram_schmidt(id4, ons);
    for (std::size_t i = 0; i < ons.size(); ++i)
        CHECK(norm2(sub(ons[i], again[i])) < 1e-12);

    // R-independent all-real-product input: real combinations of a system
    for (int round = 0; round < 10; ++round) {
        const auto base = random_ons(id4, 3, rng);
        std::vector<cvec> combos;
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        // triangular mixing keeps them R-independent
        for (int i = 0; i < 3; ++i) {
            cvec v(4, cx(0, 0));
            for (int j = 0; j <= i; ++j)
                axpy(cx(j == i ? 1.0 : u(rng), 0.0), base[j], v);
            combos.push_back(std::move(v));
        }
        const auto ortho = gram_schmidt(id4, combos);
        CHECK(is_orthonormal_system(id4, ortho, 1e-9));
        // same real span: each output solves as a real combination of inputs
        for (const cvec& e : ortho) {
            cx resid(0, 0);
            for (const cvec& b : base) {
                const cx c = inner_eval(id4, e, b);
                CHECK(std::abs(c.imag()) < 1e-9);
                resid += c * std::conj(c);
            }
            CHECK(std::abs(resid.real() - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("gram-schmidt rank failures carry the failing index") {
    const HermitianForm id2 = HermitianForm::identity(2);
    try {
        gram_schmidt(id2, {{cx(1, 0), cx(0, 0)}, {cx(0, 1), cx(0, 0)}});
        FAIL("expected rank error");
    } catch (const rank_error& e) {
        CHECK(e.index == 1);
    }
    // n+1 R-independent all-real-product vectors cannot exist in C^n:
    // real combinations of an orthonormal basis must lose rank by step n+1
    const HermitianForm id3 = HermitianForm::identity(3);
    std::mt19937_64 rng(44);
    const auto base = random_ons(id3, 3, rng);
    std::vector<cvec> four;
    for (int i = 0; i < 4; ++i) four.push_back(real_combo(base, rng));
    CHECK_THROWS_AS(gram_schmidt(id3, four), rank_error);
}

TEST_CASE("orthonormality test") {
    const HermitianForm id3 = HermitianForm::identity(3);
    const std::vector<cvec> basis = {{cx(1, 0), cx(0, 0), cx(0, 0)},
                                     {cx(0, 0), cx(1, 0), cx(0, 0)},
                                     {cx(0, 0), cx(0, 0), cx(1, 0)}};
    CHECK(is_orthonormal_system(id3, basis, 1e-12));
    std::vector<cvec> scaled_basis = basis;
    scaled_basis[1] = scaled(cx(2, 0), scaled_basis[1]);
    CHECK_FALSE(is_orthonormal_system(id3, scaled_basis, 1e-12));
    std::mt19937_64 rng(55);
    CHECK(is_orthonormal_system(id3, random_ons(id3, 2, rng), 1e-12));
}

TEST_CASE("real span audit") {
    const HermitianForm id6 = HermitianForm::identity(6);
    std::mt19937_64 rng(66);
    const auto t = random_ons(id6, 4, rng);
    const RealSpanAudit audit = real_span_angle_audit(id6, t, 300, 99);
    CHECK(audit.max_im_residual < 1e-10);
    CHECK(audit.max_cos_mismatch < 1e-10);

    // y = z has residual zero
    const cvec y = real_combo(t, rng);
    double ny = id6.norm(y);
    CHECK(std::abs(hermitian_angle(id6, y, y).imag()) == 0.0);
    CHECK(ny > 0.0);

    // negative control: an imaginary coefficient breaks it
    cvec z = real_combo(t, rng);
    axpy(cx(0.0, 0.8), t[0], z);
    bool saw_imag = false;
    for (int tr = 0; tr < 20; ++tr) {
        const cvec w = real_combo(t, rng);
        if (std::abs(hermitian_angle(id6, w, z).imag()) > 1e-6) saw_imag = true;
    }
    CHECK(saw_imag);
}

TEST_CASE("angle additivity residual") {
    const HermitianForm id2 = HermitianForm::identity(2);
    const cvec e1{cx(1, 0), cx(0, 0)}, e2{cx(0, 0), cx(1, 0)};
    CHECK(std::abs(angle_additivity_residual(id2, e1, e2)) < 1e-12);  // pi/4+pi/4 = pi/2

    // spec pair: r = 0, s = -1/2
    const cvec y{cx(0, 0.5), cx(std::sqrt(3.0) / 2.0, 0)};
    const cx res = angle_additivity_residual(id2, e1, y);
    const cx want = carccos(cx(-0.25, -1.0)) - carccos(cx(0.0, -0.5));
    CHECK(dist(res, want) < 1e-12);
    CHECK(std::abs(res) > 0.1);

    // rotating onto a real product makes it vanish
    std::mt19937_64 rng(77);
    const Space l2s = Space::l2(2);
    for (int t = 0; t < 50; ++t) {
        cvec a = gaussian_vector(2, rng), b = gaussian_vector(2, rng);
        const double na = id2.norm(a), nb = id2.norm(b);
        for (cx& v : a) v /= na;
        for (cx& v : b) v /= nb;
        const double phi = find_real_angle_phase(l2s, a, b, 1e-13);
        cvec ar = scaled(cx(std::cos(phi), std::sin(phi)), a);
        const cx w = inner_eval(id2, ar, b);
        if (std::abs(1.0 + w.real()) < 1e-3) continue;  // skip near-antipodal
        CHECK(std::abs(angle_additivity_residual(id2, ar, b)) < 1e-9);
        // and a proper imaginary part keeps it bounded away from zero
        const cx w2 = inner_eval(id2, a, b);
        if (std::abs(w2.imag()) >= 0.1)
            CHECK(std::abs(angle_additivity_residual(id2, a, b)) >= std::abs(w2.imag()) / 2);
    }
    CHECK_THROWS_AS(angle_additivity_residual(id2, e1, neg(e1)), std::domain_error);
    CHECK_THROWS_AS(angle_additivity_residual(id2, scaled(cx(2, 0), e1), e2),
                    std::invalid_argument);
}

TEST_CASE("triangle angle sum") {
    const HermitianForm id2 = HermitianForm::identity(2);
    const cvec x{cx(2, 0), cx(0, 0)}, y{cx(1, 0), cx(1, 0)};
    CHECK(dist(triangle_angle_sum(id2, x, y), cx(kPi, 0)) < 1e-12);
    const cvec e1{cx(1, 0), cx(0, 0)}, e2{cx(0, 0), cx(1, 0)};
    CHECK(dist(triangle_angle_sum(id2, e1, e2), cx(kPi, 0)) < 1e-12);
    // complex-angle pair deviates
    const cvec yc{cx(0, 0.6), cx(0.8, 0)};
    CHECK(dist(triangle_angle_sum(id2, e1, yc), cx(kPi, 0)) > 1e-3);
    CHECK_THROWS_AS(triangle_angle_sum(id2, e1, e1), std::domain_error);
}

TEST_CASE("law of cosines") {
    const HermitianForm id2 = HermitianForm::identity(2);
    const cvec e1{cx(1, 0), cx(0, 0)}, e2{cx(0, 0), cx(1, 0)};
    CHECK(std::abs(law_of_cosines_residual(id2, e1, e2)) < 1e-12);
    CHECK(std::abs(law_of_cosines_residual(id2, e1, e1)) < 1e-12);

    std::mt19937_64 rng(88);
    for (int t = 0; t < 100; ++t) {
        const cvec a = gaussian_vector(2, rng), b = gaussian_vector(2, rng);
        const cx w = inner_eval(id2, a, b);
        const cx res = law_of_cosines_residual(id2, a, b);
        // residual is exactly 2 i Im<a|b>
        CHECK(dist(res, cx(0.0, 2.0 * w.imag())) < 1e-9);
        CHECK(std::abs(law_of_cosines_symmetric_residual(id2, a, b)) < 1e-9);
        if (std::abs(w.imag()) > 1e-3) CHECK(std::abs(res) > 1e-3);
    }
}

TEST_CASE("two real angle phases") {
    const HermitianForm id1 = HermitianForm::identity(1);
    // collinear with phase pi/3: phi = pi/3 + pi, angles {pi, 0}, a = pi/2
    const cvec a{cx(1, 0)};
    const cvec b{cx(std::cos(kPi / 3), std::sin(kPi / 3))};
    const RealAnglePhases col = two_real_angle_phases(id1, a, b);
    CHECK_FALSE(col.orthogonal_degenerate);
    CHECK(col.phi == Approx(kPi / 3 + kPi).epsilon(1e-12));
    CHECK(col.a == Approx(kPi / 2).epsilon(1e-7));
    CHECK(col.angle_at_phi == Approx(kPi).epsilon(1e-7));
    CHECK(std::abs(col.angle_opposite) < 1e-7);

    // modulus 1/sqrt2 pair: angles pi/2 +- pi/4
    const HermitianForm id2 = HermitianForm::identity(2);
    const cvec x{cx(1, 0), cx(0, 0)};
    const double isq2 = 1.0 / std::sqrt(2.0);
    const cvec y{cx(std::cos(0.7) * isq2, std::sin(0.7) * isq2), cx(isq2, 0)};
    const RealAnglePhases mid = two_real_angle_phases(id2, x, y);
    CHECK(mid.a == Approx(kPi / 4).epsilon(1e-12));
    CHECK(mid.angle_at_phi == Approx(kPi / 2 + kPi / 4).epsilon(1e-12));
    CHECK(mid.angle_opposite == Approx(kPi / 2 - kPi / 4).epsilon(1e-12));
    // the claimed phase really gives that angle
    const cvec xr = scaled(cx(std::cos(mid.phi), std::sin(mid.phi)), x);
    CHECK(hermitian_angle(id2, xr, y).real() == Approx(mid.angle_at_phi).epsilon(1e-10));
    CHECK(std::abs(hermitian_angle(id2, xr, y).imag()) < 1e-12);

    // already-real positive product keeps phi = 0
    const cvec z{cx(0.6, 0), cx(0.8, 0)};
    const RealAnglePhases pos = two_real_angle_phases(id2, x, z);
    CHECK(pos.phi == 0.0);
    CHECK(pos.angle_at_phi == Approx(std::acos(0.6)).epsilon(1e-12));

    // orthogonal pairs are flagged, not thrown
    const cvec e2{cx(0, 0), cx(1, 0)};
    const RealAnglePhases deg = two_real_angle_phases(id2, x, e2);
    CHECK(deg.orthogonal_degenerate);
    CHECK(deg.angle_at_phi == Approx(kPi / 2));
}

TEST_CASE("alternative angles") {
    const HermitianForm id2 = HermitianForm::identity(2);
    const cvec x{cx(1, 0), cx(0, 0)};

    // real positive product: all four equal arccos(r)
    const cvec y{cx(0.6, 0), cx(0.8, 0)};
    const AltAngles pos = alt_angles(id2, x, y);
    const double want = std::acos(0.6);
    CHECK(pos.a1 == Approx(want).epsilon(1e-12));
    CHECK(pos.a2 == Approx(want).epsilon(1e-12));
    CHECK(pos.a3 == Approx(want).epsilon(1e-12));
    CHECK(dist(pos.a4, cx(want, 0)) < 1e-12);

    // product = i (collinear by i): a1 = a2 = pi/2, a3 = 0, a4 = pi/2 + i pi/2
    const cvec yi{cx(0, -1), cx(0, 0)};
    const AltAngles ai = alt_angles(id2, x, yi);
    CHECK(ai.a1 == Approx(kPi / 2).epsilon(1e-12));
    CHECK(ai.a2 == Approx(kPi / 2).epsilon(1e-12));
    CHECK(std::abs(ai.a3) < 1e-7);
    CHECK(dist(ai.a4, cx(kPi / 2, kPi / 2)) < 1e-12);

    // product = -1: a4 = arccos(-1) = pi; a3 uses the nonnegative modulus,
    // so the antipodal pair reads as collinear
    const AltAngles am = alt_angles(id2, x, neg(x));
    CHECK(std::abs(am.a3) < 1e-7);
    CHECK(dist(am.a4, cx(kPi, 0)) < 1e-12);
}

TEST_CASE("arccos addition formula for real arguments") {
    std::mt19937_64 rng(111);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int used = 0;
    while (used < 300) {
        const double r = u(rng), t = u(rng);
        if (std::acos(r) + std::acos(t) > kPi) continue;
        ++used;
        const double lhs = std::acos(r) + std::acos(t);
        const double rhs =
            std::acos(r * t - std::sqrt(1.0 - r * r) * std::sqrt(1.0 - t * t));
        CHECK(lhs == Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("real span audit at larger sizes") {
    const HermitianForm id16 = HermitianForm::identity(16);
    std::mt19937_64 rng(222);
    const auto t = random_ons(id16, 8, rng);
    const RealSpanAudit audit = real_span_angle_audit(id16, t, 200, 5);
    CHECK(audit.max_im_residual < 1e-10);
}
