#include <cmath>
#include <stdexcept>

#include "cangle/angle.hpp"
#include "cangle/gauge.hpp"

namespace cangle {

namespace {

// margin separating "agrees with the asserted value" from "certified cheaper"
double margin(double tol) { return std::max(1e-7, 20.0 * tol); }

Claim norm_claim(const GeneratorSet& g, const std::string& name, const cvec& v,
                 double asserted) {
    const GaugeValue gv = atomic_gauge(g, v);
    Claim c;
    c.name = name;
    c.paper_value = asserted;
    c.solver_value = gv.value;
    c.lower_bound = gv.value - 0.5 * gv.cert.gap;  // the dual certificate value
    const double m = margin(g.tol());
    if (std::abs(gv.value - asserted) <= m && std::abs(c.lower_bound - asserted) <= m)
        c.verdict = "confirmed";
    else if (gv.value < asserted - m)
        c.verdict = "refuted-numerically";
    else
        c.verdict = "upper-bound-only";
    return c;
}

Claim equality_claim(const std::string& name, double asserted, double computed,
                     double uncertainty, double tol) {
    Claim c;
    c.name = name;
    c.paper_value = asserted;
    c.solver_value = computed;
    c.lower_bound = computed - uncertainty;
    const double m = margin(tol);
    if (std::abs(computed - asserted) <= m)
        c.verdict = "confirmed";
    else if (std::abs(computed - asserted) > uncertainty + m)
        c.verdict = "refuted-numerically";
    else
        c.verdict = "upper-bound-only";
    return c;
}

}  // namespace

ClaimsReport claims_report(double r, double tol) {
    if (!(r > 0.0)) throw std::domain_error("claims_report: r must be positive");
    const GeneratorSet g = sr_generators(r, tol);
    const Space space = Space::gauge(g);

    ClaimsReport rep;
    rep.r = r;

    const cvec e1{cx(1, 0), cx(0, 0)};
    const cvec e2{cx(0, 0), cx(1, 0)};
    rep.claims.push_back(norm_claim(g, "norm_(1,1)", {cx(1, 0), cx(1, 0)}, 2.0));
    rep.claims.push_back(norm_claim(g, "norm_(1,i)", {cx(1, 0), cx(0, 1)}, 2.0));
    rep.claims.push_back(norm_claim(g, "norm_(1,-1)", {cx(1, 0), cx(-1, 0)}, 1.0 / r));
    rep.claims.push_back(norm_claim(g, "norm_(1,-i)", {cx(1, 0), cx(0, -1)}, 1.0 / r));
    rep.claims.push_back(norm_claim(g, "norm_(1,0)", e1, 1.0));
    rep.claims.push_back(norm_claim(g, "norm_(0,1)", e2, 1.0));

    // recomputed product under the true gauge norm, against the asserted
    // 1/4 [ 2^2 - r^-2 + i (2^2 - r^-2) ]; the certificate gaps enter the
    // product through a handful of squared unit-scale norms, bounded crudely
    rep.product = gproduct(space, e1, e2);
    const double asserted_component = 0.25 * (4.0 - 1.0 / (r * r));
    const double uncertainty = 20.0 * 2.0 * tol;
    rep.claims.push_back(equality_claim("product_re", asserted_component,
                                        rep.product.real(), uncertainty, tol));
    rep.claims.push_back(equality_claim("product_im", asserted_component,
                                        rep.product.imag(), uncertainty, tol));
    const double asserted_mod = std::sqrt(2.0) * (1.0 - 1.0 / (4.0 * r * r));
    rep.claims.push_back(equality_claim("product_modulus", asserted_mod,
                                        std::abs(rep.product), uncertainty, tol));

    rep.csb_margin = csb_margin(space, e1, e2);
    return rep;
}

}  // namespace cangle
