#include "cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "cangle/hilbert.hpp"

namespace cangle::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_g(double v, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string fmt_complex(cx z, int digits = 12) {
    const double re = z.real() == 0.0 ? 0.0 : z.real();  // drop negative zero
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    std::string s = fmt_g(re, digits);
    s += im < 0.0 ? "-" : "+";
    s += fmt_g(std::abs(im), digits);
    s += "i";
    return s;
}

struct Term {
    double value;
    bool imaginary;
};

Term parse_term(const char*& p) {
    double sign = 1.0;
    if (*p == '+') {
        ++p;
    } else if (*p == '-') {
        sign = -1.0;
        ++p;
    }
    if (*p == 'i' || *p == 'I') {
        ++p;
        return {sign, true};
    }
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p || !std::isfinite(v))
        throw std::invalid_argument("bad complex literal");
    p = end;
    if (*p == 'i' || *p == 'I') {
        ++p;
        return {sign * v, true};
    }
    return {sign * v, false};
}

}  // namespace

cx parse_complex(std::string_view sv) {
    std::string s;
    for (char c : sv)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    const char* p = s.c_str();
    double re = 0.0, im = 0.0;
    bool have_re = false, have_im = false;
    for (int terms = 0; *p != '\0'; ++terms) {
        if (terms >= 2) throw std::invalid_argument("bad complex literal: " + s);
        const Term t = parse_term(p);
        if (t.imaginary) {
            if (have_im) throw std::invalid_argument("bad complex literal: " + s);
            im = t.value;
            have_im = true;
        } else {
            if (have_re) throw std::invalid_argument("bad complex literal: " + s);
            re = t.value;
            have_re = true;
        }
    }
    if (!have_re && !have_im) throw std::invalid_argument("empty complex literal");
    return {re, im};
}

cvec parse_vector(std::string_view s) {
    cvec v;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        const std::string_view tok =
            s.substr(start, comma == std::string_view::npos ? s.size() - start : comma - start);
        v.push_back(parse_complex(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (v.empty()) throw std::invalid_argument("empty vector literal");
    return v;
}

namespace {

cx json_entry_to_cx(const ordered_json& e) {
    if (e.is_number()) return {e.get<double>(), 0.0};
    if (e.is_string()) return parse_complex(e.get<std::string>());
    throw std::invalid_argument("matrix/vector entries must be numbers or complex literals");
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_failure("cannot open file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw io_failure("read failure: " + path);
    return ordered_json::parse(text);
}

std::vector<cvec> load_vector_list(const std::string& path) {
    const ordered_json j = load_json_file(path);
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(path + ": expected a nonempty JSON array of vectors");
    std::vector<cvec> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw std::invalid_argument(path + ": rows must be arrays");
        cvec v;
        for (const auto& e : row) v.push_back(json_entry_to_cx(e));
        rows.push_back(std::move(v));
    }
    return rows;
}

}  // namespace

Space parse_norm(const std::string& spec, std::size_t dim) {
    if (spec == "l2") return Space::l2(dim);
    if (spec == "linf") return Space::linf(dim);
    if (spec.rfind("lp:", 0) == 0) {
        const double p = std::stod(spec.substr(3));
        return Space::lp(dim, p);
    }
    if (spec.rfind("gram:", 0) == 0) {
        const std::vector<cvec> rows = load_vector_list(spec.substr(5));
        const std::size_t n = rows.size();
        std::vector<cx> h;
        for (const cvec& r : rows) {
            if (r.size() != n)
                throw std::invalid_argument("gram matrix must be square");
            h.insert(h.end(), r.begin(), r.end());
        }
        return Space::gram(HermitianForm(n, std::move(h)));
    }
    if (spec.rfind("gauge:", 0) == 0)
        return Space::gauge(GeneratorSet(load_vector_list(spec.substr(6))));
    throw CLI::ValidationError("--norm", "unknown norm spec: " + spec);
}

std::string claims_to_json(const ClaimsReport& rep) {
    ordered_json j;
    j["r"] = rep.r;
    ordered_json claims = ordered_json::array();
    for (const Claim& c : rep.claims) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["paper_value"] = c.paper_value;
        jc["solver_value"] = c.solver_value;
        jc["lower_bound"] = c.lower_bound;
        jc["verdict"] = c.verdict;
        claims.push_back(std::move(jc));
    }
    j["claims"] = std::move(claims);
    j["product_re"] = rep.product.real();
    j["product_im"] = rep.product.imag();
    j["csb_margin"] = rep.csb_margin;
    return j.dump(2) + "\n";
}

ClaimsReport claims_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    ClaimsReport rep;
    rep.r = j.at("r").get<double>();
    for (const auto& jc : j.at("claims")) {
        Claim c;
        c.name = jc.at("name").get<std::string>();
        c.paper_value = jc.at("paper_value").get<double>();
        c.solver_value = jc.at("solver_value").get<double>();
        c.lower_bound = jc.at("lower_bound").get<double>();
        c.verdict = jc.at("verdict").get<std::string>();
        rep.claims.push_back(std::move(c));
    }
    rep.product = cx(j.at("product_re").get<double>(), j.at("product_im").get<double>());
    rep.csb_margin = j.at("csb_margin").get<double>();
    return rep;
}

std::string oval_csv(const std::vector<OvalSample>& rows) {
    std::string out = "phi,angle_re,angle_im,cos_re,cos_im\n";
    for (const OvalSample& r : rows) {
        out += fmt_g(r.phi) + "," + fmt_g(r.theta.real()) + "," + fmt_g(r.theta.imag()) +
               "," + fmt_g(r.cosine.real()) + "," + fmt_g(r.cosine.imag()) + "\n";
    }
    return out;
}

namespace {

struct Common {
    std::string out_path;
    std::string format = "text";
    double tol = 0.0;  // 0 = module default
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--out", c.out_path, "write output to a file instead of stdout");
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--tol", c.tol, "tolerance override");
}

int deliver(const std::string& payload, const Common& c, std::ostream& out) {
    if (c.out_path.empty()) {
        out << payload;
        return 0;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw io_failure("cannot open output file: " + c.out_path);
    f << payload;
    f.flush();
    if (!f) throw io_failure("write failure: " + c.out_path);
    return 0;
}

std::string json_rows(const char* name, const ordered_json& rows) {
    ordered_json j;
    j[name] = rows;
    return j.dump(2) + "\n";
}

cvec unit_in(const Space& s, cvec v) {
    const double n = s.norm(v);
    for (cx& z : v) z /= n;
    return v;
}

// the fixed counterexample pair of the max-norm demo
void linf_pair(cvec& x, cvec& y) {
    x = {cx(0.25, std::sqrt(15.0) / 4.0), cx(0.5, 0.5)};
    y = {cx(0.5, 0.25), cx(0.75, std::sqrt(7.0) / 4.0)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"complex angles in normed spaces"};
    app.name("cangle");
    app.require_subcommand(1);

    std::string payload;

    // --- angle ------------------------------------------------------------
    auto* angle_cmd = app.add_subcommand("angle", "angle of a pair of vectors");
    struct {
        std::string norm = "l2", xs, ys;
        Common common;
    } ang;
    angle_cmd->add_option("--norm", ang.norm, "l2|lp:p|linf|gram:FILE|gauge:FILE");
    angle_cmd->add_option("--x", ang.xs, "first vector")->required();
    angle_cmd->add_option("--y", ang.ys, "second vector")->required();
    add_common(angle_cmd, ang.common);
    angle_cmd->callback([&] {
        const cvec x = parse_vector(ang.xs), y = parse_vector(ang.ys);
        const Space s = parse_norm(ang.norm, x.size());
        const cx w = normalized_product(s, x, y);
        const cx theta = carccos(w);
        if (ang.common.format == "json") {
            ordered_json j;
            j["angle_re"] = theta.real();
            j["angle_im"] = theta.imag();
            j["cos_re"] = w.real();
            j["cos_im"] = w.imag();
            payload = j.dump(2) + "\n";
        } else {
            payload = "angle = " + fmt_complex(theta) + "\ncos   = " + fmt_complex(w) + "\n";
        }
        deliver(payload, ang.common, out);
    });

    // --- table ------------------------------------------------------------
    auto* table_cmd = app.add_subcommand("table", "eight-pair angle table");
    struct {
        std::string norm = "l2", xs, ys;
        Common common;
    } tab;
    table_cmd->add_option("--norm", tab.norm, "norm spec");
    table_cmd->add_option("--x", tab.xs)->required();
    table_cmd->add_option("--y", tab.ys)->required();
    add_common(table_cmd, tab.common);
    table_cmd->callback([&] {
        const cvec x = parse_vector(tab.xs), y = parse_vector(tab.ys);
        const Space s = parse_norm(tab.norm, x.size());
        const auto rows = angle_table(s, x, y);
        if (tab.common.format == "json") {
            ordered_json arr = ordered_json::array();
            for (const TableRow& r : rows) {
                ordered_json j;
                j["pair"] = r.label;
                j["angle_re"] = r.theta.real();
                j["angle_im"] = r.theta.imag();
                j["cos_re"] = r.cosine.real();
                j["cos_im"] = r.cosine.imag();
                arr.push_back(std::move(j));
            }
            payload = json_rows("rows", arr);
        } else {
            std::ostringstream os;
            os << "pair      | angle                          | cosine\n";
            os << "----------+--------------------------------+--------------------------------\n";
            for (const TableRow& r : rows) {
                os << r.label << std::string(10 - r.label.size(), ' ') << "| ";
                std::string a = fmt_complex(r.theta);
                os << a << std::string(a.size() < 31 ? 31 - a.size() : 1, ' ') << "| "
                   << fmt_complex(r.cosine) << "\n";
            }
            payload = os.str();
        }
        deliver(payload, tab.common, out);
    });

    // --- oval -------------------------------------------------------------
    auto* oval_cmd = app.add_subcommand("oval", "angles of (e^{i phi} x, y) on a phase grid");
    struct {
        std::string norm = "l2", xs, ys;
        std::size_t m = 64;
        bool csv = false;
        Common common;
    } ov;
    oval_cmd->add_option("--norm", ov.norm, "norm spec");
    oval_cmd->add_option("--x", ov.xs)->required();
    oval_cmd->add_option("--y", ov.ys)->required();
    oval_cmd->add_option("--m", ov.m, "number of samples");
    oval_cmd->add_flag("--csv", ov.csv, "emit CSV");
    add_common(oval_cmd, ov.common);
    oval_cmd->callback([&] {
        const cvec x = parse_vector(ov.xs), y = parse_vector(ov.ys);
        const Space s = parse_norm(ov.norm, x.size());
        const auto rows = oval_sample(s, x, y, ov.m);
        if (ov.csv || ov.common.format == "csv") {
            payload = oval_csv(rows);
        } else if (ov.common.format == "json") {
            ordered_json arr = ordered_json::array();
            for (const OvalSample& r : rows) {
                ordered_json j;
                j["phi"] = r.phi;
                j["angle_re"] = r.theta.real();
                j["angle_im"] = r.theta.imag();
                j["cos_re"] = r.cosine.real();
                j["cos_im"] = r.cosine.imag();
                arr.push_back(std::move(j));
            }
            payload = json_rows("samples", arr);
        } else {
            std::ostringstream os;
            for (const OvalSample& r : rows)
                os << "phi=" << fmt_g(r.phi, 6) << "  angle=" << fmt_complex(r.theta)
                   << "  cos=" << fmt_complex(r.cosine) << "\n";
            payload = os.str();
        }
        deliver(payload, ov.common, out);
    });

    // --- theta ------------------------------------------------------------
    auto* theta_cmd = app.add_subcommand("theta", "angle(x, y + t x) along a t-grid");
    struct {
        std::string norm = "l2", xs, ys, grid;
        Common common;
    } th;
    theta_cmd->add_option("--norm", th.norm, "norm spec");
    theta_cmd->add_option("--x", th.xs)->required();
    theta_cmd->add_option("--y", th.ys)->required();
    theta_cmd->add_option("--grid", th.grid, "comma-separated t values (default: 101 log points)");
    add_common(theta_cmd, th.common);
    theta_cmd->callback([&] {
        const cvec x = parse_vector(th.xs), y = parse_vector(th.ys);
        const Space s = parse_norm(th.norm, x.size());
        std::vector<double> grid;
        if (th.grid.empty()) {
            grid = default_theta_grid();
        } else {
            for (const cx& z : parse_vector(th.grid)) grid.push_back(z.real());
        }
        const auto rows = theta_profile(s, x, y, grid);
        if (th.common.format == "json") {
            ordered_json arr = ordered_json::array();
            for (const ThetaPoint& r : rows) {
                ordered_json j;
                j["t"] = r.t;
                j["angle_re"] = r.theta.real();
                j["angle_im"] = r.theta.imag();
                j["re_cos"] = r.re_cos;
                arr.push_back(std::move(j));
            }
            payload = json_rows("points", arr);
        } else if (th.common.format == "csv") {
            payload = "t,angle_re,angle_im,re_cos\n";
            for (const ThetaPoint& r : rows)
                payload += fmt_g(r.t) + "," + fmt_g(r.theta.real()) + "," +
                           fmt_g(r.theta.imag()) + "," + fmt_g(r.re_cos) + "\n";
        } else {
            std::ostringstream os;
            for (const ThetaPoint& r : rows)
                os << "t=" << fmt_g(r.t, 6) << "  angle=" << fmt_complex(r.theta)
                   << "  re_cos=" << fmt_g(r.re_cos) << "\n";
            payload = os.str();
        }
        deliver(payload, th.common, out);
    });

    // --- ix-check ----------------------------------------------------------
    auto* ix_cmd = app.add_subcommand("ix-check", "angle(ix,y) against the H-/H+ formula");
    struct {
        std::string norm = "l2";
        int pairs = 1000;
        std::uint64_t seed = 12345;
        int dim = 3;
        Common common;
    } ixc;
    ix_cmd->add_option("--norm", ixc.norm, "norm spec");
    ix_cmd->add_option("--pairs", ixc.pairs, "number of random pairs");
    ix_cmd->add_option("--seed", ixc.seed, "rng seed");
    ix_cmd->add_option("--dim", ixc.dim, "vector dimension for coordinate norms");
    add_common(ix_cmd, ixc.common);
    ix_cmd->callback([&] {
        const double tol = ixc.common.tol > 0.0 ? ixc.common.tol : 1e-8;
        std::mt19937_64 rng(ixc.seed);
        Space s = parse_norm(ixc.norm, static_cast<std::size_t>(ixc.dim));
        double worst = 0.0;
        for (int t = 0; t < ixc.pairs; ++t) {
            const cvec x = gaussian_vector(s.dim(), rng);
            const cvec y = gaussian_vector(s.dim(), rng);
            if (s.norm(x) < 1e-9 || s.norm(y) < 1e-9) continue;
            const cx direct = angle(s, scaled(cx(0, 1), x), y);
            const cx pred = angle_ix_predicted(decompose_angle(angle(s, x, y)));
            worst = std::max(worst, std::abs(direct - pred));
        }
        const bool pass = worst <= tol;
        if (ixc.common.format == "json") {
            ordered_json j;
            j["norm"] = s.describe();
            j["pairs"] = ixc.pairs;
            j["max_deviation"] = worst;
            j["tol"] = tol;
            j["pass"] = pass;
            payload = j.dump(2) + "\n";
        } else {
            payload = "max |angle(ix,y) - predicted| = " + fmt_g(worst) + " over " +
                      std::to_string(ixc.pairs) + " pairs (" + s.describe() + ")\n" +
                      (pass ? "PASS\n" : "FAIL\n");
        }
        deliver(payload, ixc.common, out);
        if (!pass) throw std::domain_error("ix-check exceeded tolerance");
    });

    // --- csb ---------------------------------------------------------------
    auto* csb_cmd = app.add_subcommand("csb", "audit of the S_r construction claims");
    struct {
        double r = 1.0;
        Common common;
    } csb;
    csb_cmd->add_option("--r", csb.r, "construction parameter")->required();
    add_common(csb_cmd, csb.common);
    csb_cmd->callback([&] {
        const double tol = csb.common.tol > 0.0 ? csb.common.tol : 1e-9;
        const ClaimsReport rep = claims_report(csb.r, tol);
        if (csb.common.format == "text") {
            std::ostringstream os;
            os << "r = " << fmt_g(rep.r) << "\n";
            for (const Claim& c : rep.claims)
                os << "  " << c.name << ": asserted " << fmt_g(c.paper_value) << ", solver "
                   << fmt_g(c.solver_value) << " (lower " << fmt_g(c.lower_bound) << ") -> "
                   << c.verdict << "\n";
            os << "  product = " << fmt_complex(rep.product)
               << "\n  csb_margin = " << fmt_g(rep.csb_margin) << "\n";
            payload = os.str();
        } else {
            payload = claims_to_json(rep);
        }
        deliver(payload, csb.common, out);
    });

    // --- linf-demo ----------------------------------------------------------
    auto* demo_cmd = app.add_subcommand(
        "linf-demo", "max-norm pair whose product is not e^{i phi}-homogeneous");
    struct {
        Common common;
    } demo;
    add_common(demo_cmd, demo.common);
    demo_cmd->callback([&] {
        cvec x, y;
        linf_pair(x, y);
        const Space s = Space::linf(2);
        const cx prod = gproduct(s, x, y);
        const cx eiphi(0.5, std::sqrt(3.0) / 2.0);
        const cx twisted = gproduct(s, scaled(eiphi, x), y);
        const cx scaled_prod = eiphi * prod;
        if (demo.common.format == "json") {
            ordered_json j;
            j["product_re"] = prod.real();
            j["product_im"] = prod.imag();
            j["twisted_re"] = twisted.real();
            j["twisted_im"] = twisted.imag();
            j["scaled_re"] = scaled_prod.real();
            j["scaled_im"] = scaled_prod.imag();
            j["modulus_product"] = std::abs(prod);
            j["modulus_twisted"] = std::abs(twisted);
            j["modulus_gap"] = std::abs(std::abs(twisted) - std::abs(prod));
            payload = j.dump(2) + "\n";
        } else {
            char buf[512];
            std::snprintf(buf, sizeof buf,
                          "<x|y>            = %.5f + %.5fi\n"
                          "<e^{iphi}x|y>    = %.5f + %.5fi\n"
                          "e^{iphi}<x|y>    = %.5f + %.5fi\n"
                          "moduli: %.5f vs %.5f (difference %.5f)\n",
                          prod.real(), prod.imag(), twisted.real(), twisted.imag(),
                          scaled_prod.real(), scaled_prod.imag(), std::abs(prod),
                          std::abs(twisted), std::abs(std::abs(twisted) - std::abs(prod)));
            payload = buf;
        }
        deliver(payload, demo.common, out);
    });

    // --- deformation ---------------------------------------------------------
    auto* def_cmd = app.add_subcommand("deformation", "sup |<a|b>| over unit pairs");
    struct {
        std::string norm = "l2";
        int samples = 2000;
        int refine = 6;
        int dim = 2;
        std::uint64_t seed = 12345;
        Common common;
    } def;
    def_cmd->add_option("--norm", def.norm, "norm spec");
    def_cmd->add_option("--samples", def.samples, "random unit pairs to draw");
    def_cmd->add_option("--refine", def.refine, "refinement rounds");
    def_cmd->add_option("--dim", def.dim, "vector dimension for coordinate norms");
    def_cmd->add_option("--seed", def.seed, "rng seed");
    add_common(def_cmd, def.common);
    def_cmd->callback([&] {
        const Space s = parse_norm(def.norm, static_cast<std::size_t>(def.dim));
        const DeformationEstimate est =
            deformation_estimate(s, def.samples, def.refine, def.seed);
        if (def.common.format == "json") {
            ordered_json j;
            j["norm"] = s.describe();
            j["value"] = est.value;
            ordered_json wa = ordered_json::array(), wb = ordered_json::array();
            for (const cx& z : est.witness_a) wa.push_back(fmt_complex(z));
            for (const cx& z : est.witness_b) wb.push_back(fmt_complex(z));
            j["witness_a"] = std::move(wa);
            j["witness_b"] = std::move(wb);
            payload = j.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "deformation estimate (" << s.describe() << ") = " << fmt_g(est.value)
               << "\nwitness a =";
            for (const cx& z : est.witness_a) os << " " << fmt_complex(z, 6);
            os << "\nwitness b =";
            for (const cx& z : est.witness_b) os << " " << fmt_complex(z, 6);
            os << "\n";
            payload = os.str();
        }
        deliver(payload, def.common, out);
    });

    // --- gauge-eval ----------------------------------------------------------
    auto* ge_cmd = app.add_subcommand("gauge-eval", "gauge norm of a vector with certificate");
    struct {
        std::string gens, xs;
        Common common;
    } ge;
    ge_cmd->add_option("--gens", ge.gens, "JSON file with generator vectors")->required();
    ge_cmd->add_option("--x", ge.xs, "vector")->required();
    add_common(ge_cmd, ge.common);
    ge_cmd->callback([&] {
        const double tol = ge.common.tol > 0.0 ? ge.common.tol : 1e-9;
        const GeneratorSet g(load_vector_list(ge.gens), tol);
        const cvec x = parse_vector(ge.xs);
        const GaugeValue v = atomic_gauge(g, x);
        if (ge.common.format == "json") {
            ordered_json j;
            j["value"] = v.value;
            j["gap"] = v.cert.gap;
            j["lower_bound"] = v.value - 0.5 * v.cert.gap;
            ordered_json prim = ordered_json::array(), dual = ordered_json::array();
            for (const cx& c : v.cert.primal) prim.push_back(fmt_complex(c));
            for (const cx& c : v.cert.dual) dual.push_back(fmt_complex(c));
            j["primal"] = std::move(prim);
            j["dual"] = std::move(dual);
            payload = j.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "gauge = " << fmt_g(v.value) << "  (gap " << fmt_g(v.cert.gap, 3) << ")\n";
            os << "primal coefficients:";
            for (const cx& c : v.cert.primal) os << " " << fmt_complex(c, 6);
            os << "\ndual functional:";
            for (const cx& c : v.cert.dual) os << " " << fmt_complex(c, 6);
            os << "\n";
            payload = os.str();
        }
        deliver(payload, ge.common, out);
    });

    // --- real-span -------------------------------------------------------------
    auto* rs_cmd = app.add_subcommand("real-span", "all-real-angle audit of an orthonormal span");
    struct {
        int n = 4;
        int dim = 6;
        int trials = 1000;
        std::uint64_t seed = 12345;
        Common common;
    } rs;
    rs_cmd->add_option("--n", rs.n, "orthonormal system size");
    rs_cmd->add_option("--dim", rs.dim, "ambient dimension");
    rs_cmd->add_option("--trials", rs.trials, "random coefficient pairs");
    rs_cmd->add_option("--seed", rs.seed, "rng seed");
    add_common(rs_cmd, rs.common);
    rs_cmd->callback([&] {
        if (rs.n < 1 || rs.dim < rs.n)
            throw std::domain_error("real-span: need 1 <= n <= dim");
        const HermitianForm h = HermitianForm::identity(static_cast<std::size_t>(rs.dim));
        std::mt19937_64 rng(rs.seed);
        std::vector<cvec> raw;
        for (int i = 0; i < rs.n; ++i)
            raw.push_back(gaussian_vector(static_cast<std::size_t>(rs.dim), rng));
        const std::vector<cvec> t = gram_schmidt(h, raw);
        const RealSpanAudit audit = real_span_angle_audit(h, t, rs.trials, rs.seed + 1);
        if (rs.common.format == "json") {
            ordered_json j;
            j["n"] = rs.n;
            j["dim"] = rs.dim;
            j["trials"] = rs.trials;
            j["max_im_residual"] = audit.max_im_residual;
            j["max_cos_mismatch"] = audit.max_cos_mismatch;
            payload = j.dump(2) + "\n";
        } else {
            payload = "max |Im angle| = " + fmt_g(audit.max_im_residual) +
                      "\nmax cosine mismatch = " + fmt_g(audit.max_cos_mismatch) + "\n";
        }
        deliver(payload, rs.common, out);
    });

    // --- geometry ---------------------------------------------------------------
    auto* geo_cmd = app.add_subcommand("geometry", "triangle sum and law-of-cosines demos");
    struct {
        Common common;
    } geo;
    add_common(geo_cmd, geo.common);
    geo_cmd->callback([&] {
        const HermitianForm h = HermitianForm::identity(2);
        const cvec x1{cx(2, 0), cx(0, 0)}, y1{cx(1, 0), cx(1, 0)};
        const cx tri_real = triangle_angle_sum(h, x1, y1);
        const cvec x2{cx(1, 0), cx(0, 0)};
        const cvec y2{cx(0.0, 0.5), cx(std::sqrt(3.0) / 2.0, 0.0)};
        const cx tri_complex = triangle_angle_sum(h, x2, y2);
        const cx law = law_of_cosines_residual(h, x2, y2);
        const cx law_sym = law_of_cosines_symmetric_residual(h, x2, y2);
        const cx addres = angle_additivity_residual(h, x2, y2);
        if (geo.common.format == "json") {
            ordered_json j;
            j["triangle_sum_real_pair"] = fmt_complex(tri_real);
            j["triangle_sum_complex_pair"] = fmt_complex(tri_complex);
            j["law_of_cosines_residual"] = fmt_complex(law);
            j["law_of_cosines_symmetric_residual"] = fmt_complex(law_sym);
            j["additivity_residual"] = fmt_complex(addres);
            payload = j.dump(2) + "\n";
        } else {
            std::ostringstream os;
            os << "triangle sum, real pair (2,0),(1,1):        " << fmt_complex(tri_real)
               << "\n"
               << "triangle sum, complex pair (1,0),(i/2,s3/2): " << fmt_complex(tri_complex)
               << "\n"
               << "law of cosines residual (complex pair):      " << fmt_complex(law) << "\n"
               << "symmetrized law residual:                    " << fmt_complex(law_sym)
               << "\n"
               << "angle additivity residual:                   " << fmt_complex(addres)
               << "\n";
            payload = os.str();
        }
        deliver(payload, geo.common, out);
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const io_failure& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const nlohmann::json::parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace cangle::cli
