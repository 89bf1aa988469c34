#include "surfloss/cli.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace surfloss;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const char* fmt, ...) __attribute__((format(printf, 3, 4)));
};

void Outcome::require(bool ok, const char* fmt, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    if (!detail.empty()) detail += "; ";
    detail += buf;
    if (!ok) {
        detail += " [x]";
        pass = false;
    }
}

double rel(double v, double ref) { return std::abs(v / ref - 1.0); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const DielectricStack kStack;
const Ribbon kRibbon{micrometres(50), micrometres(100), micrometres(1391), micrometres(0.1)};
const Coplanar kCoplanar{micrometres(50), micrometres(100), micrometres(1138), micrometres(0.1)};

Outcome table2() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto cfg = cli::load_config(std::string(SURFLOSS_SOURCE_DIR) + "/configs/table2.ini");
    auto d = assemble_design(cfg.structures, cfg.stack, cli::assembly_options(cfg.targets));
    const double ref[5][3] = {{8.16e-5, 0, 0},
                              {1.04e-6, 1.42e-4, 2.74e-5},
                              {1.04e-6, 1.42e-4, 2.74e-5},
                              {7.47e-7, 1.02e-4, 1.30e-5},
                              {4.21e-7, 5.76e-5, 9.47e-6}};
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        const auto& b = d.breakdowns[i];
        double got[3] = {b.p_ma, b.p_ms, b.p_sa};
        for (int k = 0; k < 3; ++k) {
            if (ref[i][k] == 0.0) {
                if (got[k] != 0.0) worst = 1.0;
                continue;
            }
            worst = std::max(worst, rel(got[k], ref[i][k]));
        }
    }
    double dt = seconds_since(t0);
    o.require(worst <= 0.01, "worst rel error %.2e", worst);
    o.require(dt < 1.0, "%.3f s", dt);
    return o;
}

Outcome table1() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    DielectricStack st;
    st.eps_s = st.eps_ma = st.eps_ms = st.eps_sa = 10.0;
    st.t_ma = st.t_ms = st.t_sa = nanometres(3);
    st.tan_ma = st.tan_ms = st.tan_sa = 0.002;
    Ribbon r{micrometres(2.5), micrometres(4.5), micrometres(1000), micrometres(0.1)};
    auto p = analytic::ribbon_self_capacitance_participation(r, st);
    double ma = p.p_ma * st.tan_ma * 1e6, ms = p.p_ms * st.tan_ms * 1e6, sa = p.p_sa * st.tan_sa * 1e6;
    o.require(rel(ma, 0.060) <= 0.02 && rel(ms, 5.93) <= 0.02 && rel(sa, 3.57) <= 0.02,
              "losses (%.4f, %.3f, %.3f)e-6", ma, ms, sa);
    auto q = analytic::ribbon_self_capacitance_participation(r, st, CornerConstants{}, true);
    double ma2 = q.p_ma * st.tan_ma * 1e6;
    o.require(rel(ma2, 0.077) <= 0.02, "split-corner MA %.4fe-6", ma2);
    double dt = seconds_since(t0);
    o.require(dt < 1.0, "%.3f s", dt);
    return o;
}

Outcome lengths() {
    Outcome o;
    double L = capacitance_to_length(femtofarads(100)).value() * 1e3;
    o.require(std::abs(L - 11.3) < 0.05, "L = %.3f mm", L);
    ParallelPlate p{micrometres(5), micrometres(100), micrometres(1130)};
    for (auto [name, spec] : std::vector<std::pair<const char*, StructureSpec>>{
             {"plate", p}, {"ribbon", kRibbon}, {"coplanar", kCoplanar}}) {
        double c = to_fF(analytic::capacitance(spec, kStack.eps_s));
        o.require(rel(c, 100.0) <= 0.005, "%s %.2f fF", name, c);
    }
    return o;
}

Outcome corners() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<double> ratios{0.02, 0.05, 0.1, 0.2, 0.5};
    auto sq = bem::extract_corner_constant(bem::EdgeStyle::square, ratios);
    auto sc = bem::extract_corner_constant(bem::EdgeStyle::semicircular, ratios);
    double cm_lo = 1e9, cm_hi = -1e9, cs_lo = 1e9, cs_hi = -1e9;
    bool below = true;
    std::size_t unknowns = 0;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        cm_lo = std::min(cm_lo, sq.points[i].c_m), cm_hi = std::max(cm_hi, sq.points[i].c_m);
        cs_lo = std::min(cs_lo, sq.points[i].c_s), cs_hi = std::max(cs_hi, sq.points[i].c_s);
        below = below && sc.points[i].c_m < sq.points[i].c_m;
        unknowns = std::max({unknowns, sq.points[i].unknowns, sc.points[i].unknowns});
    }
    o.require(cm_lo >= 4.5 && cm_hi <= 5.5, "c_m in [%.3f, %.3f]", cm_lo, cm_hi);
    o.require(cs_lo >= 1.3 && cs_hi <= 1.9, "c_s in [%.3f, %.3f]", cs_lo, cs_hi);
    o.require(cm_hi - cm_lo < 0.5 && cs_hi - cs_lo < 0.3, "spread %.3f / %.3f", cm_hi - cm_lo, cs_hi - cs_lo);
    o.require(below, "semicircular c_m below square");
    double dt = seconds_since(t0);
    o.require(unknowns <= 10000, "%zu unknowns", unknowns);
    o.require(dt < 120.0, "%.1f s", dt);
    return o;
}

Outcome gold() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    auto c = bem::coax_study(10.0, 100.0, 50);
    o.require(c.rel_error < 0.005, "coax C error %.2e", c.rel_error);
    auto f = bem::flat_coax_thin(10.0, 100.0);
    double em = f.metal.max_rel_error(0.0, 9.95), es = f.substrate.max_rel_error(10.05, 90.0);
    o.require(em <= 0.03 && es <= 0.03, "flat-coax field error metal %.2e substrate %.2e", em, es);
    double dt = seconds_since(t0);
    o.require(dt < 30.0, "%.2f s", dt);
    return o;
}

Outcome wires() {
    Outcome o;
    for (double s : {0.0, 0.2}) {
        auto w = bem::cylinder_wire(0.1, s, 100.0);
        double e = w.profile.max_rel_error(0.2, 90.0);
        o.require(e <= 0.05, "ring solve S=%.1f max error %.3f", s, e);
    }
    double worst = 0.0, at = 0.0;
    for (double dr : {50.0, 100.0, 200.0, 500.0, 1000.0, 2000.0, 5000.0}) {
        StraightWire w{micrometres(0.1), micrometres(0.1 * dr), micrometres(0.1)};
        double e = rel(analytic::straight_wire_metal_energy(w, 5.0), analytic::straight_wire_metal_energy_integral(w, 5.0));
        if (e > worst) worst = e, at = dr;
    }
    o.require(worst <= 0.05, "closed form vs quadrature worst %.3f at d/r=%.0f", worst, at);
    return o;
}

Outcome taper() {
    Outcome o;
    auto r0 = micrometres(0.1), d = micrometres(50), t = micrometres(0.1);
    auto opt = analytic::optimize_taper_slope(r0, d, t);
    o.require(opt.slope >= 0.40 && opt.slope <= 0.45, "S* = %.3f", opt.slope);
    auto energy = [&](double s) {
        return analytic::tapered_wire_metal_energy_integral(TaperedWire{r0, s, d, t}, 5.0, 2.0 * r0.value());
    };
    double e28 = energy(0.28) / opt.energy, e16 = energy(0.16) / opt.energy;
    o.require(std::abs(e28 - 1.02) <= 0.01, "E(0.28)/min %.3f", e28);
    o.require(std::abs(e16 - 1.10) <= 0.02, "E(0.16)/min %.3f", e16);
    // length where the straight wire carries 1.5x the tapered energy
    auto ratio = [&](double dum) {
        StraightWire s{r0, micrometres(dum), t};
        TaperedWire w{r0, 0.4, micrometres(dum), t};
        return analytic::straight_wire_metal_energy_integral(s, 5.0) /
               analytic::tapered_wire_metal_energy_integral(w, 5.0, 2.0 * r0.value());
    };
    double lo = 1.0, hi = 100.0;
    for (int i = 0; i < 60; ++i) {
        double mid = std::sqrt(lo * hi);
        (ratio(mid) < 1.5 ? lo : hi) = mid;
    }
    o.require(lo >= 5.0 && lo <= 15.0, "crossover d = %.2f um", lo);
    return o;
}

Outcome ribbon_ground() {
    Outcome o;
    auto checks = cli::run_suite("ribbon-ground", 1.0);
    double worst_c = 0, worst_m = 0, worst_s = 0;
    for (const auto& c : checks) {
        double e = rel(c.computed, c.target);
        double& w = c.name.find(" C ") != std::string::npos ? worst_c : c.name.find("U_m") != std::string::npos ? worst_m : worst_s;
        w = std::max(w, e);
    }
    o.require(worst_c <= 0.05, "C fit worst %.3f", worst_c);
    o.require(worst_m <= 0.05, "metal fit worst %.3f", worst_m);
    o.require(worst_s <= 0.05, "substrate fit worst %.3f", worst_s);
    return o;
}

Outcome tls_predictions() {
    Outcome o;
    DielectricStack st;
    st.t_ma = st.t_ms = st.t_sa = nanometres(3);
    auto C = femtofarads(100);
    auto rs = tls::observable_summary(tls::ribbon_tls_profile(kRibbon, st, C), 2.0);
    o.require(rel(rs.largest_hz, 300e3) <= 0.2, "ribbon %.0f kHz", rs.largest_hz * 1e-3);
    o.require(rel(rs.mean_spacing_mhz, 200.0) <= 0.2, "ribbon spacing %.1f MHz", rs.mean_spacing_mhz);
    auto s = tls::wire_tls_spectrum(StraightWire{micrometres(0.1), micrometres(50), micrometres(0.1)}, st, C);
    auto t = tls::wire_tls_spectrum(TaperedWire{micrometres(0.1), 0.2, micrometres(50), micrometres(0.1)}, st, C);
    double s1 = s.s_max_at_area(1.0), t1 = t.s_max_at_area(1.0);
    o.require(s1 >= 0.8e6 && s1 <= 4.8e6, "straight %.2f MHz", s1 * 1e-6);
    o.require(t1 <= 1.8e6, "tapered %.2f MHz", t1 * 1e-6);
    auto p = tls::parallel_plate_splitting(ParallelPlate{micrometres(5), micrometres(100), micrometres(1130)}, st, C);
    o.require(rel(p.s_max_hz, 13e3) <= 0.2, "plate %.1f kHz", p.s_max_hz * 1e-3);
    o.require(rel(to_um(p.effective_distance), 49.0) <= 0.2, "distance %.1f um", to_um(p.effective_distance));
    return o;
}

template <class F>
double quad(F f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-13);
}

Outcome properties() {
    Outcome o;
    double worst = 0;
    for (double a : {5.0, 25.0, 50.0, 90.0}) {
        auto s = analytic::ribbon_sections(micrometres(a), micrometres(100), micrometres(0.1));
        worst = std::max(worst, std::abs(s.s_c - s.s_i - s.s_o) / std::abs(s.s_c));
    }
    o.require(worst <= 1e-12, "S_c - S_i - S_o %.1e", worst);

    auto rb = micrometres(1.0), R = micrometres(100.0);
    double v = quad([&](double s) { return 2.0 * s * analytic::flat_coax_field(rb.value() + s * s, rb, R); }, 2e-11,
                    std::sqrt(R.value() - rb.value()));
    o.require(std::abs(v - 1.0) <= 1e-4, "voltage integral %.8f", v);

    Length L = capacitance_to_length(femtofarads(100));
    auto pr = analytic::evaluate(kRibbon, kStack, L).breakdown;
    Coplanar c = kCoplanar;
    c.length = kRibbon.length * ((analytic::capacitance(kRibbon, kStack.eps_s).value() / kRibbon.length.value()) /
                                 (analytic::capacitance(kCoplanar, kStack.eps_s).value() / kCoplanar.length.value()));
    auto pc = analytic::evaluate(c, kStack, L).breakdown;
    double dual = std::max({rel(pc.p_ma, pr.p_ma), rel(pc.p_ms, pr.p_ms), rel(pc.p_sa, pr.p_sa)});
    o.require(dual <= 1e-9, "duality %.1e", dual);

    auto p3 = analytic::evaluate(kRibbon, kStack.scaled_thickness(3.0), L).breakdown;
    double lin = std::max({rel(p3.p_ma, 3 * pr.p_ma), rel(p3.p_ms, 3 * pr.p_ms), rel(p3.p_sa, 3 * pr.p_sa)});
    o.require(lin <= 1e-12, "linearity %.1e", lin);

    double scale = 0;
    for (double D : {2.0, 10.0}) {
        Ribbon r{kRibbon.a * D, kRibbon.b * D, kRibbon.length, kRibbon.t * D};
        Coplanar cc{kCoplanar.a * D, kCoplanar.b * D, kCoplanar.length, kCoplanar.t * D};
        ParallelPlate p0{micrometres(5), micrometres(100), micrometres(1130)}, pD{p0.s * D, p0.w * D, p0.length};
        auto a = analytic::evaluate(r, kStack, L).breakdown;
        auto b = analytic::evaluate(cc, kStack, L).breakdown;
        auto c0 = analytic::evaluate(kCoplanar, kStack, L).breakdown;
        scale = std::max({scale, rel(a.p_ms * D, pr.p_ms), rel(b.p_sa * D, c0.p_sa),
                          rel(analytic::evaluate(pD, kStack, L).breakdown.p_ma * D,
                              analytic::evaluate(p0, kStack, L).breakdown.p_ma)});
    }
    o.require(scale <= 1e-12, "1/D law %.1e", scale);

    auto c50 = bem::coax_study(10, 100, 50), c100 = bem::coax_study(10, 100, 100);
    auto r1 = bem::ribbon_thin(50, 100, 0, 0.05, 1.0), r2 = bem::ribbon_thin(50, 100, 0, 0.05, 2.0);
    double conv = std::max({rel(c50.capacitance, c100.capacitance), rel(r1.capacitance, r2.capacitance),
                            rel(r1.u_metal, r2.u_metal), rel(r1.u_substrate, r2.u_substrate)});
    o.require(conv < 0.005, "mesh doubling %.2e", conv);

    bem::Mesh m;
    for (int ring = 0; ring < 2; ++ring)
        for (int i = 0; i < 40; ++i) {
            double r = ring ? 3.0 : 1.0, a0 = 2 * kPi * i / 40, a1 = 2 * kPi * (i + 1) / 40;
            m.elements.push_back({{r * std::cos(a0), r * std::sin(a0)}, {r * std::cos(a1), r * std::sin(a1)}, 0.0,
                                  ring, ring, false});
        }
    auto M = bem::build_matrix_2d(m);
    double asym = (M.m - M.m.transpose()).cwiseAbs().maxCoeff() / M.m.cwiseAbs().maxCoeff();
    o.require(asym <= 1e-14, "matrix asymmetry %.1e", asym);
    return o;
}

Outcome edge() {
    Outcome o;
    auto e = analytic::edge_enhancement(micrometres(50), micrometres(0.1), CornerConstants{});
    o.require(rel(e.ratio, 4.0) <= 0.02, "ratio %.3f", e.ratio);
    o.require(rel(e.log_factor, 7.6) <= 0.02, "log factor %.3f", e.log_factor);
    o.require(rel(e.corner_share, 1.0 / 3.0) <= 0.02, "corner share %.3f", e.corner_share);
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"table II participations", table2},
        {"table I losses and corner split", table1},
        {"capacitance length anchors", lengths},
        {"corner constants", corners},
        {"gold-standard solver", gold},
        {"wire verification", wires},
        {"taper optimum", taper},
        {"ribbon with ground fits", ribbon_ground},
        {"TLS predictions", tls_predictions},
        {"property suites", properties},
        {"edge enhancement", edge},
    };
    int failed = 0, n = 0;
    for (const auto& [name, run] : criteria) {
        ++n;
        Outcome r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        failed += !r.pass;
        std::printf("criterion %2d %-32s %s  %s\n", n, name, r.pass ? "PASS" : "FAIL", r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria pass\n", n - failed, n);
    return failed ? 1 : 0;
}
