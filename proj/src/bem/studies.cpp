#include "surfloss/bem.hpp"

#include <algorithm>
#include <cmath>

namespace surfloss::bem {

double ProfileComparison::max_rel_error(double lo, double hi) const {
    double m = 0.0;
    for (std::size_t i = 0; i < position.size(); ++i)
        if (position[i] >= lo && position[i] <= hi) m = std::max(m, std::abs(computed[i] / formula[i] - 1.0));
    return m;
}

namespace {

void add_polyline(Mesh& m, const std::vector<Point2>& pts, int electrode, int group) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) m.elements.push_back({pts[i], pts[i + 1], 0.0, electrode, group});
}

std::vector<Point2> arc(double cx, double cy, double rad, double th0, double th1, int n) {
    std::vector<Point2> p;
    for (int i = 0; i <= n; ++i) {
        double th = th0 + (th1 - th0) * i / n;
        p.push_back({cx + rad * std::cos(th), cy + rad * std::sin(th)});
    }
    return p;
}

std::vector<double> join(std::vector<double> a, const std::vector<double>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end(), [](double x, double y) { return std::abs(x - y) < 1e-12 * std::max(1.0, std::abs(x)); }),
            a.end());
    return a;
}

int scaled(double n, double s) { return std::max(4, int(std::lround(n * s))); }

}  // namespace

CoaxStudy coax_study(double r, double R, int per_quarter) {
    if (!(r > 0.0 && r < R)) throw std::domain_error("coax_study: requires 0 < r < R");
    Mesh m;
    m.mirror_x = m.mirror_y = Parity::even;
    m.grading = "uniform quarter arcs";
    add_polyline(m, arc(0, 0, r, 0, kPi / 2, per_quarter), 0, 0);
    add_polyline(m, arc(0, 0, R, 0, kPi / 2, per_quarter), 1, 1);
    auto sol = solve(build_matrix_2d(m), m, {1.0, 0.0}, {1.0, 4.0});
    CoaxStudy s;
    s.capacitance = sol.capacitance;
    s.exact = 2.0 * kPi / std::log(R / r);
    s.rel_error = s.capacitance / s.exact - 1.0;
    s.unknowns = m.size();
    return s;
}

FlatCoaxThinStudy flat_coax_thin(double rbar, double R, double mesh_scale) {
    Mesh m;
    m.mirror_x = Parity::even;
    m.sheet = true;
    double hmin = 1e-4 * rbar / mesh_scale, hmax = rbar / 20.0 / mesh_scale;
    m.grading = "geometric 1.15 toward the film edge";
    std::vector<Point2> strip;
    for (double x : graded_span(0.0, rbar, hmin, hmax, false, true)) strip.push_back({x, 0.0});
    add_polyline(m, strip, 0, 0);
    std::size_t nm = m.size();
    add_polyline(m, arc(0, 0, R, -kPi / 2, kPi / 2, scaled(600, mesh_scale)), 1, 1);
    auto sol = solve(build_matrix_2d(m), m, {1.0, 0.0}, {1.0, 2.0});

    FlatCoaxThinStudy s;
    s.unknowns = m.size();
    for (std::size_t i = 0; i < nm; ++i) {
        const auto& e = m.elements[i];
        double x = e.mid().x;
        s.metal.position.push_back(x);
        s.metal.computed.push_back(std::abs(sol.charges[i]) / e.width() / 2.0);
        s.metal.formula.push_back(analytic::flat_coax_field(x, Length(rbar), Length(R)));
    }
    auto xs = graded_span(rbar, R, 1e-4 * rbar / mesh_scale, rbar / 10.0 / mesh_scale, true, false);
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        double x = 0.5 * (xs[k] + xs[k + 1]);
        auto E = field_at(m, sol, {x, 0.0});
        s.substrate.position.push_back(x);
        s.substrate.computed.push_back(std::hypot(E.x, E.y));
        s.substrate.formula.push_back(analytic::flat_coax_field(x, Length(rbar), Length(R)));
    }
    s.charge_ratio = sol.capacitance / (2.0 * kPi / std::log(2.0 * R / rbar));
    return s;
}

FlatCoaxThickStudy flat_coax_thick(double rbar, double R, double t, EdgeStyle style, double mesh_scale) {
    if (!(t > 0.0 && t < rbar && R > 2.0 * rbar)) throw std::domain_error("flat_coax_thick: requires 0 < t < rbar, R > 2 rbar");
    Mesh m;
    m.mirror_x = m.mirror_y = Parity::even;
    double hmin = t / 2000.0 / mesh_scale, hmax = rbar / 20.0 / mesh_scale;
    m.grading = "geometric 1.15 toward corners, hmin t/2000";
    double h = 0.5 * t;
    std::vector<Point2> top;
    if (style == EdgeStyle::square) {
        for (double x : graded_span(0.0, rbar, hmin, hmax, false, true)) top.push_back({x, h});
        add_polyline(m, top, 0, 0);
        m.elements.back().corner = true;
        auto ys = graded_span(0.0, h, hmin, hmax, false, true);
        std::vector<Point2> side;
        for (auto it = ys.rbegin(); it != ys.rend(); ++it) side.push_back({rbar, *it});
        std::size_t first = m.size();
        add_polyline(m, side, 0, 0);
        m.elements[first].corner = true;
    } else {
        double xc = rbar - h;
        for (double x : graded_span(0.0, xc, hmin, hmax, false, true)) top.push_back({x, h});
        add_polyline(m, top, 0, 0);
        int na = int(std::ceil(kPi / 2 * h / (3.0 * hmin))) + 4;
        add_polyline(m, arc(xc, 0.0, h, kPi / 2, 0.0, na), 0, 0);
    }
    add_polyline(m, arc(0, 0, R, 0, kPi / 2, scaled(200, mesh_scale)), 1, 1);
    auto sol = solve(build_matrix_2d(m), m, {1.0, 0.0}, {1.0, 4.0});

    SurfaceEnergyRequest req;
    req.metal_groups = {0};
    req.multiplicity = 4.0;
    auto metal = surface_energy(m, sol, req);
    SurfaceEnergyRequest sub;
    sub.substrate = {{{rbar, 0.0}, {R, 0.0}}};
    sub.line_hmin = hmin;
    sub.line_hmax = 4.0 * hmax;
    sub.multiplicity = 2.0;
    auto subs = surface_energy(m, sol, sub);

    FlatCoaxThickStudy s;
    s.t_over_r = t / rbar;
    s.u_metal = metal.u_metal;
    s.u_substrate = subs.u_substrate;
    double ef = 1.0 / (rbar * std::log(2.0 * R / rbar));
    double lg = std::log(4.0 * rbar / t);
    s.c_m = s.u_metal / (ef * ef * rbar) - lg;
    s.c_s = s.u_substrate / (ef * ef * rbar / 2.0) - lg + 2.0 * rbar / R;
    s.unknowns = m.size();
    return s;
}

CornerCurve extract_corner_constant(EdgeStyle style, const std::vector<double>& t_over_r, double mesh_scale) {
    CornerCurve c;
    c.style = style;
    for (double q : t_over_r) c.points.push_back(flat_coax_thick(1.0, 20.0, q, style, mesh_scale));
    return c;
}

RibbonStudy ribbon_thin(double a, double b, double c, double cutoff, double mesh_scale) {
    if (!(a > 0.0 && a < b)) throw std::domain_error("ribbon_thin: requires 0 < a < b");
    bool ground = c > 0.0;
    if (ground && !(c > b)) throw std::domain_error("ribbon_thin: requires c > b");
    if (!(cutoff > 0.0 && 2.0 * cutoff < b - a)) throw std::domain_error("ribbon_thin: invalid cutoff");
    Mesh m;
    m.mirror_x = Parity::odd;
    m.sheet = true;
    double hmin = cutoff / 20.0 / mesh_scale, hmax = b / 20.0 / mesh_scale;
    m.grading = "geometric 1.15 toward edges and cutoffs";
    auto xr = join(graded_span(a, a + cutoff, hmin, hmax, true, true), graded_span(a + cutoff, b - cutoff, hmin, hmax, true, true));
    xr = join(xr, graded_span(b - cutoff, b, hmin, hmax, true, true));
    std::vector<Point2> rp;
    for (double x : xr) rp.push_back({x, 0.0});
    add_polyline(m, rp, 0, 0);
    if (ground) {
        double X = c + 50.0 * b;
        auto xg = join(graded_span(c, c + cutoff, hmin, hmax, true, true), graded_span(c + cutoff, X, hmin, 5.0 * hmax, true, false));
        std::vector<Point2> gp;
        for (double x : xg) gp.push_back({x, 0.0});
        add_polyline(m, gp, 1, 1);
    }
    std::vector<double> volts = ground ? std::vector<double>{0.5, 0.0} : std::vector<double>{0.5};
    auto sol = solve(build_matrix_2d(m), m, volts, {1.0, 1.0});

    SurfaceEnergyRequest req;
    req.cutoff = cutoff;
    req.edges = {{a, 0.0}, {b, 0.0}};
    if (ground) req.edges.push_back({c, 0.0});
    req.metal_groups = {0, 1};
    req.multiplicity = 2.0;
    req.substrate.push_back({{0.0, 0.0}, {a - cutoff, 0.0}});
    req.substrate.push_back({{b + cutoff, 0.0}, {ground ? c - cutoff : b + 2000.0 * b, 0.0}});
    req.line_hmin = hmin;
    req.line_hmax = hmax;
    auto e = surface_energy(m, sol, req);

    RibbonStudy s;
    s.capacitance = sol.capacitance;
    s.u_metal = e.u_metal;
    s.u_substrate = e.u_substrate;
    s.warnings = e.warnings;
    s.unknowns = m.size();
    return s;
}

WireStudy cylinder_wire(double r0, double slope, double d, double mesh_scale) {
    if (!(r0 > 0.0 && d > 2.0 * r0 && slope >= 0.0)) throw std::domain_error("cylinder_wire: invalid geometry");
    auto rf = [&](double y) { return std::max(r0, slope * y); };
    double g = 0.5 * r0;
    double hmin = r0 / 20.0 / mesh_scale, hmax = d / 200.0 / mesh_scale;
    Mesh m;
    m.kind = KernelKind::ring;
    m.mirror_y = Parity::odd;
    m.grading = "geometric 1.15 toward both wire ends";
    auto ys = graded_span(g, d, hmin, hmax, true, true);
    if (slope > 0.0 && r0 / slope > g && r0 / slope < d) ys = join(ys, {r0 / slope});

    std::vector<Point2> cap0, side, cap1;
    for (double r : graded_span(0.0, rf(g), hmin, hmax, false, true)) cap0.push_back({r, g});
    for (double y : ys) side.push_back({rf(y), y});
    auto rr = graded_span(0.0, rf(d), hmin, hmax, false, true);
    for (auto it = rr.rbegin(); it != rr.rend(); ++it) cap1.push_back({*it, d});
    add_polyline(m, cap0, 0, 1);
    std::size_t s0 = m.size();
    add_polyline(m, side, 0, 0);
    std::size_t s1 = m.size();
    add_polyline(m, cap1, 0, 1);

    auto sol = solve(build_matrix_ring(m), m, {0.5}, {1.0, 1.0});
    auto sd = surface_density(m, sol);
    WireStudy w;
    w.capacitance = sol.capacitance;
    w.unknowns = m.size();
    for (std::size_t i = s0; i < s1; ++i) {
        Point2 c = m.elements[i].mid();
        w.profile.position.push_back(c.y);
        w.profile.computed.push_back(std::abs(sd[i]));
        w.profile.formula.push_back(analytic::cylinder_wire_field(c.y, c.x));
    }
    return w;
}

WireStudy flat_wire(double r0, double slope, double d, double t, double mesh_scale) {
    if (!(r0 > 0.0 && d > 5.0 * t && slope >= 0.0)) throw std::domain_error("flat_wire: invalid geometry");
    auto rf = [&](double y) { return slope > 0.0 ? analytic::tapered_half_width(y, r0, slope, t) : r0; };
    double g = 0.5 * r0;
    double hmin = r0 / 20.0 / mesh_scale, hmax = d / 200.0 / mesh_scale;
    Mesh m;
    m.kind = KernelKind::flat_wire;
    m.mirror_y = Parity::odd;
    m.grading = "geometric 1.15 toward both wire ends";
    auto ys = graded_span(g, d, hmin, hmax, true, true);
    double kink = 5.0 * t + (slope > 0.0 ? r0 / slope : 0.0);
    if (slope > 0.0 && kink > g && kink < d) ys = join(ys, {kink});
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
        Element e{{0.0, ys[i]}, {0.0, ys[i + 1]}, rf(0.5 * (ys[i] + ys[i + 1])), 0, 0};
        m.elements.push_back(e);
    }
    auto sol = solve(build_matrix_flatwire(m), m, {0.5}, {1.0, 1.0});
    WireStudy w;
    w.capacitance = sol.capacitance;
    w.unknowns = m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
        const auto& e = m.elements[i];
        double y = e.mid().y;
        w.profile.position.push_back(y);
        w.profile.computed.push_back(std::abs(sol.charges[i]) / e.width() / (2.0 * kPi * e.half_width));
        w.profile.formula.push_back(analytic::flat_wire_field(y, e.half_width));
    }
    return w;
}

}  // namespace surfloss::bem
