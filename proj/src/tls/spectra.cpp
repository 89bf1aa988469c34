#include "surfloss/tls.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace surfloss::tls {

namespace {

constexpr double kRefSplitting = 74e6;   // Hz, 2 nm junction oxide at 2 pF
constexpr double kRefCapacitance = 2e-12;
constexpr double kRefDistance = 2e-9;

double loglerp(double x, double x0, double x1, double y0, double y1) {
    if (x0 == x1) return y0;
    double f = std::log(x / x0) / std::log(x1 / x0);
    return y0 * std::pow(y1 / y0, f);
}

TlsSpectrum finish(std::string tag, std::vector<std::pair<double, double>> sa) {
    std::stable_sort(sa.begin(), sa.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
    TlsSpectrum sp;
    sp.tag = std::move(tag);
    double acc = 0.0;
    for (const auto& [s, a] : sa) {
        acc += a;
        if (!sp.points.empty() && sp.points.back().s_max_hz == s) {
            sp.points.back().area_um2 = acc;
            continue;
        }
        sp.points.push_back({s, acc});
    }
    return sp;
}

}  // namespace

double s_max(double e_over_v, Capacitance c) {
    if (!(c.value() > 0.0)) throw std::domain_error("s_max: capacitance must be positive");
    return kRefSplitting * std::sqrt(kRefCapacitance / c.value()) * kRefDistance * e_over_v;
}

double TlsSpectrum::s_max_at_area(double area) const {
    if (points.empty()) throw std::out_of_range("empty spectrum");
    if (area <= points.front().area_um2) return points.front().s_max_hz;
    if (area > points.back().area_um2) throw std::out_of_range("area beyond the tabulated spectrum");
    auto it = std::lower_bound(points.begin(), points.end(), area,
                               [](const TlsPoint& p, double a) { return p.area_um2 < a; });
    auto prev = it - 1;
    return loglerp(area, prev->area_um2, it->area_um2, prev->s_max_hz, it->s_max_hz);
}

double TlsSpectrum::area_at(double s) const {
    if (points.empty()) throw std::out_of_range("empty spectrum");
    if (s > points.front().s_max_hz || s < points.back().s_max_hz)
        throw std::out_of_range("splitting outside the tabulated spectrum");
    if (s == points.front().s_max_hz) return points.front().area_um2;
    auto it = std::lower_bound(points.begin(), points.end(), s,
                               [](const TlsPoint& p, double v) { return p.s_max_hz > v; });
    if (it == points.begin()) return it->area_um2;
    auto prev = it - 1;
    return loglerp(s, prev->s_max_hz, it->s_max_hz, prev->area_um2, it->area_um2);
}

TlsSpectrum ribbon_tls_profile(const Ribbon& r, const DielectricStack& st, Capacitance c, const RibbonTlsOptions& opt) {
    if (opt.samples < 10) throw std::invalid_argument("ribbon_tls_profile: too few samples");
    double t_ms = st.t_ms.value();
    double rmin = opt.min_distance.value() > 0.0 ? opt.min_distance.value() : t_ms;
    double af = opt.area_factor > 0.0 ? opt.area_factor : t_ms / 2e-9;
    double weight = st.eps_s / st.eps_ms;
    double a = r.a.value(), b = r.b.value(), h = 0.5 * r.t.value(), len = r.length.value();
    double rmax = 0.5 * (b - a);
    if (!(rmin < rmax)) throw std::domain_error("ribbon_tls_profile: minimum distance exceeds half the metal width");
    double e_cut = analytic::ribbon_field(a + h, r.a, r.b);

    std::vector<std::pair<double, double>> sa;
    double prev_r = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
        double rc = rmin * std::pow(rmax / rmin, double(i) / (opt.samples - 1));
        double e = rc < h ? analytic::corner_field(e_cut, rc, r.t.value()) : analytic::ribbon_field(a + rc, r.a, r.b);
        // two MS electrodes, one inner edge each
        double dA = (rc - prev_r) * 2.0 * len * af * 1e12;
        prev_r = rc;
        sa.emplace_back(s_max(weight * e, c), dA);
    }
    return finish("ribbon", std::move(sa));
}

TlsSpectrum wire_tls_spectrum(const StructureSpec& spec, const DielectricStack& st, Capacitance c,
                              const WireTlsOptions& opt) {
    double r0 = 0.0, slope = 0.0, d = 0.0, t = 0.0;
    std::string tag;
    if (const auto* w = std::get_if<StraightWire>(&spec)) {
        r0 = w->r.value(), d = w->d.value(), t = w->t.value(), tag = "straight_wire";
    } else if (const auto* w = std::get_if<TaperedWire>(&spec)) {
        r0 = w->r0.value(), slope = w->slope, d = w->d.value(), t = w->t.value(), tag = "tapered_wire";
    } else {
        throw std::invalid_argument("wire_tls_spectrum: structure is not a wire");
    }
    if (opt.sections < 10000) throw std::invalid_argument("wire_tls_spectrum: at least 1e4 sections required");
    double t_ms = st.t_ms.value();
    double weight = opt.interface_weight > 0.0 ? opt.interface_weight : st.eps_s / st.eps_ms;
    double af = opt.area_factor > 0.0 ? opt.area_factor : t_ms / 2e-9;
    double rmin = opt.min_distance.value() > 0.0 ? opt.min_distance.value() : t_ms;
    const std::size_t nx = 100, ny = std::max<std::size_t>(100, opt.sections / nx);
    double h = 0.5 * t;
    double y0 = 2.0 * r0;
    if (!(d > y0)) throw std::domain_error("wire_tls_spectrum: wire shorter than 2 r0");

    std::vector<std::pair<double, double>> sa;
    sa.reserve(nx * ny);
    for (std::size_t j = 0; j < ny; ++j) {
        double ya = y0 * std::pow(d / y0, double(j) / ny);
        double yb = y0 * std::pow(d / y0, double(j + 1) / ny);
        double y = std::sqrt(ya * yb);
        double rb = slope > 0.0 ? analytic::tapered_half_width(y, r0, slope, t) : r0;
        double efw = analytic::flat_wire_field(y, rb);
        double e_cut = rb / std::sqrt(rb * rb - (rb - h) * (rb - h));
        for (std::size_t i = 0; i < nx; ++i) {
            // distance from the film edge, geometric from rb down to 1e-5 rb
            double da = rb * std::pow(1e-5, double(i) / nx);
            double db = rb * std::pow(1e-5, double(i + 1) / nx);
            double dist = std::max(std::sqrt(da * db), rmin);
            double prof;
            if (dist > h) {
                double x = rb - dist;
                prof = rb / std::sqrt(rb * rb - x * x);
            } else {
                prof = analytic::corner_field(e_cut, dist, t);
            }
            // two wires, both halves of the width
            double dA = af * 4.0 * (da - db) * (yb - ya) * 1e12;
            sa.emplace_back(s_max(weight * efw * prof, c), dA);
        }
    }
    return finish(tag, std::move(sa));
}

double splitting_density(const TlsSpectrum& sp, double s1, double s2) {
    if (!(s1 < s2)) throw std::invalid_argument("splitting_density: requires S1 < S2");
    return kDensityPerUm2GHz * (sp.area_at(s1) - sp.area_at(s2));
}

ObservableSummary observable_summary(const TlsSpectrum& sp, double span_ghz) {
    if (!(span_ghz > 0.0)) throw std::invalid_argument("observable_summary: span must be positive");
    ObservableSummary o;
    // one splitting expected over the span
    o.area_threshold_um2 = 1.0 / (kDensityPerUm2GHz * span_ghz);
    o.largest_hz = sp.s_max_at_area(o.area_threshold_um2);
    o.density_per_ghz = splitting_density(sp, o.largest_hz / 3.0, o.largest_hz);
    o.mean_spacing_mhz = o.density_per_ghz > 0.0 ? 1e3 / o.density_per_ghz : 0.0;
    o.expected_in_span = o.density_per_ghz * span_ghz;
    return o;
}

PlateSplitting parallel_plate_splitting(const ParallelPlate& p, const DielectricStack& st, Capacitance c) {
    if (!(p.s.value() > 0.0) || !(p.w.value() > 0.0) || !(p.length.value() > 0.0))
        throw std::domain_error("parallel_plate_splitting: invalid plate");
    PlateSplitting out;
    out.effective_distance = p.s * st.eps_ma;
    out.s_max_hz = s_max(1.0 / out.effective_distance.value(), c);
    out.effective_area_um2 = st.t_ma.value() / 2e-9 * p.length.value() * p.w.value() * 1e12;
    return out;
}

}  // namespace surfloss::tls
