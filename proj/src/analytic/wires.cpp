#include "surfloss/analytic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <stdexcept>

namespace surfloss::analytic {

namespace {

using boost::math::quadrature::gauss_kronrod;

template <class F>
double integrate(F f, double a, double b) {
    return gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-12);
}

void check_straight(const StraightWire& w) {
    if (!(w.r.value() > 0.0) || !(w.d.value() > 2.0 * w.r.value()))
        throw std::domain_error("straight wire: requires d > 2 r > 0");
    if (!(w.t.value() > 0.0)) throw std::domain_error("straight wire: requires t > 0");
}

void check_tapered(const TaperedWire& w) {
    if (!(w.r0.value() > 0.0) || !(w.slope > 0.0)) throw std::domain_error("tapered wire: requires r0 > 0, S > 0");
    if (!(w.d.value() > 5.0 * w.t.value())) throw std::domain_error("tapered wire: requires d > 5 t");
}

}  // namespace

double cylinder_wire_field(double y, double r) {
    if (!(y > 0.5 * r)) throw std::domain_error("cylinder wire field: requires y > r/2");
    return 0.5 / (r * std::log(2.0 * y / r));
}

double flat_wire_field(double y, double rbar) {
    if (!(y > 0.25 * rbar)) throw std::domain_error("flat wire field: requires y > rbar/4");
    return 0.5 / (rbar * std::log(4.0 * y / rbar));
}

double tapered_half_width(double y, double r0, double slope, double t) {
    return std::max(r0, (y - 5.0 * t) * slope);
}

double straight_wire_metal_energy(const StraightWire& w, double c_m) {
    check_straight(w);
    double r = w.r.value(), lg = std::log(w.d / w.r);
    return 0.5 * (std::log(4.0 * r / w.t.value()) + c_m) / (lg * lg) * (w.d / w.r);
}

double straight_wire_substrate_energy(const StraightWire& w, double c_s) {
    check_straight(w);
    double r = w.r.value(), lg = std::log(w.d / w.r);
    return 0.25 * (std::log(4.0 * r / w.t.value()) + c_s) / (lg * lg) * (w.d / w.r);
}

double straight_wire_metal_energy_integral(const StraightWire& w, double c_m) {
    check_straight(w);
    double r = w.r.value();
    double num = std::log(4.0 * r / w.t.value()) + c_m;
    auto f = [&](double y) {
        double lg = std::log(4.0 * y / r);
        return num / (4.0 * r * lg * lg);
    };
    return 2.0 * integrate(f, 2.0 * r, w.d.value());
}

double straight_wire_substrate_energy_integral(const StraightWire& w, double c_s) {
    check_straight(w);
    double r = w.r.value();
    double lt = std::log(4.0 * r / w.t.value()) + c_s;
    auto f = [&](double y) {
        double lg = std::log(4.0 * y / r);
        return (lt - r / y) / (8.0 * r * lg * lg);
    };
    return 2.0 * integrate(f, 2.0 * r, w.d.value());
}

double tapered_wire_metal_energy(const TaperedWire& w, double c_m) {
    check_tapered(w);
    double S = w.slope, lq = std::log(4.0 / S);
    return 0.68 * std::log(w.d / w.r0) / S * (std::log(4.0 * S * w.d.value() / w.t.value()) + c_m) / (lq * lq);
}

double tapered_wire_substrate_energy(const TaperedWire& w, double c_s) {
    check_tapered(w);
    double S = w.slope, lq = std::log(4.0 / S);
    return 0.29 * std::log(w.d / w.r0) / S * (std::log(4.0 * S * w.d.value() / w.t.value()) + c_s) / (lq * lq);
}

double tapered_wire_metal_energy_integral(const TaperedWire& w, double c_m, double lower) {
    check_tapered(w);
    double r0 = w.r0.value(), S = w.slope, t = w.t.value(), d = w.d.value();
    if (!(lower > 0.0) || !(lower < d)) throw std::domain_error("tapered wire integral: lower limit outside (0, d)");
    auto f = [&](double y) {
        double r = tapered_half_width(y, r0, S, t);
        double lg = std::log(4.0 * y / r);
        return (std::log(4.0 * r / t) + c_m) / (4.0 * r * lg * lg);
    };
    double kink = 5.0 * t + r0 / S;
    if (kink > lower && kink < d) return 2.0 * (integrate(f, lower, kink) + integrate(f, kink, d));
    return 2.0 * integrate(f, lower, d);
}

double taper_local_optimum(double y_over_t, double c_m) {
    if (!(y_over_t > 0.0)) throw std::domain_error("taper_local_optimum: y/t must be positive");
    // y = y_over_t, t = 1; minimize over u = r/y in (0, 1)
    double y = y_over_t;
    auto f = [&](double u) {
        double r = u * y;
        double lg = std::log(4.0 / u);
        return (std::log(4.0 * r) + c_m) / (r * lg * lg);
    };
    double lo = std::max(1e-4, 0.26 / y);
    auto res = boost::math::tools::brent_find_minima(f, lo, 1.0, 52);
    return res.first;
}

TaperOptimum optimize_taper_slope(Length r0, Length d, Length t, CornerConstants c, double s_lo, double s_hi,
                                  int samples) {
    if (!(s_lo > 0.0) || !(s_lo < s_hi)) throw std::domain_error("optimize_taper_slope: invalid slope bracket");
    if (samples < 2) throw std::domain_error("optimize_taper_slope: need at least two samples");
    double lower = 2.0 * r0.value();
    auto energy = [&](double s) {
        return tapered_wire_metal_energy_integral(TaperedWire{r0, s, d, t}, c.c_m, lower);
    };
    TaperOptimum out;
    for (int i = 0; i < samples; ++i) {
        double s = s_lo + (s_hi - s_lo) * i / (samples - 1);
        out.curve.emplace_back(s, energy(s));
    }
    auto res = boost::math::tools::brent_find_minima(energy, s_lo, s_hi, 40);
    out.slope = res.first;
    out.energy = res.second;
    // a monotone curve puts the minimum on the bracket edge
    if (energy(s_hi) <= out.energy) out.slope = s_hi, out.energy = energy(s_hi);
    return out;
}

}  // namespace surfloss::analytic
