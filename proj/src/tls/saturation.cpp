#include "surfloss/tls.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace surfloss::tls {

namespace {

using boost::math::quadrature::gauss_kronrod;

template <class F>
double gk(F f, double a, double b, double tol) {
    return gauss_kronrod<double, 31>::integrate(f, a, b, 12, tol);
}

void check_line(const Coplanar& c) {
    if (!c.single_ended) throw std::invalid_argument("saturation: coplanar line must be single-ended");
    if (!(c.a.value() > 0.0) || !(c.a < c.b) || !(c.t.value() > 0.0))
        throw std::domain_error("saturation: requires 0 < a < b, t > 0");
}

}  // namespace

double saturate(double e_sq, double e_s) {
    if (!(e_s > 0.0)) throw std::domain_error("saturate: E_s must be positive");
    return e_sq / std::sqrt(1.0 + e_sq / (e_s * e_s));
}

double saturated_surface_energy(const Coplanar& cpw, double e_s, double volts) {
    check_line(cpw);
    double a = cpw.a.value(), b = cpw.b.value(), h = 0.5 * cpw.t.value();
    double amp = volts / ellipk_complement(a / b);
    auto f = [&](double x) {
        double e2 = amp * amp * b * b / std::abs((x * x - a * a) * (x * x - b * b));
        return saturate(e2, e_s);
    };
    double inner = gk(f, 0.0, 0.5 * (a - h), 1e-10) + gk(f, 0.5 * (a - h), a - h, 1e-10);
    double outer = gk(f, b + h, 2.0 * b, 1e-10) + gk(f, 2.0 * b, std::numeric_limits<double>::infinity(), 1e-10);
    // (1/2) x two faces x two halves
    return 2.0 * (inner + outer);
}

double saturated_volume_energy(const Coplanar& cpw, double e_s, double volts) {
    check_line(cpw);
    // z = a sn(w, k) maps the rectangle [-K, K] x [0, K'] onto the upper half plane,
    // where the field is uniform; integrate |dz/dw|^2 * saturate(E0^2 / |dz/dw|^2) there
    double a = cpw.a.value(), k = a / cpw.b.value(), kc = std::sqrt(1.0 - k * k);
    double K = ellipk(k * k), Kp = ellipk_complement(k);
    double e0 = volts / Kp;
    auto jac2 = [&](double u, double v) {
        double c, d, c1, d1;
        double s = boost::math::jacobi_elliptic(k, u, &c, &d);
        double s1 = boost::math::jacobi_elliptic(kc, v, &c1, &d1);
        double den = c1 * c1 + k * k * s * s * s1 * s1;
        std::complex<double> cn(c * c1, -s * d * s1 * d1), dn(d * c1 * d1, -k * k * s * c * s1);
        return std::norm(a * cn * dn) / (den * den * den * den);
    };
    auto row = [&](double v) {
        auto g = [&](double u) {
            double j = jac2(u, v);
            if (j == 0.0) return 0.0;
            if (!std::isfinite(j)) return e0 * e0;
            return j * saturate(e0 * e0 / j, e_s);
        };
        return gk(g, 0.0, K, 1e-9);
    };
    // both half planes, both signs of u
    return 4.0 * gk(row, 0.0, Kp, 1e-8);
}

SaturationSweep saturation_sweep(const std::vector<Coplanar>& lines, const std::vector<double>& grid, double volts,
                                 CornerConstants c) {
    SaturationSweep out;
    for (const auto& l : lines) {
        check_line(l);
        std::string tag = "a=" + std::to_string(to_um(l.a)) + "um";
        SaturationCurve s{tag, false, {}, {}}, v{tag, true, {}, {}};
        for (double es : grid) {
            s.e_s.push_back(es);
            s.value.push_back(saturated_surface_energy(l, es, volts));
            v.e_s.push_back(es);
            v.value.push_back(saturated_volume_energy(l, es, volts));
        }
        out.surface.push_back(std::move(s));
        out.volume.push_back(std::move(v));
        double kp = ellipk_complement(l.a / l.b);
        double ec0 = volts / (kp * l.a.value());
        double u = 2.0 * volts * volts * analytic::sa_factor(l.a, l.b, l.t, c.c_m) / (kp * kp * l.a.value());
        out.markers.push_back({tag, 3.0 * ec0, u});
    }
    return out;
}

}  // namespace surfloss::tls
