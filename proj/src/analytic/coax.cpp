#include "surfloss/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace surfloss::analytic {

const char* to_string(ProfileSide s) {
    switch (s) {
        case ProfileSide::metal: return "metal";
        case ProfileSide::substrate: return "substrate";
        case ProfileSide::inner: return "inner";
        case ProfileSide::center: return "center";
        case ProfileSide::outer: return "outer";
    }
    return "?";
}

CoaxResult coax_fields_and_energies(Length r, Length R, int samples) {
    double rr = r.value(), RR = R.value();
    if (!(rr > 0.0) || !(rr < RR)) throw std::domain_error("coax: requires 0 < r < R");
    CoaxResult out;
    out.e_c = 1.0 / (rr * std::log(RR / rr));
    out.profile.side = ProfileSide::substrate;
    for (int i = 0; i < samples; ++i) {
        double x = rr * std::pow(RR / rr, double(i) / (samples - 1));
        out.profile.x.push_back(x);
        out.profile.e_over_v.push_back(out.e_c * rr / x);
    }
    out.energy.u_metal = out.e_c * out.e_c * rr * kPi;
    out.energy.u_substrate = out.e_c * out.e_c * rr * (1.0 - rr / RR);
    out.energy.corners = {0.0, 0.0};
    return out;
}

double coax_capacitance_per_length(Length r, Length R) {
    if (!(r.value() > 0.0) || !(r < R)) throw std::domain_error("coax: requires 0 < r < R");
    return 2.0 * kPi * kEps0 / std::log(R / r);
}

double flat_coax_reference_field(Length rbar, Length R) {
    if (!(rbar.value() > 0.0) || !(R.value() > 2.0 * rbar.value()))
        throw std::domain_error("flat coax: requires R > 2 rbar > 0");
    return 1.0 / (rbar.value() * std::log(2.0 * R.value() / rbar.value()));
}

double flat_coax_field(double x, Length rbar, Length R) {
    double ef = flat_coax_reference_field(rbar, R);
    double rb = rbar.value();
    double d1 = std::abs(rb + x), d2 = std::abs(rb - x);
    if (d1 == 0.0 || d2 == 0.0) throw std::domain_error("flat coax field: x on the film edge");
    return ef * std::sqrt(rb / d1) * std::sqrt(rb / d2);
}

SurfaceEnergyPair flat_coax_energies(Length rbar, Length R, Length t, CornerConstants c) {
    double ef = flat_coax_reference_field(rbar, R);
    double rb = rbar.value();
    if (!(t.value() > 0.0) || !(t < rbar)) throw std::domain_error("flat coax energies: requires 0 < t < rbar");
    double lg = std::log(4.0 * rb / t.value());
    SurfaceEnergyPair e;
    e.u_metal = ef * ef * rb * (lg + c.c_m);
    e.u_substrate = ef * ef * 0.5 * rb * (lg + c.c_s - 2.0 * rb / R.value());
    e.corners = c;
    return e;
}

double corner_field(double e_at_cutoff, double r_c, double t) {
    if (!(r_c > 0.0) || r_c > 0.5 * t) throw std::domain_error("corner_field: requires 0 < r_c <= t/2");
    return e_at_cutoff * std::pow(r_c / (0.5 * t), kCornerExponent);
}

EdgeEnhancement edge_enhancement(Length rbar, Length t, CornerConstants c) {
    if (!(t.value() > 0.0) || !(t < rbar)) throw std::domain_error("edge_enhancement: requires 0 < t < rbar");
    EdgeEnhancement e;
    e.log_factor = std::log(4.0 * rbar.value() / t.value());
    e.ratio = (e.log_factor + c.c_m) / kPi;
    // metal plus substrate surfaces of a wide film, R >> rbar
    double corners = c.c_m + 0.5 * c.c_s;
    double total = (e.log_factor + c.c_m) + 0.5 * (e.log_factor + c.c_s);
    e.corner_share = corners / total;
    return e;
}

}  // namespace surfloss::analytic
