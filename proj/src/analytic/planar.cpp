#include "surfloss/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace surfloss::analytic {

namespace {

void check_ab(Length a, Length b, Length t) {
    if (!(a.value() > 0.0) || !(a < b)) throw std::domain_error("requires 0 < a < b");
    if (!(t.value() > 0.0) || !(t < a) || !(t < b - a)) throw std::domain_error("requires 0 < t < min(a, b - a)");
}

double kk(double k) { return ellipk(k * k); }
double kp(double k) { return ellipk_complement(k); }

// antiderivatives of b^2/|(x^2-a^2)(x^2-b^2)| on the three sections
double g_inner(double x, double a, double b) {
    return (std::log((a + x) / (a - x)) / a - std::log((b + x) / (b - x)) / b) / (2.0 * (1.0 - a * a / (b * b)));
}
double g_center(double x, double a, double b) {
    return (std::log((x - a) / (x + a)) / a + std::log((b + x) / (b - x)) / b) / (2.0 * (1.0 - a * a / (b * b)));
}
double g_outer(double x, double a, double b) {
    return (std::log((x - b) / (x + b)) / b - std::log((x - a) / (x + a)) / a) / (2.0 * (1.0 - a * a / (b * b)));
}

double eps_eff(double eps_s) { return 0.5 * (eps_s + 1.0); }

}  // namespace

RibbonSections ribbon_sections(Length a, Length b, Length t) {
    check_ab(a, b, t);
    double A = a.value(), B = b.value(), T = t.value();
    double den = 2.0 * (1.0 - A * A / (B * B));
    double lg = std::log((B - A) / (B + A));
    double la = std::log(4.0 * A / T), lb = std::log(4.0 * B / T);
    RibbonSections s;
    s.s_i = (la / A + lg / B) / den;
    s.s_c = ((la + lg) / A + (lb + lg) / B) / den;
    s.s_o = (lg / A + lb / B) / den;
    return s;
}

RibbonSections ribbon_sections_exact(Length a, Length b, Length t) {
    check_ab(a, b, t);
    double A = a.value(), B = b.value(), h = 0.5 * t.value();
    RibbonSections s;
    s.s_i = g_inner(A - h, A, B);
    s.s_c = g_center(B - h, A, B) - g_center(A + h, A, B);
    s.s_o = -g_outer(B + h, A, B);
    return s;
}

double sa_factor(Length a, Length b, Length t, double c) {
    check_ab(a, b, t);
    double A = a.value(), B = b.value(), T = t.value();
    double lg = std::log((B - A) / (B + A));
    return ((std::log(4.0 * A / T) + c + lg) + A / B * (std::log(4.0 * B / T) + c + lg)) /
           (2.0 * (1.0 - A * A / (B * B)));
}

double sao_factor(Length b, Length c, Length t, double c_m) {
    check_ab(b, c, t);
    double B = b.value(), C = c.value(), T = t.value();
    return (std::log((C - B) / (C + B)) + B / C * (std::log(4.0 * C / T) + c_m)) / (2.0 * (1.0 - B * B / (C * C)));
}

namespace {

double shape(double x, double a, double b) {
    double d = std::abs((x * x - a * a) * (x * x - b * b));
    if (d == 0.0) throw std::domain_error("surface field evaluated on a film edge");
    return b / std::sqrt(d);
}

}  // namespace

double ribbon_field(double x, Length a, Length b) {
    double k = a / b;
    return 0.5 / kk(k) * shape(x, a.value(), b.value());
}

double coplanar_field(double x, Length a, Length b) {
    double k = a / b;
    return 0.5 / kp(k) * shape(x, a.value(), b.value());
}

double ribbon_ground_field(double x, Length a, Length b, Length c) {
    double C = c.value();
    double d = std::abs(x * x - C * C);
    if (d == 0.0) throw std::domain_error("surface field evaluated on a film edge");
    return ribbon_field(x, a, b) * C / std::sqrt(d);
}

namespace {

template <class Fn>
FieldProfile sample_sections(double A, double B, double h, ProfileSide side, int n, Fn f) {
    FieldProfile p;
    p.side = side;
    double lo = 0.0, hi = 0.0;
    switch (side) {
        case ProfileSide::inner: lo = 0.0, hi = A - h; break;
        case ProfileSide::center: lo = A + h, hi = B - h; break;
        case ProfileSide::outer: lo = B + h, hi = 10.0 * B; break;
        default: throw std::invalid_argument("planar profile: side must be inner, center or outer");
    }
    for (int i = 0; i < n; ++i) {
        double x = lo + (hi - lo) * i / (n - 1);
        p.x.push_back(x);
        p.e_over_v.push_back(f(x));
    }
    return p;
}

}  // namespace

FieldProfile ribbon_profile(const Ribbon& s, ProfileSide side, int samples) {
    check_ab(s.a, s.b, s.t);
    return sample_sections(s.a.value(), s.b.value(), 0.5 * s.t.value(), side, samples,
                           [&](double x) { return ribbon_field(x, s.a, s.b); });
}

FieldProfile coplanar_profile(const Coplanar& s, ProfileSide side, int samples) {
    check_ab(s.a, s.b, s.t);
    double amp = s.single_ended ? 2.0 : 1.0;
    return sample_sections(s.a.value(), s.b.value(), 0.5 * s.t.value(), side, samples,
                           [&](double x) { return amp * coplanar_field(x, s.a, s.b); });
}

namespace {

double ribbon_c(const Ribbon& s, double eps_s) {
    return eps_eff(eps_s) * kEps0 * s.length.value() / ck_ratio(s.a / s.b);
}

}  // namespace

Capacitance capacitance(const StructureSpec& spec, double eps_s) {
    return std::visit(
        [&](const auto& g) -> Capacitance {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, ParallelPlate>) {
                return Capacitance(0.5 * kEps0 * g.length.value() * g.w.value() / g.s.value());
            } else if constexpr (std::is_same_v<T, Ribbon>) {
                return Capacitance(ribbon_c(g, eps_s));
            } else if constexpr (std::is_same_v<T, Coplanar>) {
                double f = g.single_ended ? 1.0 : 0.5;
                return Capacitance(f * eps_eff(eps_s) * kEps0 * g.length.value() * 4.0 * ck_ratio(g.a / g.b));
            } else if constexpr (std::is_same_v<T, RibbonWithGround>) {
                double cr = ribbon_c(Ribbon{g.a, g.b, g.length, g.t}, eps_s);
                double xe = g.b.value() - 0.15 * (g.b.value() - 1.2 * g.a.value());
                double q = xe / g.c.value();
                return Capacitance(cr / std::pow(1.0 - q * q, 0.23));
            } else if constexpr (std::is_same_v<T, StraightWire>) {
                return Capacitance(4.1 * eps_eff(eps_s) * kEps0 * g.d.value() / std::log(g.d / g.r));
            } else {
                return Capacitance(3.5 * eps_eff(eps_s) * kEps0 * std::sqrt(g.slope) * g.d.value());
            }
        },
        spec);
}

SurfaceEnergyPair surface_energies(const StructureSpec& spec, CornerConstants c) {
    SurfaceEnergyPair e;
    e.corners = c;
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, ParallelPlate>) {
                // one-sided gap energy
                e.u_metal = g.length.value() * g.w.value() / (2.0 * g.s.value() * g.s.value());
                e.u_substrate = 0.0;
            } else if constexpr (std::is_same_v<T, Ribbon>) {
                double K = kk(g.a / g.b), a = g.a.value(), l = g.length.value();
                e.u_metal = l * sa_factor(g.a, g.b, g.t, c.c_m) / (2.0 * K * K * a);
                e.u_substrate = l * sa_factor(g.a, g.b, g.t, c.c_s) / (4.0 * K * K * a);
            } else if constexpr (std::is_same_v<T, Coplanar>) {
                double Kp = kp(g.a / g.b), a = g.a.value(), l = g.length.value();
                double f = g.single_ended ? 2.0 : 1.0;
                e.u_metal = f * l * sa_factor(g.a, g.b, g.t, c.c_m) / (Kp * Kp * a);
                e.u_substrate = f * l * sa_factor(g.a, g.b, g.t, c.c_s) / (2.0 * Kp * Kp * a);
            } else if constexpr (std::is_same_v<T, RibbonWithGround>) {
                if (!(g.b < g.c)) throw std::domain_error("ribbon with ground: requires c > b");
                double K = kk(g.a / g.b), Kpo = kp(g.b / g.c);
                double a = g.a.value(), b = g.b.value(), l = g.length.value();
                e.u_metal = l * (0.98 * sa_factor(g.a, g.b, g.t, c.c_m) / (2.0 * K * K * a) +
                                 1.70 * sao_factor(g.b, g.c, g.t, c.c_m) / (2.0 * Kpo * Kpo * b));
                e.u_substrate = l * (0.95 * sa_factor(g.a, g.b, g.t, c.c_s) / (4.0 * K * K * a) +
                                     0.80 * sa_factor(g.b, g.c, g.t, c.c_s) / (4.0 * Kpo * Kpo * b));
            } else if constexpr (std::is_same_v<T, StraightWire>) {
                e.u_metal = straight_wire_metal_energy(g, c.c_m);
                e.u_substrate = straight_wire_substrate_energy(g, c.c_s);
            } else {
                e.u_metal = tapered_wire_metal_energy(g, c.c_m);
                e.u_substrate = tapered_wire_substrate_energy(g, c.c_s);
            }
        },
        spec);
    return e;
}

InterfaceBrackets brackets(const StructureSpec& spec, CornerConstants c, bool split_corners) {
    if (const auto* p = std::get_if<ParallelPlate>(&spec)) {
        InterfaceBrackets b;
        b.ma = surface_energies(*p, c).u_metal;
        return b;
    }
    auto base = surface_energies(spec, c);
    if (!split_corners) return brackets_from_energies(base.u_metal, base.u_metal, base.u_substrate);
    auto [c_air, c_sub] = corner_split_mode(c.c_m);
    double u_air = surface_energies(spec, {c_air, c.c_s}).u_metal;
    double u_sub = surface_energies(spec, {c_sub, c.c_s}).u_metal;
    return brackets_from_energies(u_air, u_sub, base.u_substrate);
}

StructureResult evaluate(const StructureSpec& spec, const DielectricStack& stack, Length L, CornerConstants c,
                         bool split_corners) {
    auto issues = validate(spec, stack, {.allow_steep_taper = true});
    if (!issues.empty()) throw ValidationError(std::move(issues));
    StructureResult r;
    r.energy = surface_energies(spec, c);
    r.brackets = brackets(spec, c, split_corners);
    r.breakdown = participations(r.brackets, stack, L);
    r.breakdown.capacitance = capacitance(spec, stack.eps_s);
    r.breakdown.kind = std::string(structure_kind(spec));
    return r;
}

StructureResult parallel_plate(const ParallelPlate& s, const DielectricStack& st, Length L) {
    return evaluate(s, st, L);
}
StructureResult ribbon(const Ribbon& s, const DielectricStack& st, Length L, CornerConstants c) {
    return evaluate(s, st, L, c);
}
StructureResult coplanar(const Coplanar& s, const DielectricStack& st, Length L, CornerConstants c) {
    return evaluate(s, st, L, c);
}
StructureResult ribbon_with_ground(const RibbonWithGround& s, const DielectricStack& st, Length L, CornerConstants c) {
    return evaluate(s, st, L, c);
}
StructureResult straight_wire(const StraightWire& s, const DielectricStack& st, Length L, CornerConstants c) {
    return evaluate(s, st, L, c);
}
StructureResult tapered_wire(const TaperedWire& s, const DielectricStack& st, Length L, CornerConstants c) {
    return evaluate(s, st, L, c);
}

ParticipationBreakdown ribbon_self_capacitance_participation(const Ribbon& s, const DielectricStack& st,
                                                             CornerConstants c, bool split_corners) {
    check_ab(s.a, s.b, s.t);
    double k = s.a / s.b;
    double geo = 0.5 / (kk(k) * kp(k) * eps_eff(st.eps_s) * s.a.value());
    double c_air = c.c_m, c_sub = c.c_m;
    if (split_corners) std::tie(c_air, c_sub) = corner_split_mode(c.c_m);
    auto w = interface_weights(st);
    ParticipationBreakdown p;
    p.p_ma = w.ma * st.t_ma.value() * geo * sa_factor(s.a, s.b, s.t, c_air);
    p.p_ms = w.ms * st.t_ms.value() * geo * sa_factor(s.a, s.b, s.t, c_sub);
    p.p_sa = w.sa * st.t_sa.value() * geo * sa_factor(s.a, s.b, s.t, c.c_s);
    p.capacitance = capacitance(s, st.eps_s);
    p.kind = "ribbon";
    return p;
}

}  // namespace surfloss::analytic
