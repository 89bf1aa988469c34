#include "surfloss/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace surfloss {

DielectricStack DielectricStack::scaled_thickness(double f) const {
    DielectricStack s = *this;
    s.t_ma = t_ma * f;
    s.t_ms = t_ms * f;
    s.t_sa = t_sa * f;
    return s;
}

InterfaceWeights interface_weights(const DielectricStack& s) {
    return {1.0 / s.eps_ma, s.eps_s * s.eps_s / s.eps_ms, s.eps_sa};
}

std::pair<double, double> corner_split_mode(double c_m) { return {1.5 * c_m, 0.5 * c_m}; }

Length capacitance_to_length(Capacitance c) {
    if (!(c.value() > 0.0) || !std::isfinite(c.value()))
        throw std::domain_error("capacitance must be positive and finite");
    return Length(c.value() / kEps0);
}

std::string_view structure_kind(const StructureSpec& spec) {
    static constexpr std::string_view names[] = {"parallel_plate", "ribbon",        "coplanar",
                                                  "ribbon_ground",  "straight_wire", "tapered_wire"};
    return names[spec.index()];
}

bool is_wire(const StructureSpec& spec) {
    return std::holds_alternative<StraightWire>(spec) || std::holds_alternative<TaperedWire>(spec);
}

namespace {

struct Checker {
    std::vector<ValidationIssue>& out;

    void positive(const char* field, Length v) {
        if (!(v.value() > 0.0) || !std::isfinite(v.value())) out.push_back({field, "must be positive"});
    }
    void require(bool ok, const char* field, const char* msg) {
        if (!ok) out.push_back({field, msg});
    }
};

}  // namespace

std::vector<ValidationIssue> validate(const DielectricStack& s) {
    std::vector<ValidationIssue> out;
    Checker ck{out};
    ck.require(s.eps_s >= 1.0, "eps_s", "relative permittivity must be >= 1");
    ck.require(s.eps_ma >= 1.0, "eps_ma", "relative permittivity must be >= 1");
    ck.require(s.eps_ms >= 1.0, "eps_ms", "relative permittivity must be >= 1");
    ck.require(s.eps_sa >= 1.0, "eps_sa", "relative permittivity must be >= 1");
    ck.positive("t_ma", s.t_ma);
    ck.positive("t_ms", s.t_ms);
    ck.positive("t_sa", s.t_sa);
    ck.require(s.tan_ma >= 0.0, "tan_ma", "loss tangent must be >= 0");
    ck.require(s.tan_ms >= 0.0, "tan_ms", "loss tangent must be >= 0");
    ck.require(s.tan_sa >= 0.0, "tan_sa", "loss tangent must be >= 0");
    return out;
}

std::vector<ValidationIssue> validate(const StructureSpec& spec, const DielectricStack& stack,
                                      const ValidationOptions& opt) {
    std::vector<ValidationIssue> out;
    Checker ck{out};
    double t_ox = std::max({stack.t_ma.value(), stack.t_ms.value(), stack.t_sa.value()});
    auto thick = [&](Length t) {
        ck.positive("t", t);
        if (t.value() > 0.0) ck.require(t_ox < t.value(), "t", "metal thickness must exceed the oxide thickness");
    };
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, ParallelPlate>) {
                ck.positive("s", g.s);
                ck.positive("w", g.w);
                ck.positive("length", g.length);
                ck.require(g.s < g.w, "s", "plate separation must be smaller than the width");
            } else if constexpr (std::is_same_v<T, Ribbon> || std::is_same_v<T, Coplanar>) {
                ck.positive("a", g.a);
                ck.positive("b", g.b);
                ck.positive("length", g.length);
                thick(g.t);
                ck.require(g.a < g.b, "a", "requires a < b");
                ck.require(g.t.value() < g.a.value(), "t", "requires t < a");
                ck.require(g.t.value() < (g.b - g.a).value(), "t", "requires t < b - a");
            } else if constexpr (std::is_same_v<T, RibbonWithGround>) {
                ck.positive("a", g.a);
                ck.positive("b", g.b);
                ck.positive("c", g.c);
                ck.positive("length", g.length);
                thick(g.t);
                ck.require(g.a < g.b, "a", "requires a < b");
                ck.require(g.b < g.c, "c", "requires b < c");
                ck.require(g.t.value() < g.a.value(), "t", "requires t < a");
                ck.require(g.t.value() < (g.c - g.b).value(), "t", "requires t < c - b");
            } else if constexpr (std::is_same_v<T, StraightWire>) {
                ck.positive("r", g.r);
                ck.positive("d", g.d);
                thick(g.t);
                ck.require(g.d.value() > 2.0 * g.r.value(), "d", "requires d > 2 r");
                ck.require(g.t.value() <= 2.0 * g.r.value(), "t", "requires t <= 2 r");
            } else if constexpr (std::is_same_v<T, TaperedWire>) {
                ck.positive("r0", g.r0);
                ck.positive("d", g.d);
                thick(g.t);
                ck.require(g.slope > 0.0, "slope", "must be positive");
                if (!opt.allow_steep_taper)
                    ck.require(g.slope <= 0.45, "slope", "must not exceed 0.45");
                ck.require(g.d.value() > 5.0 * g.t.value(), "d", "requires d > 5 t");
                ck.require(g.t.value() <= 2.0 * g.r0.value(), "t", "requires t <= 2 r0");
            }
        },
        spec);
    return out;
}

namespace {

std::string join_issues(const std::vector<ValidationIssue>& issues) {
    std::string s = "validation failed:";
    for (const auto& i : issues) s += " [" + i.field + ": " + i.message + "]";
    return s;
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

double ParticipationBreakdown::loss(const DielectricStack& s) const {
    return p_ma * s.tan_ma + p_ms * s.tan_ms + p_sa * s.tan_sa;
}

InterfaceBrackets brackets_from_energies(double u_metal_air, double u_metal_sub, double u_substrate) {
    return {0.5 * u_metal_air, 0.5 * u_metal_sub, u_substrate};
}

ParticipationBreakdown participations(const InterfaceBrackets& b, const DielectricStack& s, Length L) {
    if (!(L.value() > 0.0)) throw std::domain_error("participations: L must be positive");
    auto w = interface_weights(s);
    ParticipationBreakdown p;
    p.p_ma = w.ma * 2.0 * s.t_ma.value() / L.value() * b.ma;
    p.p_ms = w.ms * 2.0 * s.t_ms.value() / L.value() * b.ms;
    p.p_sa = w.sa * 2.0 * s.t_sa.value() / L.value() * b.sa;
    return p;
}

}  // namespace surfloss
