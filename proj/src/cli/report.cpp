#include "surfloss/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <ostream>

namespace surfloss::cli {

namespace {

std::string full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

void csv_row(std::ostream& os, const ReportRow& r) {
    os << r.name << "," << r.kind << "," << full(r.p_ma) << "," << full(r.p_ms) << "," << full(r.p_sa) << ","
       << full(r.capacitance_ff) << "," << full(r.loss) << "\n";
}

std::string blank_zero(double v) { return v == 0.0 ? "" : format_sci3(v); }

}  // namespace

std::string format_sci3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

ReportTable make_report(const DesignAssembly& d, const DielectricStack& stack) {
    ReportTable t;
    t.totals.name = "total";
    for (std::size_t i = 0; i < d.structures.size(); ++i) {
        const auto& b = d.breakdowns[i];
        ReportRow r{d.structures[i].name, b.kind, b.p_ma, b.p_ms, b.p_sa, to_fF(b.capacitance), b.loss(stack)};
        t.totals.p_ma += r.p_ma;
        t.totals.p_ms += r.p_ms;
        t.totals.p_sa += r.p_sa;
        t.totals.capacitance_ff += r.capacitance_ff;
        t.totals.loss += r.loss;
        t.rows.push_back(std::move(r));
    }
    t.length_mm = d.L.value() * 1e3;
    return t;
}

void write_report(std::ostream& os, const ReportTable& t, Format f) {
    switch (f) {
        case Format::table: {
            os << pad("structure", 14) << pad("kind", 20) << pad("p_MA", 11) << pad("p_MS", 11) << pad("p_SA", 11)
               << pad("C_fF", 11) << "loss\n";
            auto row = [&](const ReportRow& r) {
                os << pad(r.name, 14) << pad(r.kind, 20) << pad(blank_zero(r.p_ma), 11) << pad(blank_zero(r.p_ms), 11)
                   << pad(blank_zero(r.p_sa), 11) << pad(format_sci3(r.capacitance_ff), 11) << format_sci3(r.loss)
                   << "\n";
            };
            for (const auto& r : t.rows) row(r);
            row(t.totals);
            os << "L = " << format_sci3(t.length_mm) << " mm\n";
            os << "total loss tangent = " << format_sci3(t.totals.loss) << "\n";
            break;
        }
        case Format::csv:
            os << "structure,kind,p_ma,p_ms,p_sa,capacitance_ff,loss\n";
            for (const auto& r : t.rows) csv_row(os, r);
            csv_row(os, t.totals);
            break;
        case Format::jsonl:
            for (const auto& r : t.rows)
                os << nlohmann::json{{"structure", r.name}, {"kind", r.kind},   {"p_ma", r.p_ma},
                                     {"p_ms", r.p_ms},      {"p_sa", r.p_sa},   {"capacitance_ff", r.capacitance_ff},
                                     {"loss", r.loss}}
                          .dump()
                   << "\n";
            os << nlohmann::json{{"structure", "total"},
                                 {"p_ma", t.totals.p_ma},
                                 {"p_ms", t.totals.p_ms},
                                 {"p_sa", t.totals.p_sa},
                                 {"capacitance_ff", t.totals.capacitance_ff},
                                 {"loss", t.totals.loss},
                                 {"length_mm", t.length_mm}}
                      .dump()
               << "\n";
            break;
    }
}

Check make_check(std::string name, double target, double computed, double tol) {
    return {std::move(name), target, computed, tol, std::abs(computed - target) <= tol};
}

Check make_upper_check(std::string name, double computed, double limit) {
    return {std::move(name), 0.0, computed, limit, computed <= limit, true};
}

void write_checks(std::ostream& os, const std::vector<Check>& checks, Format f) {
    switch (f) {
        case Format::table:
            os << pad("check", 46) << pad("target", 11) << pad("computed", 11) << pad("tolerance", 11) << "result\n";
            for (const auto& c : checks)
                os << pad(c.name, 46) << pad(c.upper ? "max" : format_sci3(c.target), 11) << pad(format_sci3(c.computed), 11)
                   << pad(format_sci3(c.tolerance), 11) << (c.pass ? "PASS" : "FAIL") << "\n";
            break;
        case Format::csv:
            os << "check,target,computed,tolerance,upper,pass\n";
            for (const auto& c : checks)
                os << c.name << "," << full(c.target) << "," << full(c.computed) << "," << full(c.tolerance) << ","
                   << (c.upper ? 1 : 0) << "," << (c.pass ? 1 : 0) << "\n";
            break;
        case Format::jsonl:
            for (const auto& c : checks)
                os << nlohmann::json{{"check", c.name},
                                     {"target", c.target},
                                     {"computed", c.computed},
                                     {"tolerance", c.tolerance},
                                     {"upper", c.upper},
                                     {"pass", c.pass}}
                          .dump()
                   << "\n";
            break;
    }
}

}  // namespace surfloss::cli
