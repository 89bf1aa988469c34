#include "surfloss/cli.hpp"

#include <boost/math/tools/roots.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace surfloss::cli {

namespace {

std::string full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sci(double v) { return format_sci3(v); }

std::ofstream open_out(const Options& o, const std::string& file) {
    std::filesystem::create_directories(o.out_dir);
    auto path = std::filesystem::path(o.out_dir) / file;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    return f;
}

Check rel_check(std::string name, double target, double computed, double rel) {
    return make_check(std::move(name), target, computed, rel * std::abs(target));
}

std::vector<Check> suite_coax(double scale) {
    auto s = bem::coax_study(10.0, 100.0, int(std::lround(50 * scale)));
    return {make_upper_check("coax capacitance rel error", s.rel_error, 0.005)};
}

std::vector<Check> suite_flat_coax(double scale) {
    auto f = bem::flat_coax_thin(10.0, 100.0, scale);
    return {make_upper_check("flat-coax metal field rel error", f.metal.max_rel_error(0.0, 9.95), 0.03),
            make_upper_check("flat-coax substrate field rel error", f.substrate.max_rel_error(10.05, 90.0), 0.03),
            make_check("flat-coax charge ratio", 1.0, f.charge_ratio, 0.01)};
}

const std::vector<double> kCornerRatios{0.02, 0.05, 0.1, 0.2, 0.5};

std::vector<Check> suite_corner(double scale) {
    auto sq = bem::extract_corner_constant(bem::EdgeStyle::square, kCornerRatios, scale);
    auto sc = bem::extract_corner_constant(bem::EdgeStyle::semicircular, kCornerRatios, scale);
    std::vector<Check> out;
    char tag[32];
    for (std::size_t i = 0; i < sq.points.size(); ++i) {
        std::snprintf(tag, sizeof tag, "t/r=%.2f", sq.points[i].t_over_r);
        out.push_back(make_check(std::string("corner c_m square ") + tag, 5.0, sq.points[i].c_m, 0.5));
        out.push_back(make_check(std::string("corner c_s square ") + tag, 1.6, sq.points[i].c_s, 0.3));
        out.push_back(make_upper_check(std::string("corner c_m semicircular - square ") + tag,
                                       sc.points[i].c_m - sq.points[i].c_m, 0.0));
    }
    return out;
}

std::vector<Check> suite_ribbon_ground(double scale) {
    const double b = 100.0, t = 0.1;
    std::vector<Check> out;
    for (double a : {25.0, 50.0, 70.0})
        for (double g : {0.1, 0.3, 1.0, 3.0}) {
            double c = b * (1.0 + g);
            auto bem = bem::ribbon_thin(a, b, c, 0.5 * t, scale);
            RibbonWithGround spec{micrometres(a), micrometres(b), micrometres(c), metres(1.0), micrometres(t)};
            // thin film cut at t/2 carries no corner constant
            auto e = analytic::surface_energies(spec, CornerConstants{0.0, 0.0});
            double cfit = analytic::capacitance(spec, 1.0).value() / kEps0;
            char tag[48];
            std::snprintf(tag, sizeof tag, "a=%g (c-b)/b=%g", a, g);
            out.push_back(rel_check(std::string("ribbon-ground C ") + tag, cfit, bem.capacitance, 0.05));
            out.push_back(rel_check(std::string("ribbon-ground U_m ") + tag, e.u_metal * 1e-6, bem.u_metal, 0.05));
            out.push_back(
                rel_check(std::string("ribbon-ground U_s ") + tag, e.u_substrate * 1e-6, bem.u_substrate, 0.05));
        }
    return out;
}

std::vector<Check> suite_cyl_wire(double scale) {
    std::vector<Check> out;
    for (double s : {0.0, 0.2}) {
        auto w = bem::cylinder_wire(0.1, s, 100.0, scale);
        out.push_back(make_upper_check("cyl-wire field rel error S=" + sci(s), w.profile.max_rel_error(0.2, 90.0), 0.05));
    }
    return out;
}

std::vector<Check> suite_flat_wire(double scale) {
    std::vector<Check> out;
    for (double s : {0.0, 0.2}) {
        auto w = bem::flat_wire(0.1, s, 100.0, 0.1, scale);
        out.push_back(make_upper_check("flat-wire field rel error S=" + sci(s), w.profile.max_rel_error(0.2, 90.0), 0.05));
    }
    return out;
}

DesignAssembly assemble(const DesignConfig& cfg) {
    return assemble_design(cfg.structures, cfg.stack, assembly_options(cfg.targets));
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> s{"coax", "flat-coax", "corner", "ribbon-ground", "cyl-wire", "flat-wire"};
    return s;
}

std::vector<Check> run_suite(const std::string& suite, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("mesh scale must be positive");
    if (suite == "coax") return suite_coax(scale);
    if (suite == "flat-coax") return suite_flat_coax(scale);
    if (suite == "corner") return suite_corner(scale);
    if (suite == "ribbon-ground") return suite_ribbon_ground(scale);
    if (suite == "cyl-wire") return suite_cyl_wire(scale);
    if (suite == "flat-wire") return suite_flat_wire(scale);
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream&) {
    auto cfg = load_config(o.config);
    auto table = make_report(assemble(cfg), cfg.stack);
    write_report(out, table, o.format);
    if (!o.out_dir.empty()) {
        auto f = open_out(o, "analyze.csv");
        write_report(f, table, Format::csv);
    }
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
    auto suites = o.suites.empty() ? verify_suites() : o.suites;
    for (const auto& s : suites)
        if (std::find(verify_suites().begin(), verify_suites().end(), s) == verify_suites().end())
            throw std::invalid_argument("unknown verify suite '" + s + "'");
    std::vector<Check> all;
    for (const auto& s : suites) {
        auto c = run_suite(s, o.mesh_scale);
        all.insert(all.end(), c.begin(), c.end());
    }
    write_checks(out, all, o.format);
    if (!o.out_dir.empty()) {
        auto f = open_out(o, "verify.csv");
        write_checks(f, all, Format::csv);
    }
    for (const auto& c : all)
        if (!c.pass) return kVerificationFailure;
    return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream&) {
    auto raw = load_raw(o.config);
    if (o.steps < 1) throw ConfigError(o.config, 0, "sweep needs at least one step");
    RawEntry* e = raw.find(o.param);
    if (!e) throw ConfigError(o.config, 0, "no parameter at path '" + o.param + "'");
    {
        double v;
        auto [p, ec] = std::from_chars(e->value.data(), e->value.data() + e->value.size(), v);
        if (ec != std::errc() || p != e->value.data() + e->value.size())
            throw ConfigError(o.config, e->line, "parameter '" + o.param + "' is not numeric");
    }
    std::ostringstream body;
    std::vector<std::string> header{o.param, "capacitance_ff", "length_mm", "total_loss"};
    bool first = true;
    for (int i = 0; i < o.steps; ++i) {
        double v = o.steps == 1 ? o.from : o.from + (o.to - o.from) * i / (o.steps - 1);
        e->value = full(v);
        auto cfg = build_config(raw);
        auto d = assemble(cfg);
        std::vector<double> row{v, to_fF(d.total_capacitance), d.L.value() * 1e3, d.total_loss};
        for (std::size_t k = 0; k < d.structures.size(); ++k) {
            const auto& b = d.breakdowns[k];
            auto en = analytic::surface_energies(d.structures[k].spec, cfg.targets.corners);
            const auto& n = d.structures[k].name;
            if (first)
                for (const char* col : {".p_ma", ".p_ms", ".p_sa", ".capacitance_ff", ".u_metal", ".u_substrate"})
                    header.push_back(n + col);
            row.insert(row.end(), {b.p_ma, b.p_ms, b.p_sa, to_fF(b.capacitance), en.u_metal, en.u_substrate});
        }
        if (first) {
            if (o.format != Format::jsonl) {
                for (std::size_t k = 0; k < header.size(); ++k) body << (k ? "," : "") << header[k];
                body << "\n";
            }
            first = false;
        }
        if (o.format == Format::jsonl) {
            nlohmann::ordered_json j;
            for (std::size_t k = 0; k < header.size(); ++k) j[header[k]] = row[k];
            body << j.dump() << "\n";
        } else {
            for (std::size_t k = 0; k < row.size(); ++k) body << (k ? "," : "") << full(row[k]);
            body << "\n";
        }
    }
    out << body.str();
    if (!o.out_dir.empty()) open_out(o, o.format == Format::jsonl ? "sweep.jsonl" : "sweep.csv") << body.str();
    return kOk;
}

int cmd_taper(const Options& o, std::ostream& out, std::ostream& err) {
    auto cfg = load_config(o.config);
    const NamedStructure* wire = nullptr;
    for (const auto& s : cfg.structures)
        if (is_wire(s.spec)) {
            wire = &s;
            break;
        }
    if (!wire) throw ConfigError(o.config, 0, "taper needs a straight_wire or tapered_wire structure");
    Length r0, d, t;
    if (const auto* w = std::get_if<StraightWire>(&wire->spec)) {
        r0 = w->r, d = w->d, t = w->t;
    } else {
        const auto& tw = std::get<TaperedWire>(wire->spec);
        r0 = tw.r0, d = tw.d, t = tw.t;
        if (tw.slope > 0.45) {
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "warning: slope %.3g of '%s' exceeds the 0.45 cap; steeper tapers do not lower the energy\n",
                          tw.slope, wire->name.c_str());
            err << buf;
        }
    }
    double c_m = cfg.targets.corners.c_m;
    auto opt = analytic::optimize_taper_slope(r0, d, t, cfg.targets.corners);
    auto energy = [&](double s) {
        return analytic::tapered_wire_metal_energy_integral(TaperedWire{r0, s, d, t}, c_m, 2.0 * r0.value());
    };
    auto slope_at = [&](double excess) -> double {
        double lo = 0.01, target = (1.0 + excess) * opt.energy;
        if (energy(lo) < target) return std::nan("");
        auto f = [&](double s) { return energy(s) - target; };
        boost::uintmax_t it = 60;
        auto r = boost::math::tools::toms748_solve(f, lo, opt.slope, boost::math::tools::eps_tolerance<double>(40), it);
        return 0.5 * (r.first + r.second);
    };
    double straight = analytic::straight_wire_metal_energy_integral(StraightWire{r0, d, t}, c_m);
    double s2 = slope_at(0.02), s10 = slope_at(0.10);
    std::vector<std::pair<std::string, double>> fields{{"wire", 0.0},
                                                       {"optimal_slope", opt.slope},
                                                       {"energy_at_optimum", opt.energy},
                                                       {"slope_at_plus_2pct", s2},
                                                       {"slope_at_plus_10pct", s10},
                                                       {"energy_ratio_s0.28", energy(0.28) / opt.energy},
                                                       {"energy_ratio_s0.16", energy(0.16) / opt.energy},
                                                       {"straight_energy", straight},
                                                       {"straight_over_tapered", straight / opt.energy}};
    switch (o.format) {
        case Format::table:
            out << "wire                  " << wire->name << "\n";
            for (std::size_t i = 1; i < fields.size(); ++i) {
                std::string k = fields[i].first;
                out << k << std::string(22 - std::min<std::size_t>(21, k.size()), ' ') << sci(fields[i].second) << "\n";
            }
            break;
        case Format::csv:
            out << "key,value\nwire," << wire->name << "\n";
            for (std::size_t i = 1; i < fields.size(); ++i) out << fields[i].first << "," << full(fields[i].second) << "\n";
            break;
        case Format::jsonl: {
            nlohmann::ordered_json j;
            j["wire"] = wire->name;
            for (std::size_t i = 1; i < fields.size(); ++i)
                j[fields[i].first] = std::isnan(fields[i].second) ? nlohmann::ordered_json() : nlohmann::ordered_json(fields[i].second);
            out << j.dump() << "\n";
            break;
        }
    }
    if (to_um(d) <= 5.0) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "note: d = %.3g um is short; straight and tapered energies are comparable (ratio %.3g)\n",
                      to_um(d), straight / opt.energy);
        err << buf;
    }
    if (!o.out_dir.empty()) {
        auto f = open_out(o, "taper_curve.csv");
        f << "slope,energy\n";
        for (const auto& [s, e] : opt.curve) f << full(s) << "," << full(e) << "\n";
    }
    return kOk;
}

int cmd_tls(const Options& o, std::ostream& out, std::ostream& err) {
    auto cfg = load_config(o.config);
    double span = o.span_ghz.value_or(cfg.targets.span_ghz);
    if (!(span > 0.0)) throw std::invalid_argument("span must be positive");
    Capacitance c = cfg.targets.capacitance ? *cfg.targets.capacitance : assemble(cfg).total_capacitance;

    struct Row {
        std::string name, kind;
        double s_hz = 0.0, density = 0.0, spacing = 0.0, expected = 0.0, distance_um = 0.0, area_um2 = 0.0;
    };
    std::vector<Row> rows;
    for (const auto& s : cfg.structures) {
        std::optional<tls::TlsSpectrum> sp;
        Row r{s.name, std::string(structure_kind(s.spec))};
        if (const auto* rb = std::get_if<Ribbon>(&s.spec)) {
            sp = tls::ribbon_tls_profile(*rb, cfg.stack, c);
        } else if (is_wire(s.spec)) {
            sp = tls::wire_tls_spectrum(s.spec, cfg.stack, c);
        } else if (const auto* p = std::get_if<ParallelPlate>(&s.spec)) {
            auto ps = tls::parallel_plate_splitting(*p, cfg.stack, c);
            r.s_hz = ps.s_max_hz;
            r.distance_um = to_um(ps.effective_distance);
            r.area_um2 = ps.effective_area_um2;
            r.density = tls::kDensityPerUm2GHz * ps.effective_area_um2;
            r.spacing = 1e3 / r.density;
            r.expected = r.density * span;
            rows.push_back(r);
            continue;
        } else {
            err << "note: no TLS model for " << r.kind << " '" << s.name << "'\n";
            continue;
        }
        auto sum = tls::observable_summary(*sp, span);
        r.s_hz = sum.largest_hz;
        r.density = sum.density_per_ghz;
        r.spacing = sum.mean_spacing_mhz;
        r.expected = sum.expected_in_span;
        r.area_um2 = sum.area_threshold_um2;
        rows.push_back(r);
        if (!o.out_dir.empty()) {
            auto f = open_out(o, "tls_" + s.name + ".csv");
            f << "s_max_hz,cumulative_area_um2\n";
            for (const auto& pt : sp->points) f << full(pt.s_max_hz) << "," << full(pt.area_um2) << "\n";
        }
    }
    switch (o.format) {
        case Format::table: {
            char buf[200];
            std::snprintf(buf, sizeof buf, "%-14s%-20s%-13s%-13s%-13s%-13s%-13s%s\n", "structure", "kind", "S_max_Hz",
                          "per_GHz", "spacing_MHz", "in_span", "area_um2", "eff_dist_um");
            out << buf;
            for (const auto& r : rows) {
                std::snprintf(buf, sizeof buf, "%-14s%-20s%-13s%-13s%-13s%-13s%-13s%s\n", r.name.c_str(), r.kind.c_str(),
                              sci(r.s_hz).c_str(), sci(r.density).c_str(), sci(r.spacing).c_str(),
                              sci(r.expected).c_str(), sci(r.area_um2).c_str(),
                              r.distance_um > 0.0 ? sci(r.distance_um).c_str() : "");
                out << buf;
            }
            out << "C = " << sci(to_fF(c)) << " fF, span = " << sci(span) << " GHz\n";
            break;
        }
        case Format::csv:
            out << "structure,kind,s_max_hz,density_per_ghz,spacing_mhz,expected_in_span,area_um2,effective_distance_um\n";
            for (const auto& r : rows)
                out << r.name << "," << r.kind << "," << full(r.s_hz) << "," << full(r.density) << "," << full(r.spacing)
                    << "," << full(r.expected) << "," << full(r.area_um2) << "," << full(r.distance_um) << "\n";
            break;
        case Format::jsonl:
            for (const auto& r : rows) {
                nlohmann::ordered_json j{{"structure", r.name},      {"kind", r.kind},
                                         {"s_max_hz", r.s_hz},       {"density_per_ghz", r.density},
                                         {"spacing_mhz", r.spacing}, {"expected_in_span", r.expected},
                                         {"area_um2", r.area_um2},   {"effective_distance_um", r.distance_um}};
                out << j.dump() << "\n";
            }
            break;
    }
    return kOk;
}

int guarded(const char* command, std::ostream& err, const std::function<int()>& body) {
    auto fail = [&](int code, const char* kind, const std::string& msg) {
        err << "error: command=" << command << " code=" << code << " kind=" << kind << " message=" << msg << "\n";
        return code;
    };
    try {
        return body();
    } catch (const ConfigError& e) {
        return fail(kConfigError, "config", e.what());
    } catch (const ValidationError& e) {
        return fail(kConfigError, "validation", e.what());
    } catch (const std::invalid_argument& e) {
        return fail(kConfigError, "argument", e.what());
    } catch (const bem::SolverError& e) {
        return fail(kNumericalFailure, "solver", e.what());
    } catch (const bem::BuildError& e) {
        return fail(kNumericalFailure, "mesh", e.what());
    } catch (const std::exception& e) {
        return fail(kNumericalFailure, "numerical", e.what());
    }
}

}  // namespace surfloss::cli
