#include "surfloss/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <set>

namespace surfloss::cli {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(const std::string& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        if ((line[i] == '#' || line[i] == ';') && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t'))
            return line.substr(0, i);
    }
    return line;
}

struct Reader {
    const RawConfig& raw;
    const RawSection& sec;
    std::set<std::string> used;

    const RawEntry* get(const std::string& key) {
        for (const auto& e : sec.entries)
            if (e.key == key) {
                used.insert(key);
                return &e;
            }
        return nullptr;
    }

    double number(const RawEntry& e) {
        double v = 0.0;
        const char* first = e.value.data();
        const char* last = first + e.value.size();
        auto [p, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || p != last || !std::isfinite(v))
            throw ConfigError(raw.source, e.line, "key '" + e.key + "' expects a number, got '" + e.value + "'");
        return v;
    }

    double num(const std::string& key) {
        const RawEntry* e = get(key);
        if (!e) throw ConfigError(raw.source, sec.line, "[" + sec.name + "] missing key '" + key + "'");
        return number(*e);
    }

    std::optional<double> opt_num(const std::string& key) {
        const RawEntry* e = get(key);
        if (!e) return std::nullopt;
        return number(*e);
    }

    bool flag(const std::string& key, bool def) {
        const RawEntry* e = get(key);
        if (!e) return def;
        std::string v = e->value;
        std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
        if (v == "true" || v == "yes" || v == "1") return true;
        if (v == "false" || v == "no" || v == "0") return false;
        throw ConfigError(raw.source, e->line, "key '" + key + "' expects true or false, got '" + e->value + "'");
    }

    void finish() {
        for (const auto& e : sec.entries)
            if (!used.count(e.key))
                throw ConfigError(raw.source, e.line, "[" + sec.name + "] unknown key '" + e.key + "'");
    }
};

StructureSpec read_structure(Reader& r) {
    const RawEntry* type = r.get("type");
    if (!type) throw ConfigError(r.raw.source, r.sec.line, "[" + r.sec.name + "] missing key 'type'");
    const std::string& t = type->value;
    auto um = [&](const char* k) { return micrometres(r.num(k)); };
    if (t == "parallel_plate") return ParallelPlate{um("s_um"), um("w_um"), um("length_um")};
    if (t == "ribbon") return Ribbon{um("a_um"), um("b_um"), um("length_um"), um("t_um")};
    if (t == "coplanar") {
        Coplanar c{um("a_um"), um("b_um"), um("length_um"), um("t_um")};
        c.single_ended = r.flag("single_ended", false);
        return c;
    }
    if (t == "ribbon_ground") return RibbonWithGround{um("a_um"), um("b_um"), um("c_um"), um("length_um"), um("t_um")};
    if (t == "straight_wire") return StraightWire{um("r_um"), um("d_um"), um("t_um")};
    if (t == "tapered_wire") {
        TaperedWire w;
        w.r0 = um("r0_um");
        w.slope = r.num("slope");
        w.d = um("d_um");
        w.t = um("t_um");
        return w;
    }
    throw ConfigError(r.raw.source, type->line,
                      "unknown structure type '" + t +
                          "' (parallel_plate, ribbon, coplanar, ribbon_ground, straight_wire, tapered_wire)");
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& msg)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg), line_(line) {}

RawEntry* RawConfig::find(const std::string& dotted) {
    auto dot = dotted.rfind('.');
    if (dot == std::string::npos) return nullptr;
    std::string sec = dotted.substr(0, dot), key = dotted.substr(dot + 1);
    for (auto& s : sections)
        if (s.name == sec)
            for (auto& e : s.entries)
                if (e.key == key) return &e;
    return nullptr;
}

RawConfig parse_ini(std::istream& in, const std::string& source) {
    RawConfig cfg;
    cfg.source = source;
    std::string line;
    int n = 0;
    std::set<std::string> sections;
    while (std::getline(in, line)) {
        ++n;
        std::string s = trim(strip_comment(line));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError(source, n, "malformed section header");
            std::string name = trim(std::string_view(s).substr(1, s.size() - 2));
            if (name.empty()) throw ConfigError(source, n, "empty section name");
            if (!sections.insert(name).second) throw ConfigError(source, n, "duplicate section [" + name + "]");
            cfg.sections.push_back({name, n, {}});
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError(source, n, "expected 'key = value'");
        if (cfg.sections.empty()) throw ConfigError(source, n, "key outside of any section");
        std::string key = trim(std::string_view(s).substr(0, eq));
        std::string value = trim(std::string_view(s).substr(eq + 1));
        if (key.empty()) throw ConfigError(source, n, "empty key");
        if (value.empty()) throw ConfigError(source, n, "key '" + key + "' has no value");
        auto& sec = cfg.sections.back();
        for (const auto& e : sec.entries)
            if (e.key == key) throw ConfigError(source, n, "duplicate key '" + key + "'");
        sec.entries.push_back({key, value, n});
    }
    return cfg;
}

DesignConfig build_config(const RawConfig& raw) {
    DesignConfig cfg;
    for (const auto& sec : raw.sections) {
        Reader r{raw, sec, {}};
        if (sec.name == "stack") {
            auto& st = cfg.stack;
            auto set = [&](const char* k, double& v) {
                if (auto x = r.opt_num(k)) v = *x;
            };
            auto set_nm = [&](const char* k, Length& v) {
                if (auto x = r.opt_num(k)) v = nanometres(*x);
            };
            set("eps_s", st.eps_s);
            set("eps_ma", st.eps_ma);
            set("eps_ms", st.eps_ms);
            set("eps_sa", st.eps_sa);
            if (auto x = r.opt_num("t_nm")) st.t_ma = st.t_ms = st.t_sa = nanometres(*x);
            set_nm("t_ma_nm", st.t_ma);
            set_nm("t_ms_nm", st.t_ms);
            set_nm("t_sa_nm", st.t_sa);
            if (auto x = r.opt_num("tan_delta")) st.tan_ma = st.tan_ms = st.tan_sa = *x;
            set("tan_ma", st.tan_ma);
            set("tan_ms", st.tan_ms);
            set("tan_sa", st.tan_sa);
        } else if (sec.name == "targets") {
            auto& t = cfg.targets;
            if (auto x = r.opt_num("capacitance_ff")) {
                if (!(*x > 0.0)) throw ConfigError(raw.source, r.get("capacitance_ff")->line, "capacitance_ff must be positive");
                t.capacitance = femtofarads(*x);
            }
            if (auto x = r.opt_num("span_ghz")) {
                if (!(*x > 0.0)) throw ConfigError(raw.source, r.get("span_ghz")->line, "span_ghz must be positive");
                t.span_ghz = *x;
            }
            t.exclude_wires = r.flag("exclude_wires", false);
            t.split_corners = r.flag("split_corners", false);
            if (auto x = r.opt_num("c_m")) t.corners.c_m = *x;
            if (auto x = r.opt_num("c_s")) t.corners.c_s = *x;
        } else if (sec.name.rfind("structure.", 0) == 0 && sec.name.size() > 10) {
            StructureSpec spec = read_structure(r);
            auto issues = validate(spec, cfg.stack, ValidationOptions{true});
            if (!issues.empty())
                throw ConfigError(raw.source, sec.line,
                                  "[" + sec.name + "] " + issues.front().field + ": " + issues.front().message);
            cfg.structures.push_back({sec.name.substr(10), spec});
        } else {
            throw ConfigError(raw.source, sec.line, "unknown section [" + sec.name + "]");
        }
        r.finish();
    }
    auto issues = validate(cfg.stack);
    if (!issues.empty()) {
        int line = 0;
        for (const auto& s : raw.sections)
            if (s.name == "stack") line = s.line;
        throw ConfigError(raw.source, line, "[stack] " + issues.front().field + ": " + issues.front().message);
    }
    if (cfg.structures.empty()) throw ConfigError(raw.source, 0, "design has no [structure.NAME] sections");
    return cfg;
}

RawConfig load_raw(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError(path, 0, "cannot open config file");
    return parse_ini(f, path);
}

DesignConfig load_config(const std::string& path) { return build_config(load_raw(path)); }

AssemblyOptions assembly_options(const Targets& t) {
    AssemblyOptions o;
    o.corners = t.corners;
    o.split_corners = t.split_corners;
    o.capacitance_override = t.capacitance;
    o.exclude_wires_from_capacitance = t.exclude_wires;
    return o;
}

Format parse_format(const std::string& s) {
    if (s == "table") return Format::table;
    if (s == "csv") return Format::csv;
    if (s == "jsonl") return Format::jsonl;
    throw std::invalid_argument("unknown format '" + s + "' (table, csv, jsonl)");
}

}  // namespace surfloss::cli
