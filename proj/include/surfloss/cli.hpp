#pragma once

#include "surfloss/bem.hpp"
#include "surfloss/tls.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfloss::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericalFailure = 3, kVerificationFailure = 4 };

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& source, int line, const std::string& msg);
    int line() const { return line_; }

private:
    int line_;
};

struct RawEntry {
    std::string key;
    std::string value;
    int line = 0;
};

struct RawSection {
    std::string name;
    int line = 0;
    std::vector<RawEntry> entries;
};

struct RawConfig {
    std::string source;
    std::vector<RawSection> sections;

    // "section.key" or "structure.NAME.key"
    RawEntry* find(const std::string& dotted);
};

RawConfig parse_ini(std::istream& in, const std::string& source);

struct Targets {
    std::optional<Capacitance> capacitance;
    double span_ghz = 2.0;
    bool exclude_wires = false;
    bool split_corners = false;
    CornerConstants corners;
};

struct DesignConfig {
    DielectricStack stack;
    std::vector<NamedStructure> structures;
    Targets targets;
};

DesignConfig build_config(const RawConfig& raw);
DesignConfig load_config(const std::string& path);
RawConfig load_raw(const std::string& path);

AssemblyOptions assembly_options(const Targets& t);

enum class Format { table, csv, jsonl };
Format parse_format(const std::string& s);

struct ReportRow {
    std::string name;
    std::string kind;
    double p_ma = 0.0, p_ms = 0.0, p_sa = 0.0;
    double capacitance_ff = 0.0;
    double loss = 0.0;
};

struct ReportTable {
    std::vector<ReportRow> rows;
    ReportRow totals;
    double length_mm = 0.0;
};

ReportTable make_report(const DesignAssembly& d, const DielectricStack& stack);
std::string format_sci3(double v);
void write_report(std::ostream& os, const ReportTable& t, Format f);

struct Check {
    std::string name;
    double target = 0.0;
    double computed = 0.0;
    double tolerance = 0.0;  // |computed - target|, or the ceiling when upper
    bool pass = false;
    bool upper = false;
};

Check make_check(std::string name, double target, double computed, double tol);
Check make_upper_check(std::string name, double computed, double limit);
void write_checks(std::ostream& os, const std::vector<Check>& checks, Format f);

const std::vector<std::string>& verify_suites();
std::vector<Check> run_suite(const std::string& suite, double mesh_scale);

struct Options {
    std::string config;
    std::string out_dir;
    Format format = Format::table;
    double mesh_scale = 1.0;
    std::optional<double> span_ghz;
    std::vector<std::string> suites;
    std::string param;
    double from = 0.0, to = 0.0;
    int steps = 0;
};

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& o, std::ostream& out, std::ostream& err);
int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err);
int cmd_taper(const Options& o, std::ostream& out, std::ostream& err);
int cmd_tls(const Options& o, std::ostream& out, std::ostream& err);

// maps exceptions to exit codes and prints one "error:" line
int guarded(const char* command, std::ostream& err, const std::function<int()>& body);

}  // namespace surfloss::cli
