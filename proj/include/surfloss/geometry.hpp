#pragma once

#include "surfloss/core.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace surfloss {

struct DielectricStack {
    double eps_s = 11.7;
    double eps_ma = 9.8;
    double eps_ms = 9.8;
    double eps_sa = 3.8;
    Length t_ma = nanometres(2.0);
    Length t_ms = nanometres(2.0);
    Length t_sa = nanometres(2.0);
    double tan_ma = 0.005;
    double tan_ms = 0.005;
    double tan_sa = 0.005;

    DielectricStack scaled_thickness(double f) const;
};

struct InterfaceWeights {
    double ma = 0.0;
    double ms = 0.0;
    double sa = 0.0;
};

InterfaceWeights interface_weights(const DielectricStack& stack);

struct CornerConstants {
    double c_m = 5.0;
    double c_s = 1.6;
};

// constant added to the edge logarithm on each side of the film
std::pair<double, double> corner_split_mode(double c_m);

struct ParallelPlate {
    Length s, w, length;
};
struct Ribbon {
    Length a, b, length, t;
};
struct Coplanar {
    Length a, b, length, t;
    bool single_ended = false;
};
struct RibbonWithGround {
    Length a, b, c, length, t;
};
struct StraightWire {
    Length r, d, t;
};
struct TaperedWire {
    Length r0;
    double slope = 0.4;
    Length d, t;
};

using StructureSpec = std::variant<ParallelPlate, Ribbon, Coplanar, RibbonWithGround, StraightWire, TaperedWire>;

std::string_view structure_kind(const StructureSpec& spec);
bool is_wire(const StructureSpec& spec);

struct ValidationIssue {
    std::string field;
    std::string message;
};

struct ValidationOptions {
    bool allow_steep_taper = false;
};

std::vector<ValidationIssue> validate(const StructureSpec& spec, const DielectricStack& stack,
                                      const ValidationOptions& opt = {});
std::vector<ValidationIssue> validate(const DielectricStack& stack);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<ValidationIssue> issues);
    const std::vector<ValidationIssue>& issues() const { return issues_; }

private:
    std::vector<ValidationIssue> issues_;
};

Length capacitance_to_length(Capacitance c);

struct ParticipationBreakdown {
    double p_ma = 0.0;
    double p_ms = 0.0;
    double p_sa = 0.0;
    Capacitance capacitance;
    std::string kind;

    double loss(const DielectricStack& stack) const;
};

// One-sided surface energies (1/2)∫|E/V|^2 dA on each interface, dimensionless
// (per-length 2-D values already multiplied by the structure length).
struct InterfaceBrackets {
    double ma = 0.0;
    double ms = 0.0;
    double sa = 0.0;
};

// Brackets from the two-sided metal energy and the substrate energy, both
// normalized U/(eps V^2). MA and MS each take half of the metal energy.
InterfaceBrackets brackets_from_energies(double u_metal_air, double u_metal_sub, double u_substrate);

ParticipationBreakdown participations(const InterfaceBrackets& b, const DielectricStack& stack, Length L);

struct AssemblyOptions {
    CornerConstants corners;
    bool split_corners = false;
    // Capacitance used for L; when unset the sum over structures.
    std::optional<Capacitance> capacitance_override;
    bool exclude_wires_from_capacitance = false;
};

struct NamedStructure {
    std::string name;
    StructureSpec spec;
};

struct DesignAssembly {
    std::vector<NamedStructure> structures;
    std::vector<ParticipationBreakdown> breakdowns;
    Capacitance total_capacitance;
    Length L;
    double total_loss = 0.0;
};

DesignAssembly assemble_design(const std::vector<NamedStructure>& structures, const DielectricStack& stack,
                               const AssemblyOptions& opt = {});

}  // namespace surfloss
