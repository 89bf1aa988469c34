#pragma once

#include "surfloss/geometry.hpp"

#include <utility>
#include <vector>

namespace surfloss::analytic {

// Surface energies normalized as U/(eps V^2): per unit length (1/m) for 2-D
// cross sections, dimensionless totals for wires.
struct SurfaceEnergyPair {
    double u_metal = 0.0;
    double u_substrate = 0.0;
    CornerConstants corners;
};

enum class ProfileSide { metal, substrate, inner, center, outer };
const char* to_string(ProfileSide s);

struct FieldProfile {
    std::vector<double> x;
    std::vector<double> e_over_v;
    ProfileSide side = ProfileSide::metal;
};

// --- coax and flat coax ---

struct CoaxResult {
    double e_c = 0.0;
    FieldProfile profile;
    SurfaceEnergyPair energy;
};

CoaxResult coax_fields_and_energies(Length r, Length R, int samples = 64);
double coax_capacitance_per_length(Length r, Length R);

double flat_coax_reference_field(Length rbar, Length R);
double flat_coax_field(double x, Length rbar, Length R);
SurfaceEnergyPair flat_coax_energies(Length rbar, Length R, Length t, CornerConstants c);

double corner_field(double e_at_cutoff, double r_c, double t);
constexpr double corner_energy_factor(double p) { return 2.0 / (1.0 + 2.0 * p); }
inline constexpr double kCornerExponent = -1.0 / 3.0;

struct EdgeEnhancement {
    double ratio = 0.0;
    double log_factor = 0.0;
    double corner_share = 0.0;
};
EdgeEnhancement edge_enhancement(Length rbar, Length t, CornerConstants c);

// --- planar capacitors ---

struct RibbonSections {
    double s_i = 0.0;
    double s_c = 0.0;
    double s_o = 0.0;
};

RibbonSections ribbon_sections(Length a, Length b, Length t);
RibbonSections ribbon_sections_exact(Length a, Length b, Length t);
double sa_factor(Length a, Length b, Length t, double c);
double sao_factor(Length b, Length c, Length t, double c_m);

double ribbon_field(double x, Length a, Length b);
double coplanar_field(double x, Length a, Length b);
double ribbon_ground_field(double x, Length a, Length b, Length c);
FieldProfile ribbon_profile(const Ribbon& spec, ProfileSide side, int samples = 200);
FieldProfile coplanar_profile(const Coplanar& spec, ProfileSide side, int samples = 200);

Capacitance capacitance(const StructureSpec& spec, double eps_s);

struct StructureResult {
    ParticipationBreakdown breakdown;
    SurfaceEnergyPair energy;
    InterfaceBrackets brackets;
};

// Interface brackets carry no dependence on L; evaluate() combines them.
InterfaceBrackets brackets(const StructureSpec& spec, CornerConstants c, bool split_corners = false);
SurfaceEnergyPair surface_energies(const StructureSpec& spec, CornerConstants c);
StructureResult evaluate(const StructureSpec& spec, const DielectricStack& stack, Length L,
                         CornerConstants c = {}, bool split_corners = false);

StructureResult parallel_plate(const ParallelPlate& spec, const DielectricStack& stack, Length L);
StructureResult ribbon(const Ribbon& spec, const DielectricStack& stack, Length L, CornerConstants c = {});
StructureResult coplanar(const Coplanar& spec, const DielectricStack& stack, Length L, CornerConstants c = {});
StructureResult ribbon_with_ground(const RibbonWithGround& spec, const DielectricStack& stack, Length L,
                                   CornerConstants c = {});
StructureResult straight_wire(const StraightWire& spec, const DielectricStack& stack, Length L,
                              CornerConstants c = {});
StructureResult tapered_wire(const TaperedWire& spec, const DielectricStack& stack, Length L,
                             CornerConstants c = {});

// Participations when the ribbon alone sets the qubit capacitance.
ParticipationBreakdown ribbon_self_capacitance_participation(const Ribbon& spec, const DielectricStack& stack,
                                                             CornerConstants c = {}, bool split_corners = false);

// --- junction wires ---

double cylinder_wire_field(double y, double r);
double flat_wire_field(double y, double rbar);
double tapered_half_width(double y, double r0, double slope, double t);

double straight_wire_metal_energy(const StraightWire& w, double c_m);
double straight_wire_substrate_energy(const StraightWire& w, double c_s);
double straight_wire_metal_energy_integral(const StraightWire& w, double c_m);
double straight_wire_substrate_energy_integral(const StraightWire& w, double c_s);

double tapered_wire_metal_energy(const TaperedWire& w, double c_m);
double tapered_wire_substrate_energy(const TaperedWire& w, double c_s);
// 2 ∫ line energy dy from lower to d with the tapered half-width profile
double tapered_wire_metal_energy_integral(const TaperedWire& w, double c_m, double lower);

// half-width r/y that minimizes the metal line-energy integrand at fixed y
double taper_local_optimum(double y_over_t, double c_m);

struct TaperOptimum {
    double slope = 0.0;
    double energy = 0.0;
    std::vector<std::pair<double, double>> curve;
};

TaperOptimum optimize_taper_slope(Length r0, Length d, Length t, CornerConstants c = {}, double s_lo = 0.05,
                                  double s_hi = 0.45, int samples = 41);

}  // namespace surfloss::analytic
