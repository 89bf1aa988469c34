#pragma once

#include "surfloss/analytic.hpp"

#include <string>
#include <vector>

namespace surfloss::tls {

double saturate(double e_sq, double e_s);

struct SaturationCurve {
    std::string tag;
    bool volume = false;
    std::vector<double> e_s;    // V/m
    std::vector<double> value;  // (1/eps) saturated energy per length at V
};

struct CrossoverMarker {
    std::string tag;
    double e_s = 0.0;
    double energy = 0.0;
};

struct SaturationSweep {
    std::vector<SaturationCurve> surface;
    std::vector<SaturationCurve> volume;
    std::vector<CrossoverMarker> markers;
};

// metal surface of a single-ended coplanar line, both faces, t/2 cutoff
double saturated_surface_energy(const Coplanar& cpw, double e_s, double volts = 1.0);
// whole-plane vacuum field energy
double saturated_volume_energy(const Coplanar& cpw, double e_s, double volts = 1.0);

SaturationSweep saturation_sweep(const std::vector<Coplanar>& lines, const std::vector<double>& e_s_grid,
                                 double volts = 1.0, CornerConstants c = {});

// maximum TLS splitting for a field per volt (1/m) at qubit capacitance C
double s_max(double e_over_v, Capacitance c);

struct TlsPoint {
    double s_max_hz = 0.0;
    double area_um2 = 0.0;
};

struct TlsSpectrum {
    std::string tag;
    std::vector<TlsPoint> points;  // descending s_max, increasing cumulative area

    double s_max_at_area(double area_um2) const;
    double area_at(double s_max_hz) const;
};

struct RibbonTlsOptions {
    Length min_distance{0.0};  // closest TLS to the corner; 0 -> t_MS
    double area_factor = 0.0;  // 0 -> t_MS / 2 nm
    int samples = 4000;
};

TlsSpectrum ribbon_tls_profile(const Ribbon& spec, const DielectricStack& stack, Capacitance c,
                               const RibbonTlsOptions& opt = {});

struct WireTlsOptions {
    double interface_weight = 0.0;  // 0 -> eps_s / eps_MS
    double area_factor = 0.0;       // 0 -> t_MS / 2 nm
    Length min_distance{0.0};       // 0 -> t_MS
    std::size_t sections = 100000;
};

TlsSpectrum wire_tls_spectrum(const StructureSpec& wire, const DielectricStack& stack, Capacitance c,
                              const WireTlsOptions& opt = {});

inline constexpr double kDensityPerUm2GHz = 0.5;

// splittings per GHz with sizes between s1 < s2
double splitting_density(const TlsSpectrum& sp, double s1_hz, double s2_hz);

struct ObservableSummary {
    double area_threshold_um2 = 0.0;
    double largest_hz = 0.0;        // S_max at the observability area
    double density_per_ghz = 0.0;   // band [largest/3, largest]
    double mean_spacing_mhz = 0.0;
    double expected_in_span = 0.0;
};

ObservableSummary observable_summary(const TlsSpectrum& sp, double span_ghz = 2.0);

struct PlateSplitting {
    double s_max_hz = 0.0;
    Length effective_distance;
    double effective_area_um2 = 0.0;
};

PlateSplitting parallel_plate_splitting(const ParallelPlate& spec, const DielectricStack& stack, Capacitance c);

}  // namespace surfloss::tls
