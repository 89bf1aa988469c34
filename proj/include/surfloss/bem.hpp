#pragma once

#include "surfloss/analytic.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <string>
#include <vector>

namespace surfloss::bem {

// Solves use unit permittivity: charges are q/eps, capacitances C/eps.
// Coordinates are in any consistent length unit (the studies use micrometres).

inline constexpr std::size_t kMaxUnknowns = 20000;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

enum class KernelKind { planar, ring, flat_wire };
enum class Parity { none, even, odd };

const char* to_string(KernelKind k);

struct Element {
    Point2 p0, p1;       // planar: (x, y); ring: (r, z); flat wire: (0, y0) -> (0, y1)
    double half_width = 0.0;  // flat wire only
    int electrode = 0;
    int group = 0;       // surface id used by the energy integrals
    bool corner = false; // adjacent to a square corner
    double width() const;
    Point2 mid() const { return {0.5 * (p0.x + p1.x), 0.5 * (p0.y + p1.y)}; }
};

struct Mesh {
    KernelKind kind = KernelKind::planar;
    std::vector<Element> elements;
    Parity mirror_x = Parity::none;  // image through x = 0 (planar only)
    Parity mirror_y = Parity::none;  // image through y = 0 (z = 0 for rings)
    bool sheet = false;              // zero-thickness planar elements, field sigma/2 on each face
    std::string grading;

    std::size_t size() const { return elements.size(); }
    double min_width() const;
};

// breakpoints 0 = s_0 < ... < s_n = L, geometric growth from hmin at s = 0
std::vector<double> graded(double L, double hmin, double hmax, double ratio = 1.15);
// breakpoints on [a, b] refined toward the chosen ends
std::vector<double> graded_span(double a, double b, double hmin, double hmax, bool fine_a, bool fine_b,
                                double ratio = 1.15);

struct PotentialMatrix {
    Eigen::MatrixXd m;
    KernelKind kind = KernelKind::planar;
};

class BuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, double rcond) : std::runtime_error(what), rcond_(rcond) {}
    double condition_estimate() const { return rcond_; }

private:
    double rcond_;
};

PotentialMatrix build_matrix_2d(const Mesh& mesh);
PotentialMatrix build_matrix_ring(const Mesh& mesh);
PotentialMatrix build_matrix_flatwire(const Mesh& mesh);
PotentialMatrix build_matrix(const Mesh& mesh);

// point kernels, unit permittivity
double planar_kernel(double rho);
double ring_kernel(double r1, double z1, double r2, double z2);
double flatwire_kernel(double y, double half_width);

struct ChargeSolution {
    std::vector<double> charges;
    std::vector<double> electrode_voltages;
    double capacitance = 0.0;  // per unit permittivity
    double residual = 0.0;
    double rcond = 0.0;

    double charge_on(const Mesh& mesh, int electrode) const;
};

struct SolveOptions {
    // capacitance = multiplicity * Q(electrode 0) / drive_voltage
    double drive_voltage = 1.0;
    double multiplicity = 1.0;
};

ChargeSolution solve(const PotentialMatrix& M, const Mesh& mesh, const std::vector<double>& electrode_voltages,
                     const SolveOptions& opt = {});

// surface charge density (q/eps per area or per length) of each element
std::vector<double> surface_density(const Mesh& mesh, const ChargeSolution& sol);
// planar field (components) at an arbitrary point
Point2 field_at(const Mesh& mesh, const ChargeSolution& sol, Point2 p);

struct SubstrateLine {
    Point2 from, to;
};

struct SurfaceEnergyRequest {
    double cutoff = 0.0;               // metal within cutoff of an edge point is excluded
    std::vector<Point2> edges;
    std::vector<int> metal_groups;
    double corner_weight = 4.0 / 3.0;  // r^(-1/3) density on the elements touching a square corner
    std::vector<SubstrateLine> substrate;
    double line_hmin = 0.0;
    double line_hmax = 0.0;
    double multiplicity = 1.0;
};

struct SurfaceEnergyResult {
    double u_metal = 0.0;
    double u_substrate = 0.0;
    std::vector<std::string> warnings;
};

SurfaceEnergyResult surface_energy(const Mesh& mesh, const ChargeSolution& sol, const SurfaceEnergyRequest& req);

// CSV: x,y,width,charge,field,side
void write_solution_csv(std::ostream& os, const Mesh& mesh, const ChargeSolution& sol);

// ---------------------------------------------------------------- studies

struct CoaxStudy {
    double capacitance = 0.0;  // C/eps per length
    double exact = 0.0;
    double rel_error = 0.0;
    std::size_t unknowns = 0;
};
CoaxStudy coax_study(double r, double R, int per_quarter);

struct ProfileComparison {
    std::vector<double> position;
    std::vector<double> computed;
    std::vector<double> formula;
    double max_rel_error(double lo, double hi) const;
};

struct FlatCoaxThinStudy {
    ProfileComparison metal;
    ProfileComparison substrate;
    double charge_ratio = 0.0;  // BEM charge / formula charge
    std::size_t unknowns = 0;
};
FlatCoaxThinStudy flat_coax_thin(double rbar, double R, double mesh_scale = 1.0);

enum class EdgeStyle { square, semicircular };

struct FlatCoaxThickStudy {
    double t_over_r = 0.0;
    double u_metal = 0.0;
    double u_substrate = 0.0;
    double c_m = 0.0;
    double c_s = 0.0;
    std::size_t unknowns = 0;
    std::vector<std::string> warnings;
};
FlatCoaxThickStudy flat_coax_thick(double rbar, double R, double t, EdgeStyle style, double mesh_scale = 1.0);

struct CornerCurve {
    EdgeStyle style = EdgeStyle::square;
    std::vector<FlatCoaxThickStudy> points;
};
CornerCurve extract_corner_constant(EdgeStyle style, const std::vector<double>& t_over_r, double mesh_scale = 1.0);

struct RibbonStudy {
    double capacitance = 0.0;  // C/(eps l), differential
    double u_metal = 0.0;      // per unit length, V = 1
    double u_substrate = 0.0;
    std::size_t unknowns = 0;
    std::vector<std::string> warnings;
};
// Zero-thickness ribbon pair, optional ground from c outward (c <= 0: none).
RibbonStudy ribbon_thin(double a, double b, double c, double cutoff, double mesh_scale = 1.0);

struct WireStudy {
    ProfileComparison profile;
    double capacitance = 0.0;
    std::size_t unknowns = 0;
};
// Round wire pair end to end, radius max(r0, S y), odd about y = 0.
WireStudy cylinder_wire(double r0, double slope, double d, double mesh_scale = 1.0);
// Flat wire pair with half-width max(r0, (y - 5t) S).
WireStudy flat_wire(double r0, double slope, double d, double t, double mesh_scale = 1.0);

}  // namespace surfloss::bem
