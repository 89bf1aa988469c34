#include "surfloss/bem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace surfloss::bem {

double ChargeSolution::charge_on(const Mesh& mesh, int electrode) const {
    double q = 0.0;
    for (std::size_t i = 0; i < mesh.size(); ++i)
        if (mesh.elements[i].electrode == electrode) q += charges[i];
    return q;
}

ChargeSolution solve(const PotentialMatrix& M, const Mesh& mesh, const std::vector<double>& electrode_voltages,
                     const SolveOptions& opt) {
    const auto n = M.m.rows();
    if (n != M.m.cols() || static_cast<std::size_t>(n) != mesh.size())
        throw std::invalid_argument("solve: matrix and mesh sizes differ");
    if (electrode_voltages.empty()) throw std::invalid_argument("solve: at least one electrode voltage required");
    Eigen::VectorXd V(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        int e = mesh.elements[i].electrode;
        if (e < 0 || static_cast<std::size_t>(e) >= electrode_voltages.size())
            throw std::invalid_argument("solve: element references an electrode without a voltage");
        V(i) = electrode_voltages[e];
    }

    Eigen::VectorXd q;
    double rcond = 0.0;
    Eigen::LLT<Eigen::MatrixXd> llt(M.m);
    if (llt.info() == Eigen::Success) {
        rcond = llt.rcond();
        q = llt.solve(V);
    } else {
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(M.m);
        rcond = lu.rcond();
        q = lu.solve(V);
    }
    if (!(rcond > 1e-15) || !q.allFinite()) {
        std::ostringstream os;
        os << "potential matrix is singular or ill-conditioned (rcond " << rcond << ")";
        throw SolverError(os.str(), rcond);
    }
    double vn = V.norm();
    double res = (M.m * q - V).norm() / (vn > 0.0 ? vn : 1.0);
    if (res > 1e-10) {
        std::ostringstream os;
        os << "solve residual " << res << " exceeds 1e-10 (rcond " << rcond << ")";
        throw SolverError(os.str(), rcond);
    }

    ChargeSolution s;
    s.charges.assign(q.data(), q.data() + n);
    s.electrode_voltages = electrode_voltages;
    s.residual = res;
    s.rcond = rcond;
    s.capacitance = opt.multiplicity * s.charge_on(mesh, 0) / opt.drive_voltage;
    return s;
}

std::vector<double> surface_density(const Mesh& mesh, const ChargeSolution& sol) {
    std::vector<double> out(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        const auto& e = mesh.elements[i];
        double w = e.width();
        switch (mesh.kind) {
            case KernelKind::planar: out[i] = sol.charges[i] / w; break;
            case KernelKind::ring: out[i] = sol.charges[i] / (2.0 * kPi * e.mid().x * w); break;
            case KernelKind::flat_wire: out[i] = sol.charges[i] / w; break;
        }
    }
    return out;
}

namespace {

// surface field magnitude on one face of each element
std::vector<double> face_field(const Mesh& mesh, const ChargeSolution& sol) {
    auto sd = surface_density(mesh, sol);
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        if (mesh.kind == KernelKind::planar && mesh.sheet) sd[i] *= 0.5;
        if (mesh.kind == KernelKind::flat_wire) sd[i] /= 2.0 * kPi * mesh.elements[i].half_width;
        sd[i] = std::abs(sd[i]);
    }
    return sd;
}

}  // namespace

SurfaceEnergyResult surface_energy(const Mesh& mesh, const ChargeSolution& sol, const SurfaceEnergyRequest& req) {
    if (mesh.kind != KernelKind::planar) throw std::invalid_argument("surface_energy: planar meshes only");
    SurfaceEnergyResult out;
    auto E = face_field(mesh, sol);
    double faces = mesh.sheet ? 2.0 : 1.0;
    std::vector<double> nearest(req.edges.size(), std::numeric_limits<double>::infinity());
    std::vector<double> nearest_w(req.edges.size(), 0.0);

    for (std::size_t i = 0; i < mesh.size(); ++i) {
        const auto& e = mesh.elements[i];
        if (std::find(req.metal_groups.begin(), req.metal_groups.end(), e.group) == req.metal_groups.end()) continue;
        Point2 m = e.mid();
        bool skip = false;
        for (std::size_t k = 0; k < req.edges.size(); ++k) {
            double d = std::hypot(m.x - req.edges[k].x, m.y - req.edges[k].y);
            if (d < req.cutoff) {
                skip = true;
            } else if (d < nearest[k]) {
                nearest[k] = d;
                nearest_w[k] = e.width();
            }
        }
        if (skip) continue;
        double wgt = e.corner ? req.corner_weight : 1.0;
        out.u_metal += 0.5 * faces * E[i] * E[i] * e.width() * wgt;
    }
    out.u_metal *= req.multiplicity;

    for (const auto& line : req.substrate) {
        double L = std::hypot(line.to.x - line.from.x, line.to.y - line.from.y);
        double hmin = req.line_hmin > 0.0 ? req.line_hmin : L / 200.0;
        double hmax = req.line_hmax > 0.0 ? req.line_hmax : L / 20.0;
        auto s = graded_span(0.0, L, hmin, std::max(hmin, hmax), true, true);
        double acc = 0.0;
        for (std::size_t k = 0; k + 1 < s.size(); ++k) {
            double f = 0.5 * (s[k] + s[k + 1]) / L;
            Point2 p{line.from.x + f * (line.to.x - line.from.x), line.from.y + f * (line.to.y - line.from.y)};
            Point2 ef = field_at(mesh, sol, p);
            acc += 0.5 * (ef.x * ef.x + ef.y * ef.y) * (s[k + 1] - s[k]);
        }
        out.u_substrate += acc * req.multiplicity;
    }

    if (req.cutoff > 0.0) {
        for (std::size_t k = 0; k < req.edges.size(); ++k) {
            if (nearest_w[k] > 0.5 * req.cutoff) {
                std::ostringstream os;
                os << "mesh too coarse near edge (" << req.edges[k].x << ", " << req.edges[k].y
                   << "): element width " << nearest_w[k] << " vs cutoff " << req.cutoff
                   << ", estimated energy error " << 100.0 * nearest_w[k] / (8.0 * req.cutoff) << "%";
                out.warnings.push_back(os.str());
            }
        }
    }
    return out;
}

void write_solution_csv(std::ostream& os, const Mesh& mesh, const ChargeSolution& sol) {
    auto E = face_field(mesh, sol);
    os << "x,y,width,charge,field,side\n";
    os.precision(17);
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        const auto& e = mesh.elements[i];
        Point2 m = e.mid();
        os << m.x << ',' << m.y << ',' << e.width() << ',' << sol.charges[i] << ',' << E[i] << ','
           << "electrode" << e.electrode << "/group" << e.group << '\n';
    }
}

}  // namespace surfloss::bem
