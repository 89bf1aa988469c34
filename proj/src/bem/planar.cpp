#include "surfloss/bem.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>

namespace surfloss::bem {

namespace {

struct Image {
    double sign;
    double sx;
    double sy;
};

std::vector<Image> images(const Mesh& mesh) {
    auto s = [](Parity p) { return p == Parity::odd ? -1.0 : 1.0; };
    std::vector<Image> out{{1.0, 1.0, 1.0}};
    if (mesh.mirror_x != Parity::none) out.push_back({s(mesh.mirror_x), -1.0, 1.0});
    if (mesh.mirror_y != Parity::none) out.push_back({s(mesh.mirror_y), 1.0, -1.0});
    if (mesh.mirror_x != Parity::none && mesh.mirror_y != Parity::none)
        out.push_back({s(mesh.mirror_x) * s(mesh.mirror_y), -1.0, -1.0});
    return out;
}

struct Frame {
    double mx, my, tx, ty, nx, ny, h, w;
};

Frame frame(Point2 p0, Point2 p1) {
    Frame f;
    double dx = p1.x - p0.x, dy = p1.y - p0.y;
    f.w = std::hypot(dx, dy);
    f.h = 0.5 * f.w;
    f.tx = dx / f.w;
    f.ty = dy / f.w;
    f.nx = -f.ty;
    f.ny = f.tx;
    f.mx = 0.5 * (p0.x + p1.x);
    f.my = 0.5 * (p0.y + p1.y);
    return f;
}

// ∫ ln sqrt(xi^2 + v^2) dxi
double F(double xi, double v) {
    double av = std::abs(v);
    double r2 = xi * xi + av * av;
    double out = -xi;
    if (r2 > 0.0) out += xi * 0.5 * std::log(r2);
    if (av > 0.0) out += av * std::atan(xi / av);
    return out;
}

// mean of ln|P - x| over the segment
double segment_mean_log(const Frame& f, double px, double py) {
    double rx = px - f.mx, ry = py - f.my;
    double u = rx * f.tx + ry * f.ty;
    double v = rx * f.nx + ry * f.ny;
    return (F(u + f.h, v) - F(u - f.h, v)) / f.w;
}

template <int N>
struct GaussRule {
    std::array<double, N> x{};
    std::array<double, N> w{};
    GaussRule() {
        using G = boost::math::quadrature::gauss<double, N>;
        const auto& a = G::abscissa();
        const auto& wt = G::weights();
        int k = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0.0) {
                x[k] = 0.0, w[k] = wt[i], ++k;
            } else {
                x[k] = a[i], w[k] = wt[i], ++k;
                x[k] = -a[i], w[k] = wt[i], ++k;
            }
        }
    }
};

const GaussRule<12>& rule12() {
    static const GaussRule<12> r;
    return r;
}

Point2 reflect(Point2 p, const Image& im) { return {p.x * im.sx, p.y * im.sy}; }

void check_mesh(const Mesh& mesh) {
    if (mesh.elements.empty()) throw BuildError("mesh has no elements");
    if (mesh.size() > kMaxUnknowns)
        throw BuildError("mesh has " + std::to_string(mesh.size()) + " unknowns, above the dense-solver cap of " +
                         std::to_string(kMaxUnknowns) + "; reduce the mesh scale");
    for (const auto& e : mesh.elements)
        if (!(e.width() > 0.0)) throw BuildError("mesh contains a zero-width element");
}

}  // namespace

double planar_kernel(double rho) { return -std::log(rho) / (2.0 * kPi); }

PotentialMatrix build_matrix_2d(const Mesh& mesh) {
    if (mesh.kind != KernelKind::planar) throw BuildError("build_matrix_2d: mesh is not planar");
    check_mesh(mesh);
    const auto ims = images(mesh);
    const auto n = static_cast<Eigen::Index>(mesh.size());
    const auto& g = rule12();
    std::vector<Frame> fr(n);
    for (Eigen::Index i = 0; i < n; ++i) fr[i] = frame(mesh.elements[i].p0, mesh.elements[i].p1);

    PotentialMatrix M{Eigen::MatrixXd::Zero(n, n), KernelKind::planar};
#pragma omp parallel for schedule(dynamic, 16)
    for (Eigen::Index i = 0; i < n; ++i) {
        const Frame& fi = fr[i];
        for (const auto& im : ims) {
            for (Eigen::Index j = 0; j < n; ++j) {
                Frame fj = frame(reflect(mesh.elements[j].p0, im), reflect(mesh.elements[j].p1, im));
                double dist = std::hypot(fi.mx - fj.mx, fi.my - fj.my);
                double v;
                if (dist < 1e-12 * fi.w) {
                    double dir = std::abs(fi.tx * fj.tx + fi.ty * fj.ty);
                    if (std::abs(fi.w - fj.w) > 1e-9 * fi.w || dir < 1.0 - 1e-9)
                        throw BuildError("coincident elements with different geometry");
                    v = 1.5 - std::log(fi.w);
                } else if (dist < 4.0 * std::max(fi.w, fj.w)) {
                    double acc = 0.0;
                    for (int k = 0; k < 12; ++k) {
                        double px = fi.mx + fi.h * g.x[k] * fi.tx;
                        double py = fi.my + fi.h * g.x[k] * fi.ty;
                        acc += g.w[k] * segment_mean_log(fj, px, py);
                    }
                    v = -0.5 * acc;
                } else {
                    v = -std::log(dist);
                }
                M.m(i, j) += im.sign * v / (2.0 * kPi);
            }
        }
    }
    M.m = 0.5 * (M.m + M.m.transpose()).eval();
    return M;
}

Point2 field_at(const Mesh& mesh, const ChargeSolution& sol, Point2 p) {
    if (mesh.kind != KernelKind::planar) throw std::invalid_argument("field_at: planar meshes only");
    Point2 E;
    for (const auto& im : images(mesh)) {
        for (std::size_t j = 0; j < mesh.size(); ++j) {
            Frame f = frame(reflect(mesh.elements[j].p0, im), reflect(mesh.elements[j].p1, im));
            double rx = p.x - f.mx, ry = p.y - f.my;
            double u = rx * f.tx + ry * f.ty;
            double v = rx * f.nx + ry * f.ny;
            double a = (u + f.h) * (u + f.h) + v * v;
            double b = (u - f.h) * (u - f.h) + v * v;
            double eu = 0.5 * std::log(a / b);
            double ev = 0.0;
            double av = std::abs(v);
            if (av > 0.0) ev = std::copysign(std::atan((u + f.h) / av) - std::atan((u - f.h) / av), v);
            double s = im.sign * sol.charges[j] / (2.0 * kPi * f.w);
            E.x += s * (eu * f.tx + ev * f.nx);
            E.y += s * (eu * f.ty + ev * f.ny);
        }
    }
    return E;
}

}  // namespace surfloss::bem
