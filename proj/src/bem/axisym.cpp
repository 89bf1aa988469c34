#include "surfloss/bem.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>

namespace surfloss::bem {

namespace {

struct Rule16 {
    std::array<double, 16> x{};
    std::array<double, 16> w{};
    Rule16() {
        using G = boost::math::quadrature::gauss<double, 16>;
        for (std::size_t i = 0; i < 8; ++i) {
            x[2 * i] = G::abscissa()[i];
            x[2 * i + 1] = -G::abscissa()[i];
            w[2 * i] = w[2 * i + 1] = G::weights()[i];
        }
    }
};

const Rule16& rule16() {
    static const Rule16 r;
    return r;
}

void check(const Mesh& mesh, KernelKind kind) {
    if (mesh.kind != kind) throw BuildError(std::string("mesh kind is not ") + to_string(kind));
    if (mesh.elements.empty()) throw BuildError("mesh has no elements");
    if (mesh.size() > kMaxUnknowns)
        throw BuildError("mesh has " + std::to_string(mesh.size()) + " unknowns, above the dense-solver cap of " +
                         std::to_string(kMaxUnknowns) + "; reduce the mesh scale");
    if (mesh.mirror_x != Parity::none) throw BuildError("axisymmetric meshes support only the y mirror");
    for (const auto& e : mesh.elements) {
        if (!(e.width() > 0.0)) throw BuildError("mesh contains a zero-width element");
        if (kind == KernelKind::flat_wire && !(e.half_width > 0.0))
            throw BuildError("flat-wire element with zero half-width");
        if (kind == KernelKind::ring && (e.p0.x < 0.0 || e.p1.x < 0.0))
            throw BuildError("ring element with negative radius");
    }
}

double ysign(const Mesh& m) { return m.mirror_y == Parity::odd ? -1.0 : 1.0; }

}  // namespace

double ring_kernel(double r1, double z1, double r2, double z2) {
    double rho2 = (r1 - r2) * (r1 - r2) + (z1 - z2) * (z1 - z2);
    double rho = std::sqrt(rho2);
    if (r1 <= 0.0 || r2 <= 0.0) return 1.0 / (4.0 * kPi * rho);
    return ellipk(-4.0 * r1 * r2 / rho2) / (2.0 * kPi * kPi * rho);
}

double flatwire_kernel(double y, double half_width) {
    double ay = std::abs(y);
    return ellipk(-half_width * half_width / (ay * ay)) / (2.0 * kPi * kPi * ay);
}

PotentialMatrix build_matrix_ring(const Mesh& mesh) {
    check(mesh, KernelKind::ring);
    const auto n = static_cast<Eigen::Index>(mesh.size());
    const auto& g = rule16();
    const bool mirrored = mesh.mirror_y != Parity::none;
    const double sgn = ysign(mesh);
    PotentialMatrix M{Eigen::MatrixXd::Zero(n, n), KernelKind::ring};

#pragma omp parallel for schedule(dynamic, 16)
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& ei = mesh.elements[i];
        Point2 ci = ei.mid();
        for (int img = 0; img < (mirrored ? 2 : 1); ++img) {
            double zs = img == 0 ? 1.0 : -1.0;
            double s = img == 0 ? 1.0 : sgn;
            for (Eigen::Index j = 0; j < n; ++j) {
                const auto& ej = mesh.elements[j];
                Point2 a{ej.p0.x, zs * ej.p0.y}, b{ej.p1.x, zs * ej.p1.y};
                Point2 cj{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
                double w = ej.width();
                double dist = std::hypot(ci.x - cj.x, ci.y - cj.y);
                double v = 0.0;
                if (img == 0 && i == j) {
                    double r = ci.x;
                    double tx = (b.x - a.x) / w, ty = (b.y - a.y) / w;
                    double acc = 0.0;
                    for (double dir : {-1.0, 1.0}) {
                        for (int k = 0; k < 16; ++k) {
                            double sk = 0.25 * w * (g.x[k] + 1.0);
                            double rr = ci.x + dir * tx * sk, zz = ci.y + dir * ty * sk;
                            double val = ring_kernel(ci.x, ci.y, rr, zz) - std::log(8.0 * r / sk) / (4.0 * kPi * kPi * r);
                            acc += g.w[k] * val * 0.25 * w;
                        }
                    }
                    v = acc / w + (std::log(16.0 * r / w) + 1.0) / (4.0 * kPi * kPi * r);
                } else if (dist < 4.0 * std::max(w, ei.width())) {
                    double acc = 0.0;
                    for (int k = 0; k < 16; ++k) {
                        double rr = cj.x + 0.5 * (b.x - a.x) * g.x[k];
                        double zz = cj.y + 0.5 * (b.y - a.y) * g.x[k];
                        acc += g.w[k] * ring_kernel(ci.x, ci.y, rr, zz);
                    }
                    v = 0.5 * acc;
                } else {
                    v = ring_kernel(ci.x, ci.y, cj.x, cj.y);
                }
                M.m(i, j) += s * v;
            }
        }
    }
    M.m = 0.5 * (M.m + M.m.transpose()).eval();
    return M;
}

PotentialMatrix build_matrix_flatwire(const Mesh& mesh) {
    check(mesh, KernelKind::flat_wire);
    const auto n = static_cast<Eigen::Index>(mesh.size());
    const auto& g = rule16();
    const bool mirrored = mesh.mirror_y != Parity::none;
    const double sgn = ysign(mesh);
    PotentialMatrix M{Eigen::MatrixXd::Zero(n, n), KernelKind::flat_wire};

#pragma omp parallel for schedule(dynamic, 16)
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& ei = mesh.elements[i];
        double yi = ei.mid().y;
        for (int img = 0; img < (mirrored ? 2 : 1); ++img) {
            double zs = img == 0 ? 1.0 : -1.0;
            double s = img == 0 ? 1.0 : sgn;
            for (Eigen::Index j = 0; j < n; ++j) {
                const auto& ej = mesh.elements[j];
                double y0 = zs * ej.p0.y, y1 = zs * ej.p1.y;
                double yj = 0.5 * (y0 + y1), h = std::abs(y1 - y0), rb = ej.half_width;
                double dist = std::abs(yi - yj);
                double v = 0.0;
                if (img == 0 && i == j) {
                    double acc = 0.0;
                    for (int k = 0; k < 16; ++k) {
                        double sk = 0.25 * h * (g.x[k] + 1.0);
                        double val = flatwire_kernel(sk, rb) - std::log(4.0 * rb / sk) / (2.0 * kPi * kPi * rb);
                        acc += g.w[k] * val * 0.25 * h;
                    }
                    v = 2.0 * acc / h + (std::log(8.0 * rb / h) + 1.0) / (2.0 * kPi * kPi * rb);
                } else if (dist < 4.0 * std::max(h, ei.width())) {
                    double acc = 0.0;
                    for (int k = 0; k < 16; ++k) acc += g.w[k] * flatwire_kernel(yi - (yj + 0.5 * h * g.x[k]), rb);
                    v = 0.5 * acc;
                } else {
                    v = flatwire_kernel(yi - yj, rb);
                }
                M.m(i, j) += s * v;
            }
        }
    }
    M.m = 0.5 * (M.m + M.m.transpose()).eval();
    return M;
}

PotentialMatrix build_matrix(const Mesh& mesh) {
    switch (mesh.kind) {
        case KernelKind::planar: return build_matrix_2d(mesh);
        case KernelKind::ring: return build_matrix_ring(mesh);
        case KernelKind::flat_wire: return build_matrix_flatwire(mesh);
    }
    throw BuildError("unknown kernel");
}

}  // namespace surfloss::bem
