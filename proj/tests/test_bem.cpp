#include "surfloss/bem.hpp"

#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

using namespace surfloss;
using namespace surfloss::bem;

namespace {

template <class F>
double quad(F f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-13);
}

void add_circle(Mesh& m, double r, int n, int electrode) {
    for (int i = 0; i < n; ++i) {
        double a0 = 2 * kPi * i / n, a1 = 2 * kPi * (i + 1) / n;
        m.elements.push_back({{r * std::cos(a0), r * std::sin(a0)}, {r * std::cos(a1), r * std::sin(a1)}, 0.0,
                              electrode, electrode, false});
    }
}

Mesh coax_mesh(int n) {
    Mesh m;
    add_circle(m, 1.0, n, 0);
    add_circle(m, 3.0, 3 * n, 1);
    return m;
}

}  // namespace

TEST_CASE("ring kernel against azimuthal quadrature") {
    struct P {
        double r1, z1, r2, z2;
    };
    for (P p : {P{1.0, 0.0, 1.2, 0.3}, P{0.5, 1.0, 2.0, -1.0}, P{1.0, 0.0, 1.0, 0.01}}) {
        auto f = [&](double ph) {
            return 1.0 / std::sqrt(p.r1 * p.r1 + p.r2 * p.r2 - 2 * p.r1 * p.r2 * std::cos(ph) +
                                   (p.z1 - p.z2) * (p.z1 - p.z2));
        };
        double ref = 2.0 * quad(f, 0.0, kPi) / (8 * kPi * kPi);
        CHECK(ring_kernel(p.r1, p.z1, p.r2, p.z2) == doctest::Approx(ref).epsilon(1e-9));
    }
    CHECK(ring_kernel(0.0, 2.0, 0.0, 0.0) == doctest::Approx(1.0 / (8 * kPi)));
}

TEST_CASE("flat-wire kernel: edge-weighted strip charge seen on axis") {
    for (double y : {0.05, 0.5, 5.0}) {
        double w = 0.3;
        auto f = [&](double th) { return 1.0 / std::sqrt(y * y + w * w * std::sin(th) * std::sin(th)); };
        double ref = quad(f, -0.5 * kPi, 0.5 * kPi) / (4 * kPi * kPi);
        CHECK(flatwire_kernel(y, w) == doctest::Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("planar kernel is the 2-D Green function") {
    CHECK(planar_kernel(1.0) == 0.0);
    CHECK(planar_kernel(std::exp(1.0)) == doctest::Approx(-1.0 / (2 * kPi)));
}

TEST_CASE("graded breakpoints") {
    auto g = graded(10.0, 0.01, 1.0);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == doctest::Approx(10.0));
    CHECK(g[1] - g[0] == doctest::Approx(0.01).epsilon(0.2));
    for (std::size_t i = 1; i < g.size(); ++i) {
        CHECK(g[i] > g[i - 1]);
        CHECK(g[i] - g[i - 1] <= 1.05);
    }
    auto s = graded_span(2.0, 4.0, 0.01, 0.2, true, true);
    CHECK(s.front() == 2.0);
    CHECK(s.back() == doctest::Approx(4.0));
}

TEST_CASE("potential matrix is symmetric and the coax solve is accurate") {
    auto m = coax_mesh(60);
    auto M = build_matrix_2d(m);
    CHECK((M.m - M.m.transpose()).cwiseAbs().maxCoeff() <= 1e-14 * M.m.cwiseAbs().maxCoeff());
    auto sol = solve(M, m, {1.0, 0.0});
    CHECK(sol.capacitance == doctest::Approx(2 * kPi / std::log(3.0)).epsilon(0.005));
    CHECK(sol.residual < 1e-10);
    CHECK(sol.charge_on(m, 1) == doctest::Approx(-sol.charge_on(m, 0)).epsilon(1e-3));

    auto sd = surface_density(m, sol);
    double q = 0.0;
    for (std::size_t i = 0; i < 60; ++i) q += sd[i] * m.elements[i].width();
    CHECK(q == doctest::Approx(sol.charge_on(m, 0)).epsilon(1e-12));
    // radial field between the conductors
    auto e = field_at(m, sol, {2.0, 0.0});
    CHECK(e.x == doctest::Approx(sol.charge_on(m, 0) / (2 * kPi * 2.0)).epsilon(0.005));
    CHECK(std::abs(e.y) < 1e-3 * std::abs(e.x));
}

TEST_CASE("mesh doubling changes results by under 0.5%") {
    auto a = coax_study(10, 100, 50), b = coax_study(10, 100, 100);
    CHECK(std::abs(a.capacitance / b.capacitance - 1) < 0.005);
    CHECK(b.rel_error < a.rel_error);

    auto f1 = flat_coax_thin(10, 100, 1.0), f2 = flat_coax_thin(10, 100, 2.0);
    CHECK(std::abs(f1.charge_ratio / f2.charge_ratio - 1) < 0.005);

    auto r1 = ribbon_thin(50, 100, 0, 0.05, 1.0), r2 = ribbon_thin(50, 100, 0, 0.05, 2.0);
    CHECK(std::abs(r1.capacitance / r2.capacitance - 1) < 0.005);
    CHECK(std::abs(r1.u_metal / r2.u_metal - 1) < 0.005);
}

TEST_CASE("thin ribbon against the conformal solution") {
    auto r = ribbon_thin(50, 100, 0, 0.05, 1.0);
    CHECK(r.capacitance == doctest::Approx(1.0 / ck_ratio(0.5)).epsilon(0.005));
}

TEST_CASE("corner constants of a square edge") {
    auto s = flat_coax_thick(1.0, 20.0, 0.1, EdgeStyle::square, 1.0);
    CHECK(s.c_m == doctest::Approx(5.0).epsilon(0.1));
    CHECK(s.c_s == doctest::Approx(1.6).epsilon(0.2));
    auto c = flat_coax_thick(1.0, 20.0, 0.1, EdgeStyle::semicircular, 1.0);
    CHECK(c.c_m < s.c_m);
}

TEST_CASE("unknown cap and degenerate systems") {
    Mesh big;
    add_circle(big, 1.0, int(kMaxUnknowns) + 1, 0);
    CHECK_THROWS_AS(build_matrix_2d(big), BuildError);

    Mesh ring_as_planar = coax_mesh(8);
    ring_as_planar.kind = KernelKind::ring;
    CHECK_THROWS_AS(build_matrix_2d(ring_as_planar), BuildError);

    auto m = coax_mesh(8);
    auto M = build_matrix_2d(m);
    M.m.row(0) = M.m.row(1);
    M.m.col(0) = M.m.col(1);
    CHECK_THROWS_AS(solve(M, m, {1.0, 0.0}), SolverError);
}

TEST_CASE("solution CSV") {
    auto m = coax_mesh(8);
    auto sol = solve(build_matrix_2d(m), m, {1.0, 0.0});
    std::ostringstream os;
    write_solution_csv(os, m, sol);
    std::string s = os.str();
    CHECK(s.rfind("x,y,width,charge,field,side\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 33);
}
