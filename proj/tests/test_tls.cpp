#include "surfloss/tls.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace surfloss;
using namespace surfloss::tls;

namespace {

DielectricStack oxide3() {
    DielectricStack s;
    s.t_ma = s.t_ms = s.t_sa = nanometres(3);
    return s;
}

const Ribbon kRibbon{micrometres(50), micrometres(100), micrometres(1391), micrometres(0.1)};
const StraightWire kStraight{micrometres(0.1), micrometres(50), micrometres(0.1)};
const TaperedWire kTapered{micrometres(0.1), 0.2, micrometres(50), micrometres(0.1)};

Coplanar line(double a) { return {micrometres(a), micrometres(2 * a), metres(1.0), micrometres(0.1), true}; }

void check_monotone(const TlsSpectrum& sp) {
    REQUIRE(sp.points.size() > 10);
    for (std::size_t i = 1; i < sp.points.size(); ++i) {
        CHECK(sp.points[i].s_max_hz < sp.points[i - 1].s_max_hz);
        CHECK(sp.points[i].area_um2 > sp.points[i - 1].area_um2);
    }
}

}  // namespace

TEST_CASE("saturate") {
    CHECK(saturate(1e-6, 1.0) == doctest::Approx(1e-6).epsilon(1e-6));
    CHECK(saturate(4.0, 2.0) == doctest::Approx(4.0 / std::sqrt(2.0)));
    double e = 100.0;
    CHECK(saturate(e * e, 1.0) == doctest::Approx(e).epsilon(1e-4));
    CHECK_THROWS_AS(saturate(1.0, 0.0), std::domain_error);
    for (double e2 : {0.1, 1.0, 10.0, 1e4})
        for (double es : {0.1, 1.0, 10.0}) {
            CHECK(saturate(e2, es) <= std::min(e2, std::sqrt(e2) * es * std::sqrt(2.0)));
            CHECK(saturate(e2 * 1.1, es) > saturate(e2, es));
            CHECK(saturate(e2, es * 1.1) > saturate(e2, es));
        }
}

TEST_CASE("splitting scale") {
    CHECK(s_max(1.0 / 2e-9, picofarads(2.0)) == doctest::Approx(74e6));
    double p01 = s_max(1.0 / 2e-9, picofarads(0.1));
    CHECK(p01 == doctest::Approx(330e6).epsilon(0.01));
    CHECK(s_max(1.0 / 2e-9, picofarads(0.4)) == doctest::Approx(0.5 * p01));
    CHECK_THROWS_AS(s_max(1.0, farads(0.0)), std::domain_error);
}

TEST_CASE("saturation curves") {
    std::vector<double> grid{1.0, 1e2, 1e4, 1e6, 1e8, 1e10};
    auto sw = saturation_sweep({line(2), line(10), line(50)}, grid);
    REQUIRE(sw.surface.size() == 3);
    REQUIRE(sw.markers.size() == 3);
    for (const auto& c : sw.surface)
        for (std::size_t i = 1; i < c.value.size(); ++i) CHECK(c.value[i] >= c.value[i - 1]);
    // high-power limit: E Es D is scale free up to the fixed t/2 cutoff, so the curves merge
    double lo_spread = sw.surface[2].value[0] / sw.surface[0].value[0];
    double hi_spread = sw.surface[0].value.back() / sw.surface[2].value.back();
    CHECK(lo_spread == doctest::Approx(1.0).epsilon(0.15));
    CHECK(hi_spread > 10.0 * std::abs(lo_spread - 1.0) + 3.0);
    // low-power limit: the unsaturated thin-film energy (closed form good to O(t/a))
    for (std::size_t k = 0; k < 3; ++k) {
        auto c = line(std::array{2.0, 10.0, 50.0}[k]);
        double u = analytic::surface_energies(c, CornerConstants{0.0, 0.0}).u_metal;
        CHECK(sw.surface[k].value.back() == doctest::Approx(u).epsilon(5e-3));
    }
    // volume plateau is the capacitance per length
    double k = 0.5, plateau = 4 * ellipk(k * k) / ellipk_complement(k);
    for (const auto& c : sw.volume) {
        CHECK(c.value.back() == doctest::Approx(plateau).epsilon(1e-6));
        for (std::size_t i = 1; i < c.value.size(); ++i) CHECK(c.value[i] >= c.value[i - 1]);
    }
    CHECK(sw.markers[0].e_s == doctest::Approx(3.0 / (ellipk_complement(0.5) * 2e-6)));
    CHECK_THROWS_AS(saturated_surface_energy(Coplanar{micrometres(2), micrometres(4), metres(1), micrometres(0.1)}, 1.0),
                    std::invalid_argument);
}

TEST_CASE("ribbon spectrum") {
    auto st = oxide3();
    auto sp = ribbon_tls_profile(kRibbon, st, femtofarads(100));
    check_monotone(sp);
    CHECK(sp.s_max_at_area(1.0) == doctest::Approx(300e3).epsilon(0.2));
    // conformal region: A = r_c 2 l (t_MS / 2 nm)
    double A = 1000.0, rc = A * 1e-12 / (2 * 1391e-6 * 1.5);
    double e = st.eps_s / st.eps_ms * analytic::ribbon_field(50e-6 + rc, kRibbon.a, kRibbon.b);
    CHECK(sp.s_max_at_area(A) == doctest::Approx(s_max(e, femtofarads(100))).epsilon(1e-3));
    CHECK_THROWS_AS(sp.s_max_at_area(1e9), std::out_of_range);
}

TEST_CASE("wire spectra") {
    auto st = oxide3();
    auto s = wire_tls_spectrum(kStraight, st, femtofarads(100));
    auto t = wire_tls_spectrum(kTapered, st, femtofarads(100));
    check_monotone(s);
    check_monotone(t);
    CHECK(s.s_max_at_area(1.0) > 1e6);
    CHECK(s.s_max_at_area(1.0) < 4e6);
    CHECK(t.s_max_at_area(1.0) < 1.5e6);
    for (double A : {0.1, 0.3, 1.0, 3.0, 10.0, 25.0}) CHECK(s.s_max_at_area(A) > t.s_max_at_area(A));
    auto s2 = wire_tls_spectrum(kStraight, st, femtofarads(100), WireTlsOptions{0.0, 0.0, Length{0.0}, 200000});
    for (double A : {0.3, 1.0, 10.0})
        CHECK(std::abs(s2.s_max_at_area(A) / s.s_max_at_area(A) - 1) < 0.02);
    CHECK_THROWS_AS(wire_tls_spectrum(kRibbon, st, femtofarads(100)), std::invalid_argument);
    CHECK_THROWS_AS(wire_tls_spectrum(kStraight, st, femtofarads(100), WireTlsOptions{0, 0, Length{0}, 100}),
                    std::invalid_argument);
}

TEST_CASE("splitting density") {
    TlsSpectrum sp{"t", {{3e6, 1.0}, {2e6, 2.0}, {1e6, 3.0}}};
    CHECK(splitting_density(sp, 1e6, 3e6) == doctest::Approx(1.0));
    CHECK(splitting_density(sp, 1e6, 2e6) + splitting_density(sp, 2e6, 3e6) ==
          doctest::Approx(splitting_density(sp, 1e6, 3e6)));
    CHECK_THROWS_AS(splitting_density(sp, 0.5e6, 3e6), std::out_of_range);
    CHECK_THROWS_AS(splitting_density(sp, 2e6, 1e6), std::invalid_argument);
    auto o = observable_summary(sp, 2.0);
    CHECK(o.area_threshold_um2 == doctest::Approx(1.0));
    CHECK(o.largest_hz == doctest::Approx(3e6));
    CHECK(o.density_per_ghz == doctest::Approx(0.5 * (sp.area_at(1e6) - 1.0)));
}

TEST_CASE("parallel plate splitting") {
    auto st = oxide3();
    ParallelPlate p{micrometres(5), micrometres(100), micrometres(1130)};
    auto r = parallel_plate_splitting(p, st, femtofarads(100));
    CHECK(to_um(r.effective_distance) == doctest::Approx(49.0));
    CHECK(r.s_max_hz == doctest::Approx(13e3).epsilon(0.2));
    CHECK(r.effective_area_um2 == doctest::Approx(1.5 * 100 * 1130));
    DielectricStack vac;
    vac.eps_ma = 1.0;
    auto j = parallel_plate_splitting(ParallelPlate{nanometres(2), micrometres(1), micrometres(1)}, vac, picofarads(2));
    CHECK(j.s_max_hz == doctest::Approx(74e6));
}
