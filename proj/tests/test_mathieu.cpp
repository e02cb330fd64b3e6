#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

#include "sqz/mathieu.hpp"

using namespace sqz;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("profile shape") {
    auto p = mathieu_profile({1.217, 0.844});
    CHECK(p.beta(kPi / 2) == doctest::Approx(1.217).epsilon(1e-15));
    CHECK(p.beta(0.0) == doctest::Approx(1.217 + 2 * 0.844).epsilon(1e-15));
    CHECK(p.gamma(0.37) == 1.0);
    CHECK(p.symmetric_about_zero);
}

TEST_CASE("flat drive monodromy trace matches 2 cos(2 pi sqrt(beta0))") {
    for (double beta0 : {0.3, 0.52, 1.0, 1.7, 2.9}) {
        auto u = monodromy({beta0, 0.0});
        CHECK(u.trace() ==
              doctest::Approx(2.0 * std::cos(2.0 * kPi * std::sqrt(beta0))).epsilon(1e-10));
        CHECK(std::fabs(u.det() - 1.0) < 1e-10);
    }
}

TEST_CASE("monodromy trace is invariant under the start phase") {
    MathieuParams mp{1.4, 0.9};
    double t0 = monodromy(mp, kPi / 2).trace();
    double t1 = monodromy(mp, 0.0).trace();
    double t2 = monodromy(mp, 1.234).trace();
    CHECK(std::fabs(t0 - t1) < 1e-8);
    CHECK(std::fabs(t0 - t2) < 1e-8);
}

TEST_CASE("grid coordinates") {
    ScanGrid g;
    g.beta0_lo = 1.0;
    g.beta0_hi = 2.0;
    g.n0 = 11;
    CHECK(g.beta0_at(0) == doctest::Approx(1.0));
    CHECK(g.beta0_at(5) == doctest::Approx(1.5));
    CHECK(g.beta0_at(10) == doctest::Approx(2.0));
}

TEST_CASE("raster classifies cells consistently with the trace") {
    ScanGrid g;
    g.beta0_lo = 1.1;
    g.beta0_hi = 1.35;
    g.beta1_lo = 0.7;
    g.beta1_hi = 0.95;
    g.n0 = 6;
    g.n1 = 6;
    auto map = strutt_map(g);
    REQUIRE(map.cells.size() == 36);
    CHECK(map.failed == 0);
    for (const auto& cell : map.cells) {
        REQUIRE(cell.ok);
        if (std::fabs(cell.trace) > 2.0 + 1e-6) CHECK(cell.regime == Regime::Squeezing);
        if (std::fabs(cell.trace) < 2.0 - 1e-6) CHECK(cell.regime == Regime::Stable);
    }
}

TEST_CASE("raster rejects bad grids") {
    ScanGrid g;
    g.n0 = 0;
    CHECK_THROWS_AS(strutt_map(g), std::invalid_argument);
    ScanGrid h;
    h.beta0_hi = h.beta0_lo - 1.0;
    CHECK_THROWS_AS(strutt_map(h), std::invalid_argument);
}

TEST_CASE("traced curve points are roots of the named element") {
    ScanGrid g;
    g.beta0_lo = 1.15;
    g.beta0_hi = 1.3;
    g.beta1_lo = 0.7;
    g.beta1_hi = 0.95;
    g.n0 = 16;
    g.n1 = 16;
    auto c12 = trace_curve(CurveKind::U12Zero, g);
    auto c21 = trace_curve(CurveKind::U21Zero, g);
    REQUIRE(!c12.points.empty());
    REQUIRE(!c21.points.empty());
    for (const auto& pt : c12.points) {
        auto u = monodromy({pt.beta0, pt.beta1}, g.tau0, StepControl{g.step});
        CHECK(std::fabs(u.u12) < 1e-6);
        CHECK(pt.lambda == doctest::Approx(u.u11).epsilon(1e-6));
    }
    for (const auto& pt : c21.points) {
        auto u = monodromy({pt.beta0, pt.beta1}, g.tau0, StepControl{g.step});
        CHECK(std::fabs(u.u21) < 1e-6);
    }
}

TEST_CASE("curve intersection in the second squeezing window (regression)") {
    ScanGrid g;
    g.beta0_lo = 1.1;
    g.beta0_hi = 1.35;
    g.beta1_lo = 0.7;
    g.beta1_hi = 0.95;
    g.n0 = 26;
    g.n1 = 26;
    auto c12 = trace_curve(CurveKind::U12Zero, g);
    auto c21 = trace_curve(CurveKind::U21Zero, g);
    auto hit = find_intersection(c12, c21);
    // regression values produced by this integrator at step 1e-4
    CHECK(hit.params.beta0 == doctest::Approx(1.22948978612).epsilon(1e-6));
    CHECK(hit.params.beta1 == doctest::Approx(0.835709004531).epsilon(1e-6));
    CHECK(hit.u.u11 == doctest::Approx(0.235678907596).epsilon(1e-6));
    CHECK(std::fabs(hit.u.u12) < 1e-9);
    CHECK(std::fabs(hit.u.u21) < 1e-9);
    CHECK(hit.u.u11 * hit.u.u22 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("intersection of empty curves is reported as not found") {
    SqueezeCurve a, b;
    a.kind = CurveKind::U12Zero;
    b.kind = CurveKind::U21Zero;
    CHECK_THROWS_AS(find_intersection(a, b), IntersectionNotFound);
}
