#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

#include "sqz/units.hpp"

using namespace sqz;

namespace {

constexpr double kPi = std::numbers::pi;

PhysicalContext proton_ctx() {
    return PhysicalContext::from_omega(kProtonMassG, kElementaryChargeEsu, 10.0, 1e5);
}

}  // namespace

TEST_CASE("context constructors agree") {
    auto a = PhysicalContext::from_omega(kProtonMassG, kElementaryChargeEsu, 10.0, 1e5);
    auto b = PhysicalContext::from_period(kProtonMassG, kElementaryChargeEsu, 10.0,
                                          2.0 * kPi / 1e5);
    CHECK(a.period() == doctest::Approx(b.period()).epsilon(1e-14));
    CHECK(a.omega == doctest::Approx(b.omega).epsilon(1e-14));
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(PhysicalContext::from_omega(0.0, kElementaryChargeEsu, 1.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(PhysicalContext::from_omega(1.0, kElementaryChargeEsu, 1.0, 0.0),
                    std::invalid_argument);
}

TEST_CASE("proton trap energy scale (regression)") {
    auto ctx = proton_ctx();
    CHECK(ctx.energy_scale_ev() == doctest::Approx(1.04396849149).epsilon(1e-11));
}

TEST_CASE("voltage round trip is exact") {
    auto ctx = proton_ctx();
    MathieuParams mp{1.217, 0.844};
    auto drive = required_voltages(ctx, mp);
    auto back = trap_to_dimensionless(ctx, drive);
    CHECK(back.beta0 == doctest::Approx(mp.beta0).epsilon(1e-14));
    CHECK(back.beta1 == doctest::Approx(mp.beta1).epsilon(1e-14));
}

TEST_CASE("static drive voltage (regression)") {
    auto ctx = proton_ctx();
    auto drive = required_voltages(ctx, {1.217, 0.844});
    CHECK(drive.phi0 == doctest::Approx(1.27050977649).epsilon(1e-9));
    CHECK(drive.phi1 == doctest::Approx(1.76221898334).epsilon(1e-9));
}

TEST_CASE("voltages scale as omega^2 r0^2") {
    auto ctx = proton_ctx();
    auto big = PhysicalContext::from_omega(ctx.mass, ctx.charge, 10.0 * ctx.r0, ctx.omega);
    auto d1 = required_voltages(ctx, {1.0, 0.5});
    auto d2 = required_voltages(big, {1.0, 0.5});
    CHECK(d2.phi0 == doctest::Approx(100.0 * d1.phi0).epsilon(1e-12));
    CHECK(d2.phi1 == doctest::Approx(100.0 * d1.phi1).epsilon(1e-12));
}

TEST_CASE("half factor between the two drive components") {
    auto ctx = proton_ctx();
    auto mp = trap_to_dimensionless(ctx, {1.0, 1.0});
    CHECK(mp.beta1 == doctest::Approx(0.5 * mp.beta0).epsilon(1e-14));
}

TEST_CASE("magnetic profile squares the scaled field") {
    auto ctx = proton_ctx();
    double scale = magnetic_field_scale(ctx);
    CHECK(scale == doctest::Approx(2.0 * ctx.mass * kSpeedOfLight /
                                   (ctx.charge * ctx.period())).epsilon(1e-14));
    auto p = magnetic_beta(ctx, [scale](double) { return 0.5 * scale; });
    CHECK(p.beta(0.3) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(p.gamma(0.3) == 1.0);
}

TEST_CASE("field synthesis inverts the magnetic profile") {
    auto ctx = proton_ctx();
    auto beta = [](double tau) { return 1.3 + 0.4 * std::cos(tau); };
    auto field = field_for_beta(ctx, beta);
    auto p = magnetic_beta(ctx, field);
    for (double tau : {0.0, 0.7, 2.1}) {
        CHECK(p.beta(tau) == doctest::Approx(beta(tau)).epsilon(1e-12));
    }
}

TEST_CASE("negative target beta is rejected in field synthesis") {
    auto ctx = proton_ctx();
    auto field = field_for_beta(ctx, [](double) { return -1.0; });
    CHECK_THROWS_AS(field(0.0), std::domain_error);
}
