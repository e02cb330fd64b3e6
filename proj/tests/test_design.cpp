#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

#include "sqz/propagate.hpp"
#include "sqz/theta_design.hpp"

using namespace sqz;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalf = kPi / 2;

// the six reference designs exercised throughout
struct Case {
    double b, c, beta_end;
    bool sin2;
};
constexpr Case kCases[] = {
    {2.0, -3.0, 0.0, true},   {1.75, -3.0, 0.0, true},  {1.8, 3.5, 0.0, true},
    {2.15, -1.0, 0.1, false}, {1.85, -2.0, 0.1, false}, {2.15, 1.0, 0.1, false},
};

GammaSpec gamma_of(const Case& cs) {
    return cs.sin2 ? GammaSpec::sin2() : GammaSpec::constant(1.0);
}

}  // namespace

TEST_CASE("gamma spec forms and derivatives") {
    auto c = GammaSpec::constant(2.5);
    CHECK(c(0.7) == 2.5);
    CHECK(c.d1(0.7) == 0.0);
    CHECK(c.d2(0.7) == 0.0);
    CHECK(c.end_value() == 2.5);

    auto s = GammaSpec::sin2();
    CHECK(s(0.7) == doctest::Approx(std::sin(0.7) * std::sin(0.7)).epsilon(1e-15));
    CHECK(s.d1(0.7) == doctest::Approx(std::sin(1.4)).epsilon(1e-15));
    CHECK(s.d2(0.7) == doctest::Approx(2.0 * std::cos(1.4)).epsilon(1e-15));
    CHECK(s.end_value() == doctest::Approx(1.0));
}

TEST_CASE("solved coefficients satisfy the four analytic conditions") {
    for (const auto& cs : kCases) {
        auto g = gamma_of(cs);
        auto d = solve_coefficients(cs.b, cs.c, cs.beta_end, g);
        auto j0 = theta_eval(d, 0.0);
        auto jh = theta_eval(d, kHalf);
        double gend = g.end_value();
        CHECK(jh.th == doctest::Approx(cs.b).epsilon(1e-12));
        CHECK(j0.th1 == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(jh.th2 ==
              doctest::Approx(-(2.0 / cs.b) * gend - 2.0 * cs.b * cs.beta_end).epsilon(1e-12));
        CHECK(j0.th3 == doctest::Approx(cs.c).epsilon(1e-12));
        CHECK(j0.th == doctest::Approx(0.0).epsilon(1e-12));  // odd harmonics only
    }
}

TEST_CASE("linear solve agrees with the closed-form expressions") {
    for (const auto& cs : kCases) {
        auto d = solve_coefficients(cs.b, cs.c, cs.beta_end, gamma_of(cs));
        CHECK(coefficient_discrepancy(d) < 1e-12);
    }
}

TEST_CASE("first reference design has the known rational coefficients") {
    auto d = solve_coefficients(2.0, -3.0, 0.0, GammaSpec::sin2());
    CHECK(d.a1 == doctest::Approx(65.0 / 32.0).epsilon(1e-13));
    CHECK(d.a3 == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(d.a5 == doctest::Approx(-1.0 / 48.0).epsilon(1e-13));
    CHECK(d.a7 == doctest::Approx(1.0 / 96.0).epsilon(1e-13));
}

TEST_CASE("degenerate design parameters are rejected") {
    CHECK_THROWS_AS(solve_coefficients(0.0, -3.0, 0.0, GammaSpec::sin2()),
                    std::invalid_argument);
}

TEST_CASE("beta limit at the central zero (constant gamma)") {
    // theta ~ 2 tau + (c/6) tau^3 near 0 gives beta(0) = -c/8
    for (double c : {-1.0, -2.0, 1.0}) {
        auto d = solve_coefficients(2.15, c, 0.1, GammaSpec::constant(1.0));
        CHECK(beta_from_theta(d, 0.0) == doctest::Approx(-c / 8.0).epsilon(1e-9));
    }
}

TEST_CASE("beta is continuous across the series window") {
    auto d = solve_coefficients(2.15, -1.0, 0.1, GammaSpec::constant(1.0));
    // theta ~ 2 tau near 0, so the window |theta| <= 1e-5 ends near tau = 5e-6
    double inside = beta_from_theta(d, 4.0e-6);
    double outside = beta_from_theta(d, 7.0e-6);
    CHECK(std::fabs(inside - outside) < 1e-5);
}

TEST_CASE("beta endpoint honours beta_end for both gamma forms") {
    for (const auto& cs : kCases) {
        auto d = solve_coefficients(cs.b, cs.c, cs.beta_end, gamma_of(cs));
        CHECK(beta_from_theta(d, kHalf) == doctest::Approx(cs.beta_end).epsilon(1e-9));
    }
}

TEST_CASE("validation passes for all six reference designs") {
    for (const auto& cs : kCases) {
        auto d = solve_coefficients(cs.b, cs.c, cs.beta_end, gamma_of(cs));
        auto rep = validate_design(d, kHalf);
        CHECK(rep.condition1_ok);
        CHECK(rep.condition2_ok);
        CHECK(rep.condition3_ok);
        CHECK(rep.ok());
        CHECK(rep.beta_endpoint_residual < 1e-9);
        REQUIRE(!rep.singular_points.empty());
        CHECK(rep.singular_points.front().tau == doctest::Approx(0.0));
        CHECK(std::fabs(std::fabs(rep.singular_points.front().theta_prime) - 2.0) < 1e-9);
    }
}

TEST_CASE("condition 2 holds on a design built with theta'''(0) = 0") {
    // a1 = 9/4, a3 = -1/12 gives theta'(0) = 2 and theta'''(0) = 0
    ThetaDesign d;
    d.a1 = 2.25;
    d.a3 = -1.0 / 12.0;
    d.a5 = 0.0;
    d.a7 = 0.0;
    d.gamma_fn = GammaSpec::constant(1.0);
    auto j = theta_eval(d, 0.0);
    REQUIRE(j.th1 == doctest::Approx(2.0).epsilon(1e-14));
    REQUIRE(j.th3 == doctest::Approx(0.0).epsilon(1e-14));
    auto rep = validate_design(d, kHalf);
    CHECK(rep.condition2_ok);
    CHECK(rep.condition2_residual < 1e-6);
}

TEST_CASE("an invalid design is flagged or raises") {
    auto d = solve_coefficients(0.2, -30.0, 0.0, GammaSpec::constant(1.0));
    auto rep = validate_design(d, kHalf);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("design profile propagates to the designed endpoint matrix") {
    // with unit gamma the round trip closes: u12(T, -T) = theta(T)
    for (const auto& cs : kCases) {
        if (cs.sin2) continue;
        auto d = solve_coefficients(cs.b, cs.c, cs.beta_end, GammaSpec::constant(1.0));
        auto p = design_profile(d);
        auto u = propagate(p, -kHalf, kHalf);
        CHECK(u.u12 == doctest::Approx(theta_eval(d, kHalf).th).epsilon(1e-6));
        CHECK(std::fabs(u.u11) < 1e-6);
        CHECK(std::fabs(u.u22) < 1e-6);
    }
}

TEST_CASE("designed theta matches u12 of the symmetric family (unit gamma)") {
    auto d = solve_coefficients(2.15, -1.0, 0.1, GammaSpec::constant(1.0));
    auto p = design_profile(d);
    auto family = propagate_symmetric(p, kHalf, 16);
    for (const auto& [tau, u] : family) {
        CHECK(u.u12 == doctest::Approx(theta_eval(d, tau).th).epsilon(1e-8));
    }
}

TEST_CASE("eigentrajectories cover the sampled interval") {
    auto d = solve_coefficients(2.0, -3.0, 0.0, GammaSpec::sin2());
    auto p = design_profile(d);
    auto eig = eigentrajectories(p, kHalf, 32);
    REQUIRE(eig.size() == 32);
    CHECK(eig.front().tau > 0.0);
    CHECK(eig.back().tau == doctest::Approx(kHalf).epsilon(1e-12));
    for (const auto& s : eig) {
        if (s.is_real_pair) {
            CHECK(s.re_plus * s.re_minus == doctest::Approx(1.0).epsilon(1e-6));
        } else {
            CHECK(s.re_plus == doctest::Approx(s.re_minus).epsilon(1e-12));
        }
    }
}

TEST_CASE("suitability flags are internally consistent") {
    for (const auto& cs : kCases) {
        auto d = solve_coefficients(cs.b, cs.c, cs.beta_end, gamma_of(cs));
        auto suit = suitability(d, kHalf, 400);
        CHECK(suit.suitable == (suit.beta_min >= -1e-9));
        CHECK(std::fabs(suit.beta_min_tau) <= kHalf + 1e-12);
        CHECK(!suit.eigen.empty());
    }
}
