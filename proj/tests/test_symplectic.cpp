#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

#include "sqz/symplectic.hpp"

using namespace sqz;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("identity and determinant") {
    auto id = SymplecticMatrix::identity();
    CHECK(id.u11 == 1.0);
    CHECK(id.u12 == 0.0);
    CHECK(id.det() == 1.0);
    CHECK(id.trace() == 2.0);
    CHECK(id.is_equidiagonal());

    SymplecticMatrix u{2.0, 3.0, 1.0, 2.0};
    CHECK(u.det() == doctest::Approx(1.0));
    CHECK(u.is_equidiagonal());
    CHECK_FALSE(SymplecticMatrix{2.0, 3.0, 1.0, 2.1}.is_equidiagonal());
}

TEST_CASE("apply acts on column (q, p)") {
    SymplecticMatrix u{0.0, 1.0, -1.0, 0.0};
    auto qp = u.apply({2.0, 3.0});
    CHECK(qp[0] == doctest::Approx(3.0));
    CHECK(qp[1] == doctest::Approx(-2.0));
}

TEST_CASE("product and inverse") {
    SymplecticMatrix a{1.0, 2.0, 0.5, 2.0};
    SymplecticMatrix b{3.0, 1.0, 1.0, 0.5};
    auto ab = a * b;
    CHECK(ab.u11 == doctest::Approx(1.0 * 3.0 + 2.0 * 1.0));
    CHECK(ab.u12 == doctest::Approx(1.0 * 1.0 + 2.0 * 0.5));
    CHECK(ab.u21 == doctest::Approx(0.5 * 3.0 + 2.0 * 1.0));
    CHECK(ab.u22 == doctest::Approx(0.5 * 1.0 + 2.0 * 0.5));

    auto ai = a.inverse();
    auto prod = a * ai;
    CHECK(prod.u11 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(prod.u12 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(prod.u21 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(prod.u22 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("compose applies the last listed matrix first") {
    SymplecticMatrix a{1.0, 1.0, 0.0, 1.0};
    SymplecticMatrix b{1.0, 0.0, 1.0, 1.0};
    auto c = compose({a, b});
    auto manual = a * b;
    CHECK(c.u11 == manual.u11);
    CHECK(c.u12 == manual.u12);
    CHECK(c.u21 == manual.u21);
    CHECK(c.u22 == manual.u22);
    CHECK_THROWS_AS(compose({}), std::invalid_argument);
}

TEST_CASE("rotation matches the constant-amplitude solution") {
    double kappa = 1.7;
    double t = 0.83;
    auto r = rotation(kappa, t);
    CHECK(r.u11 == doctest::Approx(std::cos(kappa * t)).epsilon(1e-14));
    CHECK(r.u12 == doctest::Approx(std::sin(kappa * t) / kappa).epsilon(1e-14));
    CHECK(r.u21 == doctest::Approx(-kappa * std::sin(kappa * t)).epsilon(1e-14));
    CHECK(r.u22 == doctest::Approx(std::cos(kappa * t)).epsilon(1e-14));
    CHECK(r.det() == doctest::Approx(1.0).epsilon(1e-14));

    auto free = rotation(0.0, 2.5);
    CHECK(free.u11 == 1.0);
    CHECK(free.u12 == doctest::Approx(2.5));
    CHECK(free.u21 == 0.0);
}

TEST_CASE("squeezed Fourier form is the quarter-period rotation") {
    double kappa = 0.227;
    auto f = squeezed_fourier(kappa);
    CHECK(f.u11 == 0.0);
    CHECK(f.u22 == 0.0);
    CHECK(f.u12 == doctest::Approx(1.0 / kappa));
    CHECK(f.u21 == doctest::Approx(-kappa));
    CHECK(f.det() == doctest::Approx(1.0).epsilon(1e-14));

    auto r = rotation(kappa, kPi / (2.0 * kappa));
    CHECK(r.u11 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.u12 == doctest::Approx(f.u12).epsilon(1e-12));
}

TEST_CASE("anticommutator preserves equal diagonals") {
    SymplecticMatrix u{1.2, 0.7, -0.3, 1.2};
    SymplecticMatrix v{-0.4, 2.0, 0.9, -0.4};
    auto w = anticommutator(u, v);
    CHECK(w.u11 == doctest::Approx(w.u22).epsilon(1e-14));
}

TEST_CASE("symmetric product keeps equal diagonals and rejects others") {
    SymplecticMatrix v0{0.5, 1.0, -0.75, 0.5};
    SymplecticMatrix v1{2.0, 0.5, 6.0, 2.0};
    SymplecticMatrix v2{-1.0, 0.25, 0.0, -1.0};
    auto w = symmetric_product(v0, {v1, v2});
    CHECK(w.is_equidiagonal(1e-12 * std::fabs(w.u11) + 1e-12));
    auto manual = (v2 * (v1 * (v0 * v1))) * v2;
    CHECK(w.u12 == doctest::Approx(manual.u12).epsilon(1e-13));

    SymplecticMatrix bad{1.0, 0.0, 0.0, 1.5};
    CHECK_THROWS_AS(symmetric_product(bad, {v1}), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_product(v0, {bad}), std::invalid_argument);
}

TEST_CASE("classification: stable rotation") {
    auto rep = classify(rotation(1.0, 0.3));
    CHECK(rep.regime == Regime::Stable);
    CHECK(rep.gamma_trace == doctest::Approx(2.0 * std::cos(0.3)).epsilon(1e-14));
    CHECK(rep.sigma == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(std::abs(rep.eigenvalues[0] - std::polar(1.0, 0.3)) < 1e-12);
}

TEST_CASE("classification: squeezing with ordered real eigenvalues") {
    SymplecticMatrix u{2.5, 0.0, 0.0, 0.4};
    auto rep = classify(u);
    CHECK(rep.regime == Regime::Squeezing);
    CHECK(rep.eigenvalues[0].real() == doctest::Approx(2.5));
    CHECK(rep.eigenvalues[1].real() == doctest::Approx(0.4));
    CHECK(rep.sigma == doctest::Approx(std::acosh(std::fabs(u.trace()) / 2.0)).epsilon(1e-12));
    // row eigenvector for lambda = 2.5 annihilates (u - lambda) from the left
    auto r0 = rep.eigen_rows[0];
    std::complex<double> res = r0[0] * (u.u11 - rep.eigenvalues[0]) + r0[1] * u.u21;
    CHECK(std::abs(res) < 1e-12);
    CHECK(std::max(std::abs(r0[0]), std::abs(r0[1])) == doctest::Approx(1.0));
}

TEST_CASE("classification: threshold band") {
    CHECK(classify(SymplecticMatrix{1.0, 0.0, 0.0, 1.0}).regime == Regime::Threshold);
    SymplecticMatrix near{1.0 + 2e-7, 1.0, 1e-7, 1.0};
    CHECK(classify(near, 1e-5).regime == Regime::Threshold);
    CHECK(classify(rotation(1.0, 0.01)).regime == Regime::Stable);
}

TEST_CASE("classification rejects non-unit determinant") {
    SymplecticMatrix bad{2.0, 0.0, 0.0, 2.0};
    CHECK_THROWS_AS(classify(bad), std::invalid_argument);
}

TEST_CASE("regime names") {
    CHECK(std::string(regime_name(Regime::Stable)) == "Stable");
    CHECK(std::string(regime_name(Regime::Threshold)) == "Threshold");
    CHECK(std::string(regime_name(Regime::Squeezing)) == "Squeezing");
}
