#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqz/profile.hpp"
#include "sqz/propagate.hpp"

namespace sqz {

// Kinetic amplitude gamma(tau) entering the beta synthesis formula.
// Restricted to the two forms the design interface admits so that exact
// derivatives and serialization stay trivial.
struct GammaSpec {
    enum class Kind { Const, Sin2 };
    Kind kind = Kind::Const;
    double value = 1.0;  // Const only

    double operator()(double tau) const;
    double d1(double tau) const;
    double d2(double tau) const;
    // gamma at the interval end tau = pi/2.
    double end_value() const;

    static GammaSpec constant(double v) { return {Kind::Const, v}; }
    static GammaSpec sin2() { return {Kind::Sin2, 1.0}; }
};

// theta(tau) = a1 sin(tau) + a3 sin(3 tau) + a5 sin(5 tau) + a7 sin(7 tau),
// the designed u12(tau, -tau), plus the design parameters it was built from.
struct ThetaDesign {
    double a1 = 0.0, a3 = 0.0, a5 = 0.0, a7 = 0.0;
    double b = 2.0;
    double c = -3.0;
    double beta_end = 0.0;
    GammaSpec gamma_fn = GammaSpec::constant(1.0);
};

struct ThetaJet {
    double th, th1, th2, th3;
};

struct DesignError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solves the 4x4 linear system assembled from the analytic conditions
//   theta(pi/2) = b, theta'(0) = 2,
//   theta''(pi/2) = -(2/b) gamma_end - 2 b beta_end,
//   a1 + 27 a3 + 125 a5 + 343 a7 = -c,
// with gamma_end = gamma(pi/2). Requires b != 0 and c != 0.
ThetaDesign solve_coefficients(double b, double c, double beta_end,
                               const GammaSpec& gamma);
ThetaDesign solve_coefficients(double b, double c, double beta_end,
                               double gamma_end);

// Closed-form coefficient expressions kept as a cross-check of the linear
// solve; see coefficient_discrepancy.
std::array<double, 4> closed_form_coefficients(double b, double c,
                                               double beta_end, double gamma_end);

// max |a_solved - a_closed_form| for the given design.
double coefficient_discrepancy(const ThetaDesign& d);

ThetaJet theta_eval(const ThetaDesign& d, double tau);

// Direct formula beta = gamma ([theta'/2]^2 - 1)/theta^2 - theta''/(2 theta);
// only valid away from zeros of theta.
double beta_pointwise(const ThetaJet& j, double gamma);

// beta(tau) from the design, with the removable singularity at zeros of
// theta evaluated by a 4th-order Taylor limit (window |theta| <= 1e-5).
// Throws DesignError at a zero of theta with |theta'| != 2 (genuinely
// singular beta) .
double beta_from_theta(const ThetaDesign& d, double tau);

// Propagation profile of the design: beta synthesized from theta, unit
// kinetic amplitude, symmetric about 0, defined for all tau (the harmonic
// theta extends the amplitude beyond [-pi/2, pi/2]).
AmplitudeProfile design_profile(const ThetaDesign& d);

struct SingularPoint {
    double tau;
    double theta_prime;
};

struct DesignReport {
    bool condition1_ok = true;  // theta = 0 => theta' = +-2
    bool condition2_ok = true;  // theta''' = 0 at such points => beta' = 0
    bool condition3_ok = true;  // theta' = 0, theta != 0 => -beta theta^2 = theta'' theta / 2 + gamma
    double condition1_residual = 0.0;
    double condition2_residual = 0.0;
    double condition3_residual = 0.0;
    double beta_endpoint_residual = 0.0;  // |beta(pi/2) - beta_end|
    std::vector<SingularPoint> singular_points;

    bool ok() const { return condition1_ok && condition2_ok && condition3_ok; }
};

// Checks the regularity conditions on [-T, T] (zeros located by a 1e4-point
// sign scan plus bisection, tau = 0 always included).
DesignReport validate_design(const ThetaDesign& d, double T);

struct EigenSample {
    double tau;
    double re_plus;
    double re_minus;
    bool is_real_pair;  // |Tr u| >= 2
};

// Eigenvalues of u(tau, -tau) on a uniform grid in (0, T].
std::vector<EigenSample> eigentrajectories(const AmplitudeProfile& p, double T,
                                           int n_samples, StepControl sc = {});

struct SuitabilityReport {
    bool suitable = false;  // beta >= -1e-9 at all samples
    double beta_min = 0.0;
    double beta_min_tau = 0.0;
    int beta_sign_changes = 0;
    std::vector<EigenSample> eigen;
};

SuitabilityReport suitability(const ThetaDesign& d, double T, int n_samples);

}  // namespace sqz
