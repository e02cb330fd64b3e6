#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqz/profile.hpp"
#include "sqz/symplectic.hpp"

namespace sqz {

struct StepControl {
    double dt = 1e-4;
};

struct IntegrationError : std::runtime_error {
    double last_valid_tau;
    IntegrationError(const std::string& what, double tau)
        : std::runtime_error(what), last_valid_tau(tau) {}
};

namespace detail {

// State layout (u11, u12, u21, u22).
using State4 = std::array<double, 4>;

// du = Lambda(tau) u
inline State4 deriv_direct(double b, double g, const State4& u) {
    return {g * u[2], g * u[3], -b * u[0], -b * u[1]};
}

// du = Lambda(tau) u + u Lambda(tau)
inline State4 deriv_symmetric(double b, double g, const State4& u) {
    const double d = g * u[2] - b * u[1];
    const double s = u[0] + u[3];
    return {d, g * s, -b * s, d};
}

template <class BetaFn, class GammaFn, class DerivFn>
State4 rk4_run(BetaFn&& beta, GammaFn&& gamma, DerivFn&& deriv, State4 u,
               double tau0, double tau1, double dt) {
    const double span = tau1 - tau0;
    if (span == 0.0) return u;
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("step control: dt must be positive and finite");
    }
    const auto n = static_cast<std::size_t>(std::ceil(std::fabs(span) / dt));
    const double h = span / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double tau = tau0 + static_cast<double>(i) * h;
        const double tm = tau + 0.5 * h;
        const double te = tau + h;
        const double b0 = beta(tau), g0 = gamma(tau);
        const double bm = beta(tm), gm = gamma(tm);
        const double b1 = beta(te), g1 = gamma(te);

        const State4 k1 = deriv(b0, g0, u);
        State4 t;
        for (int j = 0; j < 4; ++j) t[j] = u[j] + 0.5 * h * k1[j];
        const State4 k2 = deriv(bm, gm, t);
        for (int j = 0; j < 4; ++j) t[j] = u[j] + 0.5 * h * k2[j];
        const State4 k3 = deriv(bm, gm, t);
        for (int j = 0; j < 4; ++j) t[j] = u[j] + h * k3[j];
        const State4 k4 = deriv(b1, g1, t);
        for (int j = 0; j < 4; ++j) {
            u[j] += h / 6.0 * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j]);
        }
        if (!std::isfinite(u[0] + u[1] + u[2] + u[3])) {
            throw IntegrationError("integration produced non-finite entries", tau);
        }
    }
    return u;
}

inline SymplecticMatrix to_matrix(const State4& u) {
    return {u[0], u[1], u[2], u[3]};
}

}  // namespace detail

// u(tau1, tau0) solving du/dtau = Lambda(tau) u, u(tau0, tau0) = 1.
// tau1 < tau0 integrates backwards (negated step).
SymplecticMatrix propagate(const AmplitudeProfile& p, double tau0, double tau1,
                           StepControl sc = {});

// Same as propagate but lands exactly on n_samples + 1 uniform checkpoints
// and reports u(tau_k, tau0) at each via the callback (single pass).
SymplecticMatrix propagate_sampled(
    const AmplitudeProfile& p, double tau0, double tau1, int n_samples,
    const std::function<void(double, const SymplecticMatrix&)>& on_sample,
    StepControl sc = {});

// Step-halving diagnostic: max-entry Richardson error estimate for the
// result at sc.dt (classic RK4, error ~ |u_h - u_{h/2}| / 15).
double richardson_error(const AmplitudeProfile& p, double tau0, double tau1,
                        StepControl sc = {});

// Family u(tau, -tau) for tau on a uniform grid over [0, T], solving
// du/dtau = Lambda(tau) u + u Lambda(tau). Requires a profile symmetric
// about 0 (sampled check, tolerance 1e-10); every member is equidiagonal.
std::vector<std::pair<double, SymplecticMatrix>> propagate_symmetric(
    const AmplitudeProfile& p, double T, int n_samples = 64, StepControl sc = {});

}  // namespace sqz
