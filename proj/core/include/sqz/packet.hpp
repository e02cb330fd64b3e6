#pragma once

#include <array>
#include <vector>

#include "sqz/profile.hpp"
#include "sqz/propagate.hpp"
#include "sqz/symplectic.hpp"

namespace sqz {

// Gaussian packet ~ exp(-kappa (x - q0)^2 / 2 + i p0 x); kappa = 1 gives
// balanced initial moments (dq)^2 = (dp)^2 = 1/2.
struct GaussianPacket {
    double q0 = 0.0;
    double p0 = 0.0;
    double kappa = 1.0;
};

// Center transport (q, p) = u (q0, p0). Throws std::invalid_argument when
// |det u - 1| > tol.
std::array<double, 2> evolve_center(const GaussianPacket& pk,
                                    const SymplecticMatrix& u, double tol = 1e-6);

// dq = sqrt(u11^2/(2 kappa) + kappa u12^2 / 2); kappa = 1 reduces to
// sqrt((u11^2 + u12^2)/2).
double uncertainty_q(const GaussianPacket& pk, const SymplecticMatrix& u);
double uncertainty_p(const GaussianPacket& pk, const SymplecticMatrix& u);

// x-probability density (1/(sqrt(pi) dq)) exp(-(x - <q>)^2 / dq^2) with
// <q> = u11 q0 + u12 p0. Requires kappa = 1.
double probability_density(const GaussianPacket& pk, const SymplecticMatrix& u,
                           double x);

struct TrajectorySample {
    double tau, q, p;
};

// One dense integration pass over [tau0, tau1]; the checkpointed matrices
// are applied to every packet center.
std::vector<std::vector<TrajectorySample>> trajectory_congruence(
    const AmplitudeProfile& p, double tau0, double tau1,
    const std::vector<GaussianPacket>& packets, int n_samples,
    StepControl sc = {});

// Two-sided Gaussian 0.999 quantile: erf(w / sqrt(2)) = 0.999.
inline constexpr double kShadowW999 = 3.2905267314919255;

struct ShadowSample {
    double tau, qmean, dq, lo, hi;
};

struct ShadowBand {
    double w = kShadowW999;
    std::vector<ShadowSample> samples;
};

// Band <q> +- w dq along the evolution; requires kappa = 1.
ShadowBand uncertainty_shadow(const AmplitudeProfile& p, double tau0,
                              double tau1, const GaussianPacket& pk, double w,
                              int n_samples, StepControl sc = {});

}  // namespace sqz
