#include "sqz/packet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sqz {

namespace {

void require_kappa(const GaussianPacket& pk) {
    if (!(pk.kappa > 0.0)) throw std::invalid_argument("packet: kappa must be > 0");
}

}  // namespace

std::array<double, 2> evolve_center(const GaussianPacket& pk,
                                    const SymplecticMatrix& u, double tol) {
    require_kappa(pk);
    if (std::fabs(u.det() - 1.0) > tol) {
        throw std::invalid_argument("evolve_center: matrix is not symplectic within tolerance");
    }
    return u.apply({pk.q0, pk.p0});
}

double uncertainty_q(const GaussianPacket& pk, const SymplecticMatrix& u) {
    require_kappa(pk);
    return std::sqrt(u.u11 * u.u11 / (2.0 * pk.kappa) +
                     0.5 * pk.kappa * u.u12 * u.u12);
}

double uncertainty_p(const GaussianPacket& pk, const SymplecticMatrix& u) {
    require_kappa(pk);
    return std::sqrt(u.u21 * u.u21 / (2.0 * pk.kappa) +
                     0.5 * pk.kappa * u.u22 * u.u22);
}

double probability_density(const GaussianPacket& pk, const SymplecticMatrix& u,
                           double x) {
    require_kappa(pk);
    if (std::fabs(pk.kappa - 1.0) > 1e-12) {
        throw std::invalid_argument("probability_density: requires kappa = 1");
    }
    const double dq = uncertainty_q(pk, u);
    const double qc = u.u11 * pk.q0 + u.u12 * pk.p0;
    const double z = (x - qc) / dq;
    return std::exp(-z * z) / (std::sqrt(std::numbers::pi) * dq);
}

std::vector<std::vector<TrajectorySample>> trajectory_congruence(
    const AmplitudeProfile& p, double tau0, double tau1,
    const std::vector<GaussianPacket>& packets, int n_samples, StepControl sc) {
    std::vector<std::vector<TrajectorySample>> out(packets.size());
    for (auto& t : out) t.reserve(static_cast<std::size_t>(n_samples) + 1);
    propagate_sampled(
        p, tau0, tau1, n_samples,
        [&](double tau, const SymplecticMatrix& u) {
            for (std::size_t i = 0; i < packets.size(); ++i) {
                const auto qp = u.apply({packets[i].q0, packets[i].p0});
                out[i].push_back({tau, qp[0], qp[1]});
            }
        },
        sc);
    return out;
}

ShadowBand uncertainty_shadow(const AmplitudeProfile& p, double tau0,
                              double tau1, const GaussianPacket& pk, double w,
                              int n_samples, StepControl sc) {
    require_kappa(pk);
    if (std::fabs(pk.kappa - 1.0) > 1e-12) {
        throw std::invalid_argument("uncertainty_shadow: requires kappa = 1");
    }
    ShadowBand band;
    band.w = w;
    band.samples.reserve(static_cast<std::size_t>(n_samples) + 1);
    if (tau0 == tau1) {
        const SymplecticMatrix u;
        const auto qp = u.apply({pk.q0, pk.p0});
        const double dq = uncertainty_q(pk, u);
        band.samples.push_back({tau0, qp[0], dq, qp[0] - w * dq, qp[0] + w * dq});
        return band;
    }
    propagate_sampled(
        p, tau0, tau1, n_samples,
        [&](double tau, const SymplecticMatrix& u) {
            const auto qp = u.apply({pk.q0, pk.p0});
            const double dq = uncertainty_q(pk, u);
            band.samples.push_back(
                {tau, qp[0], dq, qp[0] - w * dq, qp[0] + w * dq});
        },
        sc);
    return band;
}

}  // namespace sqz
