#include "sqz/propagate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sqz {

AmplitudeProfile constant_profile(double beta0, double gamma0) {
    AmplitudeProfile p;
    p.beta = [beta0](double) { return beta0; };
    p.gamma = [gamma0](double) { return gamma0; };
    p.symmetric_about_zero = true;
    return p;
}

std::array<std::array<double, 2>, 2> generator(const AmplitudeProfile& p, double tau) {
    if (!p.contains(tau)) throw std::domain_error("generator: tau outside profile domain");
    return {{{0.0, p.gamma(tau)}, {-p.beta(tau), 0.0}}};
}

bool check_symmetric(const AmplitudeProfile& p, double half_span, double tol) {
    if (!(half_span >= 0.0)) return false;
    if (!p.contains(half_span) || !p.contains(-half_span)) return false;
    // 17 interior points plus the end; irrational spacing avoids aliasing
    // periodic profiles.
    constexpr double kStride = 0.56984029099805327;  // (sqrt(5)-1)/2 * ...
    for (int k = 1; k <= 17; ++k) {
        double t = std::fmod(static_cast<double>(k) * kStride, 1.0) * half_span;
        if (k == 17) t = half_span;
        if (std::fabs(p.beta(t) - p.beta(-t)) > tol) return false;
        if (std::fabs(p.gamma(t) - p.gamma(-t)) > tol) return false;
    }
    return true;
}

namespace {

void require_domain(const AmplitudeProfile& p, double tau0, double tau1) {
    const double lo = std::min(tau0, tau1);
    const double hi = std::max(tau0, tau1);
    if (!p.contains(lo) || !p.contains(hi)) {
        throw std::domain_error("propagate: interval outside profile domain");
    }
}

}  // namespace

SymplecticMatrix propagate(const AmplitudeProfile& p, double tau0, double tau1,
                           StepControl sc) {
    require_domain(p, tau0, tau1);
    const auto u = detail::rk4_run(
        p.beta, p.gamma,
        [](double b, double g, const detail::State4& s) { return detail::deriv_direct(b, g, s); },
        detail::State4{1.0, 0.0, 0.0, 1.0}, tau0, tau1, sc.dt);
    return detail::to_matrix(u);
}

SymplecticMatrix propagate_sampled(
    const AmplitudeProfile& p, double tau0, double tau1, int n_samples,
    const std::function<void(double, const SymplecticMatrix&)>& on_sample,
    StepControl sc) {
    require_domain(p, tau0, tau1);
    if (n_samples < 1) throw std::invalid_argument("propagate_sampled: n_samples < 1");
    detail::State4 u{1.0, 0.0, 0.0, 1.0};
    const double span = tau1 - tau0;
    double tau_prev = tau0;
    if (on_sample) on_sample(tau0, detail::to_matrix(u));
    for (int k = 1; k <= n_samples; ++k) {
        const double tau_k =
            (k == n_samples) ? tau1
                             : tau0 + span * static_cast<double>(k) / n_samples;
        u = detail::rk4_run(
            p.beta, p.gamma,
            [](double b, double g, const detail::State4& s) { return detail::deriv_direct(b, g, s); },
            u, tau_prev, tau_k, sc.dt);
        if (on_sample) on_sample(tau_k, detail::to_matrix(u));
        tau_prev = tau_k;
    }
    return detail::to_matrix(u);
}

double richardson_error(const AmplitudeProfile& p, double tau0, double tau1,
                        StepControl sc) {
    const SymplecticMatrix a = propagate(p, tau0, tau1, sc);
    const SymplecticMatrix b = propagate(p, tau0, tau1, StepControl{sc.dt / 2});
    const double e = std::max({std::fabs(a.u11 - b.u11), std::fabs(a.u12 - b.u12),
                               std::fabs(a.u21 - b.u21), std::fabs(a.u22 - b.u22)});
    return e / 15.0;
}

std::vector<std::pair<double, SymplecticMatrix>> propagate_symmetric(
    const AmplitudeProfile& p, double T, int n_samples, StepControl sc) {
    if (!(T >= 0.0)) throw std::invalid_argument("propagate_symmetric: T must be >= 0");
    require_domain(p, -T, T);
    if (n_samples < 1) throw std::invalid_argument("propagate_symmetric: n_samples < 1");
    if (!check_symmetric(p, T)) {
        throw std::invalid_argument("propagate_symmetric: profile is not symmetric about 0");
    }
    std::vector<std::pair<double, SymplecticMatrix>> family;
    family.reserve(static_cast<std::size_t>(n_samples) + 1);
    detail::State4 u{1.0, 0.0, 0.0, 1.0};
    family.emplace_back(0.0, detail::to_matrix(u));
    double tau_prev = 0.0;
    for (int k = 1; k <= n_samples; ++k) {
        const double tau_k = (k == n_samples) ? T : T * static_cast<double>(k) / n_samples;
        u = detail::rk4_run(
            p.beta, p.gamma,
            [](double b, double g, const detail::State4& s) { return detail::deriv_symmetric(b, g, s); },
            u, tau_prev, tau_k, sc.dt);
        family.emplace_back(tau_k, detail::to_matrix(u));
        tau_prev = tau_k;
    }
    return family;
}

}  // namespace sqz
