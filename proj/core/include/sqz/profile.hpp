#pragma once

#include <array>
#include <functional>
#include <limits>

namespace sqz {

// Time-dependent amplitudes of the generator Lambda(tau) = ||0, gamma; -beta, 0||.
struct AmplitudeProfile {
    std::function<double(double)> beta;
    std::function<double(double)> gamma = [](double) { return 1.0; };
    double tau_lo = -std::numeric_limits<double>::infinity();
    double tau_hi = std::numeric_limits<double>::infinity();
    // Set for profiles built symmetric about 0; propagate_symmetric verifies
    // by sampling regardless.
    bool symmetric_about_zero = false;

    bool contains(double tau) const { return tau >= tau_lo && tau <= tau_hi; }
};

AmplitudeProfile constant_profile(double beta0, double gamma0 = 1.0);

// ||0, gamma(tau); -beta(tau), 0||, row-major. Throws std::domain_error when
// tau is outside the profile domain.
std::array<std::array<double, 2>, 2> generator(const AmplitudeProfile& p, double tau);

// Sampled symmetry check |f(tau) - f(-tau)| <= tol for both amplitudes.
bool check_symmetric(const AmplitudeProfile& p, double half_span, double tol = 1e-10);

}  // namespace sqz
