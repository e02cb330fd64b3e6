#include "sqz/theta_design.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sqz {

double GammaSpec::operator()(double tau) const {
    if (kind == Kind::Const) return value;
    const double s = std::sin(tau);
    return s * s;
}

double GammaSpec::d1(double tau) const {
    if (kind == Kind::Const) return 0.0;
    return std::sin(2.0 * tau);
}

double GammaSpec::d2(double tau) const {
    if (kind == Kind::Const) return 0.0;
    return 2.0 * std::cos(2.0 * tau);
}

double GammaSpec::end_value() const {
    return kind == Kind::Const ? value : 1.0;
}

namespace {

constexpr double kSingWindow = 1e-5;  // |theta| below this: Taylor limit

constexpr std::array<double, 4> kHarmonics{1.0, 3.0, 5.0, 7.0};

std::array<double, 4> coeffs(const ThetaDesign& d) {
    return {d.a1, d.a3, d.a5, d.a7};
}

double theta_d4(const ThetaDesign& d, double tau) {
    const auto a = coeffs(d);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double k = kHarmonics[static_cast<std::size_t>(i)];
        s += a[static_cast<std::size_t>(i)] * k * k * k * k * std::sin(k * tau);
    }
    return s;
}

}  // namespace

ThetaJet theta_eval(const ThetaDesign& d, double tau) {
    const auto a = coeffs(d);
    ThetaJet j{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        const double k = kHarmonics[i];
        const double s = std::sin(k * tau);
        const double c = std::cos(k * tau);
        j.th += a[i] * s;
        j.th1 += a[i] * k * c;
        j.th2 -= a[i] * k * k * s;
        j.th3 -= a[i] * k * k * k * c;
    }
    return j;
}

ThetaDesign solve_coefficients(double b, double c, double beta_end,
                               const GammaSpec& gamma) {
    if (b == 0.0) throw std::invalid_argument("solve_coefficients: b must be nonzero");
    const double gamma_end = gamma.end_value();
    Eigen::Matrix4d M;
    M << 1, -1, 1, -1,          // theta(pi/2) = b
         1, 3, 5, 7,            // theta'(0) = 2
        -1, 9, -25, 49,         // theta''(pi/2)
         1, 27, 125, 343;       // -theta'''(0)
    Eigen::Vector4d rhs;
    rhs << b, 2.0, -(2.0 / b) * gamma_end - 2.0 * b * beta_end, -c;
    const auto lu = M.fullPivLu();
    if (!lu.isInvertible()) {
        throw std::logic_error("solve_coefficients: design system is singular");
    }
    const Eigen::Vector4d a = lu.solve(rhs);
    ThetaDesign d;
    d.a1 = a[0];
    d.a3 = a[1];
    d.a5 = a[2];
    d.a7 = a[3];
    d.b = b;
    d.c = c;
    d.beta_end = beta_end;
    d.gamma_fn = gamma;
    return d;
}

ThetaDesign solve_coefficients(double b, double c, double beta_end,
                               double gamma_end) {
    return solve_coefficients(b, c, beta_end, GammaSpec::constant(gamma_end));
}

std::array<double, 4> closed_form_coefficients(double b, double c,
                                               double beta_end, double gamma_end) {
    const double g = gamma_end, b0 = beta_end;
    return {
        (b * (58 + c + 5 * b * (21 - 2 * b0)) - 10 * g) / (128 * b),
        (b * (74 + c - b * (35 + 2 * b0)) - 2 * g) / (128 * b),
        (b * (22 - c + 3 * b * (-7 + 6 * b0)) + 18 * g) / (384 * b),
        -(b * (26 + c + 3 * b * (-5 + 2 * b0)) + 6 * g) / (384 * b),
    };
}

double coefficient_discrepancy(const ThetaDesign& d) {
    const auto cf =
        closed_form_coefficients(d.b, d.c, d.beta_end, d.gamma_fn.end_value());
    const auto a = coeffs(d);
    double m = 0.0;
    for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::fabs(a[i] - cf[i]));
    return m;
}

double beta_pointwise(const ThetaJet& j, double gamma) {
    const double half = 0.5 * j.th1;
    return gamma * (half * half - 1.0) / (j.th * j.th) - j.th2 / (2.0 * j.th);
}

namespace {

// Zero of theta near tau (Newton; theta' ~ +-2 there makes it quadratic).
double locate_zero(const ThetaDesign& d, double tau) {
    double t = tau;
    for (int i = 0; i < 100; ++i) {
        const ThetaJet j = theta_eval(d, t);
        if (std::fabs(j.th1) < 0.5) {
            throw DesignError("beta_from_theta: theta' degenerate near a zero of theta");
        }
        const double dt = j.th / j.th1;
        t -= dt;
        if (std::fabs(dt) < 1e-15) return t;
    }
    throw DesignError("beta_from_theta: zero location did not converge");
}

}  // namespace

double beta_from_theta(const ThetaDesign& d, double tau) {
    const ThetaJet j = theta_eval(d, tau);
    if (std::fabs(j.th) > kSingWindow) {
        return beta_pointwise(j, d.gamma_fn(tau));
    }

    const double t0 = locate_zero(d, tau);
    const ThetaJet z = theta_eval(d, t0);
    const double s = z.th1;
    if (std::fabs(std::fabs(s) - 2.0) > 1e-6) {
        throw DesignError("beta_from_theta: theta' != +-2 at a zero of theta (beta singular)");
    }
    const double A = 0.5 * z.th2;
    const double B = z.th3 / 6.0;
    const double C = theta_d4(d, t0) / 24.0;
    const double g0 = d.gamma_fn(t0);
    const double g1 = d.gamma_fn.d1(t0);
    const double g2 = 0.5 * d.gamma_fn.d2(t0);

    // theta = s h + A h^2 + B h^3 + C h^4 about t0; the 1/h coefficient
    // (g0 - 1) A / s vanishes identically for the admissible zeros (odd
    // theta has A = 0 there); a real residue means beta diverges.
    const double pole = (g0 - 1.0) * (A / s);
    if (std::fabs(pole) > 1e-8) {
        throw DesignError("beta_from_theta: non-removable singularity at a zero of theta");
    }
    const double P0 = (1.5 * s * B - A * A) / (s * s);
    const double P1 = (2.0 * s * C - 2.0 * A * B + A * A * A / s) / (s * s);
    const double Q0 = 3.0 * B / s - A * A / (s * s);
    const double Q1 = (6.0 * C - 4.0 * A * B / s + A * A * A / (s * s)) / s;
    const double h = tau - t0;
    return g0 * P0 + g1 * (A / s) - Q0 + (g0 * P1 + g1 * P0 + g2 * (A / s) - Q1) * h;
}

AmplitudeProfile design_profile(const ThetaDesign& d) {
    AmplitudeProfile p;
    p.beta = [d](double tau) { return beta_from_theta(d, tau); };
    // Unit kinetic amplitude: gamma_fn enters only the beta synthesis.
    p.gamma = [](double) { return 1.0; };
    p.symmetric_about_zero = true;
    return p;
}

namespace {

// Sign-change scan plus bisection for f over [0, T].
template <class F>
std::vector<double> scan_zeros(F&& f, double T, int n, double bisect_tol) {
    std::vector<double> zs;
    double t_prev = 0.0;
    double f_prev = f(t_prev);
    for (int i = 1; i <= n; ++i) {
        const double t = T * static_cast<double>(i) / n;
        const double fi = f(t);
        if (fi == 0.0) {
            zs.push_back(t);
        } else if ((f_prev < 0.0 && fi > 0.0) || (f_prev > 0.0 && fi < 0.0)) {
            double lo = t_prev, hi = t, flo = f_prev;
            while (hi - lo > bisect_tol) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if ((flo <= 0.0) == (fm <= 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            zs.push_back(0.5 * (lo + hi));
        }
        t_prev = t;
        f_prev = fi;
    }
    return zs;
}

}  // namespace

DesignReport validate_design(const ThetaDesign& d, double T) {
    DesignReport rep;
    constexpr int kScanPoints = 10000;

    // Condition 1 at zeros of theta (tau = 0 is always one).
    std::vector<double> zeros{0.0};
    {
        auto zs = scan_zeros([&](double t) { return theta_eval(d, t).th; }, T,
                             kScanPoints, 1e-12);
        for (double z : zs) {
            if (z > 1e-9) zeros.push_back(z);
        }
    }
    for (double z : zeros) {
        const ThetaJet j = theta_eval(d, z);
        rep.singular_points.push_back({z, j.th1});
        const double r1 = std::fabs(std::fabs(j.th1) - 2.0);
        rep.condition1_residual = std::max(rep.condition1_residual, r1);
        if (r1 > 1e-6) rep.condition1_ok = false;

        // Condition 2 binds where theta''' also vanishes at the zero.
        if (r1 <= 1e-6 && std::fabs(j.th3) <= 1e-8) {
            constexpr double kFd = 1e-4;
            try {
                const double bp = (beta_from_theta(d, z + kFd) -
                                   beta_from_theta(d, z - kFd)) /
                                  (2.0 * kFd);
                rep.condition2_residual = std::max(rep.condition2_residual, std::fabs(bp));
                if (std::fabs(bp) > 1e-6) rep.condition2_ok = false;
            } catch (const DesignError&) {
                rep.condition2_ok = false;
                rep.condition2_residual = std::numeric_limits<double>::infinity();
            }
        }
    }

    // Condition 3 at interior zeros of theta' with theta != 0, and at the
    // endpoint when theta' vanishes there (it does for odd harmonics at pi/2).
    {
        auto ts = scan_zeros([&](double t) { return theta_eval(d, t).th1; }, T,
                             kScanPoints, 1e-12);
        if (std::fabs(theta_eval(d, T).th1) <= 1e-9) ts.push_back(T);
        for (double t : ts) {
            const ThetaJet j = theta_eval(d, t);
            if (std::fabs(j.th) <= 1e-3) continue;
            double beta;
            try {
                beta = beta_from_theta(d, t);
            } catch (const DesignError&) {
                rep.condition3_ok = false;
                rep.condition3_residual = std::numeric_limits<double>::infinity();
                continue;
            }
            const double r3 = std::fabs(-beta * j.th * j.th -
                                        (0.5 * j.th2 * j.th + d.gamma_fn(t)));
            rep.condition3_residual = std::max(rep.condition3_residual, r3);
            if (r3 > 1e-8) rep.condition3_ok = false;
        }
    }

    try {
        rep.beta_endpoint_residual = std::fabs(
            beta_from_theta(d, std::numbers::pi / 2) - d.beta_end);
    } catch (const DesignError&) {
        rep.beta_endpoint_residual = std::numeric_limits<double>::infinity();
    }
    return rep;
}

std::vector<EigenSample> eigentrajectories(const AmplitudeProfile& p, double T,
                                           int n_samples, StepControl sc) {
    const auto family = propagate_symmetric(p, T, n_samples, sc);
    std::vector<EigenSample> out;
    out.reserve(family.size());
    for (std::size_t k = 1; k < family.size(); ++k) {
        const auto& [tau, u] = family[k];
        const double half = 0.5 * u.trace();
        EigenSample es{tau, half, half, false};
        if (std::fabs(half) >= 1.0) {
            const double root = std::sqrt(half * half - 1.0);
            es.re_plus = half + root;
            es.re_minus = half - root;
            es.is_real_pair = true;
        }
        out.push_back(es);
    }
    return out;
}

SuitabilityReport suitability(const ThetaDesign& d, double T, int n_samples) {
    SuitabilityReport rep;
    const AmplitudeProfile profile = design_profile(d);

    rep.beta_min = std::numeric_limits<double>::infinity();
    double prev = 0.0;
    bool have_prev = false;
    bool failed = false;
    for (int k = 0; k <= n_samples; ++k) {
        const double tau = -T + 2.0 * T * static_cast<double>(k) / n_samples;
        double b;
        try {
            b = beta_from_theta(d, tau);
        } catch (const DesignError&) {
            failed = true;
            continue;
        }
        if (b < rep.beta_min) {
            rep.beta_min = b;
            rep.beta_min_tau = tau;
        }
        if (have_prev && prev * b < 0.0 && std::fabs(b) > 1e-12 &&
            std::fabs(prev) > 1e-12) {
            ++rep.beta_sign_changes;
        }
        prev = b;
        have_prev = true;
    }
    rep.suitable = !failed && rep.beta_min >= -1e-9;
    rep.eigen = eigentrajectories(profile, T, std::min(n_samples, 512));
    return rep;
}

}  // namespace sqz
