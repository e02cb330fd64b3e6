#include "sqz/units.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace sqz {

namespace {

void require_ctx(const PhysicalContext& ctx) {
    if (!(ctx.mass > 0.0) || !(ctx.charge > 0.0) || !(ctx.r0 > 0.0) ||
        !(ctx.omega > 0.0) || !(ctx.hbar > 0.0)) {
        throw std::invalid_argument("physical context: all fields must be positive");
    }
}

}  // namespace

PhysicalContext PhysicalContext::from_omega(double mass_g, double charge_esu,
                                            double r0_cm, double omega_rad_s) {
    PhysicalContext ctx;
    ctx.mass = mass_g;
    ctx.charge = charge_esu;
    ctx.r0 = r0_cm;
    ctx.omega = omega_rad_s;
    require_ctx(ctx);
    return ctx;
}

PhysicalContext PhysicalContext::from_period(double mass_g, double charge_esu,
                                             double r0_cm, double T_s) {
    if (!(T_s > 0.0)) throw std::invalid_argument("physical context: T must be > 0");
    return from_omega(mass_g, charge_esu, r0_cm, 2 * std::numbers::pi / T_s);
}

MathieuParams trap_to_dimensionless(const PhysicalContext& ctx,
                                    const TrapDrive& drive) {
    require_ctx(ctx);
    const double scale = ctx.energy_scale_erg();  // omega^2 r0^2 m, erg
    const double f = ctx.charge / (scale * kVoltPerStatvolt);
    return {drive.phi0 * f, 0.5 * drive.phi1 * f};
}

TrapDrive required_voltages(const PhysicalContext& ctx, const MathieuParams& mp) {
    require_ctx(ctx);
    const double scale = ctx.energy_scale_erg();
    const double f = scale * kVoltPerStatvolt / ctx.charge;
    return {mp.beta0 * f, 2.0 * mp.beta1 * f};
}

AmplitudeProfile magnetic_beta(const PhysicalContext& ctx,
                               std::function<double(double)> B_gauss_of_t) {
    require_ctx(ctx);
    const double T = ctx.period();
    const double k = ctx.charge * T / (2.0 * ctx.mass * kSpeedOfLight);
    AmplitudeProfile p;
    p.beta = [k, T, B = std::move(B_gauss_of_t)](double tau) {
        const double v = k * B(T * tau);
        return v * v;
    };
    return p;
}

double magnetic_field_scale(const PhysicalContext& ctx) {
    require_ctx(ctx);
    return 2.0 * ctx.mass * kSpeedOfLight / (ctx.charge * ctx.period());
}

std::function<double(double)> field_for_beta(const PhysicalContext& ctx,
                                             std::function<double(double)> beta) {
    const double scale = magnetic_field_scale(ctx);
    const double T = ctx.period();
    return [scale, T, beta = std::move(beta)](double t) {
        const double b = beta(t / T);
        if (b < 0.0) {
            throw std::domain_error("field_for_beta: beta < 0 has no magnetic realization");
        }
        return scale * std::sqrt(b);
    };
}

}  // namespace sqz
