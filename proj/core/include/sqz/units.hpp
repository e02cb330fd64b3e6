#pragma once

#include <functional>
#include <numbers>

#include "sqz/mathieu.hpp"
#include "sqz/profile.hpp"

namespace sqz {

// CGS-Gaussian constants; volt/eV conversions applied only at the interface.
inline constexpr double kSpeedOfLight = 2.99792458e10;       // cm/s
inline constexpr double kElementaryChargeEsu = 4.80320425e-10;
inline constexpr double kProtonMassG = 1.67262192369e-24;
inline constexpr double kElectronMassG = 9.1093837015e-28;
inline constexpr double kHbarErgS = 1.054571817e-27;
inline constexpr double kVoltPerStatvolt = 299.792458;
inline constexpr double kErgPerEv = 1.602176634e-12;

struct PhysicalContext {
    double mass = kProtonMassG;               // g
    double charge = kElementaryChargeEsu;     // esu
    double r0 = 1.0;                          // cm
    double omega = 1.0;                       // rad/s; T = 2 pi / omega
    double hbar = kHbarErgS;                  // erg s

    double period() const { return 2 * std::numbers::pi / omega; }
    // omega^2 r0^2 m, the voltage/energy scale of the trap reduction.
    double energy_scale_erg() const { return omega * omega * r0 * r0 * mass; }
    double energy_scale_ev() const { return energy_scale_erg() / kErgPerEv; }

    static PhysicalContext from_omega(double mass_g, double charge_esu,
                                      double r0_cm, double omega_rad_s);
    static PhysicalContext from_period(double mass_g, double charge_esu,
                                       double r0_cm, double T_s);
};

// Phi(t) = Phi0 + Phi1 cos(omega t), in volts.
struct TrapDrive {
    double phi0 = 0.0;
    double phi1 = 0.0;
};

// beta0 = e Phi0 / (omega^2 r0^2 m), 2 beta1 = e Phi1 / (omega^2 r0^2 m).
MathieuParams trap_to_dimensionless(const PhysicalContext& ctx,
                                    const TrapDrive& drive);

// Inverse of trap_to_dimensionless, reported in volts.
TrapDrive required_voltages(const PhysicalContext& ctx, const MathieuParams& mp);

// beta(tau) = (e T B(T tau) / (2 m c))^2, gamma = 1.
AmplitudeProfile magnetic_beta(const PhysicalContext& ctx,
                               std::function<double(double)> B_gauss_of_t);

// B(t) = (2 m c / (e T)) sqrt(beta(t / T)); requires beta >= 0.
std::function<double(double)> field_for_beta(const PhysicalContext& ctx,
                                             std::function<double(double)> beta);

// 2 m c / (e T): the gauss-per-sqrt(beta) coefficient of field_for_beta.
double magnetic_field_scale(const PhysicalContext& ctx);

}  // namespace sqz
