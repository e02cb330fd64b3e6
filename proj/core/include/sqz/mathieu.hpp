#pragma once

#include <numbers>
#include <stdexcept>
#include <vector>

#include "sqz/profile.hpp"
#include "sqz/propagate.hpp"
#include "sqz/symplectic.hpp"

namespace sqz {

// beta(tau) = beta0 + 2 beta1 cos(tau), gamma = 1.
struct MathieuParams {
    double beta0 = 0.0;
    double beta1 = 0.0;
};

AmplitudeProfile mathieu_profile(MathieuParams mp);

inline constexpr double kDefaultTau0 = std::numbers::pi / 2;

// One-period evolution u(tau0 + 2*pi, tau0).
SymplecticMatrix monodromy(MathieuParams mp, double tau0 = kDefaultTau0,
                           StepControl sc = {});

struct ScanGrid {
    double beta0_lo = 0.9, beta0_hi = 2.0;
    double beta1_lo = 0.5, beta1_hi = 1.6;
    int n0 = 221, n1 = 221;
    // Operation interval; defaults to one period starting at pi/2 because
    // a beta symmetric in the operation interval cannot squeeze.
    double tau0 = kDefaultTau0;
    double tau1 = kDefaultTau0 + 2 * std::numbers::pi;
    // Raster/tracing step. Coarser than the core default: a 221x221 raster
    // at 1e-4 costs ~3e9 RK4 steps; 1e-3 keeps per-entry error ~1e-7, far
    // below the root and classification tolerances in use.
    double step = 1e-3;
    // 0 = hardware concurrency.
    int threads = 0;

    double beta0_at(int i) const;
    double beta1_at(int j) const;
};

struct RasterCell {
    MathieuParams params;
    double trace = 0.0;
    Regime regime = Regime::Threshold;
    bool ok = false;
};

struct StruttMap {
    ScanGrid grid;
    std::vector<RasterCell> cells;  // row-major, index = i * n1 + j
    int failed = 0;
};

StruttMap strutt_map(const ScanGrid& grid);

enum class CurveKind { U12Zero, U21Zero };

const char* curve_kind_name(CurveKind k);

struct CurvePoint {
    double beta0 = 0.0;
    double beta1 = 0.0;
    double lambda = 0.0;  // u11 at the root
};

struct SqueezeCurve {
    CurveKind kind = CurveKind::U12Zero;
    std::vector<CurvePoint> points;  // ordered by beta0
    // Operation interval the curve was traced over.
    double tau0 = kDefaultTau0;
    double tau1 = kDefaultTau0 + 2 * std::numbers::pi;
};

// Scans constant-beta0 lines, bisecting the named element in beta1 to 1e-8.
// No sign change anywhere -> empty curve.
SqueezeCurve trace_curve(CurveKind kind, const ScanGrid& grid);

struct IntersectionNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Intersection {
    MathieuParams params;
    SymplecticMatrix u;  // diag(lambda, 1/lambda) within 1e-6
};

// Crossing of the two curves, polished by 2-D Newton on (u12, u21) at the
// given step until both elements vanish within 1e-6.
Intersection find_intersection(const SqueezeCurve& c1, const SqueezeCurve& c2,
                               StepControl sc = {});

}  // namespace sqz
