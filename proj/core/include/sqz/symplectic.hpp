#pragma once

#include <array>
#include <complex>
#include <vector>

namespace sqz {

// 2x2 evolution matrix acting on column states (q, p).
struct SymplecticMatrix {
    double u11 = 1.0;
    double u12 = 0.0;
    double u21 = 0.0;
    double u22 = 1.0;

    double det() const { return u11 * u22 - u12 * u21; }
    double trace() const { return u11 + u22; }

    bool is_equidiagonal(double tol = 1e-9) const;

    // (q, p) -> u * (q, p)
    std::array<double, 2> apply(const std::array<double, 2>& qp) const;

    SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;
    SymplecticMatrix inverse() const;

    static SymplecticMatrix identity() { return {}; }
};

// Rotation generated by constant beta = kappa^2, gamma = 1 over delta_tau.
// kappa = 0 degenerates to the free-evolution matrix ||1, dt; 0, 1||.
SymplecticMatrix rotation(double kappa, double delta_tau);

// ||0, 1/kappa; -kappa, 0|| — quarter-period rotation composed with scaling.
SymplecticMatrix squeezed_fourier(double kappa);

// Product ms[0] * ms[1] * ... * ms[n-1]; the last listed matrix acts first.
// Throws std::invalid_argument on an empty list.
SymplecticMatrix compose(const std::vector<SymplecticMatrix>& ms);

// uv + vu. Preserves equidiagonality; the result is generally not symplectic.
SymplecticMatrix anticommutator(const SymplecticMatrix& u, const SymplecticMatrix& v);

// v_n ... v_1 v_0 v_1 ... v_n. All factors must be equidiagonal (1e-9);
// throws std::invalid_argument otherwise.
SymplecticMatrix symmetric_product(const SymplecticMatrix& v0,
                                   const std::vector<SymplecticMatrix>& vs);

enum class Regime { Stable, Threshold, Squeezing };

const char* regime_name(Regime r);

struct RegimeReport {
    double gamma_trace = 2.0;
    Regime regime = Regime::Threshold;
    std::array<std::complex<double>, 2> eigenvalues{};
    // Row eigenvectors a+/a-, scaled so the largest-magnitude entry is +1.
    std::array<std::array<std::complex<double>, 2>, 2> eigen_rows{};
    double sigma = 0.0;
};

// Classification by Gamma = Tr u. Threshold band |(|Gamma|) - 2| <= 1e-6.
// Throws std::invalid_argument if |det u - 1| > tol.
RegimeReport classify(const SymplecticMatrix& u, double tol = 1e-9);

}  // namespace sqz
