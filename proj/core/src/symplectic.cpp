#include "sqz/symplectic.hpp"

#include <cmath>
#include <stdexcept>

namespace sqz {

bool SymplecticMatrix::is_equidiagonal(double tol) const {
    return std::fabs(u11 - u22) <= tol;
}

std::array<double, 2> SymplecticMatrix::apply(const std::array<double, 2>& qp) const {
    return {u11 * qp[0] + u12 * qp[1], u21 * qp[0] + u22 * qp[1]};
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& r) const {
    return {u11 * r.u11 + u12 * r.u21, u11 * r.u12 + u12 * r.u22,
            u21 * r.u11 + u22 * r.u21, u21 * r.u12 + u22 * r.u22};
}

SymplecticMatrix SymplecticMatrix::inverse() const {
    return {u22, -u12, -u21, u11};
}

SymplecticMatrix rotation(double kappa, double delta_tau) {
    if (kappa < 0.0) throw std::invalid_argument("rotation: kappa must be >= 0");
    if (kappa == 0.0) return {1.0, delta_tau, 0.0, 1.0};
    const double c = std::cos(kappa * delta_tau);
    const double s = std::sin(kappa * delta_tau);
    return {c, s / kappa, -kappa * s, c};
}

SymplecticMatrix squeezed_fourier(double kappa) {
    if (kappa == 0.0) throw std::invalid_argument("squeezed_fourier: kappa must be nonzero");
    return {0.0, 1.0 / kappa, -kappa, 0.0};
}

SymplecticMatrix compose(const std::vector<SymplecticMatrix>& ms) {
    if (ms.empty()) throw std::invalid_argument("compose: empty matrix list");
    SymplecticMatrix u = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) u = u * ms[i];
    return u;
}

SymplecticMatrix anticommutator(const SymplecticMatrix& u, const SymplecticMatrix& v) {
    const SymplecticMatrix a = u * v;
    const SymplecticMatrix b = v * u;
    return {a.u11 + b.u11, a.u12 + b.u12, a.u21 + b.u21, a.u22 + b.u22};
}

SymplecticMatrix symmetric_product(const SymplecticMatrix& v0,
                                   const std::vector<SymplecticMatrix>& vs) {
    if (!v0.is_equidiagonal()) {
        throw std::invalid_argument("symmetric_product: v0 is not equidiagonal");
    }
    for (const auto& v : vs) {
        if (!v.is_equidiagonal()) {
            throw std::invalid_argument("symmetric_product: factor is not equidiagonal");
        }
    }
    SymplecticMatrix u = v0;
    for (const auto& v : vs) u = v * u * v;
    return u;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Stable: return "Stable";
        case Regime::Threshold: return "Threshold";
        case Regime::Squeezing: return "Squeezing";
    }
    return "?";
}

namespace {

using C = std::complex<double>;

// Row eigenvector r of u for eigenvalue lam: r (u - lam I) = 0.
std::array<C, 2> row_eigenvector(const SymplecticMatrix& u, C lam) {
    std::array<C, 2> r;
    const C c21 = u.u21, c12 = u.u12;
    if (std::abs(c21) >= std::abs(c12)) {
        r = {c21, lam - u.u11};
    } else {
        r = {lam - u.u22, c12};
    }
    if (std::abs(r[0]) < 1e-300 && std::abs(r[1]) < 1e-300) {
        // Diagonal (or scalar) matrix: coordinate rows.
        r = (std::abs(lam - C(u.u11)) <= std::abs(lam - C(u.u22)))
                ? std::array<C, 2>{1.0, 0.0}
                : std::array<C, 2>{0.0, 1.0};
    }
    // Largest-magnitude entry scaled to +1.
    const C piv = (std::abs(r[0]) >= std::abs(r[1])) ? r[0] : r[1];
    r[0] /= piv;
    r[1] /= piv;
    return r;
}

}  // namespace

RegimeReport classify(const SymplecticMatrix& u, double tol) {
    if (std::fabs(u.det() - 1.0) > tol) {
        throw std::invalid_argument("classify: matrix is not symplectic within tolerance");
    }
    RegimeReport rep;
    const double tr = u.trace();
    rep.gamma_trace = tr;

    constexpr double kThresholdBand = 1e-6;
    const double half = 0.5 * tr;
    if (std::fabs(std::fabs(tr) - 2.0) <= kThresholdBand) {
        rep.regime = Regime::Threshold;
        rep.sigma = 0.0;
        const double s = (tr >= 0.0) ? 1.0 : -1.0;
        rep.eigenvalues = {C(s), C(s)};
    } else if (std::fabs(tr) < 2.0) {
        rep.regime = Regime::Stable;
        rep.sigma = std::acos(half);  // in (0, pi)
        const double im = std::sqrt(1.0 - half * half);
        rep.eigenvalues = {C(half, im), C(half, -im)};
    } else {
        rep.regime = Regime::Squeezing;
        rep.sigma = std::acosh(std::fabs(half));  // > 0
        const double root = std::sqrt(half * half - 1.0);
        const double lp = half + (tr > 0 ? root : -root);  // larger |.| first
        rep.eigenvalues = {C(lp), C(1.0 / lp)};
    }
    rep.eigen_rows = {row_eigenvector(u, rep.eigenvalues[0]),
                      row_eigenvector(u, rep.eigenvalues[1])};
    return rep;
}

}  // namespace sqz
