#include "sqz/mathieu.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <thread>

namespace sqz {

AmplitudeProfile mathieu_profile(MathieuParams mp) {
    AmplitudeProfile p;
    p.beta = [mp](double tau) { return mp.beta0 + 2.0 * mp.beta1 * std::cos(tau); };
    p.symmetric_about_zero = true;
    return p;
}

SymplecticMatrix monodromy(MathieuParams mp, double tau0, StepControl sc) {
    return propagate(mathieu_profile(mp), tau0, tau0 + 2 * std::numbers::pi, sc);
}

double ScanGrid::beta0_at(int i) const {
    if (n0 == 1) return beta0_lo;
    return beta0_lo + (beta0_hi - beta0_lo) * static_cast<double>(i) / (n0 - 1);
}

double ScanGrid::beta1_at(int j) const {
    if (n1 == 1) return beta1_lo;
    return beta1_lo + (beta1_hi - beta1_lo) * static_cast<double>(j) / (n1 - 1);
}

namespace {

// cos(tau) at every RK4 node and midpoint of the operation interval, shared
// by all grid nodes: beta enters the stages only through these values.
struct CosTable {
    std::size_t n = 0;
    double h = 0.0;
    std::vector<double> node;  // n + 1
    std::vector<double> mid;   // n

    CosTable(double tau0, double tau1, double step) {
        const double span = tau1 - tau0;
        n = std::max<std::size_t>(1, static_cast<std::size_t>(
                                         std::ceil(std::fabs(span) / step)));
        h = span / static_cast<double>(n);
        node.resize(n + 1);
        mid.resize(n);
        for (std::size_t i = 0; i <= n; ++i) {
            node[i] = std::cos(tau0 + static_cast<double>(i) * h);
        }
        for (std::size_t i = 0; i < n; ++i) {
            mid[i] = std::cos(tau0 + (static_cast<double>(i) + 0.5) * h);
        }
    }
};

SymplecticMatrix mono_from_table(double beta0, double beta1, const CosTable& tb) {
    double u0 = 1.0, u1 = 0.0, u2 = 0.0, u3 = 1.0;
    const double h = tb.h;
    const double b2 = 2.0 * beta1;
    for (std::size_t i = 0; i < tb.n; ++i) {
        const double ba = beta0 + b2 * tb.node[i];
        const double bm = beta0 + b2 * tb.mid[i];
        const double bb = beta0 + b2 * tb.node[i + 1];
        // k = (u2, u3, -b u0, -b u1) with gamma = 1
        const double k1a = u2, k1b = u3, k1c = -ba * u0, k1d = -ba * u1;
        double t0 = u0 + 0.5 * h * k1a, t1 = u1 + 0.5 * h * k1b;
        double t2 = u2 + 0.5 * h * k1c, t3 = u3 + 0.5 * h * k1d;
        const double k2a = t2, k2b = t3, k2c = -bm * t0, k2d = -bm * t1;
        t0 = u0 + 0.5 * h * k2a; t1 = u1 + 0.5 * h * k2b;
        t2 = u2 + 0.5 * h * k2c; t3 = u3 + 0.5 * h * k2d;
        const double k3a = t2, k3b = t3, k3c = -bm * t0, k3d = -bm * t1;
        t0 = u0 + h * k3a; t1 = u1 + h * k3b;
        t2 = u2 + h * k3c; t3 = u3 + h * k3d;
        const double k4a = t2, k4b = t3, k4c = -bb * t0, k4d = -bb * t1;
        const double w = h / 6.0;
        u0 += w * (k1a + 2.0 * (k2a + k3a) + k4a);
        u1 += w * (k1b + 2.0 * (k2b + k3b) + k4b);
        u2 += w * (k1c + 2.0 * (k2c + k3c) + k4c);
        u3 += w * (k1d + 2.0 * (k2d + k3d) + k4d);
    }
    return {u0, u1, u2, u3};
}

int thread_count(const ScanGrid& grid) {
    if (grid.threads > 0) return grid.threads;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

void parallel_lines(int n_lines, int n_threads, const std::function<void(int)>& work) {
    if (n_threads <= 1 || n_lines <= 1) {
        for (int i = 0; i < n_lines; ++i) work(i);
        return;
    }
    std::atomic<int> next{0};
    auto runner = [&] {
        for (int i = next.fetch_add(1); i < n_lines; i = next.fetch_add(1)) work(i);
    };
    std::vector<std::thread> pool;
    const int spawn = std::min(n_threads, n_lines) - 1;
    pool.reserve(static_cast<std::size_t>(spawn));
    for (int t = 0; t < spawn; ++t) pool.emplace_back(runner);
    runner();
    for (auto& th : pool) th.join();
}

}  // namespace

StruttMap strutt_map(const ScanGrid& grid) {
    if (grid.n0 < 2 || grid.n1 < 2 || grid.beta0_lo >= grid.beta0_hi ||
        grid.beta1_lo >= grid.beta1_hi) {
        throw std::invalid_argument("strutt_map: invalid grid");
    }
    const CosTable tb(grid.tau0, grid.tau1, grid.step);
    StruttMap out;
    out.grid = grid;
    out.cells.resize(static_cast<std::size_t>(grid.n0) * grid.n1);
    std::atomic<int> failed{0};
    parallel_lines(grid.n0, thread_count(grid), [&](int i) {
        const double b0 = grid.beta0_at(i);
        for (int j = 0; j < grid.n1; ++j) {
            const double b1 = grid.beta1_at(j);
            RasterCell& cell = out.cells[static_cast<std::size_t>(i) * grid.n1 + j];
            cell.params = {b0, b1};
            try {
                const SymplecticMatrix u = mono_from_table(b0, b1, tb);
                // Looser det tolerance than the core default: matches the
                // raster step.
                const RegimeReport rep = classify(u, 1e-6);
                cell.trace = rep.gamma_trace;
                cell.regime = rep.regime;
                cell.ok = true;
            } catch (const std::exception&) {
                cell.ok = false;
                failed.fetch_add(1);
            }
        }
    });
    out.failed = failed.load();
    return out;
}

const char* curve_kind_name(CurveKind k) {
    return k == CurveKind::U12Zero ? "u12_zero" : "u21_zero";
}

SqueezeCurve trace_curve(CurveKind kind, const ScanGrid& grid) {
    if (grid.n0 < 2 || grid.n1 < 2 || grid.beta0_lo >= grid.beta0_hi ||
        grid.beta1_lo >= grid.beta1_hi) {
        throw std::invalid_argument("trace_curve: invalid grid");
    }
    const CosTable tb(grid.tau0, grid.tau1, grid.step);
    const auto element = [kind](const SymplecticMatrix& u) {
        return kind == CurveKind::U12Zero ? u.u12 : u.u21;
    };

    SqueezeCurve curve;
    curve.kind = kind;
    curve.tau0 = grid.tau0;
    curve.tau1 = grid.tau1;
    std::vector<std::vector<CurvePoint>> lines(static_cast<std::size_t>(grid.n0));

    constexpr double kRootTol = 1e-8;
    parallel_lines(grid.n0, thread_count(grid), [&](int i) {
        const double b0 = grid.beta0_at(i);
        double e_prev = element(mono_from_table(b0, grid.beta1_at(0), tb));
        for (int j = 1; j < grid.n1; ++j) {
            const double e_here = element(mono_from_table(b0, grid.beta1_at(j), tb));
            const bool bracket = (e_prev < 0.0 && e_here > 0.0) ||
                                 (e_prev > 0.0 && e_here < 0.0) || e_prev == 0.0;
            if (bracket) {
                double lo = grid.beta1_at(j - 1), hi = grid.beta1_at(j);
                double e_lo = e_prev;
                SymplecticMatrix u_root = mono_from_table(b0, lo, tb);
                double root = lo;
                while (hi - lo > kRootTol) {
                    const double mid = 0.5 * (lo + hi);
                    const SymplecticMatrix u_mid = mono_from_table(b0, mid, tb);
                    const double e_mid = element(u_mid);
                    root = mid;
                    u_root = u_mid;
                    if ((e_lo <= 0.0) == (e_mid <= 0.0)) {
                        lo = mid;
                        e_lo = e_mid;
                    } else {
                        hi = mid;
                    }
                }
                lines[static_cast<std::size_t>(i)].push_back({b0, root, u_root.u11});
            }
            e_prev = e_here;
        }
    });
    for (auto& ln : lines) {
        curve.points.insert(curve.points.end(), ln.begin(), ln.end());
    }
    return curve;
}

Intersection find_intersection(const SqueezeCurve& c1, const SqueezeCurve& c2,
                               StepControl sc) {
    if (c1.points.empty() || c2.points.empty()) {
        throw IntersectionNotFound("find_intersection: a curve is empty");
    }
    if (c1.tau0 != c2.tau0 || c1.tau1 != c2.tau1) {
        throw std::invalid_argument("find_intersection: curves traced over different intervals");
    }

    // Group by beta0 (curves from the same scan share the grid abscissae)
    // and track the closest branch pair per line: its signed gap and its
    // beta1 midpoint. Branch hops on multi-valued lines can fake a sign
    // change with a large residual gap, so among all sign changes the one
    // with the smallest bracketing |gap| is taken.
    std::map<double, std::vector<double>> m1, m2;
    for (const auto& p : c1.points) m1[p.beta0].push_back(p.beta1);
    for (const auto& p : c2.points) m2[p.beta0].push_back(p.beta1);
    struct LineGap {
        double beta0, gap, mid;
    };
    std::vector<LineGap> gaps;
    for (const auto& [b0, v1] : m1) {
        auto it = m2.find(b0);
        if (it == m2.end()) continue;
        double best_abs = std::numeric_limits<double>::infinity();
        double gap = 0.0, mid = 0.0;
        for (double x : v1) {
            for (double y : it->second) {
                if (std::fabs(x - y) < best_abs) {
                    best_abs = std::fabs(x - y);
                    gap = x - y;
                    mid = 0.5 * (x + y);
                }
            }
        }
        gaps.push_back({b0, gap, mid});
    }
    if (gaps.size() < 2) {
        throw IntersectionNotFound("find_intersection: curves do not overlap in beta0");
    }

    double beta0 = 0.0, beta1 = 0.0;
    double score = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < gaps.size(); ++k) {
        const double d0 = gaps[k - 1].gap, d1 = gaps[k].gap;
        double t, s;
        if (d0 == 0.0) {
            t = 0.0;
            s = 0.0;
        } else if (d1 == 0.0) {
            t = 1.0;
            s = 0.0;
        } else if ((d0 < 0.0) != (d1 < 0.0)) {
            t = d0 / (d0 - d1);
            s = std::min(std::fabs(d0), std::fabs(d1));
        } else {
            continue;
        }
        if (s < score) {
            score = s;
            beta0 = gaps[k - 1].beta0 + t * (gaps[k].beta0 - gaps[k - 1].beta0);
            beta1 = gaps[k - 1].mid + t * (gaps[k].mid - gaps[k - 1].mid);
        }
    }
    if (!std::isfinite(score)) {
        throw IntersectionNotFound("find_intersection: no crossing in the overlap");
    }

    const auto F = [&](double b0, double b1) {
        const SymplecticMatrix u = monodromy({b0, b1}, c1.tau0, sc);
        return u;
    };

    double lo0 = std::numeric_limits<double>::infinity(), hi0 = -lo0;
    double lo1 = lo0, hi1 = -lo0;
    for (const auto& p : c1.points) {
        lo0 = std::min(lo0, p.beta0); hi0 = std::max(hi0, p.beta0);
        lo1 = std::min(lo1, p.beta1); hi1 = std::max(hi1, p.beta1);
    }
    const double m0 = 0.1 * (hi0 - lo0) + 0.05, m1g = 0.1 * (hi1 - lo1) + 0.05;

    constexpr double kDelta = 1e-7;
    SymplecticMatrix u = F(beta0, beta1);
    for (int iter = 0; iter < 40; ++iter) {
        if (std::fabs(u.u12) < 1e-10 && std::fabs(u.u21) < 1e-10) break;
        const SymplecticMatrix up0 = F(beta0 + kDelta, beta1);
        const SymplecticMatrix um0 = F(beta0 - kDelta, beta1);
        const SymplecticMatrix up1 = F(beta0, beta1 + kDelta);
        const SymplecticMatrix um1 = F(beta0, beta1 - kDelta);
        const double j00 = (up0.u12 - um0.u12) / (2 * kDelta);
        const double j01 = (up1.u12 - um1.u12) / (2 * kDelta);
        const double j10 = (up0.u21 - um0.u21) / (2 * kDelta);
        const double j11 = (up1.u21 - um1.u21) / (2 * kDelta);
        const double det = j00 * j11 - j01 * j10;
        if (det == 0.0 || !std::isfinite(det)) {
            throw IntersectionNotFound("find_intersection: singular Jacobian");
        }
        beta0 -= (j11 * u.u12 - j01 * u.u21) / det;
        beta1 -= (-j10 * u.u12 + j00 * u.u21) / det;
        if (!std::isfinite(beta0) || !std::isfinite(beta1) ||
            beta0 < lo0 - m0 || beta0 > hi0 + m0 || beta1 < lo1 - m1g ||
            beta1 > hi1 + m1g) {
            throw IntersectionNotFound("find_intersection: polish diverged");
        }
        u = F(beta0, beta1);
    }
    if (std::fabs(u.u12) > 1e-6 || std::fabs(u.u21) > 1e-6) {
        throw IntersectionNotFound("find_intersection: polish did not converge");
    }
    return {{beta0, beta1}, u};
}

}  // namespace sqz
