#include <cstdio>
#include <memory>
#include <string>

#include "sqz/mathieu.hpp"

#include "commands.hpp"
#include "common.hpp"

namespace sqzcli {

namespace {

struct ScanOptions {
    std::string beta0_range = "0.9:2.0";
    std::string beta1_range = "0.5:1.6";
    std::string grid = "221x221";
    std::string interval = "pi/2:5pi/2";
    double step = 1e-3;
    int threads = 0;
    std::string out = "scan";
    std::string manifest;
};

int cmd_scan(const ScanOptions& o) {
    sqz::ScanGrid grid;
    auto [b0lo, b0hi] = parse_range(o.beta0_range);
    auto [b1lo, b1hi] = parse_range(o.beta1_range);
    auto [n0, n1] = parse_grid(o.grid);
    auto [t0, t1] = parse_range(o.interval);
    grid.beta0_lo = b0lo;
    grid.beta0_hi = b0hi;
    grid.beta1_lo = b1lo;
    grid.beta1_hi = b1hi;
    grid.n0 = n0;
    grid.n1 = n1;
    grid.tau0 = t0;
    grid.tau1 = t1;
    if (!(o.step > 0.0)) throw UsageError("--step must be positive");
    grid.step = o.step;
    grid.threads = o.threads;

    auto map = sqz::strutt_map(grid);

    std::string raster_path = o.out + "_raster.csv";
    CsvWriter raster(raster_path, "beta0,beta1,trace,regime");
    for (int i = 0; i < grid.n0; ++i) {
        for (int j = 0; j < grid.n1; ++j) {
            const auto& cell = map.cells[static_cast<std::size_t>(i) * grid.n1 + j];
            raster.row({fmt12(cell.params.beta0), fmt12(cell.params.beta1),
                        cell.ok ? fmt12(cell.trace) : "nan",
                        cell.ok ? sqz::regime_name(cell.regime) : "failed"});
        }
    }
    std::printf("raster: %d x %d cells, %d failed -> %s\n", grid.n0, grid.n1, map.failed,
                raster_path.c_str());

    auto c12 = sqz::trace_curve(sqz::CurveKind::U12Zero, grid);
    auto c21 = sqz::trace_curve(sqz::CurveKind::U21Zero, grid);

    std::string curves_path = o.out + "_curves.csv";
    CsvWriter curves(curves_path, "kind,beta0,beta1,lambda");
    for (const auto* curve : {&c12, &c21}) {
        for (const auto& pt : curve->points) {
            curves.row({sqz::curve_kind_name(curve->kind), fmt12(pt.beta0), fmt12(pt.beta1),
                        fmt12(pt.lambda)});
        }
    }
    std::printf("curve %s: %zu points\n", sqz::curve_kind_name(c12.kind), c12.points.size());
    std::printf("curve %s: %zu points\n", sqz::curve_kind_name(c21.kind), c21.points.size());

    try {
        auto hit = sqz::find_intersection(c12, c21);
        auto rep = sqz::classify(hit.u, 1e-6);
        std::printf("intersection: beta0=%s beta1=%s lambda=%s trace=%s regime=%s\n",
                    fmt12(hit.params.beta0).c_str(), fmt12(hit.params.beta1).c_str(),
                    fmt12(hit.u.u11).c_str(), fmt12(hit.u.trace()).c_str(),
                    sqz::regime_name(rep.regime));
    } catch (const sqz::IntersectionNotFound& e) {
        std::printf("intersection: none found (%s)\n", e.what());
    }

    if (!o.manifest.empty()) {
        RunManifest m;
        m.command = "scan";
        m.step = grid.step;
        m.parameters["beta0_range"] = o.beta0_range;
        m.parameters["beta1_range"] = o.beta1_range;
        m.parameters["grid"] = o.grid;
        m.parameters["interval"] = o.interval;
        m.parameters["threads"] = o.threads;
        m.add_output(raster_path);
        m.add_output(curves_path);
        m.write(o.manifest);
    }
    return kExitOk;
}

}  // namespace

void register_scan(CLI::App& app, int& rc) {
    auto opts = std::make_shared<ScanOptions>();
    auto* sub = app.add_subcommand("scan", "raster the stability map and trace squeezing curves");
    sub->add_option("--beta0-range", opts->beta0_range, "beta0 interval as lo:hi");
    sub->add_option("--beta1-range", opts->beta1_range, "beta1 interval as lo:hi");
    sub->add_option("--grid", opts->grid, "grid resolution as N0xN1");
    sub->add_option("--interval", opts->interval, "integration interval as tau0:tau1 (pi allowed)");
    sub->add_option("--step", opts->step, "integrator step");
    sub->add_option("--threads", opts->threads, "worker threads (0 = auto)");
    sub->add_option("--out", opts->out, "output file stem");
    sub->add_option("--manifest", opts->manifest, "write a run manifest to this path");
    sub->callback([opts, &rc] { rc = cmd_scan(*opts); });
}

}  // namespace sqzcli
