#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

#include "sqz/mathieu.hpp"
#include "sqz/packet.hpp"

#include "commands.hpp"
#include "common.hpp"

namespace sqzcli {

namespace {

struct ShadowOptions {
    std::string design;
    std::string mathieu;
    std::string interval = "-pi/2:pi/2";
    std::string packet = "1,1";
    double w = sqz::kShadowW999;
    int samples = 512;
    double step = 1e-4;
    std::string out = "shadow";
    std::string manifest;
};

int cmd_shadow(const ShadowOptions& o) {
    if (!o.design.empty() && !o.mathieu.empty())
        throw UsageError("--design and --mathieu are mutually exclusive");
    sqz::AmplitudeProfile p;
    if (!o.design.empty()) {
        p = sqz::design_profile(load_design(o.design));
    } else if (!o.mathieu.empty()) {
        auto [b0, b1] = parse_pair(o.mathieu);
        p = sqz::mathieu_profile({b0, b1});
    } else {
        throw UsageError("one of --design or --mathieu is required");
    }

    auto pks = parse_packets(o.packet);
    if (pks.size() != 1) throw UsageError("--packet takes exactly one q0,p0 pair");
    auto [t0, t1] = parse_range(o.interval);
    if (o.samples < 1) throw UsageError("--samples must be positive");
    if (!(o.step > 0.0)) throw UsageError("--step must be positive");
    if (o.w < 0.0) throw UsageError("--w must be nonnegative");

    auto band = sqz::uncertainty_shadow(p, t0, t1, pks[0], o.w, o.samples, sqz::StepControl{o.step});

    std::string shadow_path = o.out + "_shadow.csv";
    CsvWriter csv(shadow_path, "tau,qmean,dq,lo,hi");
    double extent = 0.0, dq_max = 0.0, dq_max_tau = t0;
    for (const auto& s : band.samples) {
        csv.row({fmt12(s.tau), fmt12(s.qmean), fmt12(s.dq), fmt12(s.lo), fmt12(s.hi)});
        extent = std::max({extent, std::fabs(s.lo), std::fabs(s.hi)});
        if (s.dq > dq_max) {
            dq_max = s.dq;
            dq_max_tau = s.tau;
        }
    }
    std::printf("shadow: %zu samples, w=%s -> %s\n", band.samples.size(), fmt12(band.w).c_str(),
                shadow_path.c_str());
    std::printf("max |band edge| = %s\n", fmt12(extent).c_str());
    std::printf("max dq = %s at tau = %s\n", fmt12(dq_max).c_str(), fmt12(dq_max_tau).c_str());

    if (!o.manifest.empty()) {
        RunManifest m;
        m.command = "shadow";
        m.step = o.step;
        m.parameters["design"] = o.design;
        m.parameters["mathieu"] = o.mathieu;
        m.parameters["interval"] = o.interval;
        m.parameters["packet"] = o.packet;
        m.parameters["w"] = o.w;
        m.parameters["samples"] = o.samples;
        m.add_output(shadow_path);
        m.write(o.manifest);
    }
    return kExitOk;
}

}  // namespace

void register_shadow(CLI::App& app, int& rc) {
    auto opts = std::make_shared<ShadowOptions>();
    auto* sub = app.add_subcommand("shadow", "trace the uncertainty band of a Gaussian packet");
    sub->add_option("--design", opts->design, "design descriptor JSON path");
    sub->add_option("--mathieu", opts->mathieu, "Mathieu parameters as beta0,beta1");
    sub->add_option("--interval", opts->interval, "integration interval as tau0:tau1");
    sub->add_option("--packet", opts->packet, "initial center as q0,p0");
    sub->add_option("--w", opts->w, "band half-width in units of dq");
    sub->add_option("--samples", opts->samples, "band checkpoints");
    sub->add_option("--step", opts->step, "integrator step");
    sub->add_option("--out", opts->out, "output file stem");
    sub->add_option("--manifest", opts->manifest, "write a run manifest to this path");
    sub->callback([opts, &rc] { rc = cmd_shadow(*opts); });
}

}  // namespace sqzcli
