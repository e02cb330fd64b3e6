#include <complex>
#include <cstdio>
#include <memory>
#include <string>

#include "sqz/mathieu.hpp"
#include "sqz/packet.hpp"

#include "commands.hpp"
#include "common.hpp"

namespace sqzcli {

namespace {

struct PropagateOptions {
    std::string design;
    std::string mathieu;
    std::string interval = "-pi/2:pi/2";
    std::string packets = "1,-2;1,-1;1,0;1,1;1,2";
    int samples = 512;
    double step = 1e-4;
    std::string out = "prop";
    std::string manifest;
};

sqz::AmplitudeProfile profile_from(const std::string& design_path, const std::string& mathieu) {
    if (!design_path.empty() && !mathieu.empty())
        throw UsageError("--design and --mathieu are mutually exclusive");
    if (!design_path.empty()) return sqz::design_profile(load_design(design_path));
    if (!mathieu.empty()) {
        auto [b0, b1] = parse_pair(mathieu);
        return sqz::mathieu_profile({b0, b1});
    }
    throw UsageError("one of --design or --mathieu is required");
}

int cmd_propagate(const PropagateOptions& o) {
    auto p = profile_from(o.design, o.mathieu);
    auto [t0, t1] = parse_range(o.interval);
    if (o.samples < 1) throw UsageError("--samples must be positive");
    if (!(o.step > 0.0)) throw UsageError("--step must be positive");
    auto pks = parse_packets(o.packets);
    sqz::StepControl sc{o.step};

    auto trajs = sqz::trajectory_congruence(p, t0, t1, pks, o.samples, sc);

    RunManifest m;
    m.command = "propagate";
    m.step = o.step;
    for (std::size_t k = 0; k < trajs.size(); ++k) {
        std::string path = o.out + "_traj_" + std::to_string(k) + ".csv";
        CsvWriter traj(path, "tau,q,p");
        for (const auto& s : trajs[k]) traj.row({fmt12(s.tau), fmt12(s.q), fmt12(s.p)});
        m.add_output(path);
    }

    auto u = sqz::propagate(p, t0, t1, sc);
    auto rep = sqz::classify(u, 1e-6);

    nlohmann::json fin;
    fin["interval"] = {t0, t1};
    fin["step"] = o.step;
    fin["u"] = {{u.u11, u.u12}, {u.u21, u.u22}};
    fin["det"] = u.det();
    fin["trace"] = rep.gamma_trace;
    fin["regime"] = sqz::regime_name(rep.regime);
    fin["sigma"] = rep.sigma;
    fin["eigenvalues"] = {{rep.eigenvalues[0].real(), rep.eigenvalues[0].imag()},
                          {rep.eigenvalues[1].real(), rep.eigenvalues[1].imag()}};
    fin["packets"] = static_cast<int>(pks.size());
    std::string final_path = o.out + "_final.json";
    write_json_file(final_path, fin);
    m.add_output(final_path);

    std::printf("u = [[%s, %s], [%s, %s]]  det=%s\n", fmt12(u.u11).c_str(), fmt12(u.u12).c_str(),
                fmt12(u.u21).c_str(), fmt12(u.u22).c_str(), fmt12(u.det()).c_str());
    std::printf("trace=%s regime=%s sigma=%s\n", fmt12(rep.gamma_trace).c_str(),
                sqz::regime_name(rep.regime), fmt12(rep.sigma).c_str());
    std::printf("trajectories: %zu packets, %d samples -> %s_traj_*.csv\n", trajs.size(),
                o.samples + 1, o.out.c_str());

    if (!o.manifest.empty()) {
        m.parameters["design"] = o.design;
        m.parameters["mathieu"] = o.mathieu;
        m.parameters["interval"] = o.interval;
        m.parameters["packets"] = o.packets;
        m.parameters["samples"] = o.samples;
        m.write(o.manifest);
    }
    return kExitOk;
}

}  // namespace

void register_propagate(CLI::App& app, int& rc) {
    auto opts = std::make_shared<PropagateOptions>();
    auto* sub =
        app.add_subcommand("propagate", "evolve packet centers through a designed or Mathieu profile");
    sub->add_option("--design", opts->design, "design descriptor JSON path");
    sub->add_option("--mathieu", opts->mathieu, "Mathieu parameters as beta0,beta1");
    sub->add_option("--interval", opts->interval, "integration interval as tau0:tau1");
    sub->add_option("--packets", opts->packets, "initial centers as q0,p0[,kappa];...");
    sub->add_option("--samples", opts->samples, "trajectory checkpoints");
    sub->add_option("--step", opts->step, "integrator step");
    sub->add_option("--out", opts->out, "output file stem");
    sub->add_option("--manifest", opts->manifest, "write a run manifest to this path");
    sub->callback([opts, &rc] { rc = cmd_propagate(*opts); });
}

}  // namespace sqzcli
