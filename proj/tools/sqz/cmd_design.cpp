#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

#include "commands.hpp"
#include "common.hpp"

namespace sqzcli {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;

struct DesignOptions {
    double b = 2.0;
    double c = -3.0;
    double beta_end = 0.0;
    std::string gamma = "const:1";
    std::string interval = "-pi/2:pi/2";
    int samples = 720;
    std::string out = "design";
    std::string manifest;
};

int cmd_design(const DesignOptions& o) {
    if (o.b == 0.0) throw UsageError("--b must be nonzero");
    if (o.c == 0.0) throw UsageError("--c must be nonzero");
    if (o.samples < 1) throw UsageError("--samples must be positive");
    auto gamma = parse_gamma(o.gamma);
    auto d = sqz::solve_coefficients(o.b, o.c, o.beta_end, gamma);

    std::string design_path = o.out + "_design.json";
    write_json_file(design_path, design_to_json(d));

    auto [t0, t1] = parse_range(o.interval);
    if (!(t1 > t0)) throw UsageError("--interval must have tau1 > tau0");
    std::string profile_path = o.out + "_profile.csv";
    CsvWriter profile(profile_path, "tau,beta,gamma,theta");
    for (int k = 0; k <= o.samples; ++k) {
        double tau = t0 + (t1 - t0) * k / o.samples;
        auto jet = sqz::theta_eval(d, tau);
        std::string beta_cell = "nan";
        try {
            beta_cell = fmt12(sqz::beta_from_theta(d, tau));
        } catch (const sqz::DesignError&) {
        }
        profile.row({fmt12(tau), beta_cell, fmt12(d.gamma_fn(tau)), fmt12(jet.th)});
    }

    auto rep = sqz::validate_design(d, kHalfPi);
    auto suit = sqz::suitability(d, kHalfPi, 2000);

    std::printf("coefficients: a1=%s a3=%s a5=%s a7=%s\n", fmt12(d.a1).c_str(),
                fmt12(d.a3).c_str(), fmt12(d.a5).c_str(), fmt12(d.a7).c_str());
    std::printf("closed-form discrepancy: %s\n", fmt12(sqz::coefficient_discrepancy(d)).c_str());
    std::printf("condition 1 (|theta'| = 2 at zeros):      %s  residual %s\n",
                rep.condition1_ok ? "ok" : "FAIL", fmt12(rep.condition1_residual).c_str());
    std::printf("condition 2 (beta' = 0 where theta'''=0): %s  residual %s\n",
                rep.condition2_ok ? "ok" : "FAIL", fmt12(rep.condition2_residual).c_str());
    std::printf("condition 3 (turning-point identity):     %s  residual %s\n",
                rep.condition3_ok ? "ok" : "FAIL", fmt12(rep.condition3_residual).c_str());
    std::printf("beta endpoint residual: %s\n", fmt12(rep.beta_endpoint_residual).c_str());
    for (const auto& sp : rep.singular_points)
        std::printf("singular point: tau=%s theta'=%s\n", fmt12(sp.tau).c_str(),
                    fmt12(sp.theta_prime).c_str());
    std::printf("suitability: %s (beta_min=%s at tau=%s, %d beta sign changes)\n",
                suit.suitable ? "suitable" : "unsuitable", fmt12(suit.beta_min).c_str(),
                fmt12(suit.beta_min_tau).c_str(), suit.beta_sign_changes);
    std::printf("design: %s\n", rep.ok() ? "VALID" : "INVALID");

    if (!o.manifest.empty()) {
        RunManifest m;
        m.command = "design";
        m.step = 0.0;
        m.parameters["b"] = o.b;
        m.parameters["c"] = o.c;
        m.parameters["beta_end"] = o.beta_end;
        m.parameters["gamma"] = o.gamma;
        m.parameters["interval"] = o.interval;
        m.parameters["samples"] = o.samples;
        m.add_output(design_path);
        m.add_output(profile_path);
        m.write(o.manifest);
    }
    return rep.ok() ? kExitOk : kExitDesign;
}

}  // namespace

void register_design(CLI::App& app, int& rc) {
    auto opts = std::make_shared<DesignOptions>();
    auto* sub = app.add_subcommand("design", "build a four-harmonic theta profile and validate it");
    sub->add_option("--b", opts->b, "theta(pi/2), the target half-period amplitude")->required();
    sub->add_option("--c", opts->c, "theta'''(0)")->required();
    sub->add_option("--beta-end", opts->beta_end, "beta(pi/2)");
    sub->add_option("--gamma", opts->gamma, "kinetic amplitude: const:<v> or sin2");
    sub->add_option("--interval", opts->interval, "profile dump interval as tau0:tau1");
    sub->add_option("--samples", opts->samples, "profile dump sample count");
    sub->add_option("--out", opts->out, "output file stem");
    sub->add_option("--manifest", opts->manifest, "write a run manifest to this path");
    sub->callback([opts, &rc] { rc = cmd_design(*opts); });
}

}  // namespace sqzcli
