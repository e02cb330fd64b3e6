#include <cmath>
#include <cstdio>
#include <memory>
#include <string>

#include "sqz/units.hpp"

#include "commands.hpp"
#include "common.hpp"

namespace sqzcli {

namespace {

struct UnitsOptions {
    std::string context;
    bool to_params = false;
    bool to_voltages = false;
    bool field_scale = false;
    double beta0 = 0.0;
    double beta1 = 0.0;
    double phi0 = 0.0;
    double phi1 = 0.0;
    std::string out;
};

sqz::PhysicalContext context_from_json(const nlohmann::json& j) {
    for (const char* key : {"mass_g", "charge_e", "r0_cm", "omega_rad_s"})
        if (!j.contains(key)) throw UsageError(std::string("context missing field: ") + key);
    auto ctx = sqz::PhysicalContext::from_omega(
        j.at("mass_g").get<double>(),
        j.at("charge_e").get<double>() * sqz::kElementaryChargeEsu, j.at("r0_cm").get<double>(),
        j.at("omega_rad_s").get<double>());
    if (j.contains("hbar")) ctx.hbar = j.at("hbar").get<double>();
    return ctx;
}

int cmd_units(const UnitsOptions& o) {
    int directions = (o.to_params ? 1 : 0) + (o.to_voltages ? 1 : 0) + (o.field_scale ? 1 : 0);
    if (directions != 1)
        throw UsageError("exactly one of --to-params, --to-voltages, --field-scale is required");

    auto ctx = context_from_json(read_json_file(o.context));

    nlohmann::json out;
    out["context"]["mass_g"] = ctx.mass;
    out["context"]["charge_e"] = ctx.charge / sqz::kElementaryChargeEsu;
    out["context"]["r0_cm"] = ctx.r0;
    out["context"]["omega_rad_s"] = ctx.omega;
    out["context"]["hbar"] = ctx.hbar;
    out["context"]["period_s"] = ctx.period();
    out["context"]["energy_scale_erg"] = ctx.energy_scale_erg();
    out["context"]["energy_scale_ev"] = ctx.energy_scale_ev();

    if (o.to_params) {
        auto mp = sqz::trap_to_dimensionless(ctx, {o.phi0, o.phi1});
        out["direction"] = "to-params";
        out["input"] = {{"phi0_v", o.phi0}, {"phi1_v", o.phi1}};
        out["output"] = {{"beta0", mp.beta0}, {"beta1", mp.beta1}};
        std::printf("beta0=%s beta1=%s\n", fmt12(mp.beta0).c_str(), fmt12(mp.beta1).c_str());
    } else if (o.to_voltages) {
        auto drive = sqz::required_voltages(ctx, {o.beta0, o.beta1});
        out["direction"] = "to-voltages";
        out["input"] = {{"beta0", o.beta0}, {"beta1", o.beta1}};
        out["output"] = {{"phi0_v", drive.phi0}, {"phi1_v", drive.phi1}};
        std::printf("phi0=%s V  phi1=%s V\n", fmt12(drive.phi0).c_str(), fmt12(drive.phi1).c_str());
    } else {
        double scale = sqz::magnetic_field_scale(ctx);
        out["direction"] = "field-scale";
        out["input"] = nlohmann::json::object();
        out["output"] = {{"field_scale_gauss", scale}};
        std::printf("field scale = %s G per sqrt(beta)\n", fmt12(scale).c_str());
    }
    std::printf("energy scale = %s eV\n", fmt12(ctx.energy_scale_ev()).c_str());

    if (!o.out.empty()) write_json_file(o.out, out);
    return kExitOk;
}

}  // namespace

void register_units(CLI::App& app, int& rc) {
    auto opts = std::make_shared<UnitsOptions>();
    auto* sub = app.add_subcommand("units", "convert between trap quantities and scan parameters");
    sub->add_option("--context", opts->context, "physical context JSON path")->required();
    sub->add_flag("--to-params", opts->to_params, "voltages -> dimensionless beta0, beta1");
    sub->add_flag("--to-voltages", opts->to_voltages, "beta0, beta1 -> voltages");
    sub->add_flag("--field-scale", opts->field_scale, "report the magnetic field scale");
    sub->add_option("--beta0", opts->beta0, "beta0 for --to-voltages");
    sub->add_option("--beta1", opts->beta1, "beta1 for --to-voltages");
    sub->add_option("--phi0", opts->phi0, "Phi0 in volts for --to-params");
    sub->add_option("--phi1", opts->phi1, "Phi1 in volts for --to-params");
    sub->add_option("--out", opts->out, "also write the report JSON to this path");
    sub->callback([opts, &rc] { rc = cmd_units(*opts); });
}

}  // namespace sqzcli
