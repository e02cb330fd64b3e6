#pragma once

#include "CLI11.hpp"

namespace sqzcli {

// Each register_* wires one subcommand into the app. The subcommand's
// callback stores its exit code in rc; parse/usage problems are thrown.
void register_scan(CLI::App& app, int& rc);
void register_design(CLI::App& app, int& rc);
void register_propagate(CLI::App& app, int& rc);
void register_shadow(CLI::App& app, int& rc);
void register_units(CLI::App& app, int& rc);

}  // namespace sqzcli
