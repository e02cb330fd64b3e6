#include <cstdio>
#include <exception>

#include "CLI11.hpp"

#include "sqz/propagate.hpp"
#include "sqz/theta_design.hpp"
#include "sqz/version.hpp"

#include "commands.hpp"
#include "common.hpp"

int main(int argc, char** argv) {
    CLI::App app{"quadratic-Hamiltonian squeezing toolkit"};
    app.set_version_flag("--version", std::string(sqz::kVersion));
    app.require_subcommand(1);

    int rc = sqzcli::kExitOk;
    sqzcli::register_scan(app, rc);
    sqzcli::register_design(app, rc);
    sqzcli::register_propagate(app, rc);
    sqzcli::register_shadow(app, rc);
    sqzcli::register_units(app, rc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return sqzcli::kExitUsage;
    } catch (const sqz::DesignError& e) {
        std::fprintf(stderr, "design error: %s\n", e.what());
        return sqzcli::kExitDesign;
    } catch (const sqz::IntegrationError& e) {
        std::fprintf(stderr, "integration error: %s (last valid tau %.12g)\n", e.what(),
                     e.last_valid_tau);
        return sqzcli::kExitIntegration;
    } catch (const sqzcli::UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return sqzcli::kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return sqzcli::kExitUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return sqzcli::kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return rc;
}
