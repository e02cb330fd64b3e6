#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "sqz/packet.hpp"
#include "sqz/theta_design.hpp"

namespace sqzcli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDesign = 3;
inline constexpr int kExitIntegration = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All numeric text output goes through this: 12 significant digits.
std::string fmt12(double x);

// "0.9:2.0", "-pi/2:pi/2", "35pi/32:2pi" -> {lo, hi}
std::pair<double, double> parse_range(const std::string& s);

// Single scalar with optional pi factor: "1.5", "pi/2", "-3pi", "5pi/2".
double parse_pi_value(const std::string& s);

// "221x221" -> {221, 221}
std::pair<int, int> parse_grid(const std::string& s);

// "q0,p0[,kappa];q0,p0[,kappa];..." -> packets
std::vector<sqz::GaussianPacket> parse_packets(const std::string& s);

// "const:<v>" or "sin2"
sqz::GammaSpec parse_gamma(const std::string& s);

// "b0,b1"
std::pair<double, double> parse_pair(const std::string& s);

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& header);
    void row(const std::vector<std::string>& cells);
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::ofstream out_;
};

nlohmann::json design_to_json(const sqz::ThetaDesign& d);
sqz::ThetaDesign design_from_json(const nlohmann::json& j);
sqz::ThetaDesign load_design(const std::string& path);

// Run manifest: fixed key order, no timestamps, so identical invocations
// produce byte-identical files.
struct RunManifest {
    std::string command;
    double step = 0.0;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<std::string> outputs;

    void add_output(const std::string& path) { outputs.push_back(path); }
    void write(const std::string& path) const;
};

void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

}  // namespace sqzcli
