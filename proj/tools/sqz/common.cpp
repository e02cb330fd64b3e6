#include "common.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sqz/version.hpp"

namespace sqzcli {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

double parse_plain(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("not a number: '" + s + "'");
    }
    if (used != s.size()) throw UsageError("trailing characters in number: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(trim(item));
    return parts;
}

}  // namespace

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

double parse_pi_value(const std::string& raw) {
    std::string s = trim(raw);
    if (s.empty()) throw UsageError("empty number");
    auto pos = s.find("pi");
    if (pos == std::string::npos) return parse_plain(s);

    std::string prefix = s.substr(0, pos);
    std::string suffix = s.substr(pos + 2);

    double mult = 1.0;
    if (prefix == "-") {
        mult = -1.0;
    } else if (!prefix.empty() && prefix != "+") {
        mult = parse_plain(prefix);
    }

    double div = 1.0;
    if (!suffix.empty()) {
        if (suffix[0] != '/') throw UsageError("bad pi expression: '" + raw + "'");
        div = parse_plain(suffix.substr(1));
        if (div == 0.0) throw UsageError("division by zero in '" + raw + "'");
    }
    return mult * kPi / div;
}

std::pair<double, double> parse_range(const std::string& s) {
    auto parts = split(s, ':');
    if (parts.size() != 2) throw UsageError("expected 'lo:hi', got '" + s + "'");
    return {parse_pi_value(parts[0]), parse_pi_value(parts[1])};
}

std::pair<int, int> parse_grid(const std::string& s) {
    auto sep = s.find_first_of("x,");
    if (sep == std::string::npos) throw UsageError("expected 'NxM', got '" + s + "'");
    int n0 = static_cast<int>(parse_plain(trim(s.substr(0, sep))));
    int n1 = static_cast<int>(parse_plain(trim(s.substr(sep + 1))));
    if (n0 < 1 || n1 < 1) throw UsageError("grid dimensions must be positive");
    return {n0, n1};
}

std::vector<sqz::GaussianPacket> parse_packets(const std::string& s) {
    std::vector<sqz::GaussianPacket> out;
    for (const auto& chunk : split(s, ';')) {
        if (chunk.empty()) continue;
        auto fields = split(chunk, ',');
        if (fields.size() < 2 || fields.size() > 3)
            throw UsageError("packet must be 'q0,p0[,kappa]', got '" + chunk + "'");
        sqz::GaussianPacket pk;
        pk.q0 = parse_pi_value(fields[0]);
        pk.p0 = parse_pi_value(fields[1]);
        if (fields.size() == 3) pk.kappa = parse_plain(fields[2]);
        if (!(pk.kappa > 0.0)) throw UsageError("packet kappa must be positive");
        out.push_back(pk);
    }
    if (out.empty()) throw UsageError("no packets given");
    return out;
}

sqz::GammaSpec parse_gamma(const std::string& s) {
    std::string t = trim(s);
    if (t == "sin2") return sqz::GammaSpec::sin2();
    const std::string prefix = "const:";
    if (t.rfind(prefix, 0) == 0) {
        double v = parse_plain(t.substr(prefix.size()));
        if (!(v > 0.0)) throw UsageError("gamma constant must be positive");
        return sqz::GammaSpec::constant(v);
    }
    throw UsageError("gamma must be 'const:<v>' or 'sin2', got '" + s + "'");
}

std::pair<double, double> parse_pair(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 2) throw UsageError("expected 'a,b', got '" + s + "'");
    return {parse_pi_value(parts[0]), parse_pi_value(parts[1])};
}

CsvWriter::CsvWriter(const std::string& path, const std::string& header)
    : path_(path), out_(path) {
    if (!out_) throw UsageError("cannot open output file: " + path);
    out_ << header << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ",";
        out_ << cells[i];
    }
    out_ << "\n";
}

nlohmann::json design_to_json(const sqz::ThetaDesign& d) {
    nlohmann::json g;
    g["kind"] = d.gamma_fn.kind == sqz::GammaSpec::Kind::Sin2 ? "sin2" : "const";
    g["value"] = d.gamma_fn.kind == sqz::GammaSpec::Kind::Sin2 ? 1.0 : d.gamma_fn.value;
    nlohmann::json j;
    j["b"] = d.b;
    j["c"] = d.c;
    j["beta_end"] = d.beta_end;
    j["gamma"] = g;
    j["a"] = {d.a1, d.a3, d.a5, d.a7};
    return j;
}

sqz::ThetaDesign design_from_json(const nlohmann::json& j) {
    double b = j.at("b").get<double>();
    double c = j.at("c").get<double>();
    double beta_end = j.value("beta_end", 0.0);
    sqz::GammaSpec g = sqz::GammaSpec::constant(1.0);
    if (j.contains("gamma")) {
        const auto& jg = j.at("gamma");
        std::string kind = jg.at("kind").get<std::string>();
        if (kind == "sin2") {
            g = sqz::GammaSpec::sin2();
        } else if (kind == "const") {
            g = sqz::GammaSpec::constant(jg.value("value", 1.0));
        } else {
            throw UsageError("unknown gamma kind: " + kind);
        }
    }
    return sqz::solve_coefficients(b, c, beta_end, g);
}

sqz::ThetaDesign load_design(const std::string& path) {
    return design_from_json(read_json_file(path));
}

void RunManifest::write(const std::string& path) const {
    nlohmann::json j;
    j["command"] = command;
    j["version"] = sqz::kVersion;
    j["step"] = step;
    j["parameters"] = parameters;
    j["outputs"] = outputs;
    write_json_file(path, j);
}

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
}

}  // namespace sqzcli
