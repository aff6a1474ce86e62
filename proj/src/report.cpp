#include "circle_noise/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace circle_noise {

namespace {

std::string quoted(const std::string& s) {
    return nlohmann::json(s).dump();
}

}  // namespace

std::string format_number(double value) {
    if (!std::isfinite(value)) {
        return "null";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

// Written by hand rather than through nlohmann::json::dump(), which emits the
// shortest round-trip form instead of a fixed 17 significant digits.
std::string to_json(const VerificationReport& report) {
    std::ostringstream out;
    const SuiteConfig& cfg = report.config;
    out << "{\n";
    out << "  \"suite\": " << quoted(report.suite) << ",\n";
    out << "  \"config\": {\"N\": " << cfg.truncation << ", \"M\": " << cfg.grid
        << ", \"R\": " << cfg.replicates << ", \"seed\": " << cfg.seed << "},\n";
    out << "  \"checks\": [";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const CheckResult& c = report.checks[i];
        out << (i == 0 ? "\n" : ",\n");
        out << "    {\"name\": " << quoted(c.name)
            << ", \"statistic\": " << format_number(c.statistic)
            << ", \"expected\": " << format_number(c.expected)
            << ", \"tolerance\": " << format_number(c.tolerance)
            << ", \"pass\": " << (c.pass ? "true" : "false")
            << ", \"detail\": " << quoted(c.detail) << "}";
    }
    out << (report.checks.empty() ? "],\n" : "\n  ],\n");
    out << "  \"overall_pass\": " << (report.overall_pass() ? "true" : "false") << "\n";
    out << "}\n";
    return out.str();
}

void write_paths_csv(std::ostream& out, const PathEnsemble& ensemble,
                     const std::string& provenance) {
    out << "# " << provenance << '\n';
    out << "replicate";
    for (std::size_t j = 0; j < ensemble.grid.points; ++j) {
        out << ",t" << j;
    }
    out << '\n';
    char buf[40];
    for (std::size_t r = 0; r < ensemble.replicates; ++r) {
        out << r;
        for (double v : ensemble.path(r)) {
            std::snprintf(buf, sizeof buf, ",%.17g", v);
            out << buf;
        }
        out << '\n';
    }
}

void write_spectrum_csv(std::ostream& out, std::span<const double> eigenvalues,
                        const std::string& provenance) {
    out << "# " << provenance << '\n';
    out << "index,eigenvalue\n";
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        out << i << ',' << format_number(eigenvalues[i]) << '\n';
    }
}

}  // namespace circle_noise
