#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace circle_noise::cli {

struct CliConfig {
    std::string subcommand;
    int truncation = 1024;
    std::size_t grid = 2048;
    std::size_t replicates = 20000;
    std::uint64_t seed = 42;
    bool fresh_seed = false;
    std::string process = "bridge";
    std::string kernel = "levy";
    std::string suite = "all";
    std::string method = "fft";
    std::string out;
    double tol_ratio = 1e-10;
    std::vector<double> points;                           // spectrum only
    std::vector<std::pair<int, std::size_t>> bench_sizes;  // bench only
};

/// Exit codes: 0 success, 1 a check or deviation bound failed, 2 bad input
/// or I/O failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Largest grid accepted by the dense spectrum command.
inline constexpr std::size_t kMaxSpectrumPoints = 4096;

int run_sample(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_spectrum(const CliConfig& config, std::ostream& out, std::ostream& err);
int run_bench(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (long flags only) and dispatches to the subcommand.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace circle_noise::cli
