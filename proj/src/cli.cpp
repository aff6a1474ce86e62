#include "circle_noise/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "circle_noise/report.hpp"
#include "circle_noise/synthesis.hpp"
#include "circle_noise/verify.hpp"
#include "circle_noise/white_noise.hpp"

namespace circle_noise::cli {

namespace {

const std::vector<std::pair<int, std::size_t>> kDefaultBenchSizes{
    {8, 32}, {64, 256}, {512, 2048}, {4096, 16384}};

constexpr double kBenchMaxDeviation = 1e-9;

std::string provenance(const CliConfig& c) {
    std::ostringstream s;
    s << "circle-noise " << c.subcommand;
    if (c.subcommand == "sample") {
        s << " process=" << c.process << " N=" << c.truncation << " M=" << c.grid
          << " R=" << c.replicates << " seed=" << c.seed << " method=" << c.method;
    } else if (c.subcommand == "spectrum") {
        s << " kernel=" << c.kernel << " M=" << (c.points.empty() ? c.grid : c.points.size())
          << " tol_ratio=" << format_number(c.tol_ratio);
        if (!c.points.empty()) {
            s << " points=";
            for (std::size_t i = 0; i < c.points.size(); ++i) {
                s << (i ? ";" : "") << format_number(c.points[i]);
            }
        }
    }
    return s.str();
}

// Writes via `write` to the --out path, or to `fallback` when no path is set.
template <typename Writer>
bool emit(const std::string& path, std::ostream& fallback, std::ostream& err, Writer write) {
    if (path.empty()) {
        write(fallback);
        return true;
    }
    std::ofstream file(path);
    if (!file) {
        err << "error: cannot open '" << path << "' for writing\n";
        return false;
    }
    write(file);
    file.flush();
    if (!file) {
        err << "error: failed writing '" << path << "'\n";
        return false;
    }
    return true;
}

double milliseconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

int run_sample(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const ProcessKind kind = parse_process_kind(config.process);
        if (config.method != "fft" && config.method != "naive") {
            throw std::invalid_argument("unknown method '" + config.method + "' (fft or naive)");
        }
        if (config.truncation < 1) {
            throw std::invalid_argument("--trunc must be >= 1");
        }
        const GridSpec grid(config.grid);
        const SynthesisMethod method =
            config.method == "fft" ? SynthesisMethod::fft : SynthesisMethod::naive;
        const PathEnsemble ensemble = synthesize_ensemble(
            kind, config.truncation, grid, config.replicates, SeedSpec{config.seed}, method);

        if (!emit(config.out, out, err, [&](std::ostream& os) {
                write_paths_csv(os, ensemble, provenance(config));
            })) {
            return kExitUsage;
        }

        // Paths have mean zero, so the mean square is the variance estimate.
        const std::size_t last = grid.points - 1;
        const std::size_t half = grid.points / 2;
        double end_sq = 0.0;
        double half_sq = 0.0;
        for (std::size_t r = 0; r < ensemble.replicates; ++r) {
            end_sq += ensemble.at(r, last) * ensemble.at(r, last);
            half_sq += ensemble.at(r, half) * ensemble.at(r, half);
        }
        const double reps = static_cast<double>(std::max<std::size_t>(ensemble.replicates, 1));
        const Kernel kernel = process_kernel(kind);
        std::ostream& summary = config.out.empty() ? err : out;
        summary << "process=" << config.process << " R=" << ensemble.replicates
                << " M=" << grid.points << " N=" << config.truncation << '\n'
                << "endpoint_variance t=" << format_number(grid.at(last)) << ": "
                << format_number(end_sq / reps) << " (kernel "
                << format_number(kernel(grid.at(last), grid.at(last))) << ")\n"
                << "midpoint_variance t=" << format_number(grid.at(half)) << ": "
                << format_number(half_sq / reps) << " (kernel "
                << format_number(kernel(grid.at(half), grid.at(half))) << ")\n";
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_verify(const CliConfig& config, std::ostream& out, std::ostream& err) {
    VerificationReport report;
    try {
        SuiteConfig suite_config;
        suite_config.truncation = config.truncation;
        suite_config.grid = config.grid;
        suite_config.replicates = config.replicates;
        suite_config.seed = config.seed;
        suite_config.tol_ratio = config.tol_ratio;
        report = run_suite(config.suite, suite_config);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const std::string json = to_json(report);
    if (!emit(config.out, out, err, [&](std::ostream& os) { os << json; })) {
        return kExitUsage;
    }
    std::ostream& summary = config.out.empty() ? err : out;
    std::size_t failed = 0;
    for (const CheckResult& c : report.checks) {
        if (!c.pass) {
            ++failed;
            summary << "FAIL " << c.name << ": statistic=" << format_number(c.statistic)
                    << " expected=" << format_number(c.expected)
                    << " tolerance=" << format_number(c.tolerance) << '\n';
        }
    }
    summary << "suite " << report.suite << ": " << (report.checks.size() - failed) << '/'
            << report.checks.size() << " checks passed\n";
    return report.overall_pass() ? kExitOk : kExitCheckFailed;
}

int run_spectrum(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const Kernel kernel = Kernel::parse(config.kernel);
        std::vector<double> points = config.points;
        if (points.empty()) {
            points = GridSpec(config.grid).values();
        }
        if (points.size() > kMaxSpectrumPoints) {
            throw std::invalid_argument("spectrum: " + std::to_string(points.size()) +
                                        " points exceeds the dense limit of " +
                                        std::to_string(kMaxSpectrumPoints));
        }
        const auto eigenvalues = symmetric_eigenvalues(gram_matrix(kernel, points));
        const std::size_t near_zero = count_near_zero(eigenvalues, config.tol_ratio);
        if (!emit(config.out, out, err, [&](std::ostream& os) {
                write_spectrum_csv(os, eigenvalues,
                                   provenance(config) + " near_zero=" + std::to_string(near_zero));
            })) {
            return kExitUsage;
        }
        std::ostream& summary = config.out.empty() ? err : out;
        summary << "kernel=" << kernel.name() << " points=" << points.size()
                << " lambda_max=" << format_number(eigenvalues.back())
                << " lambda_min=" << format_number(eigenvalues.front())
                << " near_zero=" << near_zero << '\n';
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_bench(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const ProcessKind kind = parse_process_kind(config.process);
        const auto& sizes = config.bench_sizes.empty() ? kDefaultBenchSizes : config.bench_sizes;
        bool ok = true;
        char line[160];
        std::snprintf(line, sizeof line, "%8s %8s %12s %12s %10s %12s\n", "N", "M", "naive_ms",
                      "fft_ms", "speedup", "max_dev");
        out << line;
        for (const auto& [n, m] : sizes) {
            const GridSpec grid(m);
            const NoiseSample x = sample_noise(n, SeedSpec{config.seed}, 0);

            auto start = std::chrono::steady_clock::now();
            const auto naive = synthesize_path_naive(kind, x, grid);
            const double naive_ms = milliseconds_since(start);

            start = std::chrono::steady_clock::now();
            const auto fast = synthesize_path_fft(kind, x, grid);
            const double fft_ms = milliseconds_since(start);

            double max_dev = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                max_dev = std::max(max_dev, std::abs(naive[j] - fast[j]));
            }
            ok = ok && max_dev <= kBenchMaxDeviation;
            std::snprintf(line, sizeof line, "%8d %8zu %12.3f %12.3f %10.2f %12.3e\n", n, m,
                          naive_ms, fft_ms, naive_ms / std::max(fft_ms, 1e-9), max_dev);
            out << line;
        }
        if (!ok) {
            err << "error: FFT and naive synthesis differ by more than "
                << format_number(kBenchMaxDeviation) << '\n';
            return kExitCheckFailed;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"White noise, Brownian bridge and Levy Brownian motion on the circle"};
    app.require_subcommand(1);
    app.allow_windows_style_options(false);

    CliConfig config;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--trunc", config.truncation, "Fourier truncation N")
            ->check(CLI::PositiveNumber);
        sub->add_option("--grid", config.grid, "grid size M (t_j = j/M)");
        sub->add_option("--seed", config.seed, "master seed (64-bit)");
        sub->add_option("--out", config.out, "output file (default: standard output)");
    };

    CLI::App* sample = app.add_subcommand("sample", "synthesize replicate paths to wide CSV");
    add_common(sample);
    sample->add_option("--process", config.process, "bridge | levy");
    sample->add_option("--reps", config.replicates, "number of replicate paths");
    sample->add_option("--method", config.method, "fft | naive");

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite, JSON report");
    add_common(verify);
    verify->add_option("--suite", config.suite,
                       "covariance | normality | independence | identity | charfunc | "
                       "degeneracy | hs | all");
    verify->add_option("--reps", config.replicates, "Monte Carlo replicates");
    verify->add_flag("--fresh-seed", config.fresh_seed, "draw the master seed from the OS");
    verify->add_option("--tol-ratio", config.tol_ratio, "near-zero eigenvalue ratio");

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of a kernel Gram matrix");
    add_common(spectrum);
    spectrum->add_option("--kernel", config.kernel, "levy | bridge | min");
    spectrum->add_option("--points", config.points, "explicit points (comma separated)")
        ->delimiter(',');
    spectrum->add_option("--tol-ratio", config.tol_ratio, "near-zero eigenvalue ratio");

    CLI::App* bench = app.add_subcommand("bench", "time naive vs FFT path synthesis");
    add_common(bench);
    bench->add_option("--process", config.process, "bridge | levy");

    for (CLI::App* sub : {sample, verify, spectrum, bench}) {
        sub->allow_extras(false);
        sub->positionals_at_end(false);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    config.subcommand = app.get_subcommands().front()->get_name();
    // The default grid is too coarse for large --trunc under FFT synthesis;
    // an explicit --grid is left alone so that aliasing is reported.
    if (config.subcommand == "sample" && sample->count("--grid") == 0 && config.method == "fft" &&
        config.grid < 2 * static_cast<std::size_t>(config.truncation) + 1) {
        config.grid = 2 * static_cast<std::size_t>(config.truncation) + 1;
        err << "note: grid raised to M = " << config.grid << " (FFT needs M >= 2N+1)\n";
    }
    if (config.fresh_seed) {
        std::random_device rd;
        config.seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
        err << "fresh seed: " << config.seed << '\n';
    }

    if (config.subcommand == "sample") {
        return run_sample(config, out, err);
    }
    if (config.subcommand == "verify") {
        return run_verify(config, out, err);
    }
    if (config.subcommand == "spectrum") {
        return run_spectrum(config, out, err);
    }
    if (bench->count("--trunc") > 0 || bench->count("--grid") > 0) {
        config.bench_sizes = {{config.truncation, config.grid}};
    }
    return run_bench(config, out, err);
}

}  // namespace circle_noise::cli
