#include "circle_noise/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include <fftw3.h>

namespace circle_noise {

namespace {

// FFTW planning is not thread-safe; execution on distinct arrays is.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

ProcessKind parse_process_kind(std::string_view name) {
    if (name == "bridge") {
        return ProcessKind::bridge;
    }
    if (name == "levy") {
        return ProcessKind::levy;
    }
    if (name == "white-noise" || name == "white_noise" || name == "noise") {
        throw std::invalid_argument(
            "white noise is a generalized process with no pointwise sample path; "
            "sample its pairings xi(x) with test functions instead (process bridge or levy)");
    }
    throw std::invalid_argument("unknown process '" + std::string(name) +
                                "' (expected bridge or levy)");
}

std::string_view to_string(ProcessKind kind) {
    return kind == ProcessKind::bridge ? "bridge" : "levy";
}

FourierSeries process_test_function(ProcessKind kind, double t, int max_freq) {
    return kind == ProcessKind::bridge ? bridge_test_function(t, max_freq)
                                       : eta_test_function(t, max_freq);
}

Kernel process_kernel(ProcessKind kind) {
    return kind == ProcessKind::bridge ? Kernel::bridge() : Kernel::levy(0.0);
}

GridSpec::GridSpec(std::size_t m) : points(m) {
    if (m < 2) {
        throw std::invalid_argument("grid needs at least 2 points");
    }
}

std::vector<double> GridSpec::values() const {
    std::vector<double> out(points);
    for (std::size_t j = 0; j < points; ++j) {
        out[j] = at(j);
    }
    return out;
}

std::vector<double> synthesize_path_naive(ProcessKind kind, const NoiseSample& x, GridSpec grid) {
    std::vector<double> path(grid.points);
    for (std::size_t j = 0; j < grid.points; ++j) {
        path[j] = pair(process_test_function(kind, grid.at(j), x.max_freq()), x);
    }
    return path;
}

struct FftSynthesizer::Plan {
    fftw_plan handle = nullptr;
};

FftSynthesizer::FftSynthesizer(GridSpec grid) : grid_(grid), plan_(std::make_unique<Plan>()) {
    const int m = static_cast<int>(grid.points);
    std::lock_guard lock(fftw_planner_mutex());
    auto* in = fftw_alloc_complex(grid.points);
    auto* out = fftw_alloc_complex(grid.points);
    plan_->handle = fftw_plan_dft_1d(m, in, out, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(in);
    fftw_free(out);
    if (plan_->handle == nullptr) {
        throw std::runtime_error("FFTW failed to create a plan of size " + std::to_string(m));
    }
}

FftSynthesizer::~FftSynthesizer() {
    std::lock_guard lock(fftw_planner_mutex());
    fftw_destroy_plan(plan_->handle);
}

FftPath FftSynthesizer::synthesize(ProcessKind kind, const NoiseSample& x) const {
    const int max_freq = x.max_freq();
    const std::size_t m = grid_.points;
    if (m < 2 * static_cast<std::size_t>(max_freq) + 1) {
        throw AliasingError("FFT synthesis needs M >= 2N+1 (M=" + std::to_string(m) +
                            ", N=" + std::to_string(max_freq) + ")");
    }

    std::vector<Complex> weights(m);
    std::vector<Complex> sums(m);
    const auto bin = [m](int n) {
        return n >= 0 ? static_cast<std::size_t>(n) : m - static_cast<std::size_t>(-n);
    };
    for (int n = 1; n <= max_freq; ++n) {
        const double nn = static_cast<double>(n);
        Complex w;
        if (kind == ProcessKind::bridge) {
            w = std::conj(x.z(n)) / Complex(0.0, 2.0 * std::numbers::pi * nn);
        } else if (n % 2 == 1) {
            // w_n = conj(z_{-n}) * h = z_n * h
            w = x.z(n) / (std::numbers::sqrt2 * std::numbers::pi * nn);
        } else {
            continue;
        }
        weights[bin(n)] = w;
        weights[bin(-n)] = std::conj(w);
    }

    fftw_execute_dft(plan_->handle, reinterpret_cast<fftw_complex*>(weights.data()),
                     reinterpret_cast<fftw_complex*>(sums.data()));

    FftPath result;
    result.values.resize(m);
    const double s0 = sums[0].real();
    const double sign = kind == ProcessKind::bridge ? -1.0 : 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        result.max_imag_residue = std::max(result.max_imag_residue, std::abs(sums[j].imag()));
        result.values[j] = sign * (sums[j].real() - s0);
    }
    if (result.max_imag_residue > kMaxImagResidue) {
        throw std::logic_error("FFT synthesis: imaginary residue " +
                               std::to_string(result.max_imag_residue) +
                               " exceeds tolerance; weights are not Hermitian");
    }
    return result;
}

std::vector<double> synthesize_path_fft(ProcessKind kind, const NoiseSample& x, GridSpec grid) {
    return FftSynthesizer(grid).synthesize(kind, x).values;
}

PathEnsemble synthesize_ensemble(ProcessKind kind, int truncation, GridSpec grid,
                                 std::size_t replicates, SeedSpec seed, SynthesisMethod method) {
    PathEnsemble ensemble{grid, kind, truncation, seed, replicates,
                          std::vector<double>(replicates * grid.points)};
    std::unique_ptr<FftSynthesizer> fft;
    if (method == SynthesisMethod::fft) {
        if (grid.points < 2 * static_cast<std::size_t>(truncation) + 1) {
            throw AliasingError("FFT synthesis needs M >= 2N+1 (M=" +
                                std::to_string(grid.points) +
                                ", N=" + std::to_string(truncation) + ")");
        }
        fft = std::make_unique<FftSynthesizer>(grid);
    }
    const auto count = static_cast<std::int64_t>(replicates);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < count; ++r) {
        const NoiseSample x = sample_noise(truncation, seed, static_cast<std::uint64_t>(r));
        const std::vector<double> path = fft ? fft->synthesize(kind, x).values
                                             : synthesize_path_naive(kind, x, grid);
        std::copy(path.begin(), path.end(),
                  ensemble.values.begin() +
                      static_cast<std::ptrdiff_t>(static_cast<std::size_t>(r) * grid.points));
    }
    return ensemble;
}

CholeskySampler::CholeskySampler(const Kernel& kernel, std::span<const double> points)
    : gram_(gram_matrix(kernel, points)) {
    const auto m = gram_.rows();
    if (m == 0 || gram_.isZero(0.0)) {
        lower_ = Eigen::MatrixXd::Zero(m, m);
        return;
    }
    const double max_diag = gram_.diagonal().maxCoeff();
    for (double eps = kFirstJitter; eps <= kLastJitter * 1.000001; eps *= 10.0) {
        const double jitter = eps * std::max(max_diag, 0.0);
        Eigen::MatrixXd jittered = gram_;
        jittered.diagonal().array() += jitter;
        Eigen::LLT<Eigen::MatrixXd> llt(jittered);
        if (llt.info() == Eigen::Success) {
            lower_ = llt.matrixL();
            jitter_ratio_ = eps;
            return;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram_, Eigen::EigenvaluesOnly);
    const double min_eig = eig.eigenvalues().minCoeff();
    throw FactorizationError("Cholesky factorization failed up to jitter " +
                                 std::to_string(kLastJitter) +
                                 " * max diagonal; most negative eigenvalue " +
                                 std::to_string(min_eig),
                             min_eig);
}

std::vector<double> CholeskySampler::sample(SeedSpec seed, std::uint64_t replicate) const {
    const auto m = lower_.rows();
    Eigen::VectorXd z(m);
    for (Eigen::Index j = 0; j < m; j += 2) {
        const auto [a, b] = standard_normal_pair(seed, Stream::cholesky, replicate,
                                                 static_cast<std::uint32_t>(j / 2));
        z(j) = a;
        if (j + 1 < m) {
            z(j + 1) = b;
        }
    }
    const Eigen::VectorXd path = lower_.triangularView<Eigen::Lower>() * z;
    return {path.data(), path.data() + m};
}

std::vector<double> cholesky_sample(const Kernel& kernel, GridSpec grid, SeedSpec seed,
                                    std::uint64_t replicate) {
    return CholeskySampler(kernel, grid).sample(seed, replicate);
}

}  // namespace circle_noise
