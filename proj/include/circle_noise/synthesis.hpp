#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "circle_noise/fourier_series.hpp"
#include "circle_noise/kernels.hpp"
#include "circle_noise/random.hpp"
#include "circle_noise/white_noise.hpp"

namespace circle_noise {

/// Processes obtained by pairing white noise with a t-indexed test function.
enum class ProcessKind {
    bridge,  ///< (1_[0,t) - t)(x)
    levy,    ///< eta_t(x)
};

/// Accepts "bridge" and "levy". "white-noise" gets a dedicated message: white
/// noise has no pointwise sample path, only pairings.
ProcessKind parse_process_kind(std::string_view name);
std::string_view to_string(ProcessKind kind);

/// Test function whose pairing with x gives the process value at t.
FourierSeries process_test_function(ProcessKind kind, double t, int max_freq);

/// Covariance of the process: bridge -> min(s,t) - st, levy -> Levy kernel with o = 0.
Kernel process_kernel(ProcessKind kind);

/// Uniform grid t_j = j / M, j = 0..M-1 (the point 1 is identified with 0).
struct GridSpec {
    std::size_t points = 0;

    explicit GridSpec(std::size_t m);
    double at(std::size_t j) const { return static_cast<double>(j) / static_cast<double>(points); }
    std::vector<double> values() const;
};

/// Direct summation: path_j = pair(test_function(t_j), x). O(N M).
std::vector<double> synthesize_path_naive(ProcessKind kind, const NoiseSample& x, GridSpec grid);

/// Thrown when an FFT grid is too coarse for the truncation (M < 2N + 1).
class AliasingError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct FftPath {
    std::vector<double> values;
    double max_imag_residue = 0.0;
};

/// FFT path synthesis on a fixed grid.
///
/// Both processes split their test-function coefficients into a t-free
/// weight times (1 - e^{-i 2 pi n t}) or (e^{i 2 pi n t} - 1), so a path is
/// a constant and one length-M DFT of a Hermitian weight sequence:
///
///   S_j = sum_{n != 0} w_n e^{-i 2 pi n j / M}
///   bridge: w_n = conj(z_n) / (i 2 pi n),            path_j = S_0 - S_j
///   levy:   w_n = conj(z_{-n}) / (sqrt2 pi |n|), odd n,  path_j = S_j - S_0
///
/// Taking the constant from S_0 makes path_0 exactly zero. Requires M >= 2N + 1 so the
/// frequencies -N..N land in distinct bins.
///
/// The plan is created once; synthesize() is safe to call concurrently.
class FftSynthesizer {
  public:
    explicit FftSynthesizer(GridSpec grid);
    ~FftSynthesizer();
    FftSynthesizer(const FftSynthesizer&) = delete;
    FftSynthesizer& operator=(const FftSynthesizer&) = delete;

    GridSpec grid() const { return grid_; }

    /// Throws AliasingError if M < 2N + 1, std::logic_error if the imaginary
    /// residue of the DFT exceeds kMaxImagResidue.
    FftPath synthesize(ProcessKind kind, const NoiseSample& x) const;

    static constexpr double kMaxImagResidue = 1e-10;

  private:
    struct Plan;
    GridSpec grid_;
    std::unique_ptr<Plan> plan_;
};

std::vector<double> synthesize_path_fft(ProcessKind kind, const NoiseSample& x, GridSpec grid);

/// R replicate paths on a uniform grid, row-major (replicate, grid point).
struct PathEnsemble {
    GridSpec grid;
    ProcessKind kind;
    int truncation;
    SeedSpec seed;
    std::size_t replicates;
    std::vector<double> values;

    std::span<const double> path(std::size_t r) const {
        return {values.data() + r * grid.points, grid.points};
    }
    double at(std::size_t r, std::size_t j) const { return values[r * grid.points + j]; }
};

enum class SynthesisMethod { fft, naive };

/// Replicates 0..R-1 synthesized in parallel; output is independent of thread count.
PathEnsemble synthesize_ensemble(ProcessKind kind, int truncation, GridSpec grid,
                                 std::size_t replicates, SeedSpec seed,
                                 SynthesisMethod method = SynthesisMethod::fft);

/// Thrown when the Gram matrix cannot be factored even at the largest jitter.
class FactorizationError : public std::runtime_error {
  public:
    FactorizationError(const std::string& what, double min_eigenvalue)
        : std::runtime_error(what), min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const { return min_eigenvalue_; }

  private:
    double min_eigenvalue_;
};

/// Brute-force sampler for N(0, G): G = L L^T with diagonal jitter
/// eps * max_i G_ii, eps = 1e-12, 1e-11, ..., 1e-6. A rank-deficient G
/// (the levy kernel) absorbs jitter of order eps in its null directions.
class CholeskySampler {
  public:
    CholeskySampler(const Kernel& kernel, std::span<const double> points);
    CholeskySampler(const Kernel& kernel, GridSpec grid)
        : CholeskySampler(kernel, grid.values()) {}

    /// Relative jitter that succeeded (0 for an all-zero Gram matrix).
    double jitter_ratio() const { return jitter_ratio_; }
    const Eigen::MatrixXd& gram() const { return gram_; }

    std::vector<double> sample(SeedSpec seed, std::uint64_t replicate) const;

    static constexpr double kFirstJitter = 1e-12;
    static constexpr double kLastJitter = 1e-6;

  private:
    Eigen::MatrixXd gram_;
    Eigen::MatrixXd lower_;
    double jitter_ratio_ = 0.0;
};

std::vector<double> cholesky_sample(const Kernel& kernel, GridSpec grid, SeedSpec seed,
                                    std::uint64_t replicate);

}  // namespace circle_noise
