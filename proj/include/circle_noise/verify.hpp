#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circle_noise/fourier_series.hpp"
#include "circle_noise/kernels.hpp"
#include "circle_noise/random.hpp"
#include "circle_noise/synthesis.hpp"

namespace circle_noise {

/// One named, tolerance-bearing check.
///
/// Two-sided checks pass when |statistic - expected| <= tolerance. One-sided
/// checks (counts, eigenvalue ratios) pass when statistic >= expected -
/// tolerance or statistic <= expected + tolerance; `detail` names the relation.
struct CheckResult {
    std::string name;
    double statistic = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;

    static CheckResult within(std::string name, double statistic, double expected,
                              double tolerance, std::string detail = {});
    static CheckResult at_least(std::string name, double statistic, double threshold,
                                double tolerance, std::string detail = {});
    static CheckResult at_most(std::string name, double statistic, double threshold,
                               double tolerance, std::string detail = {});
};

/// Tolerance for checks whose exact answer is zero.
inline constexpr double kExactTolerance = 1e-12;

struct SuiteConfig {
    int truncation = 1024;
    std::size_t grid = 2048;
    std::size_t replicates = 20000;
    std::uint64_t seed = 42;
    double tol_ratio = 1e-10;
};

struct VerificationReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckResult> checks;

    bool overall_pass() const;
};

using PointPair = std::pair<double, double>;

/// |sum_{0<|n|<=N} c_n(s) conj(c_n(t)) - sum_{all n}| <= 2/pi^2 sum_{n>N} 1/n^2 < 2/(pi^2 N).
double bridge_truncation_bound(int max_freq);
/// Same for eta_t: <= 4/(pi^2 N).
double eta_truncation_bound(int max_freq);
double process_truncation_bound(ProcessKind kind, int max_freq);

// Coefficient-level checks -------------------------------------------------

/// Parseval Gram of bridge test functions vs min(s,t) - st.
std::vector<CheckResult> check_parseval_bridge(int max_freq, std::span<const PointPair> pairs);

/// Parseval Gram of eta test functions vs the Levy kernel (o = 0), which
/// equals min(s,t) on the half-circle [0, 1/2].
std::vector<CheckResult> check_eta_gram(int max_freq, std::span<const PointPair> pairs);

/// ||(eta_t + eta_t') - (eta_s + eta_s')||, t' = t + 1/2 mod 1.
CheckResult check_levy_identity(double t, double s, int max_freq);

/// ||eta_s - eta_{1/2} + eta_{s-1/2} - eta_0|| for s in (1/2, 1).
CheckResult check_mirror(double s, int max_freq);

/// Randomized (t, s) pairs on [0,1)^2 from the identity stream.
std::vector<PointPair> random_point_pairs(SeedSpec seed, std::size_t count);

// Spectrum checks ----------------------------------------------------------

/// Uniform 2m-point grid j / (2m); antipodally symmetric.
std::vector<double> antipodal_grid(std::size_t m);

/// Levy Gram on 2m antipodally symmetric points has >= m - 1 eigenvalues
/// below tol_ratio * lambda_max.
CheckResult check_degenerate_spectrum(std::span<const double> points, double tol_ratio);
CheckResult check_degenerate_spectrum(std::size_t m, double tol_ratio);

/// Number of near-zero eigenvalues of the kernel Gram equals zero.
CheckResult check_no_near_zero_eigenvalues(const Kernel& kernel, std::span<const double> points,
                                           double tol_ratio);

/// lambda_min / lambda_max > min_ratio.
CheckResult check_positive_definite(const Kernel& kernel, std::span<const double> points,
                                    double min_ratio = 1e-8);

/// v^T G v with v = (1, 1, -1, -1) on (t, t', s, s') for the Levy kernel.
CheckResult check_antipodal_quadratic_form(double t, double s, double origin = 0.0);

// Monte Carlo checks (R >= kMinReplicates) ---------------------------------

/// Empirical covariance of spectrally synthesized paths at grid points
/// snapped from `pairs`. Tolerance 4 SE + truncation slack (analytic bound
/// unless overridden).
std::vector<CheckResult> mc_covariance_check(ProcessKind kind, int max_freq, GridSpec grid,
                                             std::span<const PointPair> pairs,
                                             std::size_t replicates, SeedSpec seed,
                                             std::optional<double> truncation_slack = {});

/// Cholesky-oracle vs FFT-spectral empirical covariances; tolerance is the
/// sum of both 4 SE bands plus the truncation slack.
std::vector<CheckResult> oracle_equivalence_check(ProcessKind kind, int max_freq, GridSpec grid,
                                                  std::span<const PointPair> pairs,
                                                  std::size_t replicates, SeedSpec seed,
                                                  std::optional<double> truncation_slack = {});

/// KS statistic of xi(x_r) / ||xi|| vs N(0,1), tolerance 1.63 / sqrt(R).
CheckResult ks_normality_check(const FourierSeries& xi, int max_freq, std::size_t replicates,
                               SeedSpec seed, std::string name = "ks_normality");

/// |corr(f(x), g(x))| <= 4 / sqrt(R). Throws if |(f, g)| > orthogonality_tol.
CheckResult independence_check(const FourierSeries& f, const FourierSeries& g, int max_freq,
                               std::size_t replicates, SeedSpec seed,
                               double orthogonality_tol = 1e-8,
                               std::string name = "independence");

/// Statistic Re C_hat(xi), expected exp(-||xi||^2 / 2) with ||xi|| over the
/// truncation; passes when |C_hat - C| <= 4 / sqrt(R).
CheckResult char_functional_check(const FourierSeries& xi, int max_freq, std::size_t replicates,
                                  SeedSpec seed, std::string name = "char_functional");

/// |C_hat(f1 + f2) - C_hat(f1) C_hat(f2)| <= 12 / sqrt(R) for disjoint supports.
CheckResult char_functional_product_check(const FourierSeries& f1, const FourierSeries& f2,
                                          int max_freq, std::size_t replicates, SeedSpec seed);

/// The matrix [C(xi_j - xi_k)] built from the closed form is positive semidefinite.
CheckResult char_functional_positive_definite_check(std::span<const FourierSeries> family);

/// Partial sum of 1/n^2 (two-sided: doubled) vs pi^2/6, tolerance 1/N_max + 1e-12.
CheckResult hs_sum_check(long long n_max, bool two_sided = false);

/// Mean of sum_{n!=0}|z_n|^2/n^2 over R samples vs 2 sum_{n<=N} 1/n^2.
/// Default tolerance is 4 SE.
CheckResult noise_hs_expectation_check(int max_freq, std::size_t replicates, SeedSpec seed,
                                       std::optional<double> tolerance = {});

// Suites -------------------------------------------------------------------

std::span<const std::string_view> suite_names();

/// Throws std::invalid_argument for an unknown suite or R below policy for
/// statistical suites.
VerificationReport run_suite(std::string_view suite, const SuiteConfig& config);

}  // namespace circle_noise
