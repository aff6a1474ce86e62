#include "circle_noise/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "circle_noise/statistics.hpp"
#include "circle_noise/white_noise.hpp"

namespace circle_noise {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kStatBand = 4.0;  // per-check false alarm ~6e-5

template <typename... Args>
std::string format(const char* fmt, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

std::string point_label(double s, double t) {
    return format("(%.6g,%.6g)", s, t);
}

void require_replicates(std::size_t replicates, const char* what) {
    if (replicates < kMinReplicates) {
        throw std::invalid_argument(format("%s: R=%zu is below the minimum of %zu replicates",
                                           what, replicates, kMinReplicates));
    }
}

double antipode(double t) {
    const double u = t + 0.5;
    return u >= 1.0 ? u - 1.0 : u;
}

double truncated_norm_sq(const FourierSeries& xi, int max_freq) {
    return l2_norm_sq(xi.resized(std::min(xi.max_freq(), max_freq)));
}

std::size_t snap_to_grid(double t, GridSpec grid) {
    const auto m = static_cast<double>(grid.points);
    const auto j = static_cast<std::size_t>(std::llround(t * m));
    return j % grid.points;
}

// Values of each replicate path at a fixed set of grid indices, replicate-major.
struct SampledColumns {
    std::vector<std::size_t> indices;
    std::size_t replicates = 0;
    std::vector<double> values;  // replicates x indices

    std::vector<double> column(std::size_t index) const {
        const auto pos = static_cast<std::size_t>(
            std::find(indices.begin(), indices.end(), index) - indices.begin());
        std::vector<double> col(replicates);
        for (std::size_t r = 0; r < replicates; ++r) {
            col[r] = values[r * indices.size() + pos];
        }
        return col;
    }
};

std::vector<std::size_t> pair_indices(std::span<const PointPair> pairs, GridSpec grid) {
    std::vector<std::size_t> out;
    for (const auto& [s, t] : pairs) {
        out.push_back(snap_to_grid(s, grid));
        out.push_back(snap_to_grid(t, grid));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SampledColumns spectral_columns(ProcessKind kind, int max_freq, GridSpec grid,
                                std::vector<std::size_t> indices, std::size_t replicates,
                                SeedSpec seed) {
    SampledColumns cols{std::move(indices), replicates, {}};
    cols.values.resize(replicates * cols.indices.size());
    const FftSynthesizer synth(grid);
    const auto count = static_cast<std::int64_t>(replicates);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < count; ++r) {
        const auto path =
            synth.synthesize(kind, sample_noise(max_freq, seed, static_cast<std::uint64_t>(r)))
                .values;
        const std::size_t row = static_cast<std::size_t>(r) * cols.indices.size();
        for (std::size_t k = 0; k < cols.indices.size(); ++k) {
            cols.values[row + k] = path[cols.indices[k]];
        }
    }
    return cols;
}

SampledColumns cholesky_columns(const Kernel& kernel, GridSpec grid,
                                std::vector<std::size_t> indices, std::size_t replicates,
                                SeedSpec seed) {
    SampledColumns cols{std::move(indices), replicates, {}};
    cols.values.resize(replicates * cols.indices.size());
    const CholeskySampler sampler(kernel, grid);
    const auto count = static_cast<std::int64_t>(replicates);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < count; ++r) {
        const auto path = sampler.sample(seed, static_cast<std::uint64_t>(r));
        const std::size_t row = static_cast<std::size_t>(r) * cols.indices.size();
        for (std::size_t k = 0; k < cols.indices.size(); ++k) {
            cols.values[row + k] = path[cols.indices[k]];
        }
    }
    return cols;
}

double coefficient_residual(const FourierSeries& f) {
    return std::sqrt(l2_norm_sq(f));
}

}  // namespace

CheckResult CheckResult::within(std::string name, double statistic, double expected,
                                double tolerance, std::string detail) {
    const bool pass = std::abs(statistic - expected) <= tolerance;
    return {std::move(name), statistic, expected, tolerance, pass, std::move(detail)};
}

CheckResult CheckResult::at_least(std::string name, double statistic, double threshold,
                                  double tolerance, std::string detail) {
    const bool pass = statistic >= threshold - tolerance;
    detail = "one-sided: statistic >= expected - tolerance" + (detail.empty() ? "" : "; " + detail);
    return {std::move(name), statistic, threshold, tolerance, pass, std::move(detail)};
}

CheckResult CheckResult::at_most(std::string name, double statistic, double threshold,
                                 double tolerance, std::string detail) {
    const bool pass = statistic <= threshold + tolerance;
    detail = "one-sided: statistic <= expected + tolerance" + (detail.empty() ? "" : "; " + detail);
    return {std::move(name), statistic, threshold, tolerance, pass, std::move(detail)};
}

bool VerificationReport::overall_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

double bridge_truncation_bound(int max_freq) {
    return 2.0 / (kPi * kPi * static_cast<double>(max_freq));
}

double eta_truncation_bound(int max_freq) {
    return 4.0 / (kPi * kPi * static_cast<double>(max_freq));
}

double process_truncation_bound(ProcessKind kind, int max_freq) {
    return kind == ProcessKind::bridge ? bridge_truncation_bound(max_freq)
                                       : eta_truncation_bound(max_freq);
}

std::vector<CheckResult> check_parseval_bridge(int max_freq, std::span<const PointPair> pairs) {
    if (max_freq < 16) {
        throw std::invalid_argument("check_parseval_bridge: truncation must be >= 16");
    }
    const double tol = bridge_truncation_bound(max_freq) + 1e-10;
    const Kernel kernel = Kernel::bridge();
    std::vector<CheckResult> out;
    for (const auto& [s, t] : pairs) {
        const double gram =
            inner_product(bridge_test_function(s, max_freq), bridge_test_function(t, max_freq))
                .real();
        out.push_back(CheckResult::within(
            "parseval_bridge" + point_label(s, t), gram, kernel(s, t), tol,
            format("N=%d; tail bound 2/(pi^2 N)=%.3g + 1e-10 rounding; abs err %.3g", max_freq,
                   bridge_truncation_bound(max_freq), std::abs(gram - kernel(s, t)))));
    }
    return out;
}

std::vector<CheckResult> check_eta_gram(int max_freq, std::span<const PointPair> pairs) {
    const double tol = eta_truncation_bound(max_freq) + 1e-10;
    const Kernel kernel = Kernel::levy(0.0);
    std::vector<CheckResult> out;
    for (const auto& [s, t] : pairs) {
        const double gram =
            inner_product(eta_test_function(s, max_freq), eta_test_function(t, max_freq)).real();
        out.push_back(CheckResult::within(
            "eta_gram" + point_label(s, t), gram, kernel(s, t), tol,
            format("N=%d; expected = levy kernel (o=0) = min(s,t) on [0,1/2]; tail bound "
                   "4/(pi^2 N)=%.3g + 1e-10; abs err %.3g",
                   max_freq, eta_truncation_bound(max_freq), std::abs(gram - kernel(s, t)))));
    }
    return out;
}

CheckResult check_levy_identity(double t, double s, int max_freq) {
    const FourierSeries lhs =
        eta_test_function(t, max_freq) + eta_test_function(antipode(t), max_freq);
    const FourierSeries rhs =
        eta_test_function(s, max_freq) + eta_test_function(antipode(s), max_freq);
    return CheckResult::within("levy_identity" + point_label(t, s),
                               coefficient_residual(lhs - rhs), 0.0, kExactTolerance,
                               format("N=%d; ||(eta_t + eta_t') - (eta_s + eta_s')||", max_freq));
}

CheckResult check_mirror(double s, int max_freq) {
    if (!(s > 0.5 && s < 1.0)) {
        throw std::invalid_argument("check_mirror: s must lie in (1/2, 1)");
    }
    const FourierSeries residual =
        eta_test_function(s, max_freq) - eta_test_function(0.5, max_freq) +
        eta_test_function(s - 0.5, max_freq) - eta_test_function(0.0, max_freq);
    return CheckResult::within(format("mirror(%.6g)", s), coefficient_residual(residual), 0.0,
                               kExactTolerance,
                               format("N=%d; ||eta_s - eta_1/2 + eta_(s-1/2) - eta_0||", max_freq));
}

std::vector<PointPair> random_point_pairs(SeedSpec seed, std::size_t count) {
    std::vector<PointPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(uniform_pair(seed, Stream::identity_points, 0, static_cast<std::uint32_t>(i)));
    }
    return out;
}

std::vector<double> antipodal_grid(std::size_t m) {
    std::vector<double> points(2 * m);
    for (std::size_t j = 0; j < 2 * m; ++j) {
        points[j] = static_cast<double>(j) / static_cast<double>(2 * m);
    }
    return points;
}

CheckResult check_degenerate_spectrum(std::span<const double> points, double tol_ratio) {
    if (points.size() < 4 || points.size() % 2 != 0) {
        throw std::invalid_argument("check_degenerate_spectrum: need 2m points with m >= 2");
    }
    for (double p : points) {
        const double q = antipode(p);
        const bool found = std::any_of(points.begin(), points.end(), [q](double v) {
            return circular_distance(v, q) <= 1e-12;
        });
        if (!found) {
            throw std::invalid_argument("check_degenerate_spectrum: point set is not antipodally symmetric");
        }
    }
    const std::size_t m = points.size() / 2;
    const auto eigenvalues = symmetric_eigenvalues(gram_matrix(Kernel::levy(0.0), points));
    const std::size_t count = count_near_zero(eigenvalues, tol_ratio);
    return CheckResult::at_least(
        format("levy_degenerate_spectrum(2m=%zu)", points.size()), static_cast<double>(count),
        static_cast<double>(m - 1), 0.0,
        format("eigenvalues below %.3g * lambda_max=%.6g; lambda_min=%.3g", tol_ratio,
               eigenvalues.back(), eigenvalues.front()));
}

CheckResult check_degenerate_spectrum(std::size_t m, double tol_ratio) {
    if (m < 2) {
        throw std::invalid_argument("check_degenerate_spectrum: m must be >= 2");
    }
    return check_degenerate_spectrum(antipodal_grid(m), tol_ratio);
}

CheckResult check_no_near_zero_eigenvalues(const Kernel& kernel, std::span<const double> points,
                                           double tol_ratio) {
    const auto eigenvalues = symmetric_eigenvalues(gram_matrix(kernel, points));
    const std::size_t count = count_near_zero(eigenvalues, tol_ratio);
    return CheckResult::within(
        format("%s_near_zero_eigenvalues(m=%zu)", std::string(kernel.name()).c_str(), points.size()),
        static_cast<double>(count), 0.0, kExactTolerance,
        format("threshold %.3g * lambda_max; lambda_min=%.6g lambda_max=%.6g", tol_ratio,
               eigenvalues.front(), eigenvalues.back()));
}

CheckResult check_positive_definite(const Kernel& kernel, std::span<const double> points,
                                    double min_ratio) {
    const auto eigenvalues = symmetric_eigenvalues(gram_matrix(kernel, points));
    const double ratio = eigenvalues.front() / eigenvalues.back();
    CheckResult result = CheckResult::at_least(
        format("%s_positive_definite(m=%zu)", std::string(kernel.name()).c_str(), points.size()),
        ratio, min_ratio, 0.0,
        format("lambda_min / lambda_max; strict: must exceed %.3g", min_ratio));
    result.pass = ratio > min_ratio;
    return result;
}

CheckResult check_antipodal_quadratic_form(double t, double s, double origin) {
    const std::array<double, 4> points{t, antipode(t), s, antipode(s)};
    const std::array<double, 4> weights{1.0, 1.0, -1.0, -1.0};
    Eigen::MatrixXd gram(4, 4);
    const Kernel kernel = Kernel::levy(origin);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            gram(i, j) = kernel(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
        }
    }
    return CheckResult::within("levy_quadratic_form" + point_label(t, s),
                               quadratic_form(gram, weights), 0.0, kExactTolerance,
                               "Var(B(t) + B(t') - B(s) - B(s')) from the levy kernel");
}

std::vector<CheckResult> mc_covariance_check(ProcessKind kind, int max_freq, GridSpec grid,
                                             std::span<const PointPair> pairs,
                                             std::size_t replicates, SeedSpec seed,
                                             std::optional<double> truncation_slack) {
    require_replicates(replicates, "mc_covariance_check");
    const double slack = truncation_slack.value_or(process_truncation_bound(kind, max_freq));
    const Kernel kernel = process_kernel(kind);
    const SampledColumns cols =
        spectral_columns(kind, max_freq, grid, pair_indices(pairs, grid), replicates, seed);

    std::vector<CheckResult> out;
    for (const auto& [s, t] : pairs) {
        const std::size_t i = snap_to_grid(s, grid);
        const std::size_t j = snap_to_grid(t, grid);
        const double gs = grid.at(i);
        const double gt = grid.at(j);
        const double cov = stats::covariance(cols.column(i), cols.column(j));
        const double se =
            stats::gaussian_covariance_se(kernel(gs, gs), kernel(gt, gt), kernel(gs, gt), replicates);
        out.push_back(CheckResult::within(
            std::string(to_string(kind)) + "_mc_cov" + point_label(gs, gt), cov, kernel(gs, gt),
            kStatBand * se + slack,
            format("N=%d M=%zu R=%zu; 4*SE=%.3g + truncation %.3g", max_freq, grid.points,
                   replicates, kStatBand * se, slack)));
    }
    return out;
}

std::vector<CheckResult> oracle_equivalence_check(ProcessKind kind, int max_freq, GridSpec grid,
                                                  std::span<const PointPair> pairs,
                                                  std::size_t replicates, SeedSpec seed,
                                                  std::optional<double> truncation_slack) {
    require_replicates(replicates, "oracle_equivalence_check");
    const double slack = truncation_slack.value_or(process_truncation_bound(kind, max_freq));
    const Kernel kernel = process_kernel(kind);
    const auto indices = pair_indices(pairs, grid);
    const SampledColumns spectral =
        spectral_columns(kind, max_freq, grid, indices, replicates, seed);
    const SampledColumns dense = cholesky_columns(kernel, grid, indices, replicates, seed);

    std::vector<CheckResult> out;
    for (const auto& [s, t] : pairs) {
        const std::size_t i = snap_to_grid(s, grid);
        const std::size_t j = snap_to_grid(t, grid);
        const double gs = grid.at(i);
        const double gt = grid.at(j);
        const double cov_spectral = stats::covariance(spectral.column(i), spectral.column(j));
        const double cov_dense = stats::covariance(dense.column(i), dense.column(j));
        const double se =
            stats::gaussian_covariance_se(kernel(gs, gs), kernel(gt, gt), kernel(gs, gt), replicates);
        out.push_back(CheckResult::within(
            std::string(to_string(kind)) + "_oracle_equivalence" + point_label(gs, gt),
            cov_spectral, cov_dense, 2.0 * kStatBand * se + slack,
            format("spectral (N=%d) vs Cholesky on M=%zu, R=%zu; bands 4*SE each=%.3g + "
                   "truncation %.3g",
                   max_freq, grid.points, replicates, kStatBand * se, slack)));
    }
    return out;
}

CheckResult ks_normality_check(const FourierSeries& xi, int max_freq, std::size_t replicates,
                               SeedSpec seed, std::string name) {
    require_replicates(replicates, "ks_normality_check");
    const double norm = std::sqrt(truncated_norm_sq(xi, max_freq));
    if (!(norm > 0.0)) {
        throw std::invalid_argument("ks_normality_check: test function has zero norm");
    }
    std::vector<double> values = sample_pairings(xi, max_freq, replicates, seed);
    for (double& v : values) {
        v /= norm;
    }
    const double d = stats::ks_statistic_standard_normal(values);
    return CheckResult::within(std::move(name), d, 0.0, stats::ks_critical_value_1pct(replicates),
                               format("KS vs N(0,1) after scaling by ||xi||=%.6g; alpha=0.01 "
                                      "asymptotic critical value 1.63/sqrt(R), R=%zu",
                                      norm, replicates));
}

CheckResult independence_check(const FourierSeries& f, const FourierSeries& g, int max_freq,
                               std::size_t replicates, SeedSpec seed, double orthogonality_tol,
                               std::string name) {
    require_replicates(replicates, "independence_check");
    const double overlap = std::abs(inner_product(f.resized(std::min(f.max_freq(), max_freq)),
                                                  g.resized(std::min(g.max_freq(), max_freq))));
    if (overlap > orthogonality_tol) {
        throw std::invalid_argument(
            format("independence_check: |(f, g)| = %.3g exceeds orthogonality tolerance %.3g",
                   overlap, orthogonality_tol));
    }
    const auto a = sample_pairings(f, max_freq, replicates, seed);
    const auto b = sample_pairings(g, max_freq, replicates, seed);
    const double corr = std::abs(stats::correlation(a, b));
    return CheckResult::within(std::move(name), corr, 0.0,
                               kStatBand / std::sqrt(static_cast<double>(replicates)),
                               format("|sample correlation|; |(f,g)|=%.3g; R=%zu", overlap,
                                      replicates));
}

CheckResult char_functional_check(const FourierSeries& xi, int max_freq, std::size_t replicates,
                                  SeedSpec seed, std::string name) {
    require_replicates(replicates, "char_functional_check");
    const double exact = std::exp(-0.5 * truncated_norm_sq(xi, max_freq));
    const Complex estimate = empirical_char_functional(xi, max_freq, replicates, seed);
    // Reported as Re C_hat vs C; the pass decision uses the complex distance.
    const double tol = kStatBand / std::sqrt(static_cast<double>(replicates));
    return {std::move(name),
            estimate.real(),
            exact,
            tol,
            std::abs(estimate - exact) <= tol,
            format("statistic = Re C_hat; pass iff |C_hat - C| <= tolerance; Im C_hat=%.6g, "
                   "|C_hat - C|=%.6g",
                   estimate.imag(), std::abs(estimate - exact))};
}

CheckResult char_functional_product_check(const FourierSeries& f1, const FourierSeries& f2,
                                          int max_freq, std::size_t replicates, SeedSpec seed) {
    require_replicates(replicates, "char_functional_product_check");
    const Complex joint = empirical_char_functional(f1 + f2, max_freq, replicates, seed);
    const Complex c1 = empirical_char_functional(f1, max_freq, replicates, seed);
    const Complex c2 = empirical_char_functional(f2, max_freq, replicates, seed);
    return CheckResult::within(
        "char_functional_product", std::abs(joint - c1 * c2), 0.0,
        3.0 * kStatBand / std::sqrt(static_cast<double>(replicates)),
        format("|C_hat(f1+f2) - C_hat(f1) C_hat(f2)|; disjoint supports; R=%zu", replicates));
}

CheckResult char_functional_positive_definite_check(std::span<const FourierSeries> family) {
    const auto n = static_cast<Eigen::Index>(family.size());
    Eigen::MatrixXd matrix(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const auto& a = family[static_cast<std::size_t>(j)];
            const auto& b = family[static_cast<std::size_t>(k)];
            matrix(j, k) = std::exp(-0.5 * l2_norm_sq(a - b));
        }
    }
    const auto eigenvalues = symmetric_eigenvalues(matrix);
    return CheckResult::at_least(format("char_functional_positive_definite(n=%zu)", family.size()),
                                 eigenvalues.front() / eigenvalues.back(), 0.0, kExactTolerance,
                                 "lambda_min / lambda_max of [C(xi_j - xi_k)]");
}

CheckResult hs_sum_check(long long n_max, bool two_sided) {
    if (n_max < 1) {
        throw std::invalid_argument("hs_sum_check: N_max must be >= 1");
    }
    const double factor = two_sided ? 2.0 : 1.0;
    const double sum = factor * stats::inverse_square_partial_sum(n_max);
    return CheckResult::within(
        format("hilbert_schmidt_sum(N=%lld%s)", n_max, two_sided ? ",two-sided" : ""), sum,
        factor * kPi * kPi / 6.0, factor * (1.0 / static_cast<double>(n_max) + 1e-12),
        "partial sum of 1/n^2 vs pi^2/6; tail < 1/N_max");
}

CheckResult noise_hs_expectation_check(int max_freq, std::size_t replicates, SeedSpec seed,
                                       std::optional<double> tolerance) {
    require_replicates(replicates, "noise_hs_expectation_check");
    std::vector<double> values(replicates);
    const auto count = static_cast<std::int64_t>(replicates);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < count; ++r) {
        values[static_cast<std::size_t>(r)] =
            noise_hminus1_norm_sq(sample_noise(max_freq, seed, static_cast<std::uint64_t>(r)));
    }
    double fourth = 0.0;
    for (int n = max_freq; n >= 1; --n) {
        const double nn = static_cast<double>(n);
        fourth += 1.0 / (nn * nn * nn * nn);
    }
    // |z_n|^2 ~ Exp(1): Var(sum_{n != 0} |z_n|^2/n^2) = 4 sum 1/n^4.
    const double se = std::sqrt(4.0 * fourth / static_cast<double>(replicates));
    const double tol = tolerance.value_or(kStatBand * se);
    return CheckResult::within(format("noise_hminus1_expectation(N=%d)", max_freq),
                               stats::mean(values),
                               2.0 * stats::inverse_square_partial_sum(max_freq), tol,
                               format("mean of ||x||^2_{H-1} over R=%zu; SE=%.3g", replicates, se));
}

// Suites ------------------------------------------------------------------------

namespace {

constexpr std::array<std::string_view, 8> kSuiteNames{
    "covariance", "normality", "independence", "identity", "charfunc", "degeneracy", "hs", "all"};

const std::array<double, 5> kTestPoints{0.1, 0.25, 0.5, 0.75, 0.9};

std::vector<PointPair> all_pairs(bool with_diagonal) {
    std::vector<PointPair> out;
    for (std::size_t i = 0; i < kTestPoints.size(); ++i) {
        for (std::size_t j = with_diagonal ? i : i + 1; j < kTestPoints.size(); ++j) {
            out.emplace_back(kTestPoints[i], kTestPoints[j]);
        }
    }
    return out;
}

// Pulse coefficients satisfy |c_n| <= 2 amp / (pi |n|), so the truncated inner
// product of disjoint pulses is within 8 amp_f amp_g / (pi^2 N) of zero.
double pulse_overlap_bound(double amp_f, double amp_g, int max_freq) {
    return 8.0 * std::abs(amp_f * amp_g) / (kPi * kPi * static_cast<double>(max_freq)) + 1e-8;
}

std::size_t mc_grid_points(const SuiteConfig& cfg) {
    std::size_t m = std::max(cfg.grid, 2 * static_cast<std::size_t>(cfg.truncation) + 1);
    return (m + 19) / 20 * 20;
}

void append(std::vector<CheckResult>& out, std::vector<CheckResult> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
}

std::vector<CheckResult> covariance_suite(const SuiteConfig& cfg) {
    const int n = cfg.truncation;
    const SeedSpec seed{cfg.seed};
    const auto gram_pairs = all_pairs(true);
    const auto mc_pairs = all_pairs(false);
    std::vector<CheckResult> out;
    append(out, check_parseval_bridge(std::max(n, 16), gram_pairs));
    append(out, check_eta_gram(n, gram_pairs));
    const GridSpec grid(mc_grid_points(cfg));
    append(out, mc_covariance_check(ProcessKind::bridge, n, grid, mc_pairs, cfg.replicates, seed));
    append(out, mc_covariance_check(ProcessKind::levy, n, grid, mc_pairs, cfg.replicates, seed));
    append(out, oracle_equivalence_check(ProcessKind::bridge, std::min(n, 127), GridSpec(256),
                                         mc_pairs, cfg.replicates, seed));
    return out;
}

std::vector<CheckResult> normality_suite(const SuiteConfig& cfg) {
    const int n = cfg.truncation;
    const SeedSpec seed{cfg.seed};
    return {
        ks_normality_check(bridge_test_function(0.5, n), n, cfg.replicates, seed,
                           "ks_normality(bridge t=0.5)"),
        ks_normality_check(FourierSeries::cosine(2), n, cfg.replicates, seed,
                           "ks_normality(psi_2+psi_-2)"),
        ks_normality_check(eta_test_function(0.3, n), n, cfg.replicates, seed,
                           "ks_normality(eta t=0.3)"),
        ks_normality_check(pulse_test_function(0.2, 0.15, 1.0, n), n, cfg.replicates, seed,
                           "ks_normality(pulse [0.2,0.5))"),
    };
}

std::vector<CheckResult> independence_suite(const SuiteConfig& cfg) {
    const int n = cfg.truncation;
    const SeedSpec seed{cfg.seed};
    return {
        independence_check(pulse_test_function(0.0, 0.1, 1.0, n),
                           pulse_test_function(0.5, 0.1, 1.0, n), n, cfg.replicates, seed,
                           pulse_overlap_bound(1.0, 1.0, n), "independence(pulses [0,0.2),[0.5,0.7))"),
        independence_check(pulse_test_function(0.05, 0.05, 2.0, n),
                           pulse_test_function(0.6, 0.15, 1.0, n), n, cfg.replicates, seed,
                           pulse_overlap_bound(2.0, 1.0, n), "independence(pulses [0.05,0.15),[0.6,0.9))"),
        independence_check(FourierSeries::cosine(1), FourierSeries::cosine(2), n, cfg.replicates,
                           seed, 1e-8, "independence(psi_1+psi_-1, psi_2+psi_-2)"),
    };
}

std::vector<CheckResult> identity_suite(const SuiteConfig& cfg) {
    const int n = cfg.truncation;
    const SeedSpec seed{cfg.seed};
    std::vector<CheckResult> out;
    for (const auto& [t, s] : random_point_pairs(seed, 20)) {
        out.push_back(check_levy_identity(t, s, n));
        out.push_back(check_mirror(0.5 + 0.5 * s, n));
        out.push_back(check_antipodal_quadratic_form(t, s));
    }

    // Levy kernel equals min(s,t) on the half-circle.
    double worst = 0.0;
    const Kernel levy = Kernel::levy(0.0);
    for (int i = 0; i <= 50; ++i) {
        for (int j = 0; j <= 50; ++j) {
            const double s = 0.01 * i;
            const double t = 0.01 * j;
            worst = std::max(worst, std::abs(levy(s, t) - std::min(s, t)));
        }
    }
    out.push_back(CheckResult::within("levy_equals_min_on_half_circle", worst, 0.0,
                                      kExactTolerance, "max |K_levy - min| on a 0.01 grid of [0,1/2]^2"));

    // eta_t carries odd frequencies only.
    double even_max = 0.0;
    for (double t : kTestPoints) {
        const FourierSeries eta = eta_test_function(t, n);
        for (int k = -n; k <= n; k += 2) {
            even_max = std::max(even_max, std::abs(eta.coeff(k)));
        }
    }
    CheckResult even = CheckResult::within("eta_even_coefficients_zero", even_max, 0.0,
                                           kExactTolerance, "max |h_k| over even k");
    even.pass = even_max == 0.0;
    out.push_back(std::move(even));
    return out;
}

std::vector<CheckResult> charfunc_suite(const SuiteConfig& cfg) {
    const int n = cfg.truncation;
    const SeedSpec seed{cfg.seed};
    const FourierSeries p1 = pulse_test_function(0.0, 0.1, 1.0, n);
    const FourierSeries p2 = pulse_test_function(0.5, 0.1, 1.0, n);
    const std::vector<FourierSeries> family{
        FourierSeries::zero(n),       FourierSeries::cosine(1).resized(n), bridge_test_function(0.3, n),
        eta_test_function(0.7, n),    p1,                                  2.0 * p2,
    };
    return {
        char_functional_check(FourierSeries::zero(n), n, cfg.replicates, seed,
                              "char_functional(zero)"),
        char_functional_check(FourierSeries::cosine(1), n, cfg.replicates, seed,
                              "char_functional(psi_1+psi_-1)"),
        char_functional_check(bridge_test_function(0.5, n), n, cfg.replicates, seed,
                              "char_functional(bridge t=0.5)"),
        char_functional_check(p1, n, cfg.replicates, seed, "char_functional(pulse [0,0.2))"),
        char_functional_product_check(p1, p2, n, cfg.replicates, seed),
        char_functional_positive_definite_check(family),
    };
}

std::vector<CheckResult> degeneracy_suite(const SuiteConfig& cfg) {
    const std::array<double, 4> quad{0.1, 0.6, 0.3, 0.8};
    const auto grid = antipodal_grid(8);
    const std::vector<double> interior(grid.begin() + 1, grid.end());
    CheckResult levy_not_pd = check_positive_definite(Kernel::levy(0.0), grid, 1e-8);
    levy_not_pd = CheckResult::at_most("levy_not_strictly_positive_definite(m=16)",
                                       levy_not_pd.statistic, cfg.tol_ratio, 0.0,
                                       "lambda_min / lambda_max of the levy Gram on 16 antipodal points");
    return {
        check_degenerate_spectrum(quad, cfg.tol_ratio),
        check_degenerate_spectrum(8, cfg.tol_ratio),
        std::move(levy_not_pd),
        check_no_near_zero_eigenvalues(Kernel::bridge(), quad, cfg.tol_ratio),
        check_no_near_zero_eigenvalues(Kernel::bridge(), interior, cfg.tol_ratio),
        check_positive_definite(Kernel::bridge(), interior, 1e-8),
    };
}

std::vector<CheckResult> hs_suite(const SuiteConfig& cfg) {
    return {
        hs_sum_check(1'000'000),
        hs_sum_check(1'000'000, true),
        noise_hs_expectation_check(cfg.truncation, cfg.replicates, SeedSpec{cfg.seed}),
    };
}

bool is_statistical(std::string_view suite) {
    return suite != "identity" && suite != "degeneracy";
}

}  // namespace

std::span<const std::string_view> suite_names() {
    return kSuiteNames;
}

VerificationReport run_suite(std::string_view suite, const SuiteConfig& config) {
    if (std::find(kSuiteNames.begin(), kSuiteNames.end(), suite) == kSuiteNames.end()) {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    if (config.truncation < 1) {
        throw std::invalid_argument("truncation must be >= 1");
    }
    if (is_statistical(suite)) {
        require_replicates(config.replicates, "verify");
    }
    VerificationReport report{std::string(suite), config, {}};
    const auto run = [&](std::string_view name, auto&& fn) {
        if (suite == name || suite == "all") {
            append(report.checks, fn(config));
        }
    };
    run("covariance", covariance_suite);
    run("normality", normality_suite);
    run("independence", independence_suite);
    run("identity", identity_suite);
    run("charfunc", charfunc_suite);
    run("degeneracy", degeneracy_suite);
    run("hs", hs_suite);
    return report;
}

}  // namespace circle_noise
