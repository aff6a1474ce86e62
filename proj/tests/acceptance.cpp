// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion 5   run one
//
// Exit status is 0 only if every requested criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circle_noise/fourier_series.hpp"
#include "circle_noise/kernels.hpp"
#include "circle_noise/statistics.hpp"
#include "circle_noise/synthesis.hpp"
#include "circle_noise/verify.hpp"
#include "circle_noise/white_noise.hpp"
#include "oracles.hpp"

namespace {

using namespace circle_noise;

const std::vector<double> kTestPoints{0.1, 0.25, 0.5, 0.75, 0.9};
const SeedSpec kSeed{42};
constexpr std::size_t kReps = 20000;

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> notes;

    void require(bool ok, std::string note) {
        pass = pass && ok;
        notes.push_back((ok ? "ok   " : "FAIL ") + std::move(note));
    }
    void info(std::string note) { notes.push_back("     " + std::move(note)); }
};

std::string fmt(const char* pattern, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// Unordered pairs with repetition: 15 from five points.
std::vector<PointPair> all_pairs() {
    std::vector<PointPair> out;
    for (std::size_t i = 0; i < kTestPoints.size(); ++i) {
        for (std::size_t j = i; j < kTestPoints.size(); ++j) {
            out.emplace_back(kTestPoints[i], kTestPoints[j]);
        }
    }
    return out;
}

// The 10 distinct pairs.
std::vector<PointPair> distinct_pairs() {
    std::vector<PointPair> out;
    for (std::size_t i = 0; i < kTestPoints.size(); ++i) {
        for (std::size_t j = i + 1; j < kTestPoints.size(); ++j) {
            out.emplace_back(kTestPoints[i], kTestPoints[j]);
        }
    }
    return out;
}

Outcome criterion_1() {
    Outcome o;
    const int n = 4096;
    double worst = 0.0;
    for (const auto& [s, t] : all_pairs()) {
        const double gram =
            inner_product(bridge_test_function(s, n), bridge_test_function(t, n)).real();
        const double err = std::fabs(gram - (std::min(s, t) - s * t));
        worst = std::max(worst, err);
        o.require(err <= 1e-3, fmt("(%.2f,%.2f) gram=%.12f err=%.3e", s, t, gram, err));
    }
    o.summary = fmt("bridge Parseval Gram, N=4096, 15 pairs: max err %.3e <= 1e-3", worst);
    return o;
}

Outcome criterion_2() {
    Outcome o;
    const int n = 4095;
    double worst = 0.0;
    double worst_levy = 0.0;
    for (const auto& [s, t] : all_pairs()) {
        const double gram = inner_product(eta_test_function(s, n), eta_test_function(t, n)).real();
        const double err = std::fabs(gram - std::min(s, t));
        const double err_levy = std::fabs(gram - oracle::levy_covariance(s, t));
        worst = std::max(worst, err);
        worst_levy = std::max(worst_levy, err_levy);
        o.require(err <= 1e-3, fmt("(%.2f,%.2f) gram=%.12f min=%.2f err=%.3e (vs Levy kernel %.3e)",
                                   s, t, gram, std::min(s, t), err, err_levy));
    }
    const double half = l2_norm_sq(eta_test_function(0.5, n));
    o.require(std::fabs(half - 0.5) <= 1e-3, fmt("(eta_1/2, eta_1/2) = %.12f", half));
    o.info(fmt("diagnostic: max |gram - Levy kernel| over the same pairs = %.3e", worst_levy));
    o.summary = fmt("eta Gram vs min(s,t), N=4095, 15 pairs: max err %.3e (limit 1e-3)", worst);
    return o;
}

Outcome criterion_3() {
    Outcome o;
    const int n = 1001;
    double worst_identity = 0.0;
    double worst_mirror = 0.0;
    for (const auto& [t, s] : random_point_pairs(kSeed, 20)) {
        const double id = check_levy_identity(t, s, n).statistic;
        // Map s onto (1/2, 1) for the mirror relation.
        const double mirror_s = 0.5 + 0.5 * s + (s == 0.0 ? 0.25 : 0.0);
        const double mirror = check_mirror(mirror_s, n).statistic;
        worst_identity = std::max(worst_identity, id);
        worst_mirror = std::max(worst_mirror, mirror);
        o.require(id <= 1e-12 && mirror <= 1e-12,
                  fmt("t=%.6f s=%.6f identity=%.3e mirror(%.6f)=%.3e", t, s, id, mirror_s, mirror));
    }
    o.summary = fmt("antipodal identity max %.3e, mirror max %.3e, 20 pairs, N=1001 (<= 1e-12)",
                    worst_identity, worst_mirror);
    return o;
}

Outcome criterion_4() {
    Outcome o;
    const auto grid = antipodal_grid(8);
    const auto levy_ev = symmetric_eigenvalues(gram_matrix(Kernel::levy(), grid));
    const std::size_t near_zero = count_near_zero(levy_ev, 1e-10);
    o.require(near_zero >= 7, fmt("levy 16-point Gram: %zu eigenvalues < 1e-10 lambda_max", near_zero));

    double worst_form = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            const std::vector<double> pts{grid[i], grid[i + 8], grid[j], grid[j + 8]};
            const std::vector<double> v{1.0, 1.0, -1.0, -1.0};
            worst_form = std::max(
                worst_form, std::fabs(quadratic_form(gram_matrix(Kernel::levy(), pts), v)));
        }
    }
    for (const auto& [t, s] : random_point_pairs(SeedSpec{7}, 20)) {
        worst_form = std::max(worst_form, std::fabs(check_antipodal_quadratic_form(t, s).statistic));
    }
    o.require(worst_form <= 1e-12,
              fmt("(1,1,-1,-1) quadratic form, 28 grid + 20 random quadruples: max %.3e", worst_form));

    std::vector<double> no_origin(grid.begin() + 1, grid.end());
    const auto bridge_ev = symmetric_eigenvalues(gram_matrix(Kernel::bridge(), no_origin));
    const double ratio = bridge_ev.front() / bridge_ev.back();
    o.require(ratio > 1e-8, fmt("bridge Gram on grid minus {0}: lambda_min/lambda_max = %.3e", ratio));
    o.summary = fmt("levy near-zero eigenvalues %zu (>= 7), bridge lambda ratio %.3e (> 1e-8)",
                    near_zero, ratio);
    return o;
}

Outcome criterion_5() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const int n = 1024;
    const double slack = 2.5e-5;

    // (a) grid of 2060 points contains all five test points exactly
    const GridSpec grid(2060);
    const auto ens = synthesize_ensemble(ProcessKind::bridge, n, grid, kReps, kSeed);
    const Kernel bridge = Kernel::bridge();
    bool a_ok = true;
    for (const auto& [s, t] : distinct_pairs()) {
        const auto js = static_cast<std::size_t>(std::lround(s * 2060.0));
        const auto jt = static_cast<std::size_t>(std::lround(t * 2060.0));
        std::vector<double> xs(kReps);
        std::vector<double> xt(kReps);
        for (std::size_t r = 0; r < kReps; ++r) {
            xs[r] = ens.at(r, js);
            xt[r] = ens.at(r, jt);
        }
        const double cov = stats::covariance(xs, xt);
        const double se = stats::gaussian_covariance_se(bridge(s, s), bridge(t, t), bridge(s, t), kReps);
        const double err = std::fabs(cov - bridge(s, t));
        const bool ok = err <= 4.0 * se + slack;
        a_ok = a_ok && ok;
        o.require(ok, fmt("(a) cov(%.2f,%.2f)=%.6f expected %.6f err=%.3e tol=%.3e", s, t, cov,
                          bridge(s, t), err, 4.0 * se + slack));
    }

    // (b) standardized pairings vs N(0,1)
    const double ks_limit = 1.63 / std::sqrt(static_cast<double>(kReps));
    const std::vector<std::pair<const char*, FourierSeries>> ks_functions{
        {"bridge t=0.5", bridge_test_function(0.5, n)},
        {"psi_2+psi_-2", FourierSeries::cosine(2)},
        {"eta t=0.3", eta_test_function(0.3, n)},
    };
    for (const auto& [label, f] : ks_functions) {
        auto x = sample_pairings(f, n, kReps, kSeed);
        const double sd = std::sqrt(l2_norm_sq(f.resized(n)));
        for (double& v : x) {
            v /= sd;
        }
        const double ks = stats::ks_statistic_standard_normal(x);
        o.require(ks <= ks_limit, fmt("(b) KS %s = %.5f <= %.5f", label, ks, ks_limit));
    }

    // (c) disjoint-support pulses
    const double corr_limit = 4.0 / std::sqrt(static_cast<double>(kReps));
    const auto p1 = pulse_test_function(0.0, 0.1, 1.0, n);
    const auto p2 = pulse_test_function(0.5, 0.1, 1.0, n);
    const double corr = stats::correlation(sample_pairings(p1, n, kReps, kSeed),
                                           sample_pairings(p2, n, kReps, kSeed));
    o.require(std::fabs(corr) <= corr_limit,
              fmt("(c) corr(pulse[0,0.2), pulse[0.5,0.7)) = %.5f, |.| <= %.5f", corr, corr_limit));

    // (d) characteristic functional
    const std::vector<std::pair<const char*, FourierSeries>> cf_functions{
        {"psi_1+psi_-1", FourierSeries::cosine(1)},
        {"bridge t=0.5", bridge_test_function(0.5, n)},
        {"pulse [0,0.2)", p1},
    };
    for (const auto& [label, f] : cf_functions) {
        const Complex c_hat = empirical_char_functional(f, n, kReps, kSeed);
        const double exact = std::exp(-0.5 * l2_norm_sq(f.resized(n)));
        const double err = std::abs(c_hat - exact);
        o.require(err <= corr_limit, fmt("(d) C_hat(%s) = %.5f%+.5fi vs %.5f, err %.3e <= %.5f",
                                         label, c_hat.real(), c_hat.imag(), exact, err, corr_limit));
    }

    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(seconds <= 300.0, fmt("runtime %.1f s <= 300 s", seconds));
    o.summary = fmt("measure-level checks at N=1024, R=20000, seed 42 (%.1f s)", seconds);
    return o;
}

Outcome criterion_6() {
    Outcome o;
    const double sum = stats::inverse_square_partial_sum(1000000);
    o.require(std::fabs(sum - 1.644933) <= 1e-6,
              fmt("sum_{n<=1e6} 1/n^2 = %.10f (1.644933 +- 1e-6)", sum));
    const int n = 1024;
    const double expected = 2.0 * oracle::inverse_square_sum(n);
    std::vector<double> norms(kReps);
    for (std::size_t r = 0; r < kReps; ++r) {
        norms[r] = noise_hminus1_norm_sq(sample_noise(n, kSeed, r));
    }
    const double mean = stats::mean(norms);
    const double se = std::sqrt(stats::variance(norms) / kReps);
    o.require(std::fabs(mean - expected) <= 0.02,
              fmt("E||x||^2_{H-1} = %.6f vs %.8f, err %.4f <= 0.02", mean, expected,
                  std::fabs(mean - expected)));
    o.info(fmt("empirical SE of the mean = %.4f", se));
    o.summary = fmt("Hilbert-Schmidt sum %.8f, noise H-1 mean %.5f", sum, mean);
    return o;
}

Outcome criterion_7() {
    Outcome o;
    // FFT synthesis on M = 256 points needs N <= 127.
    const int n = 127;
    const GridSpec grid(256);
    const auto results = oracle_equivalence_check(ProcessKind::bridge, n, grid, distinct_pairs(),
                                                  kReps, kSeed, 2.5e-5);
    double worst = 0.0;
    for (const auto& r : results) {
        worst = std::max(worst, std::fabs(r.statistic - r.expected) / r.tolerance);
        o.require(r.pass, fmt("%s |diff|=%.3e tol=%.3e", r.name.c_str(),
                              std::fabs(r.statistic - r.expected), r.tolerance));
    }
    o.summary = fmt("Cholesky vs FFT bridge covariances, M=256, N=127, R=20000: worst %.2f of tol",
                    worst);
    return o;
}

Outcome criterion_8() {
    Outcome o;
    const std::vector<std::pair<int, std::size_t>> sizes{
        {8, 32}, {64, 256}, {63, 128}, {512, 2048}, {1000, 2001}, {4096, 16384}};
    double speedup_big = 0.0;
    for (const auto& [n, m] : sizes) {
        for (ProcessKind kind : {ProcessKind::bridge, ProcessKind::levy}) {
            const NoiseSample x = sample_noise(n, kSeed, 0);
            const GridSpec grid(m);
            auto t0 = std::chrono::steady_clock::now();
            const auto naive = synthesize_path_naive(kind, x, grid);
            auto t1 = std::chrono::steady_clock::now();
            const auto fast = synthesize_path_fft(kind, x, grid);
            auto t2 = std::chrono::steady_clock::now();
            double dev = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                dev = std::max(dev, std::fabs(naive[j] - fast[j]));
            }
            const double naive_s = std::chrono::duration<double>(t1 - t0).count();
            const double fft_s = std::max(std::chrono::duration<double>(t2 - t1).count(), 1e-9);
            if (n == 4096 && kind == ProcessKind::bridge) {
                speedup_big = naive_s / fft_s;
            }
            o.require(dev <= 1e-9, fmt("%s N=%d M=%zu max dev %.3e, naive %.4f s, fft %.6f s",
                                       std::string(to_string(kind)).c_str(), n, m, dev, naive_s,
                                       fft_s));
        }
    }
    o.require(speedup_big > 1.0, fmt("speedup at N=4096, M=16384: %.1fx", speedup_big));
    o.summary = fmt("FFT vs naive within 1e-9 at 12 configurations, speedup %.1fx", speedup_big);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    bool verbose = false;
    app.add_option("--criterion", only, "run a single criterion (1-8)")->check(CLI::Range(1, 8));
    app.add_flag("-v,--verbose", verbose, "print every sub-check");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3,
                                                         criterion_4, criterion_5, criterion_6,
                                                         criterion_7, criterion_8};
    bool all_pass = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        if (only != 0 && static_cast<std::size_t>(only) != k + 1) {
            continue;
        }
        const Outcome o = criteria[k]();
        all_pass = all_pass && o.pass;
        std::printf("%s criterion %zu: %s\n", o.pass ? "PASS" : "FAIL", k + 1, o.summary.c_str());
        for (const auto& note : o.notes) {
            if (verbose || only != 0 || note.rfind("FAIL", 0) == 0) {
                std::printf("    %s\n", note.c_str());
            }
        }
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
