#include <gtest/gtest.h>

#include <omp.h>

#include <cmath>

#include "circle_noise/statistics.hpp"
#include "circle_noise/synthesis.hpp"
#include "oracles.hpp"

namespace circle_noise {
namespace {

const SeedSpec kSeed{42};

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::fabs(a[i] - b[i]));
    }
    return d;
}

TEST(ProcessKind, ParseAndNames) {
    EXPECT_EQ(parse_process_kind("bridge"), ProcessKind::bridge);
    EXPECT_EQ(parse_process_kind("levy"), ProcessKind::levy);
    EXPECT_EQ(to_string(ProcessKind::levy), "levy");
    EXPECT_THROW(parse_process_kind("white-noise"), std::invalid_argument);
    EXPECT_THROW(parse_process_kind("brownian"), std::invalid_argument);
}

TEST(GridSpec, Values) {
    const GridSpec g(4);
    EXPECT_EQ(g.values(), (std::vector<double>{0.0, 0.25, 0.5, 0.75}));
    EXPECT_THROW(GridSpec(1), std::invalid_argument);
}

TEST(NaiveSynthesis, MatchesPairingPerPoint) {
    const int n_max = 32;
    const auto x = sample_noise(n_max, kSeed, 2);
    const GridSpec grid(40);
    for (ProcessKind kind : {ProcessKind::bridge, ProcessKind::levy}) {
        const auto path = synthesize_path_naive(kind, x, grid);
        EXPECT_EQ(path[0], 0.0);
        for (std::size_t j = 0; j < grid.points; ++j) {
            EXPECT_NEAR(path[j], pair(process_test_function(kind, grid.at(j), n_max), x), 1e-13);
        }
    }
}

TEST(FftSynthesis, AgreesWithNaive) {
    for (ProcessKind kind : {ProcessKind::bridge, ProcessKind::levy}) {
        for (auto [n_max, m] : {std::pair{64, std::size_t{256}}, std::pair{63, std::size_t{128}},
                                std::pair{1, std::size_t{3}}, std::pair{500, std::size_t{1001}}}) {
            const auto x = sample_noise(n_max, kSeed, 7);
            const GridSpec grid(m);
            EXPECT_LE(max_abs_diff(synthesize_path_fft(kind, x, grid),
                                   synthesize_path_naive(kind, x, grid)),
                      1e-9)
                << to_string(kind) << " N=" << n_max << " M=" << m;
        }
    }
}

TEST(FftSynthesis, AliasingRejected) {
    const auto x = sample_noise(64, kSeed, 0);
    EXPECT_THROW(synthesize_path_fft(ProcessKind::bridge, x, GridSpec(128)), AliasingError);
    EXPECT_NO_THROW(synthesize_path_fft(ProcessKind::bridge, x, GridSpec(129)));
}

TEST(FftSynthesis, ImaginaryResidueIsSmallAndOriginPinned) {
    const GridSpec grid(256);
    const FftSynthesizer synth(grid);
    for (ProcessKind kind : {ProcessKind::bridge, ProcessKind::levy}) {
        for (std::uint64_t r = 0; r < 10; ++r) {
            const auto out = synth.synthesize(kind, sample_noise(64, kSeed, r));
            EXPECT_LE(out.max_imag_residue, FftSynthesizer::kMaxImagResidue);
            EXPECT_EQ(out.values[0], 0.0);
        }
    }
}

TEST(FftSynthesis, LevyMirrorOnSampledPaths) {
    // X(s) - X(1/2) + X(s - 1/2) = 0 for s in (1/2, 1), on a grid that contains both.
    const GridSpec grid(512);
    for (std::uint64_t r = 0; r < 5; ++r) {
        const auto path = synthesize_path_fft(ProcessKind::levy, sample_noise(255, kSeed, r), grid);
        for (std::size_t j = 257; j < 512; ++j) {
            EXPECT_NEAR(path[j] - path[256] + path[j - 256], 0.0, 1e-12);
        }
    }
}

TEST(Ensemble, DeterministicAcrossThreadCounts) {
    const GridSpec grid(64);
    omp_set_num_threads(1);
    const auto one = synthesize_ensemble(ProcessKind::bridge, 16, grid, 50, kSeed);
    omp_set_num_threads(4);
    const auto four = synthesize_ensemble(ProcessKind::bridge, 16, grid, 50, kSeed);
    EXPECT_EQ(one.values, four.values);
    const auto naive = synthesize_ensemble(ProcessKind::bridge, 16, grid, 50, kSeed,
                                           SynthesisMethod::naive);
    EXPECT_LE(max_abs_diff(one.values, naive.values), 1e-9);
    EXPECT_EQ(one.replicates, 50u);
    EXPECT_EQ(one.path(3).size(), 64u);
    EXPECT_EQ(one.at(3, 5), one.values[3 * 64 + 5]);
}

TEST(Ensemble, BridgeVarianceProfile) {
    const int n_max = 1024;
    const std::size_t reps = 20000;
    const GridSpec grid(4096);
    const auto ens = synthesize_ensemble(ProcessKind::bridge, n_max, grid, reps, kSeed);
    for (std::size_t j : {std::size_t{0}, std::size_t{1024}, std::size_t{2048}, std::size_t{4095}}) {
        double sq = 0.0;
        for (std::size_t r = 0; r < reps; ++r) {
            sq += ens.at(r, j) * ens.at(r, j);
        }
        const double t = grid.at(j);
        const double k = t * (1.0 - t);
        if (j == 0) {
            EXPECT_EQ(sq, 0.0);
            continue;
        }
        EXPECT_NEAR(sq / reps, k,
                    4.0 * k * std::sqrt(2.0 / reps) + 2.0 / (oracle::kPi * oracle::kPi * n_max));
    }
}

TEST(Cholesky, BridgePinnedAtOrigin) {
    const CholeskySampler sampler(Kernel::bridge(), GridSpec(32));
    for (std::uint64_t r = 0; r < 20; ++r) {
        EXPECT_LE(std::fabs(sampler.sample(kSeed, r)[0]), 1e-6);
    }
}

TEST(Cholesky, LevyAntipodalSumsAgree) {
    // X(t) + X(t + 1/2) does not depend on t.
    const CholeskySampler sampler(Kernel::levy(), GridSpec(16));
    for (std::uint64_t r = 0; r < 20; ++r) {
        const auto path = sampler.sample(kSeed, r);
        const double ref = path[0] + path[8];
        for (std::size_t j = 1; j < 8; ++j) {
            EXPECT_NEAR(path[j] + path[j + 8], ref, 1e-5);
        }
    }
}

TEST(Cholesky, EmpiricalCovariance) {
    const std::vector<double> pts{0.25, 0.5};
    const CholeskySampler sampler(Kernel::bridge(), pts);
    const std::size_t reps = 20000;
    std::vector<double> a(reps);
    std::vector<double> b(reps);
    for (std::size_t r = 0; r < reps; ++r) {
        const auto v = sampler.sample(kSeed, r);
        a[r] = v[0];
        b[r] = v[1];
    }
    const double se = stats::gaussian_covariance_se(0.1875, 0.25, 0.125, reps);
    EXPECT_NEAR(stats::covariance(a, b), 0.125, 4.0 * se);
}

TEST(Cholesky, DeterministicPerReplicate) {
    const CholeskySampler sampler(Kernel::levy(), GridSpec(8));
    EXPECT_EQ(sampler.sample(kSeed, 11), cholesky_sample(Kernel::levy(), GridSpec(8), kSeed, 11));
    EXPECT_NE(sampler.sample(kSeed, 11), sampler.sample(kSeed, 12));
}

TEST(Cholesky, IndefiniteGramFails) {
    // min(s, t) at a negative point has a negative diagonal entry.
    const std::vector<double> pts{-1.0};
    try {
        const CholeskySampler sampler(Kernel::min(), pts);
        FAIL() << "expected FactorizationError";
    } catch (const FactorizationError& e) {
        EXPECT_NEAR(e.min_eigenvalue(), -1.0, 1e-12);
    }
}

TEST(Cholesky, ZeroGramGivesZeroPath) {
    const std::vector<double> pts{0.0};
    const CholeskySampler sampler(Kernel::bridge(), pts);
    EXPECT_EQ(sampler.sample(kSeed, 0), std::vector<double>{0.0});
}

}  // namespace
}  // namespace circle_noise
