#pragma once

#include <cstdint>
#include <vector>

#include "circle_noise/fourier_series.hpp"
#include "circle_noise/random.hpp"

namespace circle_noise {

/// Smallest replicate count accepted by the Monte Carlo estimators.
inline constexpr std::size_t kMinReplicates = 1000;

/// One draw x from the truncated white-noise measure on H_{-1}(S).
///
/// Only z_1..z_N are stored; z_{-n} = conj(z_n) and there is no z_0. For
/// sampled values Re z_n, Im z_n are independent N(0, 1/2), so E|z_n|^2 = 1
/// and Var(pair(f, x)) = ||f||^2.
class NoiseSample {
  public:
    NoiseSample(std::vector<Complex> positive, SeedSpec seed, std::uint64_t replicate)
        : positive_(std::move(positive)), seed_(seed), replicate_(replicate) {}

    int max_freq() const { return static_cast<int>(positive_.size()); }

    /// z_n for 0 < |n| <= N; zero for n = 0 and outside the truncation.
    Complex z(int n) const {
        if (n == 0 || n > max_freq() || -n > max_freq()) {
            return {};
        }
        return n > 0 ? positive_[static_cast<std::size_t>(n - 1)]
                     : std::conj(positive_[static_cast<std::size_t>(-n - 1)]);
    }

    const std::vector<Complex>& positive() const { return positive_; }
    SeedSpec seed() const { return seed_; }
    std::uint64_t replicate() const { return replicate_; }

  private:
    std::vector<Complex> positive_;
    SeedSpec seed_;
    std::uint64_t replicate_;
};

/// Deterministic in (max_freq, seed, replicate). Frequencies are addressed
/// individually, so the sample at N is a prefix of the sample at N' > N.
NoiseSample sample_noise(int max_freq, SeedSpec seed, std::uint64_t replicate);

/// xi(x) = sum_{0<|n|<=min(N_f,N_x)} c_n(xi) conj(z_n). Requires a real-valued
/// zero-mean xi (throws ZeroMeanError / std::invalid_argument otherwise).
double pair(const FourierSeries& xi, const NoiseSample& x);

/// sum_{n != 0} |z_n|^2 / n^2.
double noise_hminus1_norm_sq(const NoiseSample& x);

/// (1/R) sum_r exp(i xi(x_r)) over replicates 0..R-1; R >= kMinReplicates.
Complex empirical_char_functional(const FourierSeries& xi, int max_freq, std::size_t replicates,
                                  SeedSpec seed);

/// Pairings xi(x_r) for r = 0..R-1, computed in parallel, ordered by r.
std::vector<double> sample_pairings(const FourierSeries& xi, int max_freq,
                                    std::size_t replicates, SeedSpec seed);

}  // namespace circle_noise
