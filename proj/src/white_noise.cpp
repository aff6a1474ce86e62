#include "circle_noise/white_noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace circle_noise {

NoiseSample sample_noise(int max_freq, SeedSpec seed, std::uint64_t replicate) {
    if (max_freq < 1) {
        throw std::invalid_argument("sample_noise: truncation must be >= 1");
    }
    const double scale = std::numbers::sqrt2 / 2.0;  // N(0, 1/2) per component
    std::vector<Complex> positive(static_cast<std::size_t>(max_freq));
    for (int n = 1; n <= max_freq; ++n) {
        const auto [re, im] =
            standard_normal_pair(seed, Stream::noise, replicate, static_cast<std::uint32_t>(n));
        positive[static_cast<std::size_t>(n - 1)] = {scale * re, scale * im};
    }
    return {std::move(positive), seed, replicate};
}

double pair(const FourierSeries& xi, const NoiseSample& x) {
    if (!xi.zero_mean()) {
        throw ZeroMeanError("pair: test function has c_0 != 0, outside the dual pairing");
    }
    if (!xi.real_valued()) {
        throw std::invalid_argument("pair: test function must be real-valued");
    }
    // Terms n and -n are complex conjugates, so each pair contributes 2 Re(.)
    // and the imaginary part vanishes identically.
    const int common = std::min(xi.max_freq(), x.max_freq());
    double sum = 0.0;
    for (int n = 1; n <= common; ++n) {
        sum += 2.0 * (xi.coeff(n) * std::conj(x.z(n))).real();
    }
    return sum;
}

double noise_hminus1_norm_sq(const NoiseSample& x) {
    double sum = 0.0;
    for (int n = x.max_freq(); n >= 1; --n) {
        const double nn = static_cast<double>(n);
        sum += 2.0 * std::norm(x.z(n)) / (nn * nn);
    }
    return sum;
}

std::vector<double> sample_pairings(const FourierSeries& xi, int max_freq,
                                    std::size_t replicates, SeedSpec seed) {
    std::vector<double> out(replicates);
    const auto count = static_cast<std::int64_t>(replicates);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < count; ++r) {
        out[static_cast<std::size_t>(r)] =
            pair(xi, sample_noise(max_freq, seed, static_cast<std::uint64_t>(r)));
    }
    return out;
}

Complex empirical_char_functional(const FourierSeries& xi, int max_freq, std::size_t replicates,
                                  SeedSpec seed) {
    if (replicates < kMinReplicates) {
        throw std::invalid_argument("empirical_char_functional: need at least " +
                                    std::to_string(kMinReplicates) + " replicates");
    }
    const std::vector<double> values = sample_pairings(xi, max_freq, replicates, seed);
    Complex sum{};
    for (double v : values) {
        sum += Complex(std::cos(v), std::sin(v));
    }
    return sum / static_cast<double>(replicates);
}

}  // namespace circle_noise
