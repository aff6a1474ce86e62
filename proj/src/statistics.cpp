#include "circle_noise/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace circle_noise::stats {

double mean(std::span<const double> x) {
    if (x.empty()) {
        throw std::invalid_argument("mean of an empty sample");
    }
    double sum = 0.0;
    for (double v : x) {
        sum += v;
    }
    return sum / static_cast<double>(x.size());
}

double covariance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("covariance needs two samples of equal size >= 2");
    }
    const double mx = mean(x);
    const double my = mean(y);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += (x[i] - mx) * (y[i] - my);
    }
    return sum / static_cast<double>(x.size() - 1);
}

double variance(std::span<const double> x) {
    return covariance(x, x);
}

double correlation(std::span<const double> x, std::span<const double> y) {
    const double vx = variance(x);
    const double vy = variance(y);
    if (vx <= 0.0 || vy <= 0.0) {
        return 0.0;
    }
    return covariance(x, y) / std::sqrt(vx * vy);
}

double standard_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double ks_statistic_standard_normal(std::span<const double> sample) {
    if (sample.empty()) {
        throw std::invalid_argument("KS statistic of an empty sample");
    }
    std::vector<double> sorted(sample.begin(), sample.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double cdf = standard_normal_cdf(sorted[i]);
        const double above = static_cast<double>(i + 1) / n - cdf;
        const double below = cdf - static_cast<double>(i) / n;
        d = std::max({d, above, below});
    }
    return d;
}

double ks_critical_value_1pct(std::size_t n) {
    return 1.63 / std::sqrt(static_cast<double>(n));
}

double gaussian_covariance_se(double k_ss, double k_tt, double k_st, std::size_t replicates) {
    return std::sqrt((k_ss * k_tt + k_st * k_st) / static_cast<double>(replicates));
}

double inverse_square_partial_sum(long long n_max) {
    double sum = 0.0;
    for (long long n = n_max; n >= 1; --n) {
        const double nn = static_cast<double>(n);
        sum += 1.0 / (nn * nn);
    }
    return sum;
}

}  // namespace circle_noise::stats
