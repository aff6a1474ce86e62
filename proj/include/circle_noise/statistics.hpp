#pragma once

#include <span>

namespace circle_noise::stats {

double mean(std::span<const double> x);

/// Unbiased sample covariance (divisor n - 1).
double covariance(std::span<const double> x, std::span<const double> y);

double variance(std::span<const double> x);

/// Pearson correlation; 0 if either sample is constant.
double correlation(std::span<const double> x, std::span<const double> y);

double standard_normal_cdf(double x);

/// Two-sided Kolmogorov-Smirnov statistic sup |F_n(x) - Phi(x)| against N(0, 1).
double ks_statistic_standard_normal(std::span<const double> sample);

/// Asymptotic critical value of the KS statistic at alpha = 0.01.
double ks_critical_value_1pct(std::size_t n);

/// Standard error of the sample covariance of a bivariate Gaussian with
/// covariances k_ss, k_tt, k_st: sqrt((k_ss k_tt + k_st^2) / R).
double gaussian_covariance_se(double k_ss, double k_tt, double k_st, std::size_t replicates);

/// sum_{n=1}^{N} 1/n^2, accumulated smallest term first.
double inverse_square_partial_sum(long long n_max);

}  // namespace circle_noise::stats
