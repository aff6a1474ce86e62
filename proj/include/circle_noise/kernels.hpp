#pragma once

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace circle_noise {

/// Shorter-arc distance on R/Z: min(|s - t|, 1 - |s - t|), in [0, 1/2].
double circular_distance(double s, double t);

/// Closed-form covariance functions on the circle.
///
///   levy:   (r(o,s) + r(o,t) - r(s,t)) / 2, Levy's circular Brownian motion
///   bridge: min(s,t) - s t
///   min:    min(s,t)
class Kernel {
  public:
    enum class Kind { levy, bridge, min };

    static Kernel levy(double origin = 0.0);
    static Kernel bridge() { return Kernel(Kind::bridge, 0.0); }
    static Kernel min() { return Kernel(Kind::min, 0.0); }

    /// "levy", "bridge" or "min"; throws std::invalid_argument otherwise.
    static Kernel parse(std::string_view name);

    Kind kind() const { return kind_; }
    double origin() const { return origin_; }
    std::string_view name() const;

    double operator()(double s, double t) const;

  private:
    Kernel(Kind kind, double origin) : kind_(kind), origin_(origin) {}

    Kind kind_;
    double origin_;
};

/// G_ij = K(p_i, p_j). Throws std::invalid_argument on duplicate points.
Eigen::MatrixXd gram_matrix(const Kernel& kernel, std::span<const double> points);

/// Eigenvalues of a symmetric matrix, ascending.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& gram);

/// Count of eigenvalues below tol_ratio * max eigenvalue (ascending input).
std::size_t count_near_zero(std::span<const double> ascending, double tol_ratio);

/// v^T G v.
double quadratic_form(const Eigen::MatrixXd& gram, std::span<const double> weights);

}  // namespace circle_noise
