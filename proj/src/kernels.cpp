#include "circle_noise/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace circle_noise {

double circular_distance(double s, double t) {
    const double d = std::abs(s - t);
    return std::min(d, 1.0 - d);
}

Kernel Kernel::levy(double origin) {
    if (!(origin >= 0.0 && origin < 1.0)) {
        throw std::invalid_argument("levy kernel origin must lie in [0, 1)");
    }
    return Kernel(Kind::levy, origin);
}

Kernel Kernel::parse(std::string_view name) {
    if (name == "levy") {
        return levy();
    }
    if (name == "bridge") {
        return bridge();
    }
    if (name == "min") {
        return min();
    }
    throw std::invalid_argument("unknown kernel '" + std::string(name) +
                                "' (expected levy, bridge or min)");
}

std::string_view Kernel::name() const {
    switch (kind_) {
        case Kind::levy:
            return "levy";
        case Kind::bridge:
            return "bridge";
        case Kind::min:
            return "min";
    }
    return "?";
}

double Kernel::operator()(double s, double t) const {
    switch (kind_) {
        case Kind::levy:
            return 0.5 * (circular_distance(origin_, s) + circular_distance(origin_, t) -
                          circular_distance(s, t));
        case Kind::bridge:
            return std::min(s, t) - s * t;
        case Kind::min:
            return std::min(s, t);
    }
    return 0.0;
}

Eigen::MatrixXd gram_matrix(const Kernel& kernel, std::span<const double> points) {
    std::vector<double> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("gram_matrix: duplicate points");
    }
    const auto m = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXd gram(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            const double k = kernel(points[static_cast<std::size_t>(i)],
                                    points[static_cast<std::size_t>(j)]);
            gram(i, j) = k;
            gram(j, i) = k;
        }
    }
    return gram;
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& gram) {
    if (gram.rows() == 0) {
        return {};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symmetric eigensolver did not converge");
    }
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::size_t count_near_zero(std::span<const double> ascending, double tol_ratio) {
    if (ascending.empty()) {
        return 0;
    }
    const double threshold = tol_ratio * ascending.back();
    return static_cast<std::size_t>(
        std::count_if(ascending.begin(), ascending.end(), [threshold](double v) { return v < threshold; }));
}

double quadratic_form(const Eigen::MatrixXd& gram, std::span<const double> weights) {
    if (static_cast<Eigen::Index>(weights.size()) != gram.rows()) {
        throw std::invalid_argument("quadratic_form: weight/matrix size mismatch");
    }
    const Eigen::Map<const Eigen::VectorXd> v(weights.data(), gram.rows());
    return v.dot(gram * v);
}

}  // namespace circle_noise
