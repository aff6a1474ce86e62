#include "circle_noise/fourier_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

namespace circle_noise {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_max_freq(int max_freq) {
    if (max_freq < 0) {
        throw std::invalid_argument("max_freq must be nonnegative, got " + std::to_string(max_freq));
    }
}

void require_unit_point(double t, const char* what) {
    if (!(t >= 0.0 && t < 1.0)) {
        throw std::invalid_argument(std::string(what) + ": point must lie in [0, 1), got " +
                                    std::to_string(t));
    }
}

// Fills c_{-n} = conj(c_n) for n = 1..N from a generator of the positive side.
template <typename Generator>
std::vector<Complex> hermitian_coefficients(int max_freq, Complex c0, Generator positive) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(2 * max_freq + 1));
    const auto mid = static_cast<std::size_t>(max_freq);
    coeffs[mid] = c0;
    for (int n = 1; n <= max_freq; ++n) {
        const Complex c = positive(n);
        coeffs[mid + static_cast<std::size_t>(n)] = c;
        coeffs[mid - static_cast<std::size_t>(n)] = std::conj(c);
    }
    return coeffs;
}

bool is_hermitian(std::span<const Complex> coeffs) {
    const std::size_t mid = coeffs.size() / 2;
    if (coeffs[mid].imag() != 0.0) {
        return false;
    }
    for (std::size_t n = 1; n <= mid; ++n) {
        if (coeffs[mid - n] != std::conj(coeffs[mid + n])) {
            return false;
        }
    }
    return true;
}

// (e^{-i 2 pi n a} - e^{-i 2 pi n b}) / (i 2 pi n), the n-th coefficient of 1_[a,b).
Complex indicator_coefficient(int n, double a, double b) {
    const double na = static_cast<double>(n) * a;
    const double nb = static_cast<double>(n) * b;
    return (std::conj(unit_phase(na)) - std::conj(unit_phase(nb))) /
           Complex(0.0, kTwoPi * static_cast<double>(n));
}

}  // namespace

Complex unit_phase(double x) {
    const double frac = x - std::floor(x);
    const double angle = kTwoPi * frac;
    return {std::cos(angle), std::sin(angle)};
}

FourierSeries FourierSeries::zero(int max_freq) {
    require_max_freq(max_freq);
    return {max_freq, std::vector<Complex>(static_cast<std::size_t>(2 * max_freq + 1)), true};
}

FourierSeries FourierSeries::from_coefficients(std::vector<Complex> two_sided, bool real_valued) {
    if (two_sided.size() % 2 == 0) {
        throw std::invalid_argument("two-sided coefficient vector must have odd length 2N+1");
    }
    for (const Complex& c : two_sided) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("Fourier coefficients must be finite");
        }
    }
    if (real_valued && !is_hermitian(two_sided)) {
        throw std::invalid_argument("real-valued series requires c_{-n} = conj(c_n) and real c_0");
    }
    const int max_freq = static_cast<int>(two_sided.size() / 2);
    return {max_freq, std::move(two_sided), real_valued};
}

FourierSeries FourierSeries::basis(int n, int max_freq) {
    if (std::abs(n) > max_freq) {
        throw std::invalid_argument("basis frequency exceeds max_freq");
    }
    FourierSeries f = zero(max_freq);
    f.coeffs_[f.index(n)] = 1.0;
    f.real_valued_ = (n == 0);
    return f;
}

FourierSeries FourierSeries::cosine(int n, double amplitude) {
    if (n == 0) {
        throw std::invalid_argument("cosine mode requires n != 0");
    }
    const int max_freq = std::abs(n);
    FourierSeries f = zero(max_freq);
    f.coeffs_[f.index(n)] = amplitude;
    f.coeffs_[f.index(-n)] = amplitude;
    return f;
}

FourierSeries FourierSeries::constant(double value, int max_freq) {
    FourierSeries f = zero(max_freq);
    f.coeffs_[f.index(0)] = value;
    return f;
}

Complex FourierSeries::coeff(int n) const {
    if (n < -max_freq_ || n > max_freq_) {
        return {};
    }
    return coeffs_[index(n)];
}

FourierSeries FourierSeries::resized(int max_freq) const {
    require_max_freq(max_freq);
    std::vector<Complex> out(static_cast<std::size_t>(2 * max_freq + 1));
    const int common = std::min(max_freq, max_freq_);
    for (int n = -common; n <= common; ++n) {
        out[static_cast<std::size_t>(n + max_freq)] = coeffs_[index(n)];
    }
    return {max_freq, std::move(out), real_valued_};
}

FourierSeries FourierSeries::operator-() const {
    return -1.0 * *this;
}

FourierSeries operator+(const FourierSeries& a, const FourierSeries& b) {
    const int max_freq = std::max(a.max_freq_, b.max_freq_);
    std::vector<Complex> out(static_cast<std::size_t>(2 * max_freq + 1));
    for (int n = -max_freq; n <= max_freq; ++n) {
        out[static_cast<std::size_t>(n + max_freq)] = a.coeff(n) + b.coeff(n);
    }
    return {max_freq, std::move(out), a.real_valued_ && b.real_valued_};
}

FourierSeries operator-(const FourierSeries& a, const FourierSeries& b) {
    const int max_freq = std::max(a.max_freq_, b.max_freq_);
    std::vector<Complex> out(static_cast<std::size_t>(2 * max_freq + 1));
    for (int n = -max_freq; n <= max_freq; ++n) {
        out[static_cast<std::size_t>(n + max_freq)] = a.coeff(n) - b.coeff(n);
    }
    return {max_freq, std::move(out), a.real_valued_ && b.real_valued_};
}

FourierSeries operator*(double scale, const FourierSeries& f) {
    std::vector<Complex> out(f.coeffs_.size());
    std::transform(f.coeffs_.begin(), f.coeffs_.end(), out.begin(),
                   [scale](const Complex& c) { return scale * c; });
    return {f.max_freq_, std::move(out), f.real_valued_};
}

Complex inner_product(const FourierSeries& f, const FourierSeries& g) {
    const int common = std::min(f.max_freq(), g.max_freq());
    if (f.real_valued() && g.real_valued()) {
        // Hermitian pairs n, -n contribute 2 Re(c_n conj(d_n)).
        double sum = f.coeff(0).real() * g.coeff(0).real();
        for (int n = 1; n <= common; ++n) {
            sum += 2.0 * (f.coeff(n) * std::conj(g.coeff(n))).real();
        }
        return sum;
    }
    Complex sum{};
    for (int n = -common; n <= common; ++n) {
        sum += f.coeff(n) * std::conj(g.coeff(n));
    }
    return sum;
}

double l2_norm_sq(const FourierSeries& f) {
    return inner_product(f, f).real();
}

double h1_norm_sq(const FourierSeries& f) {
    if (!f.zero_mean()) {
        throw ZeroMeanError("h1_norm_sq: c_0 != 0, function is outside H_{1,0}(S)");
    }
    double sum = 0.0;
    for (int n = -f.max_freq(); n <= f.max_freq(); ++n) {
        const double nn = static_cast<double>(n);
        sum += nn * nn * std::norm(f.coeff(n));
    }
    return sum;
}

double hminus1_norm_sq(const FourierSeries& f) {
    if (!f.zero_mean()) {
        throw ZeroMeanError("hminus1_norm_sq: c_0 != 0, function is outside the zero-mean space");
    }
    // Smallest terms first.
    double sum = 0.0;
    for (int n = f.max_freq(); n >= 1; --n) {
        const double nn = static_cast<double>(n);
        sum += (std::norm(f.coeff(n)) + std::norm(f.coeff(-n))) / (nn * nn);
    }
    return sum;
}

Complex evaluate(const FourierSeries& f, double t) {
    if (f.real_valued()) {
        double sum = f.coeff(0).real();
        for (int n = 1; n <= f.max_freq(); ++n) {
            sum += 2.0 * (f.coeff(n) * unit_phase(static_cast<double>(n) * t)).real();
        }
        return sum;
    }
    Complex sum = f.coeff(0);
    for (int n = 1; n <= f.max_freq(); ++n) {
        const Complex e = unit_phase(static_cast<double>(n) * t);
        sum += f.coeff(n) * e + f.coeff(-n) * std::conj(e);
    }
    return sum;
}

FourierSeries indicator_series(double a, double b, int max_freq) {
    require_max_freq(max_freq);
    if (!(a >= 0.0 && a <= b && b <= 1.0)) {
        throw std::invalid_argument("indicator_series: need 0 <= a <= b <= 1");
    }
    return FourierSeries::from_coefficients(
        hermitian_coefficients(max_freq, b - a,
                               [a, b](int n) { return indicator_coefficient(n, a, b); }),
        true);
}

FourierSeries bridge_test_function(double t, int max_freq) {
    require_unit_point(t, "bridge_test_function");
    require_max_freq(max_freq);
    return FourierSeries::from_coefficients(
        hermitian_coefficients(max_freq, 0.0,
                               [t](int n) { return indicator_coefficient(n, 0.0, t); }),
        true);
}

Complex eta_coefficient(int k, double t) {
    if (k % 2 == 0) {
        return {};
    }
    const double abs_k = std::abs(static_cast<double>(k));
    return (unit_phase(static_cast<double>(k) * t) - 1.0) /
           (std::numbers::sqrt2 * std::numbers::pi * abs_k);
}

FourierSeries eta_test_function(double t, int max_freq) {
    require_unit_point(t, "eta_test_function");
    require_max_freq(max_freq);
    return FourierSeries::from_coefficients(
        hermitian_coefficients(max_freq, 0.0, [t](int k) { return eta_coefficient(k, t); }), true);
}

FourierSeries pulse_test_function(double a, double width, double amplitude, int max_freq) {
    if (!(width > 0.0)) {
        throw std::invalid_argument("pulse_test_function: width must be positive");
    }
    if (!(a >= 0.0 && a + 2.0 * width <= 1.0)) {
        throw std::invalid_argument(
            "pulse_test_function: support [a, a+2w) must lie in [0, 1] (no wraparound)");
    }
    require_max_freq(max_freq);
    const double mid = a + width;
    const double end = a + 2.0 * width;
    return FourierSeries::from_coefficients(
        hermitian_coefficients(max_freq, 0.0,
                               [=](int n) {
                                   return amplitude * (indicator_coefficient(n, a, mid) -
                                                       indicator_coefficient(n, mid, end));
                               }),
        true);
}

FourierSeries project_zero_mean(const FourierSeries& f) {
    std::vector<Complex> coeffs(f.coefficients().begin(), f.coefficients().end());
    coeffs[static_cast<std::size_t>(f.max_freq())] = Complex{};
    return FourierSeries::from_coefficients(std::move(coeffs), f.real_valued());
}

void write_coefficients_csv(std::ostream& out, const FourierSeries& f) {
    out << "n,re,im\n";
    char buf[96];
    for (int n = -f.max_freq(); n <= f.max_freq(); ++n) {
        const Complex c = f.coeff(n);
        std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", n, c.real(), c.imag());
        out << buf;
    }
}

}  // namespace circle_noise
