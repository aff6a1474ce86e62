#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace circle_noise {

using Complex = std::complex<double>;

/// Raised when an operation defined only on zero-mean test functions
/// (c_0 = 0) receives a series with a nonzero constant term.
class ZeroMeanError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Truncated two-sided Fourier series f(t) = sum_{|n|<=N} c_n e^{i 2 pi n t}
/// on the circle R/Z.
///
/// Coefficients are stored for every n in [-N, N]. A real-valued series
/// carries exact Hermitian symmetry c_{-n} = conj(c_n) with a real c_0;
/// the factories below build it that way and from_coefficients() rejects
/// anything else. Values are immutable once built.
class FourierSeries {
  public:
    FourierSeries() : FourierSeries(zero(0)) {}

    static FourierSeries zero(int max_freq);

    /// Two-sided coefficients, index n + N. Size must be odd.
    static FourierSeries from_coefficients(std::vector<Complex> two_sided,
                                           bool real_valued);

    /// psi_n(t) = e^{i 2 pi n t}; real-valued only for n = 0.
    static FourierSeries basis(int n, int max_freq);
    static FourierSeries basis(int n) { return basis(n, n < 0 ? -n : n); }

    /// amplitude * (psi_n + psi_{-n}), a real cosine mode.
    static FourierSeries cosine(int n, double amplitude = 1.0);

    static FourierSeries constant(double value, int max_freq = 0);

    int max_freq() const { return max_freq_; }
    bool real_valued() const { return real_valued_; }

    /// c_n, or zero outside [-N, N].
    Complex coeff(int n) const;

    std::span<const Complex> coefficients() const { return coeffs_; }

    bool zero_mean() const { return coeffs_[static_cast<std::size_t>(max_freq_)] == Complex{}; }

    /// Drops or zero-pads frequencies so that the result has max_freq n.
    FourierSeries resized(int max_freq) const;

    FourierSeries operator-() const;
    friend FourierSeries operator+(const FourierSeries& a, const FourierSeries& b);
    friend FourierSeries operator-(const FourierSeries& a, const FourierSeries& b);
    friend FourierSeries operator*(double scale, const FourierSeries& f);

  private:
    FourierSeries(int max_freq, std::vector<Complex> coeffs, bool real_valued)
        : max_freq_(max_freq), coeffs_(std::move(coeffs)), real_valued_(real_valued) {}

    std::size_t index(int n) const { return static_cast<std::size_t>(n + max_freq_); }

    int max_freq_;
    std::vector<Complex> coeffs_;
    bool real_valued_;
};

/// e^{i 2 pi x}, with x reduced mod 1 before the trig call.
Complex unit_phase(double x);

/// L2(S) inner product (f, g) = sum_n c_n(f) conj(c_n(g)); the shorter series
/// is zero-padded.
Complex inner_product(const FourierSeries& f, const FourierSeries& g);

double l2_norm_sq(const FourierSeries& f);

/// sum_n n^2 |c_n|^2. Throws ZeroMeanError if c_0 != 0.
double h1_norm_sq(const FourierSeries& f);

/// sum_{n != 0} |c_n|^2 / n^2. Throws ZeroMeanError if c_0 != 0.
double hminus1_norm_sq(const FourierSeries& f);

/// sum_n c_n e^{i 2 pi n t}. Exactly real for real-valued series.
Complex evaluate(const FourierSeries& f, double t);

/// Coefficients of the indicator 1_[a, b) for 0 <= a <= b <= 1.
FourierSeries indicator_series(double a, double b, int max_freq);

/// 1_[0,t) - t: the Brownian bridge test function.
FourierSeries bridge_test_function(double t, int max_freq);

/// eta_t(u) = (1 / (sqrt2 pi)) sum_{k odd} (e^{i 2 pi k t} - 1) / |k| e^{i 2 pi k u},
/// whose pairings with white noise give Levy's circular Brownian motion.
/// Even frequencies are exactly zero.
FourierSeries eta_test_function(double t, int max_freq);

/// Coefficient h_k(t) of eta_test_function, zero for even k.
Complex eta_coefficient(int k, double t);

/// amplitude * (1_[a, a+w) - 1_[a+w, a+2w)): zero integral, support [a, a+2w).
/// Wraparound (a + 2w > 1) is rejected.
FourierSeries pulse_test_function(double a, double width, double amplitude, int max_freq);

/// Sets c_0 = 0.
FourierSeries project_zero_mean(const FourierSeries& f);

/// CSV with header "n,re,im", one row per frequency -N..N.
void write_coefficients_csv(std::ostream& out, const FourierSeries& f);

}  // namespace circle_noise
