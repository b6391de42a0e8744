#pragma once

// Bargmann representatives f_phi(z) with respect to normalized
// Barut-Girardello states, the Schwarz bound |f_phi(z)| <= |N(z)|, and
// order/type estimation for entire series.

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "pwh/algebra.hpp"

namespace pwh {

// sum_n f_n z^n exp(-i F(n) phi) / sqrt(F(n)!). The sum is over the given
// (finite) sequence, so it is exact up to rounding.
Complex bargmann_eval(const AlgebraParams& params, const std::vector<Complex>& f, Complex z, double phi);

struct SchwarzReport {
    double max_excess = 0.0;  // max_z |f_phi(z)| - |N(z)|
    Complex argmax{};
};

// Polar grid: radii k R / (radial - 1), k < radial, and `angular` equally spaced angles.
std::vector<Complex> polar_grid(double radius, std::size_t radial, std::size_t angular);

// f must satisfy sum |f_n|^2 = 1 within 1e-12; throws ArgumentError otherwise.
SchwarzReport schwarz_check(const AlgebraParams& params, const std::vector<Complex>& f,
                            const std::vector<Complex>& grid, double phi);

// Coefficient moduli of an entire series, stored as log|c_n|.
class EntireSeries {
public:
    EntireSeries(std::vector<double> log_moduli, std::string origin, bool polynomial = false);

    static EntireSeries from_moduli(const std::vector<double>& moduli, std::string origin);

    // |c_n| = 1/sqrt(F(n)!), the Bargmann kernel of the normalized
    // Barut-Girardello states, for n = 0..n_max. Infinite case only.
    static EntireSeries bg_kernel(const AlgebraParams& params, std::size_t n_max);

    const std::vector<double>& log_moduli() const noexcept { return log_moduli_; }
    const std::string& origin() const noexcept { return origin_; }
    bool polynomial() const noexcept { return polynomial_; }
    std::size_t size() const noexcept { return log_moduli_.size(); }

    EntireSeries scaled(double factor) const;

private:
    std::vector<double> log_moduli_;
    std::string origin_;
    bool polynomial_;
};

struct GrowthEstimate {
    double rho_hat = 0.0;
    double sigma_hat = 0.0;
    std::size_t fit_begin = 0;  // inclusive
    std::size_t fit_end = 0;    // inclusive
    double fit_rms = 0.0;       // rms residual of the regression
    double rho_raw = 0.0;       // -n log n / log|c_n| at n = fit_end
    double sigma_raw = 0.0;     // n |c_n|^{rho_raw / n} / (e rho_raw) at n = fit_end
};

// Least squares of log(1/|c_n|) on (n log n, n, 1) over the upper half of the
// index range. For |c_n| ~ C (e rho sigma / n)^{n/rho} the slope of n log n is
// 1/rho and the slope beta of n gives sigma = exp(-beta rho - 1)/rho.
GrowthEstimate estimate_growth(const EntireSeries& series);

struct GrowthFormula {
    double rho = 0.0;
    double sigma = 0.0;
};

// rho = 2/(1+r), sigma = ((1+r)/2) (ell_1...ell_r)^{1/(1+r)}; needs kappa_i = 1/ell_i.
GrowthFormula closed_form_growth(const AlgebraParams& params);

}  // namespace pwh
