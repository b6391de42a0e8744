#include "pwh/bargmann.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pwh/coherent.hpp"
#include "pwh/errors.hpp"

namespace pwh {

Complex bargmann_eval(const AlgebraParams& params, const std::vector<Complex>& f, Complex z, double phi) {
    Complex sum = 0.0;
    Complex power = 1.0;
    double inv_sqrt_fact = 1.0;
    for (std::size_t n = 0; n < f.size(); ++n) {
        if (n > 0) {
            power *= z;
            inv_sqrt_fact /= std::sqrt(structure_value(params, n));
        }
        if (f[n] != Complex{}) {
            sum += f[n] * power * std::polar(inv_sqrt_fact, -structure_value(params, n) * phi);
        }
    }
    return sum;
}

std::vector<Complex> polar_grid(double radius, std::size_t radial, std::size_t angular) {
    if (radial < 2 || angular == 0) {
        throw ArgumentError("polar grid needs at least 2 radii and 1 angle");
    }
    std::vector<Complex> grid;
    grid.reserve(radial * angular);
    for (std::size_t k = 0; k < radial; ++k) {
        const double rho = radius * static_cast<double>(k) / static_cast<double>(radial - 1);
        for (std::size_t a = 0; a < angular; ++a) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(angular);
            grid.push_back(std::polar(rho, angle));
        }
    }
    return grid;
}

SchwarzReport schwarz_check(const AlgebraParams& params, const std::vector<Complex>& f,
                            const std::vector<Complex>& grid, double phi) {
    double norm2 = 0.0;
    for (const auto& c : f) {
        norm2 += std::norm(c);
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw ArgumentError("Schwarz check needs a normalized vector, got sum |f_n|^2 = " + std::to_string(norm2));
    }
    SchwarzReport report;
    report.max_excess = -INFINITY;
    for (const auto& z : grid) {
        const double excess = std::abs(bargmann_eval(params, f, z, phi)) - bg_normalization(params, z);
        if (excess > report.max_excess) {
            report.max_excess = excess;
            report.argmax = z;
        }
    }
    return report;
}

EntireSeries::EntireSeries(std::vector<double> log_moduli, std::string origin, bool polynomial)
    : log_moduli_(std::move(log_moduli)), origin_(std::move(origin)), polynomial_(polynomial) {
    if (log_moduli_.empty() || !std::isfinite(log_moduli_.front())) {
        throw ArgumentError("entire series needs a finite c_0");
    }
}

EntireSeries EntireSeries::from_moduli(const std::vector<double>& moduli, std::string origin) {
    std::vector<double> logs;
    logs.reserve(moduli.size());
    for (double m : moduli) {
        logs.push_back(std::log(std::abs(m)));
    }
    auto last_nonzero = std::find_if(moduli.rbegin(), moduli.rend(), [](double m) { return m != 0.0; });
    const bool trailing_zero = last_nonzero != moduli.rbegin();
    return EntireSeries(std::move(logs), std::move(origin), trailing_zero);
}

EntireSeries EntireSeries::bg_kernel(const AlgebraParams& params, std::size_t n_max) {
    if (params.dimension().is_finite()) {
        throw DomainError("finite representations give polynomials, not entire series");
    }
    auto logs = log_generalized_factorials(params, n_max);
    for (auto& v : logs) {
        v *= -0.5;
    }
    return EntireSeries(std::move(logs), "1/sqrt(F(n)!)");
}

EntireSeries EntireSeries::scaled(double factor) const {
    std::vector<double> logs(log_moduli_);
    const double shift = std::log(std::abs(factor));
    for (auto& v : logs) {
        v += shift;
    }
    return EntireSeries(std::move(logs), origin_, polynomial_);
}

GrowthEstimate estimate_growth(const EntireSeries& series) {
    if (series.polynomial()) {
        throw ArgumentError("polynomial input has order 0; order/type estimation needs an entire series");
    }
    const auto& logs = series.log_moduli();
    const auto nonzero = static_cast<std::size_t>(
        std::count_if(logs.begin(), logs.end(), [](double v) { return std::isfinite(v); }));
    if (nonzero < 200) {
        throw ArgumentError("order/type estimation needs at least 200 nonzero coefficients, got " +
                            std::to_string(nonzero));
    }
    const std::size_t last = logs.size() - 1;
    const std::size_t first = std::max<std::size_t>(2, last / 2);

    std::vector<std::size_t> idx;
    for (std::size_t n = first; n <= last; ++n) {
        if (std::isfinite(logs[n])) {
            idx.push_back(n);
        }
    }
    const auto rows = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd a(rows, 3);
    Eigen::VectorXd y(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double n = static_cast<double>(idx[static_cast<std::size_t>(i)]);
        a(i, 0) = n * std::log(n);
        a(i, 1) = n;
        a(i, 2) = 1.0;
        y(i) = -logs[idx[static_cast<std::size_t>(i)]];
    }
    // Column scaling keeps the normal equations well conditioned.
    const Eigen::Vector3d scale = a.colwise().norm().transpose();
    const Eigen::MatrixXd as = a * scale.cwiseInverse().asDiagonal();
    const Eigen::Vector3d coef = as.colPivHouseholderQr().solve(y).cwiseQuotient(scale);

    if (!(coef(0) > 1e-9)) {
        throw ArgumentError("coefficients do not decay like (1/n)^{n/rho}; not an entire series of finite "
                            "positive order (geometric or polynomial input)");
    }
    GrowthEstimate est;
    est.rho_hat = 1.0 / coef(0);
    est.sigma_hat = std::exp(-coef(1) * est.rho_hat - 1.0) / est.rho_hat;
    est.fit_begin = idx.front();
    est.fit_end = idx.back();
    est.fit_rms = std::sqrt((a * coef - y).squaredNorm() / static_cast<double>(rows));

    const double n = static_cast<double>(est.fit_end);
    const double log_c = logs[est.fit_end];
    est.rho_raw = -n * std::log(n) / log_c;
    est.sigma_raw = n * std::exp(est.rho_raw * log_c / n) / (std::numbers::e * est.rho_raw);
    return est;
}

GrowthFormula closed_form_growth(const AlgebraParams& params) {
    const auto ells = params.reciprocal_ells();
    if (!ells) {
        throw ArgumentError("closed-form order/type needs every kappa_i = 1/ell_i with ell_i a positive integer");
    }
    const double r = static_cast<double>(params.r());
    double product = 1.0;
    for (long ell : *ells) {
        product *= static_cast<double>(ell);
    }
    return {2.0 / (1.0 + r), 0.5 * (1.0 + r) * std::pow(product, 1.0 / (1.0 + r))};
}

}  // namespace pwh
