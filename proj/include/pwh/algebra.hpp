#pragma once

// Polynomial Weyl-Heisenberg algebra: parameters, structure function and the
// ladder-operator matrices on a Fock basis window.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "pwh/rational.hpp"

namespace pwh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

// Dimension of the Fock representation: Infinite, or Finite(d) with d >= 2.
class RepDimension {
public:
    static RepDimension infinite() { return RepDimension{}; }
    static RepDimension finite(std::size_t d);

    bool is_finite() const noexcept { return d_.has_value(); }
    // Throws ArgumentError when infinite.
    std::size_t size() const;

    bool operator==(const RepDimension&) const = default;

private:
    std::optional<std::size_t> d_;
};

// The r parameters kappa_i (exact rationals) and the phase phi.
//
// Only two sign patterns are accepted: all kappa_i >= 0 (infinite-dimensional
// representation) or kappa_1 < 0 with -1/kappa_1 a positive integer and the
// remaining kappa_i >= 0 (dimension d = 1 - 1/kappa_1). Everything else throws
// InvalidParams.
class AlgebraParams {
public:
    explicit AlgebraParams(std::vector<Rational> kappas, double phi = 0.0);

    // kappa_i = 1/ell_i with ell_i positive integers.
    static AlgebraParams from_ells(const std::vector<long>& ells, double phi = 0.0);

    const std::vector<Rational>& kappas() const noexcept { return kappas_; }
    double phi() const noexcept { return phi_; }
    std::size_t r() const noexcept { return kappas_.size(); }
    const RepDimension& dimension() const noexcept { return dim_; }

    AlgebraParams with_phi(double phi) const;

    // ell_i when every kappa_i is the reciprocal of a positive integer.
    std::optional<std::vector<long>> reciprocal_ells() const;

    // Same kappas; phi is not compared.
    bool same_algebra(const AlgebraParams& other) const;

private:
    std::vector<Rational> kappas_;
    std::vector<double> kappas_d_;
    double phi_;
    RepDimension dim_;

    friend double structure_value(const AlgebraParams&, std::size_t);
};

// F(n) = n * prod_i [1 + kappa_i (n - 1)], exact.
Rational structure_function(const AlgebraParams& params, std::size_t n);

// G(n) = F(n + 1) - F(n), exact.
Rational commutator_gap(const AlgebraParams& params, std::size_t n);

RepDimension classify(const AlgebraParams& params);

// F(n)! = F(1) F(2) ... F(n), F(0)! = 1. In the finite case n must be <= d - 1.
Rational generalized_factorial(const AlgebraParams& params, std::size_t n);

// Double-precision F(n) for series and phase work.
double structure_value(const AlgebraParams& params, std::size_t n);

// log F(k)! for k = 0..n_max. Requires F(k) > 0 for 1 <= k <= n_max.
std::vector<double> log_generalized_factorials(const AlgebraParams& params, std::size_t n_max);

// Matrices of a^-, a^+ and N on the basis |0>, ..., |window - 1>.
class LadderRep {
public:
    std::size_t window() const noexcept { return static_cast<std::size_t>(lower_.rows()); }
    const ComplexMatrix& lower() const noexcept { return lower_; }
    const ComplexMatrix& raise() const noexcept { return raise_; }
    const RealMatrix& number() const noexcept { return number_; }
    std::optional<std::size_t> truncation_order() const noexcept { return truncation_; }
    const AlgebraParams& params() const noexcept { return params_; }

private:
    LadderRep(AlgebraParams params, ComplexMatrix lower, std::optional<std::size_t> truncation);

    AlgebraParams params_;
    ComplexMatrix lower_;
    ComplexMatrix raise_;
    RealMatrix number_;
    std::optional<std::size_t> truncation_;

    friend LadderRep build_rep(const AlgebraParams&, std::size_t);
    friend LadderRep build_truncated_rep(const AlgebraParams&, std::size_t, std::size_t);
};

// lower(n-1, n) = sqrt(F(n)) exp(+i [F(n) - F(n-1)] phi). In the finite case
// window must equal d; in the infinite case the last row/column is a cutoff.
LadderRep build_rep(const AlgebraParams& params, std::size_t window);

// Pegg-Barnett truncation a^{+-}(s): every transition touching levels >= s is
// removed, on the same window-sized basis. Infinite case only, s < window.
LadderRep build_truncated_rep(const AlgebraParams& params, std::size_t window, std::size_t s);

// [A, B] = AB - BA.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace pwh
