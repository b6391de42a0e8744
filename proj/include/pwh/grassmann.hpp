#pragma once

// One-variable generalized Grassmann algebra C[theta]/(theta^dim) and the
// finite-dimensional Barut-Girardello states built on it.

#include <complex>
#include <cstddef>
#include <vector>

#include "pwh/algebra.hpp"

namespace pwh {

// g_0 + g_1 theta + ... + g_{dim-1} theta^{dim-1}. Commutative; products of
// degree >= dim vanish.
class GrassmannElement {
public:
    explicit GrassmannElement(std::size_t dim);
    GrassmannElement(std::size_t dim, std::vector<Complex> comps);

    static GrassmannElement zero(std::size_t dim) { return GrassmannElement(dim); }
    static GrassmannElement one(std::size_t dim);
    static GrassmannElement theta(std::size_t dim);
    // c theta^k.
    static GrassmannElement monomial(std::size_t dim, std::size_t k, Complex c);

    std::size_t dim() const noexcept { return comps_.size(); }
    const std::vector<Complex>& comps() const noexcept { return comps_; }
    Complex operator[](std::size_t k) const { return comps_.at(k); }

    bool is_zero() const;
    GrassmannElement pow(std::size_t k) const;

    bool operator==(const GrassmannElement&) const = default;

private:
    std::vector<Complex> comps_;
};

GrassmannElement g_add(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement g_mul(const GrassmannElement& a, const GrassmannElement& b);
GrassmannElement g_scale(const GrassmannElement& a, Complex c);

inline GrassmannElement operator+(const GrassmannElement& a, const GrassmannElement& b) { return g_add(a, b); }
inline GrassmannElement operator-(const GrassmannElement& a, const GrassmannElement& b) {
    return g_add(a, g_scale(b, -1.0));
}
inline GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) { return g_mul(a, b); }
inline GrassmannElement operator*(Complex c, const GrassmannElement& a) { return g_scale(a, c); }
inline GrassmannElement operator*(const GrassmannElement& a, Complex c) { return g_scale(a, c); }

// Largest |component| of a - b.
double max_abs_diff(const GrassmannElement& a, const GrassmannElement& b);

// sum_n theta^n exp(-i F(n) phi) / sqrt(F(n)!) |n>, one algebra element per level.
class GrassmannState {
public:
    GrassmannState(AlgebraParams params, std::size_t dim, std::vector<GrassmannElement> coeffs);

    const AlgebraParams& params() const noexcept { return params_; }
    double phi() const noexcept { return params_.phi(); }
    std::size_t dim() const noexcept { return coeffs_.size(); }
    const std::vector<GrassmannElement>& coeffs() const noexcept { return coeffs_; }

private:
    AlgebraParams params_;
    std::vector<GrassmannElement> coeffs_;
};

// Finite-case params; dim = d.
GrassmannState bg_grassmann_state(const AlgebraParams& params, double phi);

// Infinite-case params on the algebra truncated at level s (dim = s).
GrassmannState bg_grassmann_state_truncated(const AlgebraParams& params, std::size_t s, double phi);

// max |(a^- psi)_n - (theta psi)_n| over levels and theta-components.
double check_bg_grassmann_eigen(const GrassmannState& state, const LadderRep& rep);

// Plugs a complex number in for theta in finite dimension and returns
// ||a^- c - z c|| / ||c||; nonzero whenever z != 0.
double complex_substitution_residual(const AlgebraParams& params, Complex z, double phi);

}  // namespace pwh
