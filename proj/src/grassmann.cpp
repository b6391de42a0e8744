#include "pwh/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pwh/errors.hpp"

namespace pwh {

GrassmannElement::GrassmannElement(std::size_t dim) : comps_(dim, Complex{}) {
    if (dim == 0) {
        throw ArgumentError("Grassmann dimension must be positive");
    }
}

GrassmannElement::GrassmannElement(std::size_t dim, std::vector<Complex> comps) : comps_(std::move(comps)) {
    if (dim == 0 || comps_.size() != dim) {
        throw ArgumentError("Grassmann element needs exactly dim > 0 components");
    }
}

GrassmannElement GrassmannElement::one(std::size_t dim) {
    return monomial(dim, 0, 1.0);
}

GrassmannElement GrassmannElement::theta(std::size_t dim) {
    return monomial(dim, 1, 1.0);
}

GrassmannElement GrassmannElement::monomial(std::size_t dim, std::size_t k, Complex c) {
    GrassmannElement out(dim);
    if (k < dim) {
        out.comps_[k] = c;
    }
    return out;
}

bool GrassmannElement::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](Complex c) { return c == Complex{}; });
}

GrassmannElement GrassmannElement::pow(std::size_t k) const {
    GrassmannElement out = one(dim());
    for (std::size_t i = 0; i < k; ++i) {
        out = g_mul(out, *this);
    }
    return out;
}

namespace {

void require_same_dim(const GrassmannElement& a, const GrassmannElement& b) {
    if (a.dim() != b.dim()) {
        throw ArgumentError("Grassmann dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
    }
}

}  // namespace

GrassmannElement g_add(const GrassmannElement& a, const GrassmannElement& b) {
    require_same_dim(a, b);
    std::vector<Complex> out(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        out[k] = a[k] + b[k];
    }
    return GrassmannElement(a.dim(), std::move(out));
}

GrassmannElement g_mul(const GrassmannElement& a, const GrassmannElement& b) {
    require_same_dim(a, b);
    const std::size_t dim = a.dim();
    std::vector<Complex> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; i + j < dim; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return GrassmannElement(dim, std::move(out));
}

GrassmannElement g_scale(const GrassmannElement& a, Complex c) {
    std::vector<Complex> out(a.comps());
    for (auto& x : out) {
        x *= c;
    }
    return GrassmannElement(a.dim(), std::move(out));
}

double max_abs_diff(const GrassmannElement& a, const GrassmannElement& b) {
    require_same_dim(a, b);
    double out = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        out = std::max(out, std::abs(a[k] - b[k]));
    }
    return out;
}

GrassmannState::GrassmannState(AlgebraParams params, std::size_t dim, std::vector<GrassmannElement> coeffs)
    : params_(std::move(params)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != dim) {
        throw ArgumentError("Grassmann state needs one coefficient per level");
    }
    for (const auto& c : coeffs_) {
        if (c.dim() != dim) {
            throw ArgumentError("Grassmann state coefficients must have nilpotency order dim");
        }
    }
}

namespace {

GrassmannState build_grassmann_state(const AlgebraParams& params, std::size_t dim, double phi) {
    std::vector<GrassmannElement> coeffs;
    coeffs.reserve(dim);
    double inv_sqrt_fact = 1.0;
    for (std::size_t n = 0; n < dim; ++n) {
        if (n > 0) {
            inv_sqrt_fact /= std::sqrt(to_double(structure_function(params, n)));
        }
        const double angle = -structure_value(params, n) * phi;
        coeffs.push_back(GrassmannElement::monomial(dim, n, std::polar(inv_sqrt_fact, angle)));
    }
    return GrassmannState(params.with_phi(phi), dim, std::move(coeffs));
}

}  // namespace

GrassmannState bg_grassmann_state(const AlgebraParams& params, double phi) {
    if (!params.dimension().is_finite()) {
        throw DomainError("Grassmann Barut-Girardello states need a finite representation; "
                          "use bg_grassmann_state_truncated for an infinite one");
    }
    return build_grassmann_state(params, params.dimension().size(), phi);
}

GrassmannState bg_grassmann_state_truncated(const AlgebraParams& params, std::size_t s, double phi) {
    if (params.dimension().is_finite()) {
        throw DomainError("truncation applies to infinite-dimensional representations");
    }
    if (s == 0) {
        throw ArgumentError("truncation order must be positive");
    }
    return build_grassmann_state(params, s, phi);
}

double check_bg_grassmann_eigen(const GrassmannState& state, const LadderRep& rep) {
    if (rep.window() != state.dim()) {
        throw ArgumentError("ladder window " + std::to_string(rep.window()) + " differs from Grassmann dim " +
                            std::to_string(state.dim()));
    }
    if (!rep.params().same_algebra(state.params()) || rep.params().phi() != state.phi()) {
        throw ArgumentError("ladder representation and state use different parameters");
    }
    const std::size_t dim = state.dim();
    const auto theta = GrassmannElement::theta(dim);
    double worst = 0.0;
    for (std::size_t n = 0; n < dim; ++n) {
        GrassmannElement lowered(dim);
        for (std::size_t m = 0; m < dim; ++m) {
            const Complex entry = rep.lower()(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
            if (entry != Complex{}) {
                lowered = lowered + entry * state.coeffs()[m];
            }
        }
        worst = std::max(worst, max_abs_diff(lowered, theta * state.coeffs()[n]));
    }
    return worst;
}

double complex_substitution_residual(const AlgebraParams& params, Complex z, double phi) {
    if (!params.dimension().is_finite()) {
        throw ArgumentError("complex substitution check is for finite dimension");
    }
    const std::size_t d = params.dimension().size();
    const AlgebraParams p = params.with_phi(phi);
    Eigen::VectorXcd c(static_cast<Eigen::Index>(d));
    double inv_sqrt_fact = 1.0;
    for (std::size_t n = 0; n < d; ++n) {
        if (n > 0) {
            inv_sqrt_fact /= std::sqrt(to_double(structure_function(p, n)));
        }
        c(static_cast<Eigen::Index>(n)) =
            std::pow(z, static_cast<int>(n)) * std::polar(inv_sqrt_fact, -structure_value(p, n) * phi);
    }
    const LadderRep rep = build_rep(p, d);
    return (rep.lower() * c - z * c).norm() / c.norm();
}

}  // namespace pwh
