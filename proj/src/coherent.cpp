#include "pwh/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pwh/errors.hpp"

namespace pwh {

const char* to_string(StateKind kind) {
    return kind == StateKind::perelomov ? "perelomov" : "barut_girardello";
}

CoherentState CoherentState::from_parts(StateKind kind, AlgebraParams params, Complex z,
                                        std::vector<Complex> coeffs, bool normalized, CutoffMeta cutoff,
                                        double raw_norm) {
    CoherentState out(kind, std::move(params), z);
    out.coeffs_ = std::move(coeffs);
    out.normalized_ = normalized;
    out.cutoff_ = cutoff;
    out.raw_norm_ = raw_norm;
    return out;
}

namespace {

void require_perelomov_domain(const AlgebraParams& params, Complex z) {
    if (params.dimension().is_finite()) {
        return;
    }
    if (params.r() != 1) {
        throw DomainError("Perelomov states in infinite dimension exist only for r = 1 (the series is not "
                          "normalizable for r >= 2); got r = " + std::to_string(params.r()));
    }
    // Exact comparison: doubles convert to rationals without rounding.
    const Rational re(z.real());
    const Rational im(z.imag());
    const Rational& kappa_exact = params.kappas()[0];
    if (sgn(kappa_exact) > 0 && kappa_exact * (re * re + im * im) >= 1) {
        const double kappa = to_double(kappa_exact);
        throw DomainError("Perelomov states in infinite dimension need |z| < 1/sqrt(kappa_1) = " +
                          std::to_string(1.0 / std::sqrt(kappa)) + "; got |z| = " +
                          std::to_string(std::abs(z)));
    }
}

// |c_{n+1}|^2 / |c_n|^2 for the unnormalized series.
double term_ratio(StateKind kind, const AlgebraParams& params, double z_norm2, std::size_t n) {
    const double f_next = structure_value(params, n + 1);
    if (kind == StateKind::barut_girardello) {
        return z_norm2 / f_next;
    }
    const double m = static_cast<double>(n + 1);
    return z_norm2 * f_next / (m * m);
}

// Supremum of term_ratio over all k >= n in the infinite case. For the
// Barut-Girardello series F is increasing so the ratio decreases; for the
// r = 1 Perelomov series the ratio is monotone with limit kappa_1 |z|^2.
double ratio_supremum(StateKind kind, const AlgebraParams& params, double z_norm2, std::size_t n) {
    const double q = term_ratio(kind, params, z_norm2, n);
    if (kind == StateKind::barut_girardello) {
        return q;
    }
    return std::max(q, to_double(params.kappas()[0]) * z_norm2);
}

}  // namespace

CoherentState build_series_state(StateKind kind, const AlgebraParams& params, Complex z, double phi,
                                 const CoherentOptions& options) {
    const AlgebraParams p = params.with_phi(phi);
    CoherentState state(kind, p, z);
    const double z_abs = std::abs(z);
    const double z_arg = std::arg(z);
    const double z_norm2 = z_abs * z_abs;

    const bool finite = p.dimension().is_finite();
    const std::size_t limit = finite ? p.dimension().size() : options.max_terms;

    std::vector<Complex> coeffs;
    double modulus = 1.0;
    double partial = 0.0;
    double tail = 0.0;
    for (std::size_t n = 0;; ++n) {
        if (n >= limit) {
            if (finite) {
                break;
            }
            throw DomainError("series did not reach the tail tolerance within " +
                              std::to_string(options.max_terms) + " terms");
        }
        if (n > 0) {
            const double f = structure_value(p, n);
            modulus *= kind == StateKind::perelomov ? z_abs * std::sqrt(f) / static_cast<double>(n)
                                                    : z_abs / std::sqrt(f);
        }
        const double angle = static_cast<double>(n) * z_arg - structure_value(p, n) * phi;
        coeffs.push_back(std::polar(modulus, angle));
        partial += modulus * modulus;
        if (finite) {
            continue;
        }
        const double q = ratio_supremum(kind, p, z_norm2, n);
        if (q >= 1.0) {
            continue;
        }
        tail = modulus * modulus * q / (1.0 - q);
        if (tail <= options.tail_tolerance * partial && n + 1 >= options.min_terms) {
            break;
        }
    }

    state.raw_norm_ = std::sqrt(partial);
    state.cutoff_ = finite ? CutoffMeta{true, 0.0} : CutoffMeta{false, tail / partial};
    if (options.normalize) {
        const double scale = 1.0 / state.raw_norm_;
        for (auto& c : coeffs) {
            c *= scale;
        }
        state.normalized_ = true;
    }
    state.coeffs_ = std::move(coeffs);
    return state;
}

CoherentState perelomov_state(const AlgebraParams& params, Complex z, double phi,
                              const CoherentOptions& options) {
    require_perelomov_domain(params, z);
    return build_series_state(StateKind::perelomov, params, z, phi, options);
}

CoherentState perelomov_via_exponential(const AlgebraParams& params, Complex z, double phi,
                                        const LadderRep& rep) {
    if (!params.dimension().is_finite()) {
        throw DomainError("exp(z a^+)|0> is a finite sum only in finite dimension; use perelomov_state");
    }
    if (!rep.params().same_algebra(params) || rep.params().phi() != phi ||
        rep.window() != params.dimension().size() || rep.truncation_order()) {
        throw ArgumentError("ladder representation does not match the requested parameters");
    }
    const auto d = static_cast<Eigen::Index>(rep.window());
    Eigen::VectorXcd term = Eigen::VectorXcd::Zero(d);
    term(0) = 1.0;
    Eigen::VectorXcd sum = term;
    // raise is nilpotent of order d, so the exponential series ends at k = d - 1.
    for (Eigen::Index k = 1; k < d; ++k) {
        term = (z / static_cast<double>(k)) * (rep.raise() * term);
        sum += term;
    }
    CoherentState state(StateKind::perelomov, params.with_phi(phi), z);
    state.coeffs_.assign(sum.data(), sum.data() + sum.size());
    state.raw_norm_ = sum.norm();
    return state;
}

CoherentState bg_state(const AlgebraParams& params, Complex z, double phi, const CoherentOptions& options) {
    if (params.dimension().is_finite()) {
        throw DomainError("no Barut-Girardello states with complex z exist in finite dimension; "
                          "use the Grassmann construction");
    }
    return build_series_state(StateKind::barut_girardello, params, z, phi, options);
}

double check_bg_eigen(const CoherentState& state, const LadderRep& rep) {
    if (rep.window() < state.size() + 1) {
        throw ArgumentError("window " + std::to_string(rep.window()) + " too small for a state of length " +
                            std::to_string(state.size()));
    }
    if (!rep.params().same_algebra(state.params()) || rep.params().phi() != state.phi()) {
        throw ArgumentError("ladder representation and state use different parameters");
    }
    const auto window = static_cast<Eigen::Index>(rep.window());
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(window);
    for (std::size_t n = 0; n < state.size(); ++n) {
        c(static_cast<Eigen::Index>(n)) = state.coeffs()[n];
    }
    const Eigen::VectorXcd lowered = rep.lower() * c;
    // Row len-1 would need the discarded coefficient c_len.
    const auto rows = static_cast<Eigen::Index>(state.size()) - 1;
    if (rows <= 0) {
        return 0.0;
    }
    const Eigen::VectorXcd diff = lowered.head(rows) - state.z() * c.head(rows);
    return diff.norm() / c.norm();
}

CoherentState time_evolve(const CoherentState& state, double t) {
    CoherentState out = state;
    out.params_ = state.params().with_phi(state.phi() + t);
    for (std::size_t n = 0; n < out.coeffs_.size(); ++n) {
        out.coeffs_[n] *= std::polar(1.0, -structure_value(state.params(), n) * t);
    }
    return out;
}

Complex overlap(const CoherentState& s1, const CoherentState& s2, OverlapCheck check) {
    if (!s1.params().same_algebra(s2.params()) || s1.kind() != s2.kind()) {
        throw ArgumentError("overlap needs states of the same kind over the same algebra");
    }
    if (check == OverlapCheck::strict && s1.phi() != s2.phi()) {
        throw ArgumentError("overlap needs equal phi; pass OverlapCheck::unchecked_phase to override");
    }
    // A truncated series is short where its own tail is negligible, which
    // need not hold for the product with a longer state.
    const auto extended = [](const CoherentState& s, std::size_t size) {
        if (s.size() >= size) {
            return s;
        }
        CoherentOptions options;
        options.normalize = s.normalized();
        options.min_terms = size;
        return build_series_state(s.kind(), s.params(), s.z(), s.phi(), options);
    };
    const std::size_t n = std::max(s1.size(), s2.size());
    const auto a = extended(s1, n);
    const auto b = extended(s2, n);
    Complex sum = 0.0;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        sum += std::conj(a.coeffs()[i]) * b.coeffs()[i];
    }
    return sum;
}

double bg_normalization(const AlgebraParams& params, Complex z) {
    // kappa_i = 0 factors are identically 1 in F and drop out of the 0F_r.
    std::vector<long> ells;
    for (const auto& k : params.kappas()) {
        if (k == 0) {
            continue;
        }
        if (k < 0 || k.get_num() != 1 || !k.get_den().fits_slong_p()) {
            throw ArgumentError("the 0F_r normalization needs every kappa_i = 1/ell_i (ell_i a positive integer) "
                                "or kappa_i = 0");
        }
        ells.push_back(k.get_den().get_si());
    }
    double product = 1.0;
    for (long ell : ells) {
        product *= static_cast<double>(ell);
    }
    const double x = product * std::norm(z);
    double term = 1.0;
    double sum = 1.0;
    for (std::size_t n = 0;; ++n) {
        double ratio = x / static_cast<double>(n + 1);
        for (long ell : ells) {
            ratio /= static_cast<double>(ell) + static_cast<double>(n);
        }
        term *= ratio;
        sum += term;
        // Ratios decrease in n, so once below one the tail is geometric.
        const double next = ratio;
        if (next < 1.0 && term * next / (1.0 - next) < 1e-17 * sum) {
            break;
        }
    }
    return std::sqrt(sum);
}

std::vector<double> perelomov_log_partial_norms(const AlgebraParams& params, Complex z, std::size_t n_terms) {
    if (params.dimension().is_finite()) {
        throw ArgumentError("divergence profile is defined for the infinite-dimensional series");
    }
    const auto log_fact = log_generalized_factorials(params, n_terms == 0 ? 0 : n_terms - 1);
    const double log_z2 = std::log(std::norm(z));
    std::vector<double> out;
    out.reserve(n_terms);
    double acc = -INFINITY;
    for (std::size_t n = 0; n < n_terms; ++n) {
        const double x = static_cast<double>(n);
        const double log_term = log_fact[n] - 2.0 * std::lgamma(x + 1.0) + (n == 0 ? 0.0 : x * log_z2);
        const double hi = std::max(acc, log_term);
        acc = hi + std::log(std::exp(acc - hi) + std::exp(log_term - hi));
        out.push_back(acc);
    }
    return out;
}

}  // namespace pwh
