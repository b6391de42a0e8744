#pragma once

// Perelomov and Barut-Girardello coherent states as coefficient vectors over
// the Fock basis.

#include <complex>
#include <cstddef>
#include <vector>

#include "pwh/algebra.hpp"

namespace pwh {

enum class StateKind { perelomov, barut_girardello };

const char* to_string(StateKind kind);

// How the coefficient sequence ends. Finite-dimensional states are exact;
// infinite series carry a rigorous bound on the omitted sum of |c_n|^2
// relative to the retained one.
struct CutoffMeta {
    bool exact = true;
    double tail_bound = 0.0;
};

struct CoherentOptions {
    bool normalize = false;
    // Stop once the omitted tail is below this fraction of the partial norm.
    double tail_tolerance = 1e-14;
    // Keep at least this many coefficients (zero-padded or continued).
    std::size_t min_terms = 0;
    std::size_t max_terms = 1'000'000;
};

class CoherentState {
public:
    StateKind kind() const noexcept { return kind_; }
    const AlgebraParams& params() const noexcept { return params_; }
    double phi() const noexcept { return params_.phi(); }
    Complex z() const noexcept { return z_; }
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    bool normalized() const noexcept { return normalized_; }
    const CutoffMeta& cutoff() const noexcept { return cutoff_; }
    // sqrt(sum |c_n|^2) of the unnormalized coefficients (K = 1).
    double raw_norm() const noexcept { return raw_norm_; }

    std::size_t size() const noexcept { return coeffs_.size(); }

    // Reassembles a state from serialized fields; no formula is re-evaluated.
    static CoherentState from_parts(StateKind kind, AlgebraParams params, Complex z,
                                    std::vector<Complex> coeffs, bool normalized, CutoffMeta cutoff,
                                    double raw_norm);

private:
    CoherentState(StateKind kind, AlgebraParams params, Complex z)
        : kind_(kind), params_(std::move(params)), z_(z) {}

    StateKind kind_;
    AlgebraParams params_;
    Complex z_;
    std::vector<Complex> coeffs_;
    bool normalized_ = false;
    CutoffMeta cutoff_;
    double raw_norm_ = 0.0;

    friend CoherentState build_series_state(StateKind, const AlgebraParams&, Complex, double,
                                            const CoherentOptions&);
    friend CoherentState perelomov_via_exponential(const AlgebraParams&, Complex, double, const LadderRep&);
    friend CoherentState time_evolve(const CoherentState&, double);
};

// c_n = sqrt(F(n)!)/n! z^n exp(-i F(n) phi).
// Infinite case: only r = 1 and |z| < 1/sqrt(kappa_1); otherwise DomainError.
CoherentState perelomov_state(const AlgebraParams& params, Complex z, double phi,
                              const CoherentOptions& options = {});

// exp(z a^+)|0> by the finite nilpotent sum over the raise matrix. Finite case only.
CoherentState perelomov_via_exponential(const AlgebraParams& params, Complex z, double phi,
                                        const LadderRep& rep);

// c_n = z^n exp(-i F(n) phi) / sqrt(F(n)!). Infinite case only, any r and z.
CoherentState bg_state(const AlgebraParams& params, Complex z, double phi,
                       const CoherentOptions& options = {});

// ||a^- c - z c|| / ||c|| over the rows not touched by the series cutoff.
double check_bg_eigen(const CoherentState& state, const LadderRep& rep);

// Multiplies c_n by exp(-i F(n) t); the result carries phase phi + t.
CoherentState time_evolve(const CoherentState& state, double t);

enum class OverlapCheck { strict, unchecked_phase };

// <s1|s2>. Strict mode requires equal kappas, kind and phi.
Complex overlap(const CoherentState& s1, const CoherentState& s2,
                OverlapCheck check = OverlapCheck::strict);

// |N| = sqrt(0F_r(ell_1..ell_r; ell_1...ell_r |z|^2)); needs kappa_i = 1/ell_i.
// Entries kappa_i = 0 are allowed and drop out (all zero gives exp(|z|^2/2)).
double bg_normalization(const AlgebraParams& params, Complex z);

// log of the partial sums of |c_n|^2 for the infinite-dimensional Perelomov
// series, with no existence gate. Used to exhibit divergence when r >= 2.
std::vector<double> perelomov_log_partial_norms(const AlgebraParams& params, Complex z,
                                                std::size_t n_terms);

}  // namespace pwh
