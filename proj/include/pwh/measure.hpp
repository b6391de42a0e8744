#pragma once

// Radial measures for the resolution of identity. After the angular integral
// (done analytically, phases cancel between bra and ket) the condition
//     int dmu(|z|) |z,phi><z,phi| = sum_n |n><n|
// becomes a Stieltjes moment problem in t = |z|^2:
//     int t^n dmu(t) = m_n,  m_n = (n!)^2 / F(n)!  (Perelomov)
//                            m_n = F(n)!           (Barut-Girardello)
// for the unnormalized states. A Gaussian quadrature matching these moments is
// a discrete positive measure that reproduces the identity on the matched
// levels.

#include <cstddef>
#include <optional>
#include <vector>

#include "pwh/algebra.hpp"
#include "pwh/coherent.hpp"
#include "pwh/rational.hpp"

namespace pwh {

struct MomentSequence {
    std::vector<Rational> exact;
    StateKind provenance = StateKind::barut_girardello;
    // Full measure is dmu(t) * d(arg z) * angular_normalization.
    double angular_normalization = 0.15915494309189535;  // 1/(2 pi)

    std::size_t size() const noexcept { return exact.size(); }
    std::vector<double> values() const;
};

struct DiscreteMeasure {
    std::vector<double> nodes;    // t_j = |z_j|^2
    std::vector<double> weights;
    StateKind provenance = StateKind::barut_girardello;
    // Number of leading moments (and Fock levels) the rule reproduces.
    std::size_t levels = 0;
    // Set when an odd-length sequence was completed with a chosen m_M.
    std::optional<double> extended_moment;
    // Largest over smallest node.
    double condition_estimate = 1.0;
    // True for the fixed-node fallback whose weights may be negative.
    bool signed_weights = false;
};

// Finite case: count is forced to d (pass 0 or d). Infinite case: count > 0.
MomentSequence moments_for(const AlgebraParams& params, StateKind kind, std::size_t count = 0);

// Exact leading principal minors of [m_{i+j+shift}]_{i,j<order}.
std::vector<Rational> hankel_minors(const std::vector<Rational>& moments, std::size_t order, std::size_t shift);

// Three-term recurrence coefficients (alpha_k, beta_k) of the monic
// orthogonal polynomials, computed exactly from 2*count moments by the
// Chebyshev algorithm. beta_0 = m_0.
struct Recurrence {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
};
Recurrence chebyshev_recurrence(const std::vector<Rational>& moments, std::size_t count);

// ceil(M/2)-point Gaussian rule with positive nodes and weights matching
// m_0..m_{M-1}. Throws MeasureError naming the first non-positive Hankel minor.
DiscreteMeasure solve_measure(const MomentSequence& moments);

// M fixed nodes t_j = j + 1 with exactly solved (possibly negative) weights.
// For sequences that admit no positive representing measure.
DiscreteMeasure solve_signed_measure(const MomentSequence& moments);

// max_n |sum_j w_j |c_n(sqrt(t_j))|^2 - 1| over n < levels (levels = 0 means
// measure.levels).
double verify_identity(const AlgebraParams& params, StateKind kind, const DiscreteMeasure& measure, double phi,
                       std::size_t levels = 0);

}  // namespace pwh
