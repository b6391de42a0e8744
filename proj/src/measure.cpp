#include "pwh/measure.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pwh/errors.hpp"

namespace pwh {

std::vector<double> MomentSequence::values() const {
    std::vector<double> out;
    out.reserve(exact.size());
    for (const auto& m : exact) {
        out.push_back(to_double(m));
    }
    return out;
}

MomentSequence moments_for(const AlgebraParams& params, StateKind kind, std::size_t count) {
    if (params.dimension().is_finite()) {
        if (kind == StateKind::barut_girardello) {
            throw DomainError("no Barut-Girardello states with complex z exist in finite dimension, "
                              "so there is no radial measure for them");
        }
        const std::size_t d = params.dimension().size();
        if (count != 0 && count != d) {
            throw ArgumentError("finite representation has exactly d = " + std::to_string(d) + " moments");
        }
        count = d;
    } else {
        if (count == 0) {
            throw ArgumentError("infinite case needs an explicit number of moments");
        }
        if (kind == StateKind::perelomov && params.r() != 1) {
            throw DomainError("Perelomov states in infinite dimension exist only for r = 1");
        }
    }
    MomentSequence out;
    out.provenance = kind;
    out.exact.reserve(count);
    Rational fact(1);
    Rational n_fact(1);
    for (std::size_t n = 0; n < count; ++n) {
        if (n > 0) {
            fact *= structure_function(params, n);
            n_fact *= static_cast<unsigned long>(n);
        }
        out.exact.push_back(kind == StateKind::perelomov ? Rational(n_fact * n_fact) / fact : fact);
    }
    return out;
}

namespace {

// Pivots of Gaussian elimination without pivoting; the product of the first k
// pivots is the k-th leading principal minor. Stops after the first
// non-positive pivot.
std::vector<Rational> elimination_pivots(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    std::vector<Rational> pivots;
    for (std::size_t k = 0; k < n; ++k) {
        pivots.push_back(a[k][k]);
        if (a[k][k] <= 0) {
            break;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) {
                a[i][j] -= factor * a[k][j];
            }
        }
    }
    return pivots;
}

std::vector<std::vector<Rational>> hankel(const std::vector<Rational>& m, std::size_t order, std::size_t shift) {
    std::vector<std::vector<Rational>> h(order, std::vector<Rational>(order));
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            h[i][j] = m.at(i + j + shift);
        }
    }
    return h;
}

void require_positive_minors(const std::vector<Rational>& m, std::size_t order, std::size_t shift) {
    const auto pivots = elimination_pivots(hankel(m, order, shift));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] <= 0) {
            const auto kind = shift == 0 ? MeasureError::Minor::hankel : MeasureError::Minor::shifted_hankel;
            throw MeasureError(std::string(shift == 0 ? "Hankel" : "shifted Hankel") + " minor of order " +
                                   std::to_string(k + 1) +
                                   " is not positive; no positive measure on [0, inf) matches these moments",
                               kind, k + 1);
        }
    }
}

// Determinant of the leading k x k block, by elimination with row swaps.
Rational leading_determinant(const std::vector<std::vector<Rational>>& a, std::size_t k) {
    std::vector<std::vector<Rational>> m(k);
    for (std::size_t i = 0; i < k; ++i) {
        m[i].assign(a[i].begin(), a[i].begin() + static_cast<std::ptrdiff_t>(k));
    }
    Rational det(1);
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t p = c;
        while (p < k && m[p][c] == 0) {
            ++p;
        }
        if (p == k) {
            return 0;
        }
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < k; ++i) {
            const Rational factor = m[i][c] / m[c][c];
            for (std::size_t j = c; j < k; ++j) {
                m[i][j] -= factor * m[c][j];
            }
        }
    }
    return det;
}

}  // namespace

std::vector<Rational> hankel_minors(const std::vector<Rational>& moments, std::size_t order, std::size_t shift) {
    if (order == 0 || 2 * order - 2 + shift >= moments.size()) {
        throw ArgumentError("not enough moments for a Hankel matrix of order " + std::to_string(order));
    }
    const auto a = hankel(moments, order, shift);
    std::vector<Rational> minors;
    for (std::size_t k = 1; k <= order; ++k) {
        minors.push_back(leading_determinant(a, k));
    }
    return minors;
}

Recurrence chebyshev_recurrence(const std::vector<Rational>& moments, std::size_t count) {
    if (count == 0 || moments.size() < 2 * count) {
        throw ArgumentError("Chebyshev algorithm needs 2*count moments");
    }
    const std::size_t width = 2 * count;
    Recurrence rec;
    rec.alpha.resize(count);
    rec.beta.resize(count);
    // sigma_{k,l} = int pi_k(t) t^l dmu; only rows k-2..k are kept.
    std::vector<Rational> prev2(width, Rational(0));
    std::vector<Rational> prev(moments.begin(), moments.begin() + static_cast<std::ptrdiff_t>(width));
    rec.alpha[0] = moments[1] / moments[0];
    rec.beta[0] = moments[0];
    for (std::size_t k = 1; k < count; ++k) {
        std::vector<Rational> cur(width, Rational(0));
        for (std::size_t l = k; l < width - k; ++l) {
            cur[l] = prev[l + 1] - rec.alpha[k - 1] * prev[l] - rec.beta[k - 1] * prev2[l];
        }
        rec.alpha[k] = cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
        rec.beta[k] = cur[k] / prev[k - 1];
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return rec;
}

DiscreteMeasure solve_measure(const MomentSequence& moments) {
    const std::size_t count = moments.size();
    if (count == 0) {
        throw ArgumentError("empty moment sequence");
    }
    const std::size_t points = (count + 1) / 2;
    std::vector<Rational> m = moments.exact;

    require_positive_minors(m, points, 0);
    if (count / 2 > 0) {
        require_positive_minors(m, count / 2, 1);
    }

    DiscreteMeasure out;
    out.provenance = moments.provenance;
    out.levels = count;
    if (count % 2 == 1) {
        // Complete m_{2p-1} = x. det of the order-p shifted Hankel is affine in x
        // with positive slope; its last elimination pivot at x = 0 is -x_min.
        Rational x_min(0);
        if (points > 1) {
            m.push_back(Rational(0));
            auto pivots = elimination_pivots(hankel(m, points, 1));
            x_min = -pivots.back();
            m.pop_back();
        }
        const Rational x = x_min > 0 ? Rational(2 * x_min) : m[2 * points - 2];
        m.push_back(x);
        out.extended_moment = to_double(x);
    }

    const Recurrence rec = chebyshev_recurrence(m, points);
    const auto p = static_cast<Eigen::Index>(points);
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(p, p);
    for (Eigen::Index k = 0; k < p; ++k) {
        jacobi(k, k) = to_double(rec.alpha[static_cast<std::size_t>(k)]);
        if (k > 0) {
            const double off = std::sqrt(to_double(rec.beta[static_cast<std::size_t>(k)]));
            jacobi(k, k - 1) = off;
            jacobi(k - 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    if (solver.info() != Eigen::Success) {
        throw MeasureError("Jacobi eigenproblem did not converge", MeasureError::Minor::none, 0);
    }
    const double mass = to_double(m[0]);
    for (Eigen::Index j = 0; j < p; ++j) {
        const double v0 = solver.eigenvectors()(0, j);
        out.nodes.push_back(solver.eigenvalues()(j));
        out.weights.push_back(mass * v0 * v0);
    }
    const double lo = out.nodes.front();
    const double hi = out.nodes.back();
    out.condition_estimate = lo > 0.0 ? hi / lo : INFINITY;
    if (!(lo > 0.0) || std::any_of(out.weights.begin(), out.weights.end(), [](double w) { return !(w > 0.0); })) {
        throw MeasureError("quadrature lost positivity in floating point (node ratio " +
                               std::to_string(out.condition_estimate) + ")",
                           MeasureError::Minor::none, 0);
    }
    return out;
}

DiscreteMeasure solve_signed_measure(const MomentSequence& moments) {
    const std::size_t count = moments.size();
    if (count == 0) {
        throw ArgumentError("empty moment sequence");
    }
    // Nodes spread geometrically over the scale of successive moment ratios,
    // then the Vandermonde system sum_j w_j t_j^n = m_n is solved exactly.
    std::vector<Rational> nodes(count, Rational(1));
    if (count > 1) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = 0.0;
        for (std::size_t n = 0; n + 1 < count; ++n) {
            if (sgn(moments.exact[n]) <= 0 || sgn(moments.exact[n + 1]) <= 0) {
                lo = 1.0;
                hi = static_cast<double>(count);
                break;
            }
            const double ratio = to_double(moments.exact[n + 1] / moments.exact[n]);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        lo /= 4.0;
        for (std::size_t j = 0; j < count; ++j) {
            const double frac = static_cast<double>(j) / static_cast<double>(count - 1);
            nodes[j] = Rational(lo * std::pow(hi / lo, frac));
        }
    }
    std::vector<std::vector<Rational>> a(count, std::vector<Rational>(count + 1));
    for (std::size_t j = 0; j < count; ++j) {
        Rational power(1);
        for (std::size_t n = 0; n < count; ++n) {
            a[n][j] = power;
            power *= nodes[j];
        }
    }
    for (std::size_t n = 0; n < count; ++n) {
        a[n][count] = moments.exact[n];
    }
    const auto powers = a;
    for (std::size_t c = 0; c < count; ++c) {
        for (std::size_t i = c + 1; i < count; ++i) {
            const Rational factor = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= count; ++j) {
                a[i][j] -= factor * a[c][j];
            }
        }
    }
    std::vector<Rational> w(count);
    for (std::size_t c = count; c-- > 0;) {
        Rational rhs = a[c][count];
        for (std::size_t j = c + 1; j < count; ++j) {
            rhs -= a[c][j] * w[j];
        }
        w[c] = rhs / a[c][c];
    }
    DiscreteMeasure out;
    out.provenance = moments.provenance;
    out.levels = count;
    out.signed_weights = true;
    double amplification = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        out.nodes.push_back(to_double(nodes[j]));
        out.weights.push_back(to_double(w[j]));
    }
    for (std::size_t n = 0; n < count; ++n) {
        Rational total(0);
        for (std::size_t j = 0; j < count; ++j) {
            total += abs(w[j]) * powers[n][j];
        }
        amplification = std::max(amplification, to_double(total / abs(moments.exact[n])));
    }
    out.condition_estimate = amplification;
    return out;
}

double verify_identity(const AlgebraParams& params, StateKind kind, const DiscreteMeasure& measure, double phi,
                       std::size_t levels) {
    if (levels == 0) {
        levels = measure.levels;
    }
    if (levels > measure.levels) {
        throw ArgumentError("measure reproduces " + std::to_string(measure.levels) + " levels, " +
                            std::to_string(levels) + " requested");
    }
    if (kind != measure.provenance) {
        throw ArgumentError("measure was solved for a different kind of coherent state");
    }
    CoherentOptions options;
    options.min_terms = levels;
    std::vector<double> diag(levels, 0.0);
    for (std::size_t j = 0; j < measure.nodes.size(); ++j) {
        const Complex z(std::sqrt(measure.nodes[j]), 0.0);
        const CoherentState state = kind == StateKind::perelomov ? perelomov_state(params, z, phi, options)
                                                                 : bg_state(params, z, phi, options);
        for (std::size_t n = 0; n < levels && n < state.size(); ++n) {
            diag[n] += measure.weights[j] * std::norm(state.coeffs()[n]);
        }
    }
    double worst = 0.0;
    for (double v : diag) {
        worst = std::max(worst, std::abs(v - 1.0));
    }
    return worst;
}

}  // namespace pwh
