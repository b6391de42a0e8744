#include "pwh/algebra.hpp"

#include <cmath>
#include <string>

#include "pwh/errors.hpp"

namespace pwh {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw InvalidParams("empty rational literal");
    }
    if (s.find_first_of(".eE") != std::string::npos) {
        throw InvalidParams("rational '" + s + "' must be written as p/q, decimals are not accepted");
    }
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) {
            i = 1;
        }
        if (i == part.size()) {
            return false;
        }
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9') {
                return false;
            }
        }
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw InvalidParams("malformed rational '" + s + "'");
    }
    Integer p(num[0] == '+' ? num.substr(1) : num, 10);
    Integer q(den, 10);
    if (q == 0) {
        throw InvalidParams("zero denominator in '" + s + "'");
    }
    Rational out(p, q);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_str();
}

RepDimension RepDimension::finite(std::size_t d) {
    if (d < 2) {
        throw InvalidParams("finite representation needs d >= 2");
    }
    RepDimension out;
    out.d_ = d;
    return out;
}

std::size_t RepDimension::size() const {
    if (!d_) {
        throw ArgumentError("infinite-dimensional representation has no finite size");
    }
    return *d_;
}

AlgebraParams::AlgebraParams(std::vector<Rational> kappas, double phi)
    : kappas_(std::move(kappas)), phi_(phi) {
    if (kappas_.empty()) {
        throw InvalidParams("at least one kappa is required (r >= 1)");
    }
    for (auto& k : kappas_) {
        k.canonicalize();
    }
    for (std::size_t i = 1; i < kappas_.size(); ++i) {
        if (kappas_[i] < 0) {
            throw InvalidParams("kappa_" + std::to_string(i + 1) + " = " + to_string(kappas_[i]) +
                                " is negative; only kappa_1 may be negative");
        }
    }
    if (kappas_[0] < 0) {
        const Rational k = -1 / kappas_[0];
        if (!is_integer(k)) {
            throw InvalidParams("kappa_1 = " + to_string(kappas_[0]) +
                                " is negative but -1/kappa_1 = " + to_string(k) + " is not an integer");
        }
        dim_ = RepDimension::finite(static_cast<std::size_t>(k.get_num().get_ui()) + 1);
    }
    kappas_d_.reserve(kappas_.size());
    for (const auto& k : kappas_) {
        kappas_d_.push_back(k.get_d());
    }
}

AlgebraParams AlgebraParams::from_ells(const std::vector<long>& ells, double phi) {
    std::vector<Rational> kappas;
    kappas.reserve(ells.size());
    for (long ell : ells) {
        if (ell <= 0) {
            throw InvalidParams("ell values must be positive integers, got " + std::to_string(ell));
        }
        kappas.emplace_back(1, ell);
    }
    return AlgebraParams(std::move(kappas), phi);
}

AlgebraParams AlgebraParams::with_phi(double phi) const {
    AlgebraParams out = *this;
    out.phi_ = phi;
    return out;
}

std::optional<std::vector<long>> AlgebraParams::reciprocal_ells() const {
    std::vector<long> ells;
    for (const auto& k : kappas_) {
        if (k <= 0 || k.get_num() != 1 || !k.get_den().fits_slong_p()) {
            return std::nullopt;
        }
        ells.push_back(k.get_den().get_si());
    }
    return ells;
}

bool AlgebraParams::same_algebra(const AlgebraParams& other) const {
    return kappas_ == other.kappas_;
}

Rational structure_function(const AlgebraParams& params, std::size_t n) {
    Rational f(static_cast<unsigned long>(n));
    const Rational shift = Rational(static_cast<unsigned long>(n)) - 1;
    for (const auto& k : params.kappas()) {
        f *= 1 + k * shift;
    }
    return f;
}

Rational commutator_gap(const AlgebraParams& params, std::size_t n) {
    return structure_function(params, n + 1) - structure_function(params, n);
}

RepDimension classify(const AlgebraParams& params) {
    return params.dimension();
}

Rational generalized_factorial(const AlgebraParams& params, std::size_t n) {
    if (params.dimension().is_finite() && n >= params.dimension().size()) {
        throw ArgumentError("F(n)! needs n <= d - 1 = " + std::to_string(params.dimension().size() - 1) +
                            ", got n = " + std::to_string(n));
    }
    Rational out(1);
    for (std::size_t k = 1; k <= n; ++k) {
        out *= structure_function(params, k);
    }
    return out;
}

double structure_value(const AlgebraParams& params, std::size_t n) {
    const double x = static_cast<double>(n);
    double f = x;
    for (double k : params.kappas_d_) {
        f *= 1.0 + k * (x - 1.0);
    }
    return f;
}

std::vector<double> log_generalized_factorials(const AlgebraParams& params, std::size_t n_max) {
    std::vector<double> out(n_max + 1, 0.0);
    for (std::size_t k = 1; k <= n_max; ++k) {
        const double x = static_cast<double>(k);
        double term = std::log(x);
        for (const auto& kappa : params.kappas()) {
            const double factor = 1.0 + kappa.get_d() * (x - 1.0);
            if (!(factor > 0.0)) {
                throw ArgumentError("F(" + std::to_string(k) + ") is not positive");
            }
            term += std::log1p(kappa.get_d() * (x - 1.0));
        }
        out[k] = out[k - 1] + term;
    }
    return out;
}

LadderRep::LadderRep(AlgebraParams params, ComplexMatrix lower, std::optional<std::size_t> truncation)
    : params_(std::move(params)),
      lower_(std::move(lower)),
      raise_(lower_.adjoint()),
      number_(RealMatrix::Zero(lower_.rows(), lower_.cols())),
      truncation_(truncation) {
    for (Eigen::Index n = 0; n < number_.rows(); ++n) {
        number_(n, n) = static_cast<double>(n);
    }
}

namespace {

ComplexMatrix lower_matrix(const AlgebraParams& params, std::size_t window, std::size_t last_transition) {
    ComplexMatrix lower = ComplexMatrix::Zero(window, window);
    for (std::size_t n = 1; n < window && n < last_transition; ++n) {
        const double f = to_double(structure_function(params, n));
        const double gap = to_double(structure_function(params, n) - structure_function(params, n - 1));
        lower(n - 1, n) = std::polar(std::sqrt(f), gap * params.phi());
    }
    return lower;
}

}  // namespace

LadderRep build_rep(const AlgebraParams& params, std::size_t window) {
    if (window == 0) {
        throw ArgumentError("window must be positive");
    }
    if (params.dimension().is_finite() && window != params.dimension().size()) {
        throw ArgumentError("finite representation has dimension d = " +
                            std::to_string(params.dimension().size()) + ", window " +
                            std::to_string(window) + " does not match");
    }
    return LadderRep(params, lower_matrix(params, window, window), std::nullopt);
}

LadderRep build_truncated_rep(const AlgebraParams& params, std::size_t window, std::size_t s) {
    if (params.dimension().is_finite()) {
        throw ArgumentError("truncation applies to infinite-dimensional representations");
    }
    if (s == 0 || s >= window) {
        throw ArgumentError("truncation order s = " + std::to_string(s) + " must satisfy 1 <= s < window = " +
                            std::to_string(window));
    }
    return LadderRep(params, lower_matrix(params, window, s), s);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

}  // namespace pwh
