#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pwh/coherent.hpp"
#include "pwh/errors.hpp"
#include "pwh/grassmann.hpp"

using namespace pwh;

namespace {

GrassmannElement random_element(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> g;
    std::vector<Complex> comps(dim);
    for (auto& c : comps) {
        c = {g(rng), g(rng)};
    }
    return GrassmannElement(dim, comps);
}

}  // namespace

TEST_CASE("algebra examples") {
    CHECK((GrassmannElement::theta(2) * GrassmannElement::theta(2)).is_zero());

    const auto one = GrassmannElement::one(3);
    const auto theta = GrassmannElement::theta(3);
    const auto product = (one + theta) * (one - theta);
    CHECK(product == GrassmannElement(3, {1.0, 0.0, -1.0}));

    std::mt19937_64 rng(1);
    const auto g = random_element(rng, 5);
    CHECK(g * GrassmannElement::one(5) == g);
    CHECK(g_scale(g, 2.0) == g + g);
}

TEST_CASE("nilpotency order") {
    for (std::size_t dim = 2; dim <= 12; ++dim) {
        const auto theta = GrassmannElement::theta(dim);
        CHECK(theta.pow(dim).is_zero());
        CHECK_FALSE(theta.pow(dim - 1).is_zero());
    }
}

TEST_CASE("ring axioms against the multiply-then-truncate oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 1 + static_cast<std::size_t>(trial % 12);
        const auto a = random_element(rng, dim);
        const auto b = random_element(rng, dim);
        const auto c = random_element(rng, dim);
        const auto oracle_ab = oracle::truncated_product(a.comps(), b.comps(), dim);
        CHECK(max_abs_diff(a * b, GrassmannElement(dim, oracle_ab)) < 1e-12);
        CHECK(max_abs_diff((a * b) * c, a * (b * c)) < 1e-11);
        CHECK(max_abs_diff(a * (b + c), a * b + a * c) < 1e-11);
        CHECK(max_abs_diff(a * b, b * a) < 1e-12);
    }
}

TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(GrassmannElement::one(2) * GrassmannElement::one(3), ArgumentError);
    CHECK_THROWS_AS(GrassmannElement::one(2) + GrassmannElement::one(3), ArgumentError);
    CHECK_THROWS_AS(GrassmannElement(0), ArgumentError);
    CHECK_THROWS_AS(GrassmannElement(2, {1.0}), ArgumentError);
}

TEST_CASE("fermionic state d = 2") {
    for (double phi : {0.0, 0.3, -2.1, 17.0}) {
        const auto state = bg_grassmann_state(AlgebraParams({Rational(-1)}), phi);
        REQUIRE(state.dim() == 2);
        CHECK(state.coeffs()[0] == GrassmannElement::one(2));
        CHECK(state.coeffs()[1] == GrassmannElement::monomial(2, 1, std::polar(1.0, -phi)));
        CHECK(check_bg_grassmann_eigen(state, build_rep(state.params(), 2)) <= 1e-15);
    }
}

TEST_CASE("d = 3, kappa = -1/2") {
    const auto state = bg_grassmann_state(AlgebraParams({Rational(-1, 2)}), 0.0);
    CHECK(state.coeffs()[2] == GrassmannElement::monomial(3, 2, 1.0));
    CHECK(state.coeffs()[1] == GrassmannElement::theta(3));
}

TEST_CASE("only the degree-n component is populated") {
    const AlgebraParams params({Rational(-1, 6), Rational(2, 3)});
    const auto state = bg_grassmann_state(params, 0.9);
    for (std::size_t n = 0; n < state.dim(); ++n) {
        for (std::size_t k = 0; k < state.dim(); ++k) {
            if (k != n) {
                CHECK(state.coeffs()[n][k] == Complex{});
            }
        }
        const double expected = 1.0 / std::sqrt(to_double(generalized_factorial(params, n)));
        CHECK(std::abs(state.coeffs()[n][n]) == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("eigen-residual over random finite params") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> phase(-6.0, 6.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto draw = oracle::random_finite(rng, 12, 3);
        const auto state = bg_grassmann_state(AlgebraParams(draw.kappas), phase(rng));
        CHECK(check_bg_grassmann_eigen(state, build_rep(state.params(), draw.d)) <= 1e-12);
    }
    const auto four = bg_grassmann_state(AlgebraParams({Rational(-1, 3)}), 1.234);
    CHECK(check_bg_grassmann_eigen(four, build_rep(four.params(), 4)) <= 1e-12);
}

TEST_CASE("truncated infinite algebra and the oscillator degeneration") {
    const AlgebraParams osc({Rational(0)});
    const auto state = bg_grassmann_state_truncated(osc, 30, 0.0);
    CHECK(check_bg_grassmann_eigen(state, build_rep(state.params(), 30)) <= 1e-12);
    // theta -> z = 1 recovers the Glauber coefficients.
    CoherentOptions opts;
    opts.min_terms = 30;
    const auto glauber = bg_state(osc, 1.0, 0.0, opts);
    for (std::size_t n = 0; n < 30; ++n) {
        CHECK(std::abs(state.coeffs()[n][n] - glauber.coeffs()[n]) < 1e-15);
    }
    CHECK_THROWS_AS(bg_grassmann_state(osc, 0.0), DomainError);
    CHECK_THROWS_AS(bg_grassmann_state_truncated(AlgebraParams({Rational(-1, 3)}), 3, 0.0), DomainError);
}

TEST_CASE("eigen check preconditions") {
    const auto state = bg_grassmann_state(AlgebraParams({Rational(-1, 3)}), 0.2);
    CHECK_THROWS_AS(check_bg_grassmann_eigen(state, build_rep(AlgebraParams({Rational(-1, 4)}, 0.2), 5)),
                    ArgumentError);
    CHECK_THROWS_AS(check_bg_grassmann_eigen(state, build_rep(state.params().with_phi(0.0), 4)), ArgumentError);
}

TEST_CASE("complex labels fail in finite dimension") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> angle(0.0, 6.28);
    for (std::size_t d = 2; d <= 12; ++d) {
        const AlgebraParams params({Rational(-1, static_cast<long>(d - 1))});
        CHECK(complex_substitution_residual(params, std::polar(1.0, angle(rng)), angle(rng)) > 1e-3);
    }
    CHECK(complex_substitution_residual(AlgebraParams({Rational(-1, 3)}), 0.0, 0.5) == 0.0);
}
