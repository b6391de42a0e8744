#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pwh/errors.hpp"
#include "pwh/io.hpp"

using namespace pwh;
using io::Json;

namespace {

template <class T>
Json through_text(const T& value) {
    return Json::parse(io::encode(value).dump());
}

}  // namespace

TEST_CASE("complex and params round trip") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const Complex z = oracle::random_complex(rng, 1e3);
        CHECK(io::decode_complex(through_text(z)) == z);

        const auto draw = trial % 2 ? oracle::random_finite(rng, 12, 4) : oracle::random_infinite(rng, 4);
        const AlgebraParams params(draw.kappas, 0.01 * trial);
        const auto back = io::decode_params(through_text(params));
        CHECK(back.kappas() == params.kappas());
        CHECK(back.phi() == params.phi());
        CHECK(back.dimension() == params.dimension());
    }
    const auto j = io::encode(AlgebraParams({Rational(-2, 8), Rational(6, 3)}));
    CHECK(j.at("kappas") == Json::array({"-1/4", "2"}));
    CHECK(j.at("dimension") == 5);
}

TEST_CASE("malformed params are rejected") {
    CHECK_THROWS_AS(io::decode_params(Json::parse(R"({"kappas": ["0.5"], "phi": 0})")), InvalidParams);
    CHECK_THROWS_AS(io::decode_params(Json::parse(R"({"kappas": ["-1/3", "-1/2"], "phi": 0})")), InvalidParams);
    CHECK_THROWS(io::decode_params(Json::parse(R"({"phi": 0})")));
    CHECK_THROWS_AS(io::decode_kind("coherent"), ArgumentError);
}

TEST_CASE("coherent states round trip") {
    std::mt19937_64 rng(3);
    CoherentOptions opts;
    for (int trial = 0; trial < 30; ++trial) {
        opts.normalize = trial % 2 == 0;
        const auto draw = oracle::random_finite(rng, 10, 3);
        const AlgebraParams params(draw.kappas);
        const Complex z = oracle::random_complex(rng, 3.0);
        const auto state = trial % 3 == 0 ? bg_state(AlgebraParams::from_ells({1 + trial % 4}), z, 0.2, opts)
                                          : perelomov_state(params, z, 0.2 * trial, opts);
        const auto back = io::decode_coherent_state(through_text(state));
        CHECK(back.kind() == state.kind());
        CHECK(back.z() == state.z());
        CHECK(back.phi() == state.phi());
        CHECK(back.coeffs() == state.coeffs());
        CHECK(back.normalized() == state.normalized());
        CHECK(back.cutoff().exact == state.cutoff().exact);
        CHECK(back.cutoff().tail_bound == state.cutoff().tail_bound);
        CHECK(back.raw_norm() == state.raw_norm());
        CHECK(io::encode(back).dump() == io::encode(state).dump());
    }
}

TEST_CASE("Grassmann states round trip") {
    for (long m = 1; m <= 8; ++m) {
        const AlgebraParams params({Rational(-1, m), Rational(m, 3)});
        const auto state = bg_grassmann_state(params, 0.3 * static_cast<double>(m));
        const auto back = io::decode_grassmann_state(through_text(state));
        REQUIRE(back.dim() == state.dim());
        for (std::size_t n = 0; n < state.dim(); ++n) {
            CHECK(back.coeffs()[n] == state.coeffs()[n]);
        }
        CHECK(back.params().kappas() == state.params().kappas());
    }
}

TEST_CASE("moments and measures round trip") {
    const auto moments = moments_for(AlgebraParams::from_ells({2, 3}), StateKind::barut_girardello, 11);
    const auto mback = io::decode_moments(through_text(moments));
    CHECK(mback.exact == moments.exact);
    CHECK(mback.provenance == moments.provenance);
    CHECK(mback.angular_normalization == moments.angular_normalization);

    const auto measure = solve_measure(moments);
    const auto back = io::decode_measure(through_text(measure));
    CHECK(back.nodes == measure.nodes);
    CHECK(back.weights == measure.weights);
    CHECK(back.levels == measure.levels);
    CHECK(back.provenance == measure.provenance);
    CHECK(back.extended_moment.has_value() == measure.extended_moment.has_value());
    CHECK(*back.extended_moment == *measure.extended_moment);
    CHECK(back.condition_estimate == measure.condition_estimate);
    CHECK(back.signed_weights == measure.signed_weights);
}

TEST_CASE("growth estimates round trip") {
    const auto est = estimate_growth(EntireSeries::bg_kernel(AlgebraParams::from_ells({2}), 1000));
    const auto back = io::decode_growth(through_text(est));
    CHECK(back.rho_hat == est.rho_hat);
    CHECK(back.sigma_hat == est.sigma_hat);
    CHECK(back.fit_begin == est.fit_begin);
    CHECK(back.fit_end == est.fit_end);
    CHECK(back.fit_rms == est.fit_rms);
    CHECK(back.rho_raw == est.rho_raw);
    CHECK(back.sigma_raw == est.sigma_raw);
}
