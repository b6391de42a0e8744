#include "pwh/io.hpp"

#include "pwh/errors.hpp"

namespace pwh::io {

Json encode(Complex z) {
    // + 0.0 turns -0.0 into 0.0.
    return Json::array({z.real() + 0.0, z.imag() + 0.0});
}

Complex decode_complex(const Json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

namespace {

Json encode_complex_list(const std::vector<Complex>& values) {
    Json out = Json::array();
    for (const auto& v : values) {
        out.push_back(encode(v));
    }
    return out;
}

std::vector<Complex> decode_complex_list(const Json& j) {
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        out.push_back(decode_complex(v));
    }
    return out;
}

}  // namespace

StateKind decode_kind(const std::string& name) {
    if (name == "perelomov") {
        return StateKind::perelomov;
    }
    if (name == "barut_girardello") {
        return StateKind::barut_girardello;
    }
    throw ArgumentError("unknown state kind '" + name + "'");
}

Json encode(const AlgebraParams& params) {
    Json kappas = Json::array();
    for (const auto& k : params.kappas()) {
        kappas.push_back(to_string(k));
    }
    Json dim;
    if (params.dimension().is_finite()) {
        dim = params.dimension().size();
    } else {
        dim = "infinite";
    }
    return Json{{"kappas", kappas}, {"phi", params.phi()}, {"r", params.r()}, {"dimension", dim}};
}

AlgebraParams decode_params(const Json& j) {
    std::vector<Rational> kappas;
    for (const auto& k : j.at("kappas")) {
        kappas.push_back(parse_rational(k.get<std::string>()));
    }
    return AlgebraParams(std::move(kappas), j.at("phi").get<double>());
}

Json encode(const CoherentState& state) {
    return Json{{"kind", to_string(state.kind())},
                {"params", encode(state.params())},
                {"z", encode(state.z())},
                {"normalized", state.normalized()},
                {"raw_norm", state.raw_norm()},
                {"cutoff", {{"exact", state.cutoff().exact}, {"tail_bound", state.cutoff().tail_bound}}},
                {"coeffs", encode_complex_list(state.coeffs())}};
}

CoherentState decode_coherent_state(const Json& j) {
    CutoffMeta cutoff{j.at("cutoff").at("exact").get<bool>(), j.at("cutoff").at("tail_bound").get<double>()};
    return CoherentState::from_parts(decode_kind(j.at("kind").get<std::string>()), decode_params(j.at("params")),
                                     decode_complex(j.at("z")), decode_complex_list(j.at("coeffs")),
                                     j.at("normalized").get<bool>(), cutoff, j.at("raw_norm").get<double>());
}

Json encode(const GrassmannState& state) {
    Json coeffs = Json::array();
    for (const auto& c : state.coeffs()) {
        coeffs.push_back(encode_complex_list(c.comps()));
    }
    return Json{{"params", encode(state.params())}, {"dim", state.dim()}, {"coeffs", coeffs}};
}

GrassmannState decode_grassmann_state(const Json& j) {
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<GrassmannElement> coeffs;
    for (const auto& c : j.at("coeffs")) {
        coeffs.emplace_back(dim, decode_complex_list(c));
    }
    return GrassmannState(decode_params(j.at("params")), dim, std::move(coeffs));
}

Json encode(const MomentSequence& moments) {
    Json exact = Json::array();
    for (const auto& m : moments.exact) {
        exact.push_back(to_string(m));
    }
    return Json{{"provenance", to_string(moments.provenance)},
                {"angular_normalization", moments.angular_normalization},
                {"exact", exact},
                {"values", moments.values()}};
}

MomentSequence decode_moments(const Json& j) {
    MomentSequence out;
    out.provenance = decode_kind(j.at("provenance").get<std::string>());
    out.angular_normalization = j.at("angular_normalization").get<double>();
    for (const auto& m : j.at("exact")) {
        out.exact.push_back(parse_rational(m.get<std::string>()));
    }
    return out;
}

Json encode(const DiscreteMeasure& measure) {
    Json out{{"provenance", to_string(measure.provenance)},
             {"levels", measure.levels},
             {"signed_weights", measure.signed_weights},
             {"condition_estimate", measure.condition_estimate},
             {"nodes", measure.nodes},
             {"weights", measure.weights}};
    out["extended_moment"] = measure.extended_moment ? Json(*measure.extended_moment) : Json(nullptr);
    return out;
}

DiscreteMeasure decode_measure(const Json& j) {
    DiscreteMeasure out;
    out.provenance = decode_kind(j.at("provenance").get<std::string>());
    out.levels = j.at("levels").get<std::size_t>();
    out.signed_weights = j.at("signed_weights").get<bool>();
    out.condition_estimate = j.at("condition_estimate").get<double>();
    out.nodes = j.at("nodes").get<std::vector<double>>();
    out.weights = j.at("weights").get<std::vector<double>>();
    if (!j.at("extended_moment").is_null()) {
        out.extended_moment = j.at("extended_moment").get<double>();
    }
    return out;
}

Json encode(const GrowthEstimate& e) {
    return Json{{"rho_hat", e.rho_hat},     {"sigma_hat", e.sigma_hat}, {"fit_begin", e.fit_begin},
                {"fit_end", e.fit_end},     {"fit_rms", e.fit_rms},     {"rho_raw", e.rho_raw},
                {"sigma_raw", e.sigma_raw}};
}

GrowthEstimate decode_growth(const Json& j) {
    GrowthEstimate e;
    e.rho_hat = j.at("rho_hat").get<double>();
    e.sigma_hat = j.at("sigma_hat").get<double>();
    e.fit_begin = j.at("fit_begin").get<std::size_t>();
    e.fit_end = j.at("fit_end").get<std::size_t>();
    e.fit_rms = j.at("fit_rms").get<double>();
    e.rho_raw = j.at("rho_raw").get<double>();
    e.sigma_raw = j.at("sigma_raw").get<double>();
    return e;
}

}  // namespace pwh::io
