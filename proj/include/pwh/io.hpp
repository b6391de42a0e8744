#pragma once

// JSON encodings of the library values. Complex numbers are [re, im],
// rationals are "p/q" strings. Every encoder has a matching decoder.

#include <json.hpp>

#include "pwh/algebra.hpp"
#include "pwh/bargmann.hpp"
#include "pwh/coherent.hpp"
#include "pwh/grassmann.hpp"
#include "pwh/measure.hpp"

namespace pwh::io {

using Json = nlohmann::ordered_json;

Json encode(Complex z);
Complex decode_complex(const Json& j);

Json encode(const AlgebraParams& params);
AlgebraParams decode_params(const Json& j);

Json encode(const CoherentState& state);
CoherentState decode_coherent_state(const Json& j);

Json encode(const GrassmannState& state);
GrassmannState decode_grassmann_state(const Json& j);

Json encode(const MomentSequence& moments);
MomentSequence decode_moments(const Json& j);

Json encode(const DiscreteMeasure& measure);
DiscreteMeasure decode_measure(const Json& j);

Json encode(const GrowthEstimate& estimate);
GrowthEstimate decode_growth(const Json& j);

StateKind decode_kind(const std::string& name);

}  // namespace pwh::io
