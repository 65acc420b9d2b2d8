#pragma once

// JSON encoding of the public value types. Decoders throw InvalidInput on any
// schema mismatch.

#include "cdc/bounds.hpp"
#include "cdc/engine.hpp"
#include "cdc/oracle.hpp"
#include "cdc/schemes.hpp"

#include <json.hpp>

namespace cdc {

using Json = nlohmann::ordered_json;

Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

Json to_json(const Placement& p);
Placement placement_from_json(const Json& j);

Json to_json(const ShufflePlan& plan);
ShufflePlan plan_from_json(const Json& j);

// Integral rationals become JSON integers, the rest "p/q" strings.
Json to_json(const Rational& r);
Json to_json(const LoadReport& r);
Json to_json(const BoundReport& r);
Json to_json(const GammaDesign& d);
Json to_json(const SDesign16& d);
Json to_json(const DualDesign& d);
Json to_json(const Verification& v);
Json to_json(const LoadPair& p);

Json parse_json(const std::string& text);

} // namespace cdc
