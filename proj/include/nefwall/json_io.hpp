#pragma once

#include <json.hpp>

#include "nefwall/moduli.hpp"

namespace nefwall {

using Json = nlohmann::ordered_json;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that, so deep chain members survive a round trip.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const Rat& r);  // {"num": string, "den": string}
Rat rat_from_json(const Json& j);

Json to_json(const Divisor& d);  // {"d": int, "m": [int, ...]}
Divisor divisor_from_json(const Json& j);

Json to_json(const Convergent& c);  // {"k": int, "p": string, "q": string}
Convergent convergent_from_json(const Json& j);

Json to_json(const PellSolution& s);  // {"x": string, "y": string}
PellSolution pell_from_json(const Json& j);

// {"fundamental": {"d": string, "m": string},
//  "transform": {"a": ..., "b": ..., "c": ..., "e": ..., "f": ..., "g": ...}}
Json to_json(const SolutionChain& c);
std::pair<std::pair<Int, Int>, AffineMap> chain_from_json(const Json& j);

Json to_json(const TypeOrbit& o);
Json to_json(const WallEvent& e);
Json to_json(const Component& c);

}  // namespace nefwall
