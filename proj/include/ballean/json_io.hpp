#pragma once

#include "ballean/hyper.hpp"

namespace bln {

// {"ground": {"finite": n} | {"naturals": {"horizon": h}}}
GroundSet parse_ground(const nlohmann::json& j);
nlohmann::json ground_to_json(const GroundSet& g);

// Full ideal model: {"ground": ..., "ideal": {...}}. The ideal object carries
// exactly one of: principal / sizeBelow / generatedBy / explicit / frechet.
Ideal parse_ideal_model(const nlohmann::json& j);
// Fragment form: the {"principal": [...]}-style object plus a ground.
Ideal parse_ideal_fragment(const nlohmann::json& j, GroundSet ground);
nlohmann::json ideal_to_json(const Ideal& ideal);

// {"ballean": {"pointIdeal": <ideal model>} | {"iary": ...} |
//  {"sub": {"of": <ballean>, "support": [..]}} |
//  {"exp"|"expStar"|"flat": <ballean>} | {"cartesian"|"macrocube": <ideal model>}}
BalleanPtr parse_ballean(const nlohmann::json& j);
nlohmann::json ballean_to_json_echo(const nlohmann::json& j);  // canonicalized echo

nlohmann::json masks_to_json(const std::vector<Mask>& ms);
std::vector<int> parse_elems(const nlohmann::json& j);

}  // namespace bln
