#pragma once

#include <string>

#include "json.hpp"
#include "rootforge/isolator.hpp"
#include "rootforge/topology.hpp"

namespace rootforge::cli {

using nlohmann::json;

// Dyadics are written as exact "m*2^e" strings.
std::string dyadic_string(const Dyadic& d);
Dyadic dyadic_from_string(const std::string& s);

json root_result_to_json(const RootResult& r);
// Reads back disks, multiplicities, real flags, b_final; lossless for those.
RootResult root_result_from_json(const json& j);

json topology_to_json(const Topology& t);
json solutions_to_json(const SolutionBoxes& s);

std::string root_result_to_text(const RootResult& r);
std::string topology_to_text(const Topology& t);
std::string solutions_to_text(const SolutionBoxes& s);

}  // namespace rootforge::cli
