#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "infoatoms/dist.hpp"

namespace infoatoms {

using Json = nlohmann::ordered_json;

/// {"variables": [...], "alphabets": [[...]...], "pmf": [{"outcome": [...], "p": "n/d"}]}
Json to_json(const JointDistribution& d);
JointDistribution distribution_from_json(const Json& j, std::size_t support_cap = kDefaultSupportCap);

/// {"free_bits": [...], "xor_defs": {name: [...]}, "groupings": {var: [...]}, "target": [...]}
Json to_json(const CircuitSpec& spec);
CircuitSpec circuit_from_json(const Json& j);

bool looks_like_circuit(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// Loads either file kind, expanding circuits.
JointDistribution load_distribution(const std::filesystem::path& path,
                                    std::size_t support_cap = kDefaultSupportCap);

}  // namespace infoatoms
