#include "infoatoms/io.hpp"

#include <fstream>
#include <sstream>

#include "infoatoms/error.hpp"

namespace infoatoms {

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_number_unsigned() || v.is_boolean()) return v.dump();
  throw Error(ErrorCode::ParseError, "outcome values must be strings or integers, got " + v.dump());
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const Json& v : j) out.push_back(scalar_text(v));
  return out;
}

std::vector<std::pair<std::string, std::vector<std::string>>> named_lists(const Json& j, const char* what) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an object");
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), string_list(it.value(), what));
  return out;
}

}  // namespace

Json to_json(const JointDistribution& d) {
  Json j;
  Json vars = Json::array();
  for (const auto& v : d.variables()) vars.push_back(v.name);
  j["variables"] = vars;
  j["alphabets"] = d.alphabets();
  Json pmf = Json::array();
  for (const auto& [o, p] : d.support()) {
    Json outcome = Json::array();
    for (std::size_t i = 0; i < o.size(); ++i) outcome.push_back(d.label(i, o[i]));
    pmf.push_back(Json{{"outcome", outcome}, {"p", to_string(p)}});
  }
  j["pmf"] = pmf;
  return j;
}

JointDistribution distribution_from_json(const Json& j, std::size_t support_cap) {
  try {
    auto variables = string_list(field(j, "variables"), "variables");
    std::vector<std::vector<std::string>> alphabets;
    const Json& alph = field(j, "alphabets");
    if (!alph.is_array()) throw Error(ErrorCode::ParseError, "alphabets must be a list of lists");
    for (const Json& a : alph) alphabets.push_back(string_list(a, "alphabet"));
    std::vector<PmfEntry> entries;
    const Json& pmf = field(j, "pmf");
    if (!pmf.is_array()) throw Error(ErrorCode::ParseError, "pmf must be a list");
    for (const Json& e : pmf) {
      PmfEntry entry;
      entry.outcome = string_list(field(e, "outcome"), "outcome");
      const Json& p = field(e, "p");
      entry.p = p.is_string() ? parse_rational(p.get<std::string>()) : parse_rational(p.dump());
      entries.push_back(std::move(entry));
    }
    return JointDistribution::from_pmf(std::move(variables), std::move(alphabets), entries, support_cap);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json to_json(const CircuitSpec& spec) {
  Json j;
  j["free_bits"] = spec.free_bits;
  Json xors = Json::object();
  for (const auto& [name, ops] : spec.xor_defs) xors[name] = ops;
  j["xor_defs"] = xors;
  Json groups = Json::object();
  for (const auto& [name, bits] : spec.groupings) groups[name] = bits;
  j["groupings"] = groups;
  j["target"] = spec.target;
  return j;
}

CircuitSpec circuit_from_json(const Json& j) {
  try {
    CircuitSpec spec;
    spec.free_bits = string_list(field(j, "free_bits"), "free_bits");
    if (j.contains("xor_defs")) spec.xor_defs = named_lists(j.at("xor_defs"), "xor_defs");
    spec.groupings = named_lists(field(j, "groupings"), "groupings");
    if (j.contains("target")) spec.target = string_list(j.at("target"), "target");
    return spec;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

bool looks_like_circuit(const Json& j) {
  return j.is_object() && j.contains("free_bits");
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

JointDistribution load_distribution(const std::filesystem::path& path, std::size_t support_cap) {
  const Json j = read_json_file(path);
  if (looks_like_circuit(j)) return from_circuit(circuit_from_json(j), support_cap);
  return distribution_from_json(j, support_cap);
}

}  // namespace infoatoms
