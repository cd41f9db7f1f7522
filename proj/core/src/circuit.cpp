#include <algorithm>
#include <map>
#include <set>

#include "infoatoms/dist.hpp"
#include "infoatoms/error.hpp"

namespace infoatoms {

namespace {

// Evaluation order for the XOR definitions; rejects cycles and undefined operands.
std::vector<std::size_t> xor_order(const CircuitSpec& spec, const std::set<std::string>& free) {
  std::map<std::string, std::size_t> def_index;
  for (std::size_t i = 0; i < spec.xor_defs.size(); ++i) {
    const std::string& name = spec.xor_defs[i].first;
    if (free.contains(name) || !def_index.emplace(name, i).second) {
      throw Error(ErrorCode::InvalidArgument, "bit '" + name + "' defined twice");
    }
  }
  for (const auto& [name, operands] : spec.xor_defs) {
    if (operands.empty()) throw Error(ErrorCode::InvalidArgument, "xor '" + name + "' has no operands");
    for (const std::string& op : operands) {
      if (!free.contains(op) && !def_index.contains(op)) {
        throw Error(ErrorCode::UnknownBit, "operand '" + op + "' of '" + name + "' is not defined");
      }
    }
  }

  enum class Mark { None, Active, Done };
  std::vector<Mark> mark(spec.xor_defs.size(), Mark::None);
  std::vector<std::size_t> order;
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (mark[i] == Mark::Done) return;
    if (mark[i] == Mark::Active) {
      throw Error(ErrorCode::CyclicDefinition, "xor definitions through '" + spec.xor_defs[i].first + "' form a cycle");
    }
    mark[i] = Mark::Active;
    for (const std::string& op : spec.xor_defs[i].second) {
      if (auto it = def_index.find(op); it != def_index.end()) self(self, it->second);
    }
    mark[i] = Mark::Done;
    order.push_back(i);
  };
  for (std::size_t i = 0; i < spec.xor_defs.size(); ++i) visit(visit, i);
  return order;
}

std::vector<std::string> sorted_bits(std::vector<std::string> bits) {
  std::sort(bits.begin(), bits.end());
  return bits;
}

std::vector<std::string> bit_strings(std::size_t width) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < (std::size_t{1} << width); ++v) {
    std::string s(width, '0');
    for (std::size_t b = 0; b < width; ++b) {
      if ((v >> (width - 1 - b)) & 1u) s[b] = '1';
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

JointDistribution from_circuit(const CircuitSpec& spec, std::size_t support_cap) {
  std::set<std::string> free;
  for (const std::string& b : spec.free_bits) {
    if (!free.insert(b).second) throw Error(ErrorCode::InvalidArgument, "free bit '" + b + "' listed twice");
  }
  if (spec.free_bits.size() >= 63 || (std::size_t{1} << spec.free_bits.size()) > support_cap) {
    throw Error(ErrorCode::SupportTooLarge, std::to_string(spec.free_bits.size()) + " free bits exceed the support cap");
  }
  const std::vector<std::size_t> order = xor_order(spec, free);

  std::vector<std::pair<std::string, std::vector<std::string>>> vars = spec.groupings;
  if (!spec.target.empty()) vars.emplace_back(std::string(kTargetName), spec.target);
  if (vars.empty()) throw Error(ErrorCode::InvalidArgument, "circuit defines no variables");

  std::set<std::string> defined = free;
  for (const auto& [name, ops] : spec.xor_defs) defined.insert(name);
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> alphabets;
  std::vector<std::vector<std::string>> members;
  for (const auto& [name, bits] : vars) {
    if (bits.empty()) throw Error(ErrorCode::InvalidArgument, "variable '" + name + "' groups no bits");
    if (bits.size() > 20) throw Error(ErrorCode::SupportTooLarge, "variable '" + name + "' is too wide");
    for (const std::string& b : bits) {
      if (!defined.contains(b)) throw Error(ErrorCode::UnknownBit, "variable '" + name + "' uses undefined bit '" + b + "'");
    }
    names.push_back(name);
    members.push_back(sorted_bits(bits));
    alphabets.push_back(bit_strings(bits.size()));
  }

  const std::size_t n_free = spec.free_bits.size();
  const std::size_t count = std::size_t{1} << n_free;
  const Rational mass(1, count);
  std::vector<PmfEntry> entries;
  entries.reserve(count);
  std::map<std::string, int> value;
  for (std::size_t assignment = 0; assignment < count; ++assignment) {
    for (std::size_t b = 0; b < n_free; ++b) {
      value[spec.free_bits[b]] = static_cast<int>((assignment >> (n_free - 1 - b)) & 1u);
    }
    for (std::size_t i : order) {
      int x = 0;
      for (const std::string& op : spec.xor_defs[i].second) x ^= value.at(op);
      value[spec.xor_defs[i].first] = x;
    }
    PmfEntry e;
    e.p = mass;
    for (const auto& bits : members) {
      std::string label;
      for (const std::string& b : bits) label.push_back(value.at(b) ? '1' : '0');
      e.outcome.push_back(std::move(label));
    }
    entries.push_back(std::move(e));
  }

  // Distinct assignments may collapse onto one outcome when not every free
  // bit is grouped; merge them before validation.
  std::map<std::vector<std::string>, Rational> merged;
  for (auto& e : entries) merged[e.outcome] += e.p;
  std::vector<PmfEntry> pmf;
  pmf.reserve(merged.size());
  for (auto& [o, p] : merged) pmf.push_back({o, p});
  return JointDistribution::from_pmf(std::move(names), std::move(alphabets), pmf, support_cap);
}

}  // namespace infoatoms
