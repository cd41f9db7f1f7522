#include "infoatoms/dist.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "infoatoms/error.hpp"

namespace infoatoms {

VariableGroup::VariableGroup(std::vector<std::size_t> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw Error(ErrorCode::InvalidArgument, "variable group must be nonempty");
}

bool VariableGroup::contains(std::size_t v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VariableGroup operator|(const VariableGroup& a, const VariableGroup& b) {
  std::vector<std::size_t> m = a.members_;
  m.insert(m.end(), b.members_.begin(), b.members_.end());
  return VariableGroup(std::move(m));
}

JointDistribution JointDistribution::from_pmf(std::vector<std::string> variables,
                                              std::vector<std::vector<std::string>> alphabets,
                                              const std::vector<PmfEntry>& entries,
                                              std::size_t support_cap) {
  if (variables.empty()) throw Error(ErrorCode::InvalidArgument, "no variables declared");
  if (alphabets.size() != variables.size()) {
    throw Error(ErrorCode::InvalidArgument, "one alphabet per variable required");
  }
  if (entries.empty()) throw Error(ErrorCode::InvalidArgument, "pmf has no entries");

  JointDistribution d;
  std::set<std::string> seen_names;
  std::vector<std::unordered_map<std::string, std::uint32_t>> lookup(variables.size());
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
    if (!seen_names.insert(variables[i]).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate variable name '" + variables[i] + "'");
    }
    if (alphabets[i].empty()) {
      throw Error(ErrorCode::InvalidArgument, "empty alphabet for '" + variables[i] + "'");
    }
    for (std::uint32_t k = 0; k < alphabets[i].size(); ++k) {
      if (!lookup[i].emplace(alphabets[i][k], k).second) {
        throw Error(ErrorCode::InvalidArgument,
                    "duplicate alphabet value '" + alphabets[i][k] + "' for '" + variables[i] + "'");
      }
    }
    d.variables_.push_back({variables[i], i});
  }

  std::map<Outcome, Rational> mass;
  Rational total = 0;
  for (const PmfEntry& e : entries) {
    if (e.outcome.size() != variables.size()) {
      throw Error(ErrorCode::AlphabetViolation, "outcome length differs from variable count");
    }
    if (e.p < 0) throw Error(ErrorCode::InvalidArgument, "negative probability " + e.p.get_str());
    Outcome o(variables.size());
    for (std::size_t i = 0; i < variables.size(); ++i) {
      auto it = lookup[i].find(e.outcome[i]);
      if (it == lookup[i].end()) {
        throw Error(ErrorCode::AlphabetViolation,
                    "value '" + e.outcome[i] + "' not in alphabet of '" + variables[i] + "'");
      }
      o[i] = it->second;
    }
    if (mass.contains(o)) throw Error(ErrorCode::DuplicateOutcome, "outcome listed twice");
    total += e.p;
    if (e.p != 0) mass.emplace(std::move(o), e.p);
  }
  if (total != 1) throw Error(ErrorCode::SumNotOne, "probabilities sum to " + total.get_str());
  if (mass.size() > support_cap) {
    throw Error(ErrorCode::SupportTooLarge, std::to_string(mass.size()) + " outcomes exceed the cap");
  }
  d.alphabets_ = std::move(alphabets);
  d.support_.assign(mass.begin(), mass.end());
  return d;
}

std::size_t JointDistribution::index_of(std::string_view name) const {
  for (const VariableId& v : variables_) {
    if (v.name == name) return v.index;
  }
  throw Error(ErrorCode::UnknownVariable, "no variable named '" + std::string(name) + "'");
}

VariableGroup JointDistribution::group(const std::vector<std::string>& selectors) const {
  std::vector<std::size_t> idx;
  for (const std::string& s : selectors) {
    const bool named = std::any_of(variables_.begin(), variables_.end(),
                                   [&](const VariableId& v) { return v.name == s; });
    if (named) {
      idx.push_back(index_of(s));
      continue;
    }
    const bool numeric = !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
    if (numeric) {
      const std::size_t pos = std::stoul(s);
      if (pos >= 1 && pos <= variables_.size()) {
        idx.push_back(pos - 1);
        continue;
      }
    }
    throw Error(ErrorCode::UnknownVariable, "no variable named '" + s + "'");
  }
  if (idx.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable selection");
  return VariableGroup(std::move(idx));
}

VariableGroup JointDistribution::group(std::initializer_list<std::string_view> names) const {
  std::vector<std::string> s;
  for (auto n : names) s.emplace_back(n);
  return group(s);
}

VariableGroup JointDistribution::all() const {
  std::vector<std::size_t> idx(variables_.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return VariableGroup(std::move(idx));
}

std::vector<std::string> JointDistribution::names(const VariableGroup& g) const {
  std::vector<std::string> out;
  for (std::size_t v : g.members()) out.push_back(variables_.at(v).name);
  return out;
}

namespace {

void check_members(const JointDistribution& d, std::span<const std::size_t> g) {
  for (std::size_t v : g) {
    if (v >= d.variable_count()) {
      throw Error(ErrorCode::UnknownVariable, "variable position " + std::to_string(v) + " out of range");
    }
  }
}

Outcome project(const Outcome& o, std::span<const std::size_t> g) {
  Outcome p(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) p[i] = o[g[i]];
  return p;
}

std::map<Outcome, Rational> accumulate(const JointDistribution& d, std::span<const std::size_t> g) {
  check_members(d, g);
  std::map<Outcome, Rational> m;
  for (const auto& [o, p] : d.support()) m[project(o, g)] += p;
  return m;
}

}  // namespace

JointDistribution marginal(const JointDistribution& d, const VariableGroup& g) {
  const auto m = accumulate(d, g.members());
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> alphabets;
  for (std::size_t v : g.members()) {
    names.push_back(d.variables()[v].name);
    alphabets.push_back(d.alphabets()[v]);
  }
  std::vector<PmfEntry> entries;
  entries.reserve(m.size());
  for (const auto& [o, p] : m) {
    PmfEntry e;
    for (std::size_t i = 0; i < o.size(); ++i) e.outcome.push_back(alphabets[i][o[i]]);
    e.p = p;
    entries.push_back(std::move(e));
  }
  return JointDistribution::from_pmf(std::move(names), std::move(alphabets), entries,
                                     std::max(entries.size(), kDefaultSupportCap));
}

std::vector<Rational> marginal_masses(const JointDistribution& d, std::span<const std::size_t> g) {
  std::vector<Rational> out;
  if (g.empty()) {
    out.emplace_back(1);
    return out;
  }
  for (auto& [o, p] : accumulate(d, g)) out.push_back(p);
  return out;
}

Bits entropy_of_masses(std::span<const Rational> masses) {
  bool dyadic = true;
  Rational exact = 0;
  for (const Rational& p : masses) {
    if (auto k = dyadic_exponent(p)) {
      exact += p * static_cast<long>(*k);
    } else {
      dyadic = false;
      break;
    }
  }
  if (dyadic) return Bits(exact);
  long double h = 0;
  for (const Rational& p : masses) {
    const long double x = p.get_d();
    if (x > 0) h -= x * std::log2(x);
  }
  return Bits(static_cast<double>(h));
}

Bits entropy(const JointDistribution& d, const VariableGroup& g) {
  const auto m = marginal_masses(d, g.members());
  return entropy_of_masses(m);
}

Bits conditional_entropy(const JointDistribution& d, const VariableGroup& g,
                         const VariableGroup& given) {
  if (is_deterministic(d, g, given)) return Bits(Rational(0));
  return entropy(d, g | given) - entropy(d, given);
}

Bits mutual_information(const JointDistribution& d, const VariableGroup& a,
                        const VariableGroup& b) {
  return entropy(d, a) + entropy(d, b) - entropy(d, a | b);
}

bool is_deterministic(const JointDistribution& d, std::span<const std::size_t> g,
                      std::span<const std::size_t> given) {
  check_members(d, g);
  check_members(d, given);
  std::map<Outcome, Outcome> image;
  for (const auto& [o, p] : d.support()) {
    auto key = project(o, given);
    auto val = project(o, g);
    auto [it, inserted] = image.emplace(std::move(key), val);
    if (!inserted && it->second != val) return false;
  }
  return true;
}

bool deterministically_equal(const JointDistribution& d, const VariableGroup& a,
                             const VariableGroup& b) {
  return is_deterministic(d, a, b) && is_deterministic(d, b, a);
}

}  // namespace infoatoms
