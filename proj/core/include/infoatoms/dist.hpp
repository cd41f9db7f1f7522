#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "infoatoms/bits.hpp"
#include "infoatoms/rational.hpp"

namespace infoatoms {

inline constexpr std::size_t kDefaultSupportCap = std::size_t{1} << 20;

struct VariableId {
  std::string name;
  std::size_t index = 0;

  friend bool operator==(const VariableId&, const VariableId&) = default;
};

/// Outcome tuple: one index per variable into that variable's alphabet.
using Outcome = std::vector<std::uint32_t>;

struct PmfEntry {
  std::vector<std::string> outcome;
  Rational p;
};

/// Nonempty, sorted, duplicate-free set of variable positions.
class VariableGroup {
 public:
  explicit VariableGroup(std::vector<std::size_t> members);
  VariableGroup(std::initializer_list<std::size_t> members)
      : VariableGroup(std::vector<std::size_t>(members)) {}

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::size_t v) const;

  friend VariableGroup operator|(const VariableGroup& a, const VariableGroup& b);
  friend bool operator==(const VariableGroup&, const VariableGroup&) = default;

 private:
  std::vector<std::size_t> members_;
};

/// Exact probability mass function over named finite-alphabet variables.
/// Immutable once built; zero-mass outcomes never appear in the support and
/// the support is kept sorted by outcome tuple.
class JointDistribution {
 public:
  using Support = std::vector<std::pair<Outcome, Rational>>;

  static JointDistribution from_pmf(std::vector<std::string> variables,
                                    std::vector<std::vector<std::string>> alphabets,
                                    const std::vector<PmfEntry>& entries,
                                    std::size_t support_cap = kDefaultSupportCap);

  std::size_t variable_count() const noexcept { return variables_.size(); }
  const std::vector<VariableId>& variables() const noexcept { return variables_; }
  const std::vector<std::vector<std::string>>& alphabets() const noexcept { return alphabets_; }
  const Support& support() const noexcept { return support_; }
  std::size_t support_size() const noexcept { return support_.size(); }

  std::size_t index_of(std::string_view name) const;
  /// Resolves variable names, or 1-based positions written as digits when no
  /// variable carries that name.
  VariableGroup group(const std::vector<std::string>& selectors) const;
  VariableGroup group(std::initializer_list<std::string_view> names) const;
  VariableGroup all() const;

  std::vector<std::string> names(const VariableGroup& g) const;
  const std::string& label(std::size_t variable, std::uint32_t value) const {
    return alphabets_[variable][value];
  }

  friend bool operator==(const JointDistribution&, const JointDistribution&) = default;

 private:
  JointDistribution() = default;

  std::vector<VariableId> variables_;
  std::vector<std::vector<std::string>> alphabets_;
  Support support_;
};

/// Fair-coin circuit: free bits, XOR-derived bits, and groupings of bits
/// into (composite) variables. The target becomes the variable "T".
struct CircuitSpec {
  std::vector<std::string> free_bits;
  std::vector<std::pair<std::string, std::vector<std::string>>> xor_defs;
  std::vector<std::pair<std::string, std::vector<std::string>>> groupings;
  std::vector<std::string> target;

  friend bool operator==(const CircuitSpec&, const CircuitSpec&) = default;
};

inline constexpr std::string_view kTargetName = "T";

JointDistribution from_circuit(const CircuitSpec& spec,
                               std::size_t support_cap = kDefaultSupportCap);

/// Marginal pmf on the variables of g, in g's (sorted) order.
JointDistribution marginal(const JointDistribution& d, const VariableGroup& g);

/// Masses of the marginal on g, in outcome order.
std::vector<Rational> marginal_masses(const JointDistribution& d, std::span<const std::size_t> g);

Bits entropy(const JointDistribution& d, const VariableGroup& g);
Bits conditional_entropy(const JointDistribution& d, const VariableGroup& g,
                         const VariableGroup& given);
Bits mutual_information(const JointDistribution& d, const VariableGroup& a,
                        const VariableGroup& b);

/// Shannon entropy (bits) of a mass vector; exact when every mass is 2^-k.
Bits entropy_of_masses(std::span<const Rational> masses);

/// True iff every value of `given` occurring in the support maps to a single
/// value of g. An empty `given` means g must be constant.
bool is_deterministic(const JointDistribution& d, std::span<const std::size_t> g,
                      std::span<const std::size_t> given);
inline bool is_deterministic(const JointDistribution& d, const VariableGroup& g,
                             const VariableGroup& given) {
  return is_deterministic(d, g.members(), given.members());
}

/// H(a|b) = H(b|a) = 0, written a =det= b.
bool deterministically_equal(const JointDistribution& d, const VariableGroup& a,
                             const VariableGroup& b);

}  // namespace infoatoms
