#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infoatoms {

/// Nonempty set of source indices; bit i stands for source i+1.
using SourceSet = std::uint32_t;

inline constexpr std::size_t kMaxSources = 4;

/// Indices of a source set in increasing order (1-based).
std::vector<int> source_indices(SourceSet s);
/// Orders sets by size, then lexicographically by their index lists.
bool source_set_less(SourceSet a, SourceSet b);

/// A nonempty family of nonempty source sets, none contained in another,
/// stored in canonical order.
class Antichain {
 public:
  Antichain() = default;
  /// Validates and canonicalizes; throws InvalidArgument on an empty family,
  /// an empty element, or nested elements.
  static Antichain from_sets(std::vector<SourceSet> sets);
  /// Parses the index notation "{{1}{23}}".
  static Antichain parse(std::string_view text);

  const std::vector<SourceSet>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// Union of all elements.
  SourceSet support() const noexcept;
  bool has_singleton() const noexcept;
  bool contains_element(SourceSet s) const noexcept;
  std::string to_string() const;

  friend bool operator==(const Antichain&, const Antichain&) = default;
  friend std::strong_ordering operator<=>(const Antichain& a, const Antichain& b);

 private:
  std::vector<SourceSet> elements_;
};

/// beta precedes alpha: every A in alpha contains some B in beta.
bool precedes(const Antichain& beta, const Antichain& alpha);

enum class LatticeKind { Full, Half };

/// Antichains over n sources with their order. Nodes are sorted by down-set
/// size, then canonically, which is a linear extension of the order.
class AntichainLattice {
 public:
  /// All antichains over {1..n}; 1 <= n <= 4, TooManySources beyond.
  static AntichainLattice enumerate_full(std::size_t n);
  /// The three-source half lattice: antichains holding a singleton.
  static AntichainLattice enumerate_half(std::size_t n);

  std::size_t source_count() const noexcept { return n_; }
  LatticeKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<Antichain>& nodes() const noexcept { return nodes_; }
  const Antichain& node(std::size_t i) const { return nodes_.at(i); }

  std::optional<std::size_t> find(const Antichain& a) const;
  /// Throws NotANode when a is not in the lattice.
  std::size_t index_of(const Antichain& a) const;

  bool leq(const Antichain& beta, const Antichain& alpha) const;
  bool leq_index(std::size_t beta, std::size_t alpha) const {
    return order_[beta * nodes_.size() + alpha] != 0;
  }
  std::vector<Antichain> downset(const Antichain& alpha) const;
  std::vector<std::size_t> downset_indices(std::size_t alpha) const;

 private:
  AntichainLattice(std::size_t n, LatticeKind kind, std::vector<Antichain> nodes);

  std::size_t n_ = 0;
  LatticeKind kind_ = LatticeKind::Full;
  std::vector<Antichain> nodes_;
  std::vector<std::uint8_t> order_;  // row beta, column alpha
};

/// Antichains of the full n-source lattice whose elements all lie inside `within`.
std::vector<Antichain> antichains_within(const AntichainLattice& full, SourceSet within);

}  // namespace infoatoms
