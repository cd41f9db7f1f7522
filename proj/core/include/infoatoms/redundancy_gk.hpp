#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "infoatoms/bits.hpp"
#include "infoatoms/dist.hpp"

namespace infoatoms {

/// The common part Q of several sources: the finest partition of the support
/// such that every source value falls inside a single block. Block indices
/// follow the smallest support position each block contains.
struct CommonPartition {
  std::vector<std::vector<std::size_t>> blocks;  // support positions
  std::vector<Rational> block_probabilities;
  Bits value;  // H(Q)

  std::size_t block_count() const noexcept { return blocks.size(); }
  /// Block index of every support position.
  std::vector<std::size_t> labels(std::size_t support_size) const;
};

/// Connected components of the "agrees on some source" graph over the
/// support. Requires at least two nonempty groups.
CommonPartition common_partition(const JointDistribution& d, std::span<const VariableGroup> sources);

/// Three-way redundancy: entropy of the common part of s1, s2, s3.
Bits red3(const JointDistribution& d, const VariableGroup& s1, const VariableGroup& s2,
          const VariableGroup& s3);

/// Pairwise redundancy, which is the mutual information I(s1;s2).
Bits red2(const JointDistribution& d, const VariableGroup& s1, const VariableGroup& s2);

}  // namespace infoatoms
