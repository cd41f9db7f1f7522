#include "infoatoms/redundancy_gk.hpp"

#include <map>
#include <numeric>

#include "infoatoms/error.hpp"

namespace infoatoms {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> rank_;
};

}  // namespace

std::vector<std::size_t> CommonPartition::labels(std::size_t support_size) const {
  std::vector<std::size_t> out(support_size, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t pos : blocks[b]) out[pos] = b;
  }
  return out;
}

CommonPartition common_partition(const JointDistribution& d, std::span<const VariableGroup> sources) {
  if (sources.size() < 2) throw Error(ErrorCode::InvalidArgument, "at least two source groups required");
  const auto& support = d.support();
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "distribution has no support");
  for (const VariableGroup& g : sources) {
    for (std::size_t v : g.members()) {
      if (v >= d.variable_count()) throw Error(ErrorCode::UnknownVariable, "source variable out of range");
    }
  }

  DisjointSets sets(support.size());
  for (const VariableGroup& g : sources) {
    // first support position seen for each value of this source
    std::map<Outcome, std::size_t> first;
    for (std::size_t pos = 0; pos < support.size(); ++pos) {
      Outcome key;
      key.reserve(g.size());
      for (std::size_t v : g.members()) key.push_back(support[pos].first[v]);
      auto [it, inserted] = first.emplace(std::move(key), pos);
      if (!inserted) sets.unite(it->second, pos);
    }
  }

  CommonPartition cp;
  std::map<std::size_t, std::size_t> block_of_root;
  for (std::size_t pos = 0; pos < support.size(); ++pos) {
    const std::size_t root = sets.find(pos);
    auto [it, inserted] = block_of_root.emplace(root, cp.blocks.size());
    if (inserted) {
      cp.blocks.emplace_back();
      cp.block_probabilities.emplace_back(0);
    }
    cp.blocks[it->second].push_back(pos);
    cp.block_probabilities[it->second] += support[pos].second;
  }
  cp.value = entropy_of_masses(cp.block_probabilities);
  return cp;
}

Bits red3(const JointDistribution& d, const VariableGroup& s1, const VariableGroup& s2,
          const VariableGroup& s3) {
  const VariableGroup groups[] = {s1, s2, s3};
  return common_partition(d, groups).value;
}

Bits red2(const JointDistribution& d, const VariableGroup& s1, const VariableGroup& s2) {
  return mutual_information(d, s1, s2);
}

}  // namespace infoatoms
