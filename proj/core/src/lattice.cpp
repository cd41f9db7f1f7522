#include "infoatoms/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "infoatoms/error.hpp"

namespace infoatoms {

std::vector<int> source_indices(SourceSet s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1) {
    if (s & 1u) out.push_back(i + 1);
  }
  return out;
}

bool source_set_less(SourceSet a, SourceSet b) {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // lowest differing index decides
  const SourceSet diff = a ^ b;
  if (diff == 0) return false;
  const SourceSet low = diff & (~diff + 1);
  return (a & low) != 0;
}

Antichain Antichain::from_sets(std::vector<SourceSet> sets) {
  if (sets.empty()) throw Error(ErrorCode::InvalidArgument, "antichain must be nonempty");
  std::sort(sets.begin(), sets.end(), source_set_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i] == 0) throw Error(ErrorCode::InvalidArgument, "antichain elements must be nonempty");
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && (sets[i] & sets[j]) == sets[i]) {
        throw Error(ErrorCode::InvalidArgument, "antichain elements must not contain one another");
      }
    }
  }
  Antichain a;
  a.elements_ = std::move(sets);
  return a;
}

Antichain Antichain::parse(std::string_view text) {
  auto fail = [&]() -> Error {
    return Error(ErrorCode::ParseError, "malformed antichain '" + std::string(text) + "'");
  };
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != ',') s.push_back(c);
  }
  if (s.size() < 4 || s.front() != '{' || s.back() != '}') throw fail();
  std::vector<SourceSet> sets;
  std::size_t pos = 1;
  while (pos + 1 < s.size()) {
    if (s[pos] != '{') throw fail();
    ++pos;
    SourceSet cur = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      const int idx = s[pos] - '0';
      if (idx < 1 || idx > static_cast<int>(kMaxSources)) throw fail();
      const SourceSet bit = SourceSet{1} << (idx - 1);
      if (cur & bit) throw fail();
      cur |= bit;
      ++pos;
    }
    if (pos >= s.size() || s[pos] != '}' || cur == 0) throw fail();
    ++pos;
    sets.push_back(cur);
  }
  if (pos != s.size() - 1) throw fail();
  std::vector<SourceSet> check = sets;
  std::sort(check.begin(), check.end());
  if (std::adjacent_find(check.begin(), check.end()) != check.end()) throw fail();
  try {
    return from_sets(std::move(sets));
  } catch (const Error&) {
    throw fail();
  }
}

SourceSet Antichain::support() const noexcept {
  SourceSet u = 0;
  for (SourceSet e : elements_) u |= e;
  return u;
}

bool Antichain::has_singleton() const noexcept {
  return std::any_of(elements_.begin(), elements_.end(), [](SourceSet e) { return std::popcount(e) == 1; });
}

bool Antichain::contains_element(SourceSet s) const noexcept {
  return std::find(elements_.begin(), elements_.end(), s) != elements_.end();
}

std::string Antichain::to_string() const {
  std::string out = "{";
  for (SourceSet e : elements_) {
    out.push_back('{');
    for (int i : source_indices(e)) out.push_back(static_cast<char>('0' + i));
    out.push_back('}');
  }
  out.push_back('}');
  return out;
}

std::strong_ordering operator<=>(const Antichain& a, const Antichain& b) {
  const std::size_t n = std::min(a.elements_.size(), b.elements_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.elements_[i] == b.elements_[i]) continue;
    return source_set_less(a.elements_[i], b.elements_[i]) ? std::strong_ordering::less
                                                           : std::strong_ordering::greater;
  }
  return a.elements_.size() <=> b.elements_.size();
}

bool precedes(const Antichain& beta, const Antichain& alpha) {
  for (SourceSet a : alpha.elements()) {
    const bool covered = std::any_of(beta.elements().begin(), beta.elements().end(),
                                     [a](SourceSet b) { return (b & a) == b; });
    if (!covered) return false;
  }
  return true;
}

AntichainLattice::AntichainLattice(std::size_t n, LatticeKind kind, std::vector<Antichain> nodes)
    : n_(n), kind_(kind), nodes_(std::move(nodes)) {
  const std::size_t m = nodes_.size();
  std::vector<std::uint8_t> raw(m * m);
  std::vector<std::size_t> down(m, 0);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t a = 0; a < m; ++a) {
      raw[b * m + a] = precedes(nodes_[b], nodes_[a]) ? 1 : 0;
      down[a] += raw[b * m + a];
    }
  }
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
    if (down[x] != down[y]) return down[x] < down[y];
    return nodes_[x] < nodes_[y];
  });
  std::vector<Antichain> sorted;
  sorted.reserve(m);
  for (std::size_t i : perm) sorted.push_back(nodes_[i]);
  order_.assign(m * m, 0);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t a = 0; a < m; ++a) order_[b * m + a] = raw[perm[b] * m + perm[a]];
  }
  nodes_ = std::move(sorted);
}

AntichainLattice AntichainLattice::enumerate_full(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "at least one source required");
  if (n > kMaxSources) {
    throw Error(ErrorCode::TooManySources, std::to_string(n) + " sources requested, at most 4 supported");
  }
  const std::size_t subsets = (std::size_t{1} << n) - 1;  // nonempty source sets
  std::vector<Antichain> nodes;
  // every family of nonempty source sets, encoded as a bitmask over subsets
  for (std::uint64_t family = 1; family < (std::uint64_t{1} << subsets); ++family) {
    std::vector<SourceSet> sets;
    for (std::size_t k = 0; k < subsets; ++k) {
      if ((family >> k) & 1u) sets.push_back(static_cast<SourceSet>(k + 1));
    }
    bool antichain = true;
    for (std::size_t i = 0; i < sets.size() && antichain; ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (i != j && (sets[i] & sets[j]) == sets[i]) {
          antichain = false;
          break;
        }
      }
    }
    if (antichain) nodes.push_back(Antichain::from_sets(std::move(sets)));
  }
  return AntichainLattice(n, LatticeKind::Full, std::move(nodes));
}

AntichainLattice AntichainLattice::enumerate_half(std::size_t n) {
  if (n != 3) {
    throw Error(ErrorCode::UnsupportedArity, "the half lattice is defined for exactly 3 sources");
  }
  const AntichainLattice full = enumerate_full(3);
  std::vector<Antichain> nodes;
  for (const Antichain& a : full.nodes()) {
    if (a.has_singleton()) nodes.push_back(a);
  }
  return AntichainLattice(3, LatticeKind::Half, std::move(nodes));
}

std::optional<std::size_t> AntichainLattice::find(const Antichain& a) const {
  auto it = std::find(nodes_.begin(), nodes_.end(), a);
  if (it == nodes_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t AntichainLattice::index_of(const Antichain& a) const {
  if (auto i = find(a)) return *i;
  throw Error(ErrorCode::NotANode, a.to_string() + " is not a node of this lattice");
}

bool AntichainLattice::leq(const Antichain& beta, const Antichain& alpha) const {
  return leq_index(index_of(beta), index_of(alpha));
}

std::vector<std::size_t> AntichainLattice::downset_indices(std::size_t alpha) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < nodes_.size(); ++b) {
    if (leq_index(b, alpha)) out.push_back(b);
  }
  return out;
}

std::vector<Antichain> AntichainLattice::downset(const Antichain& alpha) const {
  std::vector<Antichain> out;
  for (std::size_t b : downset_indices(index_of(alpha))) out.push_back(nodes_[b]);
  return out;
}

std::vector<Antichain> antichains_within(const AntichainLattice& full, SourceSet within) {
  std::vector<Antichain> out;
  for (const Antichain& a : full.nodes()) {
    if ((a.support() & ~within) == 0) out.push_back(a);
  }
  return out;
}

}  // namespace infoatoms
