#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace oracle {

using infoatoms::JointDistribution;
using infoatoms::Rational;
using infoatoms::VariableGroup;

std::uint64_t monotone_function_count(int n) {
  const std::uint32_t points = 1u << n;
  const std::uint64_t tables = std::uint64_t{1} << points;
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < tables; ++t) {
    bool ok = true;
    for (std::uint32_t x = 0; x < points && ok; ++x) {
      for (int i = 0; i < n && ok; ++i) {
        const std::uint32_t y = x | (1u << i);
        if ((t >> x & 1u) > (t >> y & 1u)) ok = false;
      }
    }
    if (ok) ++count;
  }
  return count;
}

std::vector<Family> antichains_via_monotone_functions(int n) {
  const std::uint32_t points = 1u << n;
  const std::uint64_t tables = std::uint64_t{1} << points;
  std::vector<Family> out;
  for (std::uint64_t t = 1; t < tables; ++t) {
    if (t & 1u) continue;  // true on the empty set: constant one
    bool monotone = true;
    for (std::uint32_t x = 0; x < points && monotone; ++x) {
      for (int i = 0; i < n && monotone; ++i) {
        if ((t >> x & 1u) > (t >> (x | (1u << i)) & 1u)) monotone = false;
      }
    }
    if (!monotone) continue;
    Family f;
    for (std::uint32_t x = 1; x < points; ++x) {
      if (!(t >> x & 1u)) continue;
      bool minimal = true;
      for (int i = 0; i < n; ++i) {
        if ((x >> i & 1u) && (t >> (x & ~(1u << i)) & 1u)) minimal = false;
      }
      if (!minimal) continue;
      std::vector<int> set;
      for (int i = 0; i < n; ++i) {
        if (x >> i & 1u) set.push_back(i + 1);
      }
      f.push_back(set);
    }
    std::sort(f.begin(), f.end());
    out.push_back(f);
  }
  return out;
}

bool precedes(const Family& beta, const Family& alpha) {
  for (const auto& a : alpha) {
    bool found = false;
    for (const auto& b : beta) {
      if (std::includes(a.begin(), a.end(), b.begin(), b.end())) found = true;
    }
    if (!found) return false;
  }
  return true;
}

namespace {

std::vector<std::uint32_t> project(const infoatoms::Outcome& o, const VariableGroup& g) {
  std::vector<std::uint32_t> v;
  for (std::size_t m : g.members()) v.push_back(o[m]);
  return v;
}

double entropy_of(const std::map<std::vector<std::uint32_t>, double>& masses) {
  double h = 0;
  for (const auto& [k, p] : masses) {
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

double entropy_double(const JointDistribution& d, const VariableGroup& g) {
  std::map<std::vector<std::uint32_t>, double> m;
  for (const auto& [o, p] : d.support()) m[project(o, g)] += p.get_d();
  return entropy_of(m);
}

double gk_bruteforce(const JointDistribution& d, const std::vector<VariableGroup>& sources) {
  std::map<std::vector<std::uint32_t>, std::size_t> ids;
  std::vector<std::size_t> first;
  for (const auto& [o, p] : d.support()) {
    auto [it, inserted] = ids.emplace(project(o, sources[0]), ids.size());
    first.push_back(it->second);
  }
  const std::size_t k = ids.size();
  std::vector<std::size_t> label(k, 0);
  double best = 0;
  // restricted growth strings enumerate every set partition once
  for (;;) {
    bool feasible = true;
    for (std::size_t s = 1; s < sources.size() && feasible; ++s) {
      std::map<std::vector<std::uint32_t>, std::size_t> seen;
      std::size_t pos = 0;
      for (const auto& [o, p] : d.support()) {
        const std::size_t q = label[first[pos++]];
        auto [it, inserted] = seen.emplace(project(o, sources[s]), q);
        if (!inserted && it->second != q) {
          feasible = false;
          break;
        }
      }
    }
    if (feasible) {
      std::map<std::vector<std::uint32_t>, double> qm;
      std::size_t pos = 0;
      for (const auto& [o, p] : d.support()) qm[{static_cast<std::uint32_t>(label[first[pos++]])}] += p.get_d();
      best = std::max(best, entropy_of(qm));
    }
    // next restricted growth string
    std::size_t i = k;
    while (i > 1) {
      --i;
      const std::size_t prefix_max = *std::max_element(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(i));
      if (label[i] <= prefix_max) {
        ++label[i];
        std::fill(label.begin() + static_cast<std::ptrdiff_t>(i) + 1, label.end(), 0);
        break;
      }
      if (i == 1) return best;
    }
    if (k <= 1) return best;
  }
}

namespace {

// Dyadic masses over distinct random cells: repeatedly halve a cell and move
// one half to a fresh cell.
std::map<std::vector<std::uint32_t>, Rational> dyadic_split(std::mt19937_64& rng,
                                                             const std::vector<std::size_t>& sizes,
                                                             std::size_t cells, Rational total) {
  std::size_t capacity = 1;
  for (std::size_t s : sizes) capacity *= s;
  cells = std::clamp<std::size_t>(cells, 1, capacity);
  auto random_cell = [&] {
    std::vector<std::uint32_t> c;
    for (std::size_t s : sizes) c.push_back(static_cast<std::uint32_t>(rng() % s));
    return c;
  };
  std::map<std::vector<std::uint32_t>, Rational> m;
  m[random_cell()] = total;
  while (m.size() < cells) {
    auto it = m.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(rng() % m.size()));
    std::vector<std::uint32_t> fresh;
    do {
      fresh = random_cell();
    } while (m.count(fresh));
    it->second /= 2;
    m[fresh] = it->second;
  }
  return m;
}

JointDistribution assemble(const std::vector<std::size_t>& sizes,
                           const std::map<std::vector<std::uint32_t>, Rational>& masses) {
  std::vector<std::vector<std::string>> alphabets;
  for (std::size_t s : sizes) {
    std::vector<std::string> a;
    for (std::size_t v = 0; v < s; ++v) a.push_back(std::to_string(v));
    alphabets.push_back(a);
  }
  std::vector<infoatoms::PmfEntry> entries;
  for (const auto& [cell, p] : masses) {
    std::vector<std::string> o;
    for (std::uint32_t v : cell) o.push_back(std::to_string(v));
    entries.push_back({o, p});
  }
  return JointDistribution::from_pmf({"S1", "S2", "S3"}, alphabets, entries);
}

}  // namespace

RandomSystem random_system(std::mt19937_64& rng, bool structured) {
  if (!structured) {
    std::vector<std::size_t> sizes;
    for (int i = 0; i < 3; ++i) sizes.push_back(2 + rng() % 3);
    const std::size_t capacity = sizes[0] * sizes[1] * sizes[2];
    const std::size_t cells = 1 + rng() % capacity;
    return {assemble(sizes, dyadic_split(rng, sizes, cells, Rational(1))), sizes, false};
  }
  // S_i = W * a_i/2 + noise_i with a shared fair bit W
  std::vector<std::size_t> sizes, halves;
  for (int i = 0; i < 3; ++i) {
    sizes.push_back(rng() % 2 ? 4 : 2);
    halves.push_back(sizes.back() / 2);
  }
  const std::size_t capacity = halves[0] * halves[1] * halves[2];
  std::map<std::vector<std::uint32_t>, Rational> masses;
  for (std::uint32_t w = 0; w < 2; ++w) {
    for (const auto& [noise, p] : dyadic_split(rng, halves, 1 + rng() % capacity, Rational(1, 2))) {
      std::vector<std::uint32_t> cell;
      for (std::size_t i = 0; i < 3; ++i) cell.push_back(w * static_cast<std::uint32_t>(halves[i]) + noise[i]);
      masses[cell] = p;
    }
  }
  return {assemble(sizes, masses), sizes, true};
}

std::vector<RandomSystem> random_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomSystem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_system(rng, i % 2 == 1));
  return out;
}

}  // namespace oracle
