#include "infoatoms/pid_engine.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "infoatoms/error.hpp"

namespace infoatoms {

namespace {

constexpr std::size_t kMaxRounds = 200;

std::string digits(SourceSet s) {
  std::string out;
  for (int i : source_indices(s)) out += std::to_string(i);
  return out;
}

std::string source_list(SourceSet s) {
  std::string out;
  for (int i : source_indices(s)) {
    if (!out.empty()) out += ",";
    out += "S" + std::to_string(i);
  }
  return out;
}

SourceSet bit(int i) { return SourceSet{1} << (i - 1); }

Antichain chain(std::initializer_list<SourceSet> sets) { return Antichain::from_sets(sets); }

bool exactly_zero(const Bits& b) { return b.is_exact() ? *b.exact() == 0 : b.is_zero(); }

// --- interval tightening -------------------------------------------------

std::optional<Rational> scaled(const std::optional<Rational>& x, const Rational& a) {
  if (!x) return std::nullopt;
  return Rational(*x * a);
}

struct Tightening {
  bool contradiction = false;
  std::size_t culprit = 0;
};

bool raise_lo(Interval& iv, const Rational& cand) {
  if (iv.lo && *iv.lo >= cand) return false;
  iv.lo = cand;
  return true;
}

bool lower_hi(Interval& iv, const Rational& cand) {
  if (iv.hi && *iv.hi <= cand) return false;
  iv.hi = cand;
  return true;
}

bool empty(const Interval& iv) { return iv.lo && iv.hi && *iv.lo > *iv.hi; }

Tightening tighten(std::vector<Interval>& b, const std::vector<Constraint>& cs,
                   const std::vector<std::size_t>& active, std::vector<TraceStep>* trace) {
  std::vector<std::optional<Rational>> mins, maxs;
  for (std::size_t round = 0; round < kMaxRounds; ++round) {
    bool changed = false;
    for (std::size_t ci : active) {
      const Constraint& c = cs[ci];
      const std::size_t k = c.terms.size();
      mins.assign(k, std::nullopt);
      maxs.assign(k, std::nullopt);
      for (std::size_t t = 0; t < k; ++t) {
        const auto& [v, a] = c.terms[t];
        mins[t] = sgn(a) > 0 ? scaled(b[v].lo, a) : scaled(b[v].hi, a);
        maxs[t] = sgn(a) > 0 ? scaled(b[v].hi, a) : scaled(b[v].lo, a);
      }
      auto sum_except = [&](const std::vector<std::optional<Rational>>& xs, std::size_t skip) {
        std::optional<Rational> s = Rational(0);
        for (std::size_t t = 0; t < k && s; ++t) {
          if (t == skip) continue;
          if (!xs[t]) s.reset();
          else *s += *xs[t];
        }
        return s;
      };
      const auto row_min = sum_except(mins, k), row_max = sum_except(maxs, k);
      const bool needs_le = c.sense != Sense::GreaterEqual, needs_ge = c.sense != Sense::LessEqual;
      if ((needs_le && row_min && *row_min > c.rhs) || (needs_ge && row_max && *row_max < c.rhs)) {
        return {true, ci};
      }
      for (std::size_t t = 0; t < k; ++t) {
        const auto& [v, a] = c.terms[t];
        std::optional<Rational> upper, lower;  // bounds on a * x_v
        if (needs_le) {
          if (auto rest = sum_except(mins, t)) upper = c.rhs - *rest;
        }
        if (needs_ge) {
          if (auto rest = sum_except(maxs, t)) lower = c.rhs - *rest;
        }
        if (sgn(a) < 0) std::swap(upper, lower);
        const Interval before = b[v];
        bool moved = false;
        if (lower) moved |= raise_lo(b[v], *lower / a);
        if (upper) moved |= lower_hi(b[v], *upper / a);
        if (!moved) continue;
        changed = true;
        if (trace) trace->push_back({v, before, b[v], ci});
        if (empty(b[v])) return {true, ci};
        // keep this constraint's own term ranges current
        mins[t] = sgn(a) > 0 ? scaled(b[v].lo, a) : scaled(b[v].hi, a);
        maxs[t] = sgn(a) > 0 ? scaled(b[v].hi, a) : scaled(b[v].lo, a);
      }
    }
    if (!changed) break;
  }
  return {};
}

// --- exact LP over the unresolved variables --------------------------------

struct Reduced {
  std::vector<std::size_t> column;  // per variable, npos when fixed
  std::vector<std::size_t> free;
  std::vector<LpRow> rows;
  std::vector<std::optional<Rational>> lower;
};

constexpr std::size_t kFixed = static_cast<std::size_t>(-1);

Reduced reduce(const std::vector<Interval>& b, const std::vector<Constraint>& cs,
               const std::vector<std::size_t>& active) {
  Reduced r;
  r.column.assign(b.size(), kFixed);
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (b[v].fixed()) continue;
    r.column[v] = r.free.size();
    r.free.push_back(v);
    r.lower.push_back(b[v].lo);
    if (b[v].hi) r.rows.push_back({{{r.column[v], Rational(1)}}, Sense::LessEqual, *b[v].hi});
  }
  for (std::size_t ci : active) {
    const Constraint& c = cs[ci];
    LpRow row{{}, c.sense, c.rhs};
    for (const auto& [v, a] : c.terms) {
      if (r.column[v] == kFixed) row.rhs -= a * *b[v].lo;
      else row.terms.push_back({r.column[v], a});
    }
    // fully fixed rows were already checked by the interval pass
    if (!row.terms.empty()) r.rows.push_back(std::move(row));
  }
  return r;
}

std::vector<Interval> unbounded(std::size_t n) { return std::vector<Interval>(n); }

bool subset_feasible(std::size_t n, const std::vector<Constraint>& cs,
                     const std::vector<std::size_t>& active) {
  std::vector<Interval> b = unbounded(n);
  if (tighten(b, cs, active, nullptr).contradiction) return false;
  Reduced r = reduce(b, cs, active);
  if (r.free.empty()) return true;
  ExactSimplex lp(r.free.size(), r.rows, r.lower);
  return lp.feasible();
}

bool is_top_row(const Constraint& c, SourceSet full) {
  return c.kind == ConstraintKind::MutualSum && c.a == full && c.b == full;
}

// Deletion filter. Rows tried first are the most likely to be dropped, so
// the ordering steers the certificate towards the subsystem-level argument
// with the top-level mutual-sum row last.
std::vector<std::size_t> irreducible_subset(const DeductionState& s) {
  const SourceSet full = s.full_set();
  auto rank = [&](const Constraint& c) {
    if (is_top_row(c, full)) return 9;
    switch (c.kind) {
      case ConstraintKind::MutualSum: return c.b == full ? 0 : 6;
      case ConstraintKind::DeterminismZero: return 1;
      case ConstraintKind::RemainingZero: return 1;
      case ConstraintKind::Monotonicity: return 2;
      case ConstraintKind::SelfRedundancy: return 3;
      case ConstraintKind::CrossScale: return 4;
      case ConstraintKind::IndependentIdentityZero: return 5;
      case ConstraintKind::Nonnegativity: return 7;
    }
    return 8;
  };
  std::vector<std::size_t> order(s.constraints.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return rank(s.constraints[x]) < rank(s.constraints[y]);
  });
  std::vector<bool> keep(s.constraints.size(), true);
  auto active = [&] {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (keep[i]) out.push_back(i);
    }
    return out;
  };
  for (std::size_t ci : order) {
    keep[ci] = false;
    if (subset_feasible(s.variables.size(), s.constraints, active())) keep[ci] = true;
  }
  return active();
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

}  // namespace

std::string Interval::to_string() const {
  if (fixed()) return infoatoms::to_string(*lo);
  return "[" + (lo ? infoatoms::to_string(*lo) : std::string("-inf")) + ", " +
         (hi ? infoatoms::to_string(*hi) : std::string("inf")) + "]";
}

std::string PIAtomVar::label() const { return "Pi_" + digits(subsystem) + antichain.to_string(); }

std::string_view to_string(ConstraintKind kind) noexcept {
  switch (kind) {
    case ConstraintKind::MutualSum: return "MutualSum";
    case ConstraintKind::CrossScale: return "CrossScale";
    case ConstraintKind::IndependentIdentityZero: return "IndependentIdentityZero";
    case ConstraintKind::SelfRedundancy: return "SelfRedundancy";
    case ConstraintKind::DeterminismZero: return "DeterminismZero";
    case ConstraintKind::Nonnegativity: return "Nonnegativity";
    case ConstraintKind::Monotonicity: return "Monotonicity";
    case ConstraintKind::RemainingZero: return "RemainingZero";
  }
  return "?";
}

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Unpropagated: return "unpropagated";
    case Status::Open: return "open";
    case Status::Solved: return "solved";
    case Status::Contradiction: return "contradiction";
  }
  return "?";
}

std::optional<std::size_t> DeductionState::find(SourceSet subsystem, const Antichain& a) const {
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].subsystem == subsystem && variables[i].antichain == a) return i;
  }
  return std::nullopt;
}

std::size_t DeductionState::index(SourceSet subsystem, const Antichain& a) const {
  if (auto i = find(subsystem, a)) return *i;
  throw Error(ErrorCode::NotANode, a.to_string() + " is not an atom of sub-system " + digits(subsystem));
}

std::map<ConstraintKind, std::size_t> DeductionState::constraint_counts() const {
  std::map<ConstraintKind, std::size_t> out;
  for (const Constraint& c : constraints) ++out[c.kind];
  return out;
}

std::vector<std::size_t> DeductionState::full_system_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (variables[i].subsystem == full_set()) out.push_back(i);
  }
  return out;
}

DeductionState build_constraints(const JointDistribution& d, std::span<const VariableGroup> sources,
                                 const VariableGroup& target, const BuildOptions& options) {
  const std::size_t n = sources.size();
  if (n < 2 || n > 3) {
    throw Error(ErrorCode::ArityUnsupported,
                "deduction needs two or three sources, got " + std::to_string(n));
  }
  DeductionState s;
  s.source_count = n;
  s.scope = options.scope;
  const SourceSet full = s.full_set();
  const AntichainLattice lattice = AntichainLattice::enumerate_full(n);

  std::vector<SourceSet> subsets;
  for (SourceSet m = 1; m <= full; ++m) subsets.push_back(m);
  std::sort(subsets.begin(), subsets.end(), source_set_less);

  auto group_of = [&](SourceSet m) {
    std::vector<std::size_t> members;
    for (int i : source_indices(m)) {
      const auto& g = sources[static_cast<std::size_t>(i - 1)].members();
      members.insert(members.end(), g.begin(), g.end());
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return VariableGroup(std::move(members));
  };

  for (SourceSet m : subsets) {
    for (Antichain& a : antichains_within(lattice, m)) s.variables.push_back({m, std::move(a), {}});
    s.information.emplace(m, mutual_information(d, group_of(m), target));
  }
  auto var = [&](SourceSet m, const Antichain& a) { return s.index(m, a); };
  auto info = [&](SourceSet m) { return s.information.at(m).to_rational(); };
  auto add = [&](ConstraintKind kind, LinearForm terms, Sense sense, Rational rhs, std::string why,
                 SourceSet a = 0, SourceSet b = 0) {
    s.constraints.push_back({kind, std::move(terms), sense, std::move(rhs), std::move(why), a, b});
  };
  const Rational one(1), minus_one(-1), zero(0);

  // mutual-sum rows: I(S_A;T) is the sum of the atoms of B below {A}
  for (SourceSet b : subsets) {
    if (options.scope == AxiomScope::Subsystems && std::popcount(b) > 2) continue;
    for (SourceSet a : subsets) {
      if ((a & b) != a) continue;
      const Antichain top = chain({a});
      LinearForm terms;
      for (std::size_t v = 0; v < s.variables.size(); ++v) {
        if (s.variables[v].subsystem == b && precedes(s.variables[v].antichain, top)) {
          terms.push_back({v, one});
        }
      }
      add(ConstraintKind::MutualSum, std::move(terms), Sense::Equal, info(a),
          "mutual-sum: I(" + source_list(a) + ";T) over the atoms of sub-system {" + digits(b) +
              "} below " + top.to_string(),
          a, b);
    }
  }

  if (options.self_redundancy) {
    for (std::size_t i = 1; i <= n; ++i) {
      const SourceSet si = bit(static_cast<int>(i));
      add(ConstraintKind::SelfRedundancy, {{var(si, chain({si})), one}}, Sense::Equal, info(si),
          "self-redundancy: Red(S" + std::to_string(i) + "->T) = I(S" + std::to_string(i) + ";T)");
    }
  }

  if (options.cross_scale) {
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      for (int j = 1; j <= static_cast<int>(n); ++j) {
        if (i == j) continue;
        const SourceSet si = bit(i), sj = bit(j), ij = si | sj;
        add(ConstraintKind::CrossScale,
            {{var(si, chain({si})), one}, {var(ij, chain({si, sj})), minus_one},
             {var(ij, chain({si})), minus_one}},
            Sense::Equal, zero,
            "cross-scale consistency: Pi_" + digits(si) + "{{" + digits(si) + "}} = Pi_" + digits(ij) +
                chain({si, sj}).to_string() + " + Pi_" + digits(ij) + chain({si}).to_string());
      }
    }
    if (n == 3) {
      for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
          const SourceSet si = bit(i), sj = bit(j), ij = si | sj;
          const Antichain bottom = chain({1, 2, 4});
          add(ConstraintKind::CrossScale,
              {{var(ij, chain({si, sj})), one}, {var(full, bottom), minus_one},
               {var(full, chain({si, sj})), minus_one}},
              Sense::Equal, zero,
              "cross-scale consistency: Pi_" + digits(ij) + chain({si, sj}).to_string() + " = Pi_123" +
                  bottom.to_string() + " + Pi_123" + chain({si, sj}).to_string());
        }
      }
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
          if (i == j) continue;
          const SourceSet si = bit(i), sj = bit(j), sk = full & ~(si | sj), ij = si | sj;
          add(ConstraintKind::CrossScale,
              {{var(ij, chain({si})), one}, {var(full, chain({si, sk})), minus_one},
               {var(full, chain({si, sj | sk})), minus_one}, {var(full, chain({si})), minus_one}},
              Sense::Equal, zero,
              "cross-scale consistency: Pi_" + digits(ij) + chain({si}).to_string() + " = Pi_123" +
                  chain({si, sk}).to_string() + " + Pi_123" + chain({si, sj | sk}).to_string() +
                  " + Pi_123" + chain({si}).to_string());
        }
      }
    }
  }

  if (options.independent_identity) {
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      for (int j = i + 1; j <= static_cast<int>(n); ++j) {
        const SourceSet si = bit(i), sj = bit(j);
        const Bits mi = mutual_information(d, group_of(si), group_of(sj));
        if (!exactly_zero(mi) || !deterministically_equal(d, target, group_of(si | sj))) continue;
        const std::string why = "independent identity: I(S" + std::to_string(i) + ";S" + std::to_string(j) +
                                ") = 0 and T =det= (S" + std::to_string(i) + ",S" + std::to_string(j) + ")";
        add(ConstraintKind::IndependentIdentityZero, {{var(si | sj, chain({si, sj})), one}}, Sense::Equal,
            zero, why);
        s.firings.push_back(why);
      }
    }
  }

  if (options.determinism) {
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      const SourceSet si = bit(i), rest = full & ~si;
      if (!is_deterministic(d, target | group_of(si), group_of(rest))) continue;
      const std::string why = "determinism: H(T,S" + std::to_string(i) + "|" + source_list(rest) +
                              ") = 0, so atoms with no element inside {" + digits(rest) + "} vanish";
      std::size_t zeroed = 0;
      for (std::size_t v : s.full_system_variables()) {
        const auto& els = s.variables[v].antichain.elements();
        if (std::any_of(els.begin(), els.end(), [&](SourceSet e) { return (e & rest) == e; })) continue;
        add(ConstraintKind::DeterminismZero, {{v, one}}, Sense::Equal, zero, why);
        ++zeroed;
      }
      s.firings.push_back(why + " (" + std::to_string(zeroed) + " atoms)");
    }
  }

  if (options.monotonicity) {
    for (int i = 1; i <= static_cast<int>(n); ++i) {
      for (int j = i + 1; j <= static_cast<int>(n); ++j) {
        const SourceSet si = bit(i), sj = bit(j), ij = si | sj;
        for (SourceSet single : {si, sj}) {
          add(ConstraintKind::Monotonicity,
              {{var(ij, chain({si, sj})), one}, {var(single, chain({single})), minus_one}}, Sense::LessEqual,
              zero,
              "monotonicity: Pi_" + digits(ij) + chain({si, sj}).to_string() + " <= Pi_" + digits(single) +
                  chain({single}).to_string());
        }
        if (n == 3) {
          const Antichain bottom = chain({1, 2, 4});
          add(ConstraintKind::Monotonicity,
              {{var(full, bottom), one}, {var(ij, chain({si, sj})), minus_one}}, Sense::LessEqual, zero,
              "monotonicity: Pi_123" + bottom.to_string() + " <= Pi_" + digits(ij) +
                  chain({si, sj}).to_string());
        }
      }
    }
  }

  if (options.nonnegativity) {
    for (std::size_t v = 0; v < s.variables.size(); ++v) {
      add(ConstraintKind::Nonnegativity, {{v, one}}, Sense::GreaterEqual, zero,
          "nonnegativity: " + s.variables[v].label() + " >= 0");
    }
  }
  return s;
}

DeductionState propagate(DeductionState state) {
  const std::size_t n = state.variables.size();
  std::vector<Interval> b = unbounded(n);
  state.trace.clear();
  state.certificate.clear();
  const std::vector<std::size_t> active = all_indices(state.constraints.size());

  auto contradiction = [&] {
    for (std::size_t v = 0; v < n; ++v) state.variables[v].bounds = b[v];
    state.status = Status::Contradiction;
    state.certificate = irreducible_subset(state);
    return state;
  };

  if (tighten(b, state.constraints, active, &state.trace).contradiction) return contradiction();

  Reduced r = reduce(b, state.constraints, active);
  if (!r.free.empty()) {
    ExactSimplex lp(r.free.size(), r.rows, r.lower);
    if (!lp.feasible()) return contradiction();
    for (std::size_t c = 0; c < r.free.size(); ++c) {
      const std::size_t v = r.free[c];
      const Interval before = b[v];
      const LinearForm x{{c, Rational(1)}};
      b[v].lo = lp.minimize(x);
      b[v].hi = lp.maximize(x);
      if (before.lo != b[v].lo || before.hi != b[v].hi) state.trace.push_back({v, before, b[v], std::nullopt});
    }
  }
  for (std::size_t v = 0; v < n; ++v) state.variables[v].bounds = b[v];
  const bool solved = std::all_of(b.begin(), b.end(), [](const Interval& iv) { return iv.fixed(); });
  state.status = solved ? Status::Solved : Status::Open;
  return state;
}

DeductionState close_remaining(DeductionState state) {
  if (state.status == Status::Unpropagated) state = propagate(std::move(state));
  if (state.status != Status::Open) return state;
  std::vector<std::size_t> mentions(state.variables.size(), 0);
  for (const Constraint& c : state.constraints) {
    if (c.kind == ConstraintKind::Nonnegativity) continue;
    for (const auto& term : c.terms) ++mentions[term.first];
  }
  for (std::size_t v = 0; v < state.variables.size(); ++v) {
    if (state.variables[v].bounds.fixed() || mentions[v] != 0) continue;
    const std::string why = "remaining atoms are zero: " + state.variables[v].label() +
                            " is constrained only by its nonnegativity";
    state.constraints.push_back({ConstraintKind::RemainingZero, {{v, Rational(1)}}, Sense::Equal, Rational(0), why});
    state.firings.push_back(why);
  }
  return propagate(std::move(state));
}

DeductionState restrict_to(const DeductionState& state, std::span<const std::size_t> constraints) {
  DeductionState out;
  out.source_count = state.source_count;
  out.scope = state.scope;
  out.information = state.information;
  out.variables = state.variables;
  for (PIAtomVar& v : out.variables) v.bounds = {};
  for (std::size_t ci : constraints) out.constraints.push_back(state.constraints.at(ci));
  return out;
}

std::optional<Interval> bounds_of(const DeductionState& state, const LinearForm& form,
                                  std::span<const std::size_t> excluded) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < state.constraints.size(); ++i) {
    if (std::find(excluded.begin(), excluded.end(), i) == excluded.end()) active.push_back(i);
  }
  std::vector<Interval> b = unbounded(state.variables.size());
  if (tighten(b, state.constraints, active, nullptr).contradiction) return std::nullopt;
  Reduced r = reduce(b, state.constraints, active);
  Rational constant = 0;
  LinearForm reduced_form;
  for (const auto& [v, a] : form) {
    if (v >= b.size()) throw Error(ErrorCode::InvalidArgument, "linear form references unknown atom");
    if (r.column[v] == kFixed) constant += a * *b[v].lo;
    else reduced_form.push_back({r.column[v], a});
  }
  if (reduced_form.empty()) {
    // still need the free part to be feasible
    if (!r.free.empty()) {
      ExactSimplex lp(r.free.size(), r.rows, r.lower);
      if (!lp.feasible()) return std::nullopt;
    }
    return Interval{constant, constant};
  }
  ExactSimplex lp(r.free.size(), r.rows, r.lower);
  if (!lp.feasible()) return std::nullopt;
  Interval out;
  if (auto lo = lp.minimize(reduced_form)) out.lo = *lo + constant;
  if (auto hi = lp.maximize(reduced_form)) out.hi = *hi + constant;
  return out;
}

WespReport wesp_report(const DeductionState& state) {
  if (state.status == Status::Unpropagated) {
    throw Error(ErrorCode::StateStillOpen, "propagate has not been run on this state");
  }
  const SourceSet full = state.full_set();
  std::vector<std::size_t> excluded;
  for (std::size_t i = 0; i < state.constraints.size(); ++i) {
    const Constraint& c = state.constraints[i];
    if (c.kind == ConstraintKind::MutualSum && c.b == full) excluded.push_back(i);
  }
  LinearForm sum;
  for (std::size_t v : state.full_system_variables()) sum.push_back({v, Rational(1)});

  WespReport r;
  r.information = state.information.at(full);
  r.status = state.status;
  r.certificate = state.certificate;
  r.gap = 0;
  if (auto iv = bounds_of(state, sum, excluded)) {
    r.bound = iv->lo;
    if (r.bound) {
      const Rational excess = *r.bound - r.information.to_rational();
      if (sgn(excess) > 0) {
        r.gap = excess;
        r.violated = true;
      }
    }
  }
  return r;
}

SplitDeduction deduce_split(const JointDistribution& d, std::span<const VariableGroup> sources,
                            const VariableGroup& target, std::span<const VariableGroup> subtargets,
                            const BuildOptions& options, bool close) {
  if (subtargets.empty()) throw Error(ErrorCode::InvalidArgument, "no sub-targets given");
  VariableGroup joint = subtargets.front();
  Bits separate = entropy(d, subtargets.front());
  for (std::size_t i = 1; i < subtargets.size(); ++i) {
    joint = joint | subtargets[i];
    separate += entropy(d, subtargets[i]);
  }
  if (!entropy(d, joint).equals(separate)) {
    throw Error(ErrorCode::InvalidArgument, "sub-targets are not mutually independent");
  }
  if (!deterministically_equal(d, target, joint)) {
    throw Error(ErrorCode::InvalidArgument, "sub-targets do not jointly determine the target");
  }
  SplitDeduction out;
  for (const VariableGroup& t : subtargets) {
    DeductionState s = propagate(build_constraints(d, sources, t, options));
    if (close) s = close_remaining(std::move(s));
    out.parts.push_back(std::move(s));
  }
  const std::vector<std::size_t> full_vars = out.parts.front().full_system_variables();
  for (std::size_t v : full_vars) {
    out.atoms.push_back(out.parts.front().variables[v].antichain);
    Interval sum{Rational(0), Rational(0)};
    for (const DeductionState& p : out.parts) {
      const Interval& iv = p.variables[v].bounds;
      if (sum.lo) sum.lo = iv.lo ? std::optional<Rational>(*sum.lo + *iv.lo) : std::nullopt;
      if (sum.hi) sum.hi = iv.hi ? std::optional<Rational>(*sum.hi + *iv.hi) : std::nullopt;
    }
    out.sums.push_back(std::move(sum));
  }
  out.status = Status::Solved;
  for (const DeductionState& p : out.parts) {
    if (p.status == Status::Contradiction) {
      out.status = Status::Contradiction;
      break;
    }
    if (p.status != Status::Solved) out.status = Status::Open;
  }
  return out;
}

}  // namespace infoatoms
