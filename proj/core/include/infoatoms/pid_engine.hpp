#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "infoatoms/bits.hpp"
#include "infoatoms/dist.hpp"
#include "infoatoms/lattice.hpp"
#include "infoatoms/lp.hpp"

namespace infoatoms {

/// Closed interval with optional (infinite) ends.
struct Interval {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool fixed() const { return lo && hi && *lo == *hi; }
  bool contains(const Rational& x) const { return (!lo || *lo <= x) && (!hi || x <= *hi); }
  std::string to_string() const;
};

/// One PI-atom Pi^T_A(alpha): sub-system A and an antichain over A.
struct PIAtomVar {
  SourceSet subsystem = 0;
  Antichain antichain;
  Interval bounds;

  std::string label() const;  // e.g. Pi_12{{1}{2}}
};

enum class ConstraintKind {
  MutualSum,
  CrossScale,
  IndependentIdentityZero,
  SelfRedundancy,
  DeterminismZero,
  Nonnegativity,
  Monotonicity,
  RemainingZero,
};

std::string_view to_string(ConstraintKind kind) noexcept;

struct Constraint {
  ConstraintKind kind = ConstraintKind::MutualSum;
  LinearForm terms;
  Sense sense = Sense::Equal;
  Rational rhs;
  std::string provenance;
  SourceSet a = 0;  // mutual-sum rows: I(S_a;T) summed over sub-system b
  SourceSet b = 0;
};

/// Which mutual-sum rows are generated. Full: every A subset of B. Subsystems:
/// only B with at most two sources, plus the cross-scale rows tying the
/// three-source atoms to the pairs.
enum class AxiomScope { Full, Subsystems };

struct BuildOptions {
  AxiomScope scope = AxiomScope::Full;
  bool cross_scale = true;
  bool independent_identity = true;
  bool self_redundancy = true;
  bool determinism = true;
  bool monotonicity = true;
  bool nonnegativity = true;
};

enum class Status { Unpropagated, Open, Solved, Contradiction };

std::string_view to_string(Status s) noexcept;

/// A bound change together with its justification: a single constraint for
/// interval tightening, none for a linear-programming projection.
struct TraceStep {
  std::size_t variable = 0;
  Interval before;
  Interval after;
  std::optional<std::size_t> constraint;
};

struct DeductionState {
  std::size_t source_count = 0;
  AxiomScope scope = AxiomScope::Full;
  std::vector<PIAtomVar> variables;
  std::vector<Constraint> constraints;
  std::map<SourceSet, Bits> information;  // I(A;T) for every sub-system A
  Status status = Status::Unpropagated;
  std::vector<std::size_t> certificate;   // irreducible inconsistent subset
  std::vector<TraceStep> trace;
  std::vector<std::string> firings;       // conditional rules that applied

  SourceSet full_set() const { return (SourceSet{1} << source_count) - 1; }
  std::optional<std::size_t> find(SourceSet subsystem, const Antichain& a) const;
  std::size_t index(SourceSet subsystem, const Antichain& a) const;
  std::size_t index(SourceSet subsystem, std::string_view antichain) const {
    return index(subsystem, Antichain::parse(antichain));
  }
  const Interval& bounds(SourceSet subsystem, std::string_view antichain) const {
    return variables[index(subsystem, antichain)].bounds;
  }
  std::map<ConstraintKind, std::size_t> constraint_counts() const;
  /// Indices of the variables of the full system, in lattice order.
  std::vector<std::size_t> full_system_variables() const;
};

/// Variables for every sub-system and antichain (33 for three sources) and
/// the constraints implied by the options. Two or three sources.
DeductionState build_constraints(const JointDistribution& d, std::span<const VariableGroup> sources,
                                 const VariableGroup& target, const BuildOptions& options = {});

/// Interval tightening to a fixed point, then exact LP projection of every
/// unresolved variable. Contradictions carry an irreducible certificate.
DeductionState propagate(DeductionState state);

/// Fixes to zero every unresolved atom that no constraint other than its own
/// nonnegativity mentions, records each firing, and propagates again.
DeductionState close_remaining(DeductionState state);

/// The state restricted to a subset of its constraints, unpropagated.
DeductionState restrict_to(const DeductionState& state, std::span<const std::size_t> constraints);

/// Range of a linear form over the constraints not listed in `excluded`;
/// nullopt when those constraints are infeasible.
std::optional<Interval> bounds_of(const DeductionState& state, const LinearForm& form,
                                  std::span<const std::size_t> excluded = {});

struct WespReport {
  Bits information;               // I(S;T)
  std::optional<Rational> bound;  // forced lower bound of the full down-set sum
  Rational gap;                   // bound - I(S;T), zero when not violated
  bool violated = false;
  Status status = Status::Unpropagated;
  std::vector<std::size_t> certificate;
};

/// Compares I(S;T) with the least value the full down-set sum can take under
/// every constraint except the top-level mutual-sum rows. StateStillOpen when
/// propagate has not run.
WespReport wesp_report(const DeductionState& state);

/// Deduction of a composite target through independent sub-targets whose
/// full-system atoms are summed.
struct SplitDeduction {
  std::vector<DeductionState> parts;
  std::vector<Antichain> atoms;     // full lattice order
  std::vector<Interval> sums;       // per atom, summed over parts
  Status status = Status::Unpropagated;
};

/// Checks that the sub-targets are mutually independent and jointly
/// equivalent to the target (InvalidArgument otherwise), then deduces each.
SplitDeduction deduce_split(const JointDistribution& d, std::span<const VariableGroup> sources,
                            const VariableGroup& target, std::span<const VariableGroup> subtargets,
                            const BuildOptions& options = {}, bool close = false);

}  // namespace infoatoms
