#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infoatoms/dist.hpp"
#include "infoatoms/lattice.hpp"
#include "infoatoms/pid_engine.hpp"
#include "infoatoms/sid.hpp"

namespace infoatoms {

/// One of the two built-in counterexample systems: sources S1..S3, target T,
/// and (system 1 only) the independent sub-targets T1..T3.
struct PaperSystem {
  std::string label;
  CircuitSpec circuit;
  JointDistribution dist;
  std::array<VariableGroup, 3> sources;
  VariableGroup target;
  std::vector<VariableGroup> subtargets;
};

CircuitSpec system1_circuit();
CircuitSpec system2_circuit();
/// Six fair bits, x3 = x1^x2, x6 = x4^x5, x9 = x7^x8; S1 = (x1,x4,x7),
/// S2 = (x2,x5,x8), S3 = (x3,x6,x9), T = (x1,x5,x9).
PaperSystem build_system1();
/// Two fair bits and their XOR; Si = xi, T = (x1,x2,x3).
PaperSystem build_system2();
/// "system1" or "system2"; InvalidArgument otherwise.
PaperSystem build_builtin(std::string_view name);

/// Exact value of every full-lattice atom of a three-source system.
struct AtomAssignment {
  std::string system;
  std::vector<Antichain> atoms;  // full lattice order
  std::vector<Rational> values;

  const Rational& at(const Antichain& a) const;
  const Rational& at(std::string_view a) const { return at(Antichain::parse(a)); }
};

/// {i}{jk} -> 1 for each i, every other atom 0.
AtomAssignment golden_assignment(std::string system);

struct ReproStep {
  std::string claim;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct Lemma3Report {
  std::vector<ReproStep> steps;
  DeductionState chain;      // sub-system axioms only, no determinism rule
  DeductionState full;       // every axiom row
  WespReport wesp;
  bool certificate_replays = false;
  bool pass = false;
  double seconds = 0.0;
};

/// Runs the whole-vs-parts argument on any three-source system and records
/// each step against the values expected for the XOR system.
Lemma3Report analyse_lemma3(const JointDistribution& d, std::span<const VariableGroup> sources,
                            const VariableGroup& target);
/// analyse_lemma3 on system 2; ReproductionFailed naming the first failing step.
Lemma3Report reproduce_lemma3();

struct Lemma6Report {
  SplitDeduction system1;
  DeductionState system2;
  AtomAssignment assignment1;
  AtomAssignment assignment2;
  std::vector<std::string> closed_atoms;  // atoms fixed only by the closure rule
  std::vector<ReproStep> steps;
  Bits information1;
  Bits information2;
  bool pass = false;
  double seconds = 0.0;
};

/// System 1 through its three sub-targets (all axiom rows), system 2 through
/// the sub-system axioms plus the remaining-atoms closure. ReproductionFailed
/// on the first failing step.
Lemma6Report reproduce_lemma6();
/// Same, without throwing.
Lemma6Report analyse_lemma6();

struct ScanWitness {
  std::uint32_t subset = 0;
  Rational sum1;
  Rational information1;
  Rational sum2;
  Rational information2;
};

struct SubsetScanResult {
  std::uint64_t subsets_checked = 0;
  std::vector<std::uint32_t> valid_subsets;  // bit k selects atoms[k]
  std::uint64_t matches_first = 0;           // subsets valid for system 1 alone
  std::uint64_t matches_second = 0;
  std::optional<ScanWitness> witness;        // first subset matching system 1
  std::vector<Antichain> atoms;
  double seconds = 0.0;

  std::vector<Antichain> subset_atoms(std::uint32_t subset) const;
};

/// All 2^18 subsets O, in Gray-code order with incremental exact sums; O is
/// valid when the sums over O equal i1 and i2 respectively. KeyMismatch when
/// the two assignments are not over the same lattice.
SubsetScanResult theorem1_scan(const AtomAssignment& a1, const AtomAssignment& a2, const Rational& i1,
                               const Rational& i2, unsigned threads = 1);

/// Variant where the atoms flagged in open1/open2 are only known to be at
/// least their assigned value: a subset holding such an atom is valid when
/// its fixed part does not exceed the target information.
SubsetScanResult theorem1_scan_open(const AtomAssignment& a1, const std::vector<bool>& open1,
                                    const AtomAssignment& a2, const std::vector<bool>& open2,
                                    const Rational& i1, const Rational& i2, unsigned threads = 1);

struct Observation1Report {
  SynergySum synergy;
  bool pass = false;
};

Observation1Report reproduce_observation1();

struct PaperCheck {
  std::string name;
  std::string detail;
  bool pass = false;
  double seconds = 0.0;
};

struct PaperVerification {
  std::vector<PaperCheck> checks;
  bool all_pass() const;
};

/// Every reproduction above; never throws on a failed reproduction.
PaperVerification verify_paper(unsigned threads = 1);

}  // namespace infoatoms
