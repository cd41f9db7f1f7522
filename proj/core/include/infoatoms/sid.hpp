#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "infoatoms/bits.hpp"
#include "infoatoms/dist.hpp"
#include "infoatoms/lattice.hpp"

namespace infoatoms {

/// H(S1), H(S2), H(S3), H(S1,S2), H(S1,S3), H(S2,S3), H(S1,S2,S3).
class EntropyVector {
 public:
  explicit EntropyVector(const std::array<Bits, 7>& h) : h_(h) {}
  static EntropyVector of(const JointDistribution& d, const VariableGroup& s1,
                          const VariableGroup& s2, const VariableGroup& s3);

  const std::array<Bits, 7>& values() const noexcept { return h_; }
  /// Joint entropy of the sources in `set` (bit i = source i+1).
  const Bits& operator()(SourceSet set) const;
  bool is_exact() const;

  /// Monotonicity and submodularity of the seven entropies; returns a
  /// description of each violated Shannon inequality.
  std::vector<std::string> shannon_violations(double tol = kTolerance) const;

 private:
  std::array<Bits, 7> h_;
};

/// The ten half-lattice atoms, in the order of the coefficient matrix columns:
/// {1}{2}{3}, {1}{2}, {1}{3}, {2}{3}, {1}{23}, {2}{13}, {3}{12}, {1}, {2}, {3}.
const std::array<Antichain, 10>& sid_atom_order();

/// The 9x10 system relating atoms to entropies; rows are H(S1), H(S2), H(S3),
/// H(S1,S2), H(S1,S3), H(S2,S3) and H(S) three times.
const std::array<std::array<int, 10>, 9>& sid_coefficients();

struct SIAtomTable {
  std::array<Bits, 10> atoms;  // sid_atom_order()
  Bits red;

  const Bits& at(const Antichain& a) const;
  const Bits& at(std::string_view antichain) const { return at(Antichain::parse(antichain)); }
  /// Sum of all ten atoms.
  Bits total() const;
};

/// Closed-form solution of the linear system once Red(S1,S2,S3) is fixed.
/// Values may be negative; nothing is clamped. NegativeRedundancy when red < 0.
SIAtomTable si_atoms(const EntropyVector& ev, const Bits& red);

struct LinearSystemReport {
  std::size_t rank = 0;
  std::array<Bits, 9> residuals;  // (M X - Y) per row
  double max_abs_residual = 0.0;
  bool exact = false;
};

/// Multiplies the printed coefficient matrix by the atom vector and compares
/// with the entropies. Throws ResidualTooLarge or RankDeficient.
LinearSystemReport verify_linear_system(const EntropyVector& ev, const SIAtomTable& table,
                                        double tol = kTolerance);

/// Exact rank of the coefficient matrix (Gaussian elimination over Q).
std::size_t sid_coefficient_rank();

struct AxiomCheck {
  std::string equation;   // short anchor of the identity checked
  std::string statement;  // human-readable form
  Bits lhs;
  Bits rhs;
  bool pass = false;
};

struct Axiom0Report {
  std::vector<AxiomCheck> checks;
  Bits sum_all;   // sum of the ten atoms
  Bits joint;     // H(S1,S2,S3)
  bool all_pass() const;
};

/// Entropies of singletons and pairs equal the sums of the atoms they
/// dominate, and H(S) = total - Psi({ij}{k}) for each of the three choices.
/// Throws AxiomViolated naming the first failing identity and its residual.
Axiom0Report check_sid_axiom0(const EntropyVector& ev, const SIAtomTable& table,
                              double tol = kTolerance);
Axiom0Report check_sid_axiom0(const JointDistribution& d, const VariableGroup& s1,
                              const VariableGroup& s2, const VariableGroup& s3);

struct SynergySum {
  Bits sum;      // sum over k of Psi({ij}{k})
  Bits entropy;  // H(S1,S2,S3)
  bool violates_wesp = false;
};

SynergySum synergy_sum_check(const EntropyVector& ev, const SIAtomTable& table);
SynergySum synergy_sum_check(const JointDistribution& d, const VariableGroup& s1,
                             const VariableGroup& s2, const VariableGroup& s3);

/// Two-variable subsystem {Si, Sk} recomputed from its marginal entropies,
/// alongside the values implied by the three-variable table.
struct PairSubsystem {
  int i = 0;
  int k = 0;
  Bits redundancy;      // Psi_ik({i}{k}) = I(Si;Sk)
  Bits unique_i;        // H(Si|Sk)
  Bits unique_k;        // H(Sk|Si)
  Bits from_full;       // Psi_S({1}{2}{3}) + Psi_S({i}{k})
  bool consistent = false;
};

PairSubsystem pair_subsystem(const EntropyVector& ev, const SIAtomTable& table, int i, int k);

/// Everything the decompose-sid report needs in one pass.
struct SidDecomposition {
  EntropyVector entropies;
  SIAtomTable table;
  LinearSystemReport linear;
  Axiom0Report axiom0;
  SynergySum synergy;
  std::vector<PairSubsystem> pairs;
};

/// Red defaults to the common-part redundancy of the three groups.
SidDecomposition decompose_sid(const JointDistribution& d, const VariableGroup& s1,
                               const VariableGroup& s2, const VariableGroup& s3,
                               std::optional<Bits> red = std::nullopt);

}  // namespace infoatoms
