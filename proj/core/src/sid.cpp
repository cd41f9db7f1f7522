#include "infoatoms/sid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "infoatoms/error.hpp"
#include "infoatoms/redundancy_gk.hpp"

namespace infoatoms {

namespace {

constexpr SourceSet kS1 = 1, kS2 = 2, kS3 = 4;

std::size_t entropy_slot(SourceSet set) {
  switch (set) {
    case 1: return 0;
    case 2: return 1;
    case 4: return 2;
    case 3: return 3;
    case 5: return 4;
    case 6: return 5;
    case 7: return 6;
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "source set outside {1,2,3}");
}

std::string set_name(SourceSet s) {
  std::string out = "H(";
  bool first = true;
  for (int i : source_indices(s)) {
    if (!first) out += ",";
    out += "S" + std::to_string(i);
    first = false;
  }
  return out + ")";
}

std::size_t atom_slot(const Antichain& a) {
  const auto& order = sid_atom_order();
  auto it = std::find(order.begin(), order.end(), a);
  if (it == order.end()) throw Error(ErrorCode::NotANode, a.to_string() + " is not a half-lattice atom");
  return static_cast<std::size_t>(it - order.begin());
}

Bits sum_atoms(const SIAtomTable& t, const std::vector<std::size_t>& slots) {
  Bits s(Rational(0));
  for (std::size_t i : slots) s += t.atoms[i];
  return s;
}

// Half-lattice atoms dominated by at least one of the singletons in `set`.
std::vector<std::size_t> dominated_by(SourceSet set) {
  static const AntichainLattice half = AntichainLattice::enumerate_half(3);
  std::vector<std::size_t> slots;
  for (const Antichain& a : half.nodes()) {
    bool hit = false;
    for (int i : source_indices(set)) {
      const Antichain single = Antichain::from_sets({SourceSet{1} << (i - 1)});
      if (half.leq(a, single)) hit = true;
    }
    if (hit) slots.push_back(atom_slot(a));
  }
  std::sort(slots.begin(), slots.end());
  return slots;
}

AxiomCheck make_check(std::string equation, std::string statement, Bits lhs, Bits rhs, double tol) {
  AxiomCheck c;
  c.equation = std::move(equation);
  c.statement = std::move(statement);
  c.pass = lhs.equals(rhs, tol);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  return c;
}

}  // namespace

EntropyVector EntropyVector::of(const JointDistribution& d, const VariableGroup& s1,
                                const VariableGroup& s2, const VariableGroup& s3) {
  return EntropyVector({entropy(d, s1), entropy(d, s2), entropy(d, s3), entropy(d, s1 | s2),
                        entropy(d, s1 | s3), entropy(d, s2 | s3), entropy(d, s1 | s2 | s3)});
}

const Bits& EntropyVector::operator()(SourceSet set) const {
  return h_[entropy_slot(set)];
}

bool EntropyVector::is_exact() const {
  return std::all_of(h_.begin(), h_.end(), [](const Bits& b) { return b.is_exact(); });
}

std::vector<std::string> EntropyVector::shannon_violations(double tol) const {
  std::vector<std::string> out;
  const Bits zero(Rational(0));
  for (SourceSet a = 1; a <= 7; ++a) {
    if ((*this)(a).exceeds(zero, tol) || (*this)(a).equals(zero, tol)) {
    } else {
      out.push_back(set_name(a) + " < 0");
    }
    for (SourceSet b = 1; b <= 7; ++b) {
      if (a != b && (a & b) == a && (*this)(a).exceeds((*this)(b), tol)) {
        out.push_back(set_name(a) + " > " + set_name(b));
      }
    }
  }
  // H(A) + H(B) >= H(A u B) + H(A n B), with H(empty) = 0
  for (SourceSet a = 1; a <= 7; ++a) {
    for (SourceSet b = a + 1; b <= 7; ++b) {
      const SourceSet u = a | b, n = a & b;
      Bits rhs = (*this)(u);
      if (n != 0) rhs += (*this)(n);
      if (rhs.exceeds((*this)(a) + (*this)(b), tol)) {
        out.push_back("submodularity fails for " + set_name(a) + ", " + set_name(b));
      }
    }
  }
  return out;
}

const std::array<Antichain, 10>& sid_atom_order() {
  static const std::array<Antichain, 10> order = {
      Antichain::parse("{{1}{2}{3}}"), Antichain::parse("{{1}{2}}"),  Antichain::parse("{{1}{3}}"),
      Antichain::parse("{{2}{3}}"),    Antichain::parse("{{1}{23}}"), Antichain::parse("{{2}{13}}"),
      Antichain::parse("{{3}{12}}"),   Antichain::parse("{{1}}"),     Antichain::parse("{{2}}"),
      Antichain::parse("{{3}}"),
  };
  return order;
}

const std::array<std::array<int, 10>, 9>& sid_coefficients() {
  static const std::array<std::array<int, 10>, 9> m = {{
      {1, 1, 1, 0, 1, 0, 0, 1, 0, 0},
      {1, 1, 0, 1, 0, 1, 0, 0, 1, 0},
      {1, 0, 1, 1, 0, 0, 1, 0, 0, 1},
      {1, 1, 1, 1, 1, 1, 0, 1, 1, 0},
      {1, 1, 1, 1, 1, 0, 1, 1, 0, 1},
      {1, 1, 1, 1, 0, 1, 1, 0, 1, 1},
      {1, 1, 1, 1, 1, 1, 0, 1, 1, 1},
      {1, 1, 1, 1, 1, 0, 1, 1, 1, 1},
      {1, 1, 1, 1, 0, 1, 1, 1, 1, 1},
  }};
  return m;
}

std::size_t sid_coefficient_rank() {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : sid_coefficients()) {
    std::vector<Rational> r;
    for (int v : row) r.emplace_back(v);
    a.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 10 && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < 10; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

const Bits& SIAtomTable::at(const Antichain& a) const {
  return atoms[atom_slot(a)];
}

Bits SIAtomTable::total() const {
  Bits s(Rational(0));
  for (const Bits& b : atoms) s += b;
  return s;
}

SIAtomTable si_atoms(const EntropyVector& ev, const Bits& red) {
  if (red.value() < -kTolerance || (red.is_exact() && *red.exact() < 0)) {
    throw Error(ErrorCode::NegativeRedundancy, "redundancy " + red.to_string() + " is negative");
  }
  const auto& h = ev;
  SIAtomTable t;
  t.red = red;
  t.atoms[0] = red;
  t.atoms[1] = h(kS1) + h(kS2) - h(kS1 | kS2) - red;
  t.atoms[2] = h(kS1) + h(kS3) - h(kS1 | kS3) - red;
  t.atoms[3] = h(kS2) + h(kS3) - h(kS2 | kS3) - red;
  const Bits synergy = -h(kS1) - h(kS2) - h(kS3) + h(kS1 | kS2) + h(kS1 | kS3) + h(kS2 | kS3) -
                       h(kS1 | kS2 | kS3) + red;
  t.atoms[4] = synergy;
  t.atoms[5] = synergy;
  t.atoms[6] = synergy;
  t.atoms[7] = h(kS1 | kS2 | kS3) - h(kS2 | kS3);
  t.atoms[8] = h(kS1 | kS2 | kS3) - h(kS1 | kS3);
  t.atoms[9] = h(kS1 | kS2 | kS3) - h(kS1 | kS2);
  return t;
}

LinearSystemReport verify_linear_system(const EntropyVector& ev, const SIAtomTable& table, double tol) {
  static constexpr SourceSet kRows[9] = {1, 2, 4, 3, 5, 6, 7, 7, 7};
  LinearSystemReport report;
  report.rank = sid_coefficient_rank();
  if (report.rank != 9) {
    throw Error(ErrorCode::RankDeficient, "coefficient matrix has rank " + std::to_string(report.rank));
  }
  report.exact = true;
  const auto& m = sid_coefficients();
  for (std::size_t r = 0; r < 9; ++r) {
    Bits lhs(Rational(0));
    for (std::size_t c = 0; c < 10; ++c) {
      if (m[r][c] != 0) lhs += long{m[r][c]} * table.atoms[c];
    }
    report.residuals[r] = lhs - ev(kRows[r]);
    report.exact = report.exact && report.residuals[r].is_exact();
    report.max_abs_residual = std::max(report.max_abs_residual, std::fabs(report.residuals[r].value()));
    const bool ok = report.residuals[r].is_exact() ? *report.residuals[r].exact() == 0
                                                   : std::fabs(report.residuals[r].value()) < tol;
    if (!ok) {
      std::ostringstream msg;
      msg << "row " << (r + 1) << " (" << set_name(kRows[r]) << ") residual " << report.residuals[r];
      throw Error(ErrorCode::ResidualTooLarge, msg.str());
    }
  }
  return report;
}

bool Axiom0Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

Axiom0Report check_sid_axiom0(const EntropyVector& ev, const SIAtomTable& table, double tol) {
  Axiom0Report report;
  report.sum_all = table.total();
  report.joint = ev(7);
  for (int k = 1; k <= 3; ++k) {
    const SourceSet s = SourceSet{1} << (k - 1);
    report.checks.push_back(make_check("single-entropy", set_name(s) + " = sum of atoms below {{" +
                                                             std::to_string(k) + "}}",
                                       ev(s), sum_atoms(table, dominated_by(s)), tol));
  }
  for (SourceSet pair : {SourceSet{3}, SourceSet{5}, SourceSet{6}}) {
    report.checks.push_back(make_check("pair-entropy", set_name(pair) + " = sum of atoms below either member",
                                       ev(pair), sum_atoms(table, dominated_by(pair)), tol));
  }
  for (std::size_t excluded = 4; excluded <= 6; ++excluded) {
    report.checks.push_back(make_check("whole-less-than-parts",
                                       "H(S1,S2,S3) = total - Psi(" + sid_atom_order()[excluded].to_string() + ")",
                                       ev(7), report.sum_all - table.atoms[excluded], tol));
  }
  for (const AxiomCheck& c : report.checks) {
    if (!c.pass) {
      throw Error(ErrorCode::AxiomViolated,
                  c.equation + ": " + c.statement + ", residual " + (c.lhs - c.rhs).to_string());
    }
  }
  return report;
}

Axiom0Report check_sid_axiom0(const JointDistribution& d, const VariableGroup& s1,
                              const VariableGroup& s2, const VariableGroup& s3) {
  const EntropyVector ev = EntropyVector::of(d, s1, s2, s3);
  return check_sid_axiom0(ev, si_atoms(ev, red3(d, s1, s2, s3)));
}

SynergySum synergy_sum_check(const EntropyVector& ev, const SIAtomTable& table) {
  SynergySum s;
  s.sum = table.atoms[4] + table.atoms[5] + table.atoms[6];
  s.entropy = ev(7);
  s.violates_wesp = s.sum.exceeds(s.entropy);
  return s;
}

SynergySum synergy_sum_check(const JointDistribution& d, const VariableGroup& s1,
                             const VariableGroup& s2, const VariableGroup& s3) {
  const EntropyVector ev = EntropyVector::of(d, s1, s2, s3);
  return synergy_sum_check(ev, si_atoms(ev, red3(d, s1, s2, s3)));
}

PairSubsystem pair_subsystem(const EntropyVector& ev, const SIAtomTable& table, int i, int k) {
  if (i == k || i < 1 || i > 3 || k < 1 || k > 3) {
    throw Error(ErrorCode::InvalidArgument, "pair indices must be distinct members of {1,2,3}");
  }
  if (i > k) std::swap(i, k);
  const SourceSet si = SourceSet{1} << (i - 1), sk = SourceSet{1} << (k - 1);
  PairSubsystem p;
  p.i = i;
  p.k = k;
  p.redundancy = ev(si) + ev(sk) - ev(si | sk);
  p.unique_i = ev(si | sk) - ev(sk);
  p.unique_k = ev(si | sk) - ev(si);
  p.from_full = table.atoms[0] + table.at(Antichain::from_sets({si, sk}));
  p.consistent = p.redundancy.equals(p.from_full) &&
                 (p.redundancy + p.unique_i + p.unique_k).equals(ev(si | sk));
  return p;
}

SidDecomposition decompose_sid(const JointDistribution& d, const VariableGroup& s1,
                               const VariableGroup& s2, const VariableGroup& s3,
                               std::optional<Bits> red) {
  EntropyVector ev = EntropyVector::of(d, s1, s2, s3);
  SIAtomTable table = si_atoms(ev, red ? *red : red3(d, s1, s2, s3));
  LinearSystemReport linear = verify_linear_system(ev, table);
  Axiom0Report axiom0 = check_sid_axiom0(ev, table);
  SynergySum synergy = synergy_sum_check(ev, table);
  std::vector<PairSubsystem> pairs = {pair_subsystem(ev, table, 1, 2), pair_subsystem(ev, table, 1, 3),
                                      pair_subsystem(ev, table, 2, 3)};
  return SidDecomposition{std::move(ev), std::move(table), std::move(linear), std::move(axiom0),
                          std::move(synergy), std::move(pairs)};
}

}  // namespace infoatoms
