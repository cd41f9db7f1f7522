#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "infoatoms/error.hpp"
#include "infoatoms/io.hpp"
#include "infoatoms/lattice.hpp"
#include "infoatoms/paper_suite.hpp"
#include "infoatoms/pid_engine.hpp"
#include "infoatoms/redundancy_gk.hpp"
#include "infoatoms/sid.hpp"

namespace infoatoms::cli {

namespace {

struct InputOptions {
  std::string path;
  std::string builtin;
};

struct Common {
  std::string format = "text";
  double tolerance = kTolerance;
  bool json() const { return format == "json"; }
};

struct Input {
  JointDistribution dist;
  std::string description;
  std::optional<PaperSystem> system;
};

Input load(const InputOptions& in) {
  if (in.path.empty() == in.builtin.empty()) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --input or --builtin");
  }
  if (!in.builtin.empty()) {
    PaperSystem s = build_builtin(in.builtin);
    JointDistribution d = s.dist;
    return Input{std::move(d), "builtin:" + in.builtin, std::move(s)};
  }
  return Input{load_distribution(in.path), "file:" + in.path, std::nullopt};
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::string join(const std::vector<std::string>& xs, std::string_view sep = ",") {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += x;
  }
  return out;
}

VariableGroup resolve(const JointDistribution& d, const std::vector<std::string>& names) {
  if (names.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable group");
  return d.group(names);
}

// Sources default to S1, S2, S3 when the input has them.
std::vector<VariableGroup> resolve_sources(const JointDistribution& d, const std::vector<std::string>& specs,
                                           std::size_t min, std::size_t max) {
  std::vector<std::string> use = specs;
  if (use.empty()) use = {"S1", "S2", "S3"};
  if (use.size() < min || use.size() > max) {
    throw Error(ErrorCode::InvalidArgument, "expected between " + std::to_string(min) + " and " +
                                                std::to_string(max) + " sources, got " + std::to_string(use.size()));
  }
  std::vector<VariableGroup> out;
  for (const std::string& s : use) out.push_back(resolve(d, split_names(s)));
  return out;
}

Json bits_json(const Bits& b) {
  Json j;
  j["value"] = b.to_string();
  j["bits"] = b.value();
  return j;
}

Json rational_json(const Rational& q) {
  Json j;
  j["value"] = to_string(q);
  j["bits"] = q.get_d();
  return j;
}

Json interval_json(const Interval& iv) {
  Json j;
  j["value"] = iv.to_string();
  j["lo"] = iv.lo ? Json(to_string(*iv.lo)) : Json(nullptr);
  j["hi"] = iv.hi ? Json(to_string(*iv.hi)) : Json(nullptr);
  j["fixed"] = iv.fixed();
  return j;
}

Json envelope(std::string_view command, Json inputs) {
  Json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["values"] = Json::object();
  j["checks"] = Json::array();
  j["provenance"] = Json::array();
  return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string group_label(const JointDistribution& d, const VariableGroup& g) { return join(d.names(g)); }

// --- subcommands -----------------------------------------------------------

int cmd_entropy(const Common& c, const InputOptions& io, const std::vector<std::string>& group,
                const std::vector<std::string>& given, std::ostream& out) {
  const Input in = load(io);
  const VariableGroup g = resolve(in.dist, group);
  std::string key = "H(" + group_label(in.dist, g);
  Bits h;
  if (given.empty()) {
    h = entropy(in.dist, g);
  } else {
    const VariableGroup cond = resolve(in.dist, given);
    key += "|" + group_label(in.dist, cond);
    h = conditional_entropy(in.dist, g, cond);
  }
  key += ")";
  if (c.json()) {
    Json j = envelope("entropy", {{"source", in.description}, {"group", group}, {"given", given}});
    j["values"][key] = bits_json(h);
    emit_json(out, j);
  } else {
    out << key << " = " << h << "\n";
  }
  return kOk;
}

int cmd_mutual(const Common& c, const InputOptions& io, const std::vector<std::string>& a,
               const std::vector<std::string>& b, std::ostream& out) {
  const Input in = load(io);
  const VariableGroup ga = resolve(in.dist, a), gb = resolve(in.dist, b);
  const Bits mi = mutual_information(in.dist, ga, gb);
  const std::string key = "I(" + group_label(in.dist, ga) + ";" + group_label(in.dist, gb) + ")";
  if (c.json()) {
    Json j = envelope("mutual-info", {{"source", in.description}, {"first", a}, {"second", b}});
    j["values"][key] = bits_json(mi);
    emit_json(out, j);
  } else {
    out << key << " = " << mi << "\n";
  }
  return kOk;
}

int cmd_lattice(const Common& c, std::size_t n, bool half, std::ostream& out) {
  const AntichainLattice l = half ? AntichainLattice::enumerate_half(n) : AntichainLattice::enumerate_full(n);
  std::vector<std::pair<std::string, std::string>> order;
  for (std::size_t b = 0; b < l.size(); ++b) {
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (a != b && l.leq_index(b, a)) order.emplace_back(l.node(b).to_string(), l.node(a).to_string());
    }
  }
  if (c.json()) {
    Json j = envelope("lattice", {{"n", n}, {"kind", half ? "half" : "full"}});
    Json nodes = Json::array();
    for (const Antichain& a : l.nodes()) nodes.push_back(a.to_string());
    j["values"]["nodes"] = nodes;
    j["values"]["size"] = l.size();
    Json pairs = Json::array();
    for (const auto& [b, a] : order) pairs.push_back({b, a});
    j["values"]["order"] = pairs;
    emit_json(out, j);
    return kOk;
  }
  out << (half ? "half" : "full") << " lattice over " << n << " sources: " << l.size() << " antichains\n";
  for (std::size_t i = 0; i < l.size(); ++i) out << "  " << std::setw(3) << i + 1 << "  " << l.node(i).to_string() << "\n";
  out << "order (beta <= alpha, beta != alpha): " << order.size() << " pairs\n";
  for (const auto& [b, a] : order) out << "  " << b << " <= " << a << "\n";
  return kOk;
}

int cmd_gk(const Common& c, const InputOptions& io, const std::vector<std::string>& specs, std::ostream& out) {
  const Input in = load(io);
  const auto sources = resolve_sources(in.dist, specs, 2, 8);
  const CommonPartition p = common_partition(in.dist, sources);
  if (c.json()) {
    std::vector<std::string> names;
    for (const auto& s : sources) names.push_back(group_label(in.dist, s));
    Json j = envelope("redundancy-gk", {{"source", in.description}, {"sources", names}});
    j["values"]["H(Q)"] = bits_json(p.value);
    j["values"]["blocks"] = p.block_count();
    Json blocks = Json::array();
    for (std::size_t b = 0; b < p.block_count(); ++b) {
      blocks.push_back({{"mass", to_string(p.block_probabilities[b])}, {"outcomes", p.blocks[b].size()}});
    }
    j["values"]["block_masses"] = blocks;
    j["checks"].push_back({{"name", "H(Q|S_i) = 0 for every source"}, {"pass", true}});
    emit_json(out, j);
    return kOk;
  }
  out << "H(Q) = " << p.value << "\n";
  out << "blocks = " << p.block_count() << "\n";
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    out << "  block " << b + 1 << ": mass " << to_string(p.block_probabilities[b]) << " (" << p.blocks[b].size()
        << " outcomes)\n";
  }
  return kOk;
}

int cmd_sid(const Common& c, const InputOptions& io, const std::vector<std::string>& specs,
            const std::string& red_text, std::ostream& out) {
  const Input in = load(io);
  const auto s = resolve_sources(in.dist, specs, 3, 3);
  std::optional<Bits> red;
  if (!red_text.empty()) red = Bits(parse_rational(red_text));
  const EntropyVector ev = EntropyVector::of(in.dist, s[0], s[1], s[2]);
  const SIAtomTable table = si_atoms(ev, red ? *red : red3(in.dist, s[0], s[1], s[2]));
  const LinearSystemReport lin = verify_linear_system(ev, table, c.tolerance);
  const Axiom0Report ax = check_sid_axiom0(ev, table, c.tolerance);
  const SynergySum syn = synergy_sum_check(ev, table);
  std::vector<PairSubsystem> pairs;
  for (auto [i, k] : {std::pair{1, 2}, {1, 3}, {2, 3}}) pairs.push_back(pair_subsystem(ev, table, i, k));
  const auto& order = sid_atom_order();

  if (c.json()) {
    std::vector<std::string> names;
    for (const auto& g : s) names.push_back(group_label(in.dist, g));
    Json j = envelope("decompose-sid", {{"source", in.description},
                                        {"sources", names},
                                        {"red", red ? "override" : "common-part"}});
    for (std::size_t k = 0; k < order.size(); ++k) j["values"][order[k].to_string()] = bits_json(table.atoms[k]);
    j["values"]["red"] = bits_json(table.red);
    j["values"]["total"] = bits_json(ax.sum_all);
    j["values"]["H(S)"] = bits_json(ax.joint);
    j["values"]["synergy_sum"] = bits_json(syn.sum);
    j["checks"].push_back({{"name", "coefficient rank"}, {"pass", lin.rank == 9}, {"rank", lin.rank}});
    j["checks"].push_back({{"name", "linear system"}, {"pass", true}, {"residual", lin.max_abs_residual}});
    for (const AxiomCheck& a : ax.checks) {
      j["checks"].push_back({{"name", a.statement},
                             {"pass", a.pass},
                             {"lhs", a.lhs.to_string()},
                             {"rhs", a.rhs.to_string()},
                             {"residual", (a.lhs - a.rhs).to_string()}});
      j["provenance"].push_back(a.equation);
    }
    for (const PairSubsystem& p : pairs) {
      j["checks"].push_back({{"name", "pair {" + std::to_string(p.i) + "," + std::to_string(p.k) +
                                          "} recomputed from its marginals"},
                             {"pass", p.consistent},
                             {"redundancy", p.redundancy.to_string()},
                             {"from_full", p.from_full.to_string()}});
    }
    j["checks"].push_back({{"name", "synergy sum exceeds H(S)"}, {"pass", syn.violates_wesp}});
    emit_json(out, j);
    return kOk;
  }
  out << std::left << std::setw(14) << "atom" << "value\n";
  for (std::size_t k = 0; k < order.size(); ++k) {
    out << std::setw(14) << order[k].to_string() << table.atoms[k] << "\n";
  }
  out << std::right;
  out << "total = " << ax.sum_all << "\n";
  out << "red = " << table.red << (red ? " (override)" : " (common part)") << "\n";
  out << "linear system: rank " << lin.rank << ", max residual " << lin.max_abs_residual << "\n";
  out << "identities:\n";
  for (const AxiomCheck& a : ax.checks) {
    out << "  " << (a.pass ? "pass" : "FAIL") << "  " << a.statement << ": " << a.lhs << " = " << a.rhs << "\n";
  }
  for (const PairSubsystem& p : pairs) {
    out << "  " << (p.consistent ? "pass" : "FAIL") << "  pair {" << p.i << "," << p.k << "}: I = " << p.redundancy
        << ", from full table " << p.from_full << "\n";
  }
  out << "synergy sum = " << syn.sum << ", H(S) = " << syn.entropy
      << (syn.violates_wesp ? ", sum exceeds H(S)" : ", sum within H(S)") << "\n";
  return kOk;
}

void print_state_text(const DeductionState& s, bool certificate, std::ostream& out) {
  out << "status: " << to_string(s.status) << "\n";
  out << "constraints:";
  for (const auto& [kind, count] : s.constraint_counts()) out << " " << to_string(kind) << "=" << count;
  out << "\n";
  for (const std::string& f : s.firings) out << "rule: " << f << "\n";
  out << "atoms:\n";
  for (const PIAtomVar& v : s.variables) {
    out << "  " << std::left << std::setw(24) << v.label() << std::right << v.bounds.to_string() << "\n";
  }
  if (certificate && s.status == Status::Contradiction) {
    out << "certificate (" << s.certificate.size() << " constraints):\n";
    for (std::size_t ci : s.certificate) {
      out << "  [" << to_string(s.constraints[ci].kind) << "] " << s.constraints[ci].provenance << "\n";
    }
    const DeductionState replay = propagate(restrict_to(s, s.certificate));
    out << "replay: " << to_string(replay.status) << "\n";
    for (const TraceStep& t : replay.trace) {
      out << "  " << replay.variables[t.variable].label() << ": " << t.before.to_string() << " -> "
          << t.after.to_string() << "  by "
          << (t.constraint ? replay.constraints[*t.constraint].provenance : std::string("linear program")) << "\n";
    }
  }
}

Json state_json(const DeductionState& s, bool certificate) {
  Json j;
  j["status"] = to_string(s.status);
  Json counts = Json::object();
  for (const auto& [kind, count] : s.constraint_counts()) counts[std::string(to_string(kind))] = count;
  j["constraint_counts"] = counts;
  j["rules"] = s.firings;
  Json atoms = Json::object();
  for (const PIAtomVar& v : s.variables) atoms[v.label()] = interval_json(v.bounds);
  j["atoms"] = atoms;
  if (certificate && s.status == Status::Contradiction) {
    Json cert = Json::array();
    for (std::size_t ci : s.certificate) {
      cert.push_back({{"kind", to_string(s.constraints[ci].kind)}, {"provenance", s.constraints[ci].provenance}});
    }
    j["certificate"] = cert;
  }
  return j;
}

int cmd_pid(const Common& c, const InputOptions& io, const std::vector<std::string>& specs,
            const std::vector<std::string>& target_names, const std::vector<std::string>& subtargets,
            const std::string& scope, bool close, bool certificate, std::ostream& out) {
  const Input in = load(io);
  const auto sources = resolve_sources(in.dist, specs, 2, 3);
  const VariableGroup target = resolve(in.dist, target_names.empty() ? std::vector<std::string>{"T"} : target_names);
  BuildOptions opts;
  if (scope == "subsystems") opts.scope = AxiomScope::Subsystems;

  if (!subtargets.empty()) {
    std::vector<VariableGroup> subs;
    for (const std::string& s : subtargets) subs.push_back(resolve(in.dist, split_names(s)));
    const SplitDeduction split = deduce_split(in.dist, sources, target, subs, opts, close);
    if (c.json()) {
      Json j = envelope("pid-deduce", {{"source", in.description},
                                       {"scope", scope},
                                       {"subtargets", subtargets},
                                       {"close", close}});
      j["values"]["status"] = to_string(split.status);
      for (std::size_t k = 0; k < split.atoms.size(); ++k) {
        j["values"]["atoms"][split.atoms[k].to_string()] = interval_json(split.sums[k]);
      }
      Json parts = Json::array();
      for (const DeductionState& p : split.parts) parts.push_back(state_json(p, certificate));
      j["values"]["parts"] = parts;
      emit_json(out, j);
      return kOk;
    }
    out << "status: " << to_string(split.status) << " (" << split.parts.size() << " sub-targets)\n";
    for (std::size_t p = 0; p < split.parts.size(); ++p) {
      out << "sub-target " << subtargets[p] << ": " << to_string(split.parts[p].status) << "\n";
      for (const std::string& f : split.parts[p].firings) out << "  rule: " << f << "\n";
    }
    out << "summed full-system atoms:\n";
    for (std::size_t k = 0; k < split.atoms.size(); ++k) {
      out << "  " << std::left << std::setw(18) << split.atoms[k].to_string() << std::right
          << split.sums[k].to_string() << "\n";
    }
    return kOk;
  }

  DeductionState s = propagate(build_constraints(in.dist, sources, target, opts));
  if (close) s = close_remaining(std::move(s));
  const WespReport w = wesp_report(s);
  if (c.json()) {
    Json j = envelope("pid-deduce", {{"source", in.description}, {"scope", scope}, {"close", close}});
    j["values"] = state_json(s, certificate);
    j["values"]["I(S;T)"] = bits_json(w.information);
    j["values"]["forced_lower_bound"] = w.bound ? Json(to_string(*w.bound)) : Json(nullptr);
    j["values"]["gap"] = rational_json(w.gap);
    j["checks"].push_back({{"name", "full down-set sum within I(S;T)"}, {"pass", !w.violated}});
    for (const Constraint& k : s.constraints) j["provenance"].push_back(k.provenance);
    emit_json(out, j);
    return kOk;
  }
  print_state_text(s, certificate, out);
  out << "whole-vs-parts: I(S;T) = " << w.information << ", forced lower bound "
      << (w.bound ? to_string(*w.bound) : std::string("none")) << ", gap " << to_string(w.gap)
      << (w.violated ? " (violated)" : "") << "\n";
  return kOk;
}

int cmd_scan(const Common& c, unsigned threads, bool open, std::ostream& out) {
  const Lemma6Report l6 = analyse_lemma6();
  if (l6.assignment1.atoms.empty() || l6.assignment2.atoms.empty()) {
    throw Error(ErrorCode::ReproductionFailed, "atom tables could not be deduced");
  }
  SubsetScanResult r;
  if (open) {
    std::vector<bool> open1(18, false), open2(18, false);
    for (std::size_t k = 0; k < 18; ++k) {
      const std::string a = l6.assignment2.atoms[k].to_string();
      open2[k] = std::find(l6.closed_atoms.begin(), l6.closed_atoms.end(), a) != l6.closed_atoms.end();
    }
    r = theorem1_scan_open(l6.assignment1, open1, l6.assignment2, open2, l6.information1.to_rational(),
                           l6.information2.to_rational(), threads);
  } else {
    r = theorem1_scan(l6.assignment1, l6.assignment2, l6.information1.to_rational(),
                      l6.information2.to_rational(), threads);
  }
  if (c.json()) {
    Json j = envelope("theorem1-scan", {{"tables", "deduced"}, {"open_closed_atoms", open}});
    j["values"]["subsets_checked"] = r.subsets_checked;
    j["values"]["valid_for_both_systems"] = r.valid_subsets.size();
    j["values"]["valid_for_system_1"] = r.matches_first;
    j["values"]["valid_for_system_2"] = r.matches_second;
    if (r.witness) {
      Json atoms = Json::array();
      for (const Antichain& a : r.subset_atoms(r.witness->subset)) atoms.push_back(a.to_string());
      j["values"]["witness"] = {{"atoms", atoms},
                                {"system1", {to_string(r.witness->sum1), to_string(r.witness->information1)}},
                                {"system2", {to_string(r.witness->sum2), to_string(r.witness->information2)}}};
    }
    j["checks"].push_back({{"name", "no subset fits both systems"}, {"pass", r.valid_subsets.empty()}});
    emit_json(out, j);
  } else {
    out << "subsets checked: " << r.subsets_checked << "\n";
    out << "valid for both systems: " << r.valid_subsets.size() << "\n";
    out << "valid for system 1 alone: " << r.matches_first << "\n";
    out << "valid for system 2 alone: " << r.matches_second << "\n";
    if (r.witness) {
      std::vector<std::string> atoms;
      for (const Antichain& a : r.subset_atoms(r.witness->subset)) atoms.push_back(a.to_string());
      out << "first system-1 fit: {" << join(atoms, " ") << "}: sum " << to_string(r.witness->sum1) << " = "
          << to_string(r.witness->information1) << ", system 2 sum " << to_string(r.witness->sum2)
          << " vs " << to_string(r.witness->information2) << "\n";
    }
  }
  return r.valid_subsets.empty() ? kOk : kCheckFailed;
}

int cmd_verify(const Common& c, unsigned threads, bool timings, std::ostream& out) {
  const PaperVerification v = verify_paper(threads);
  if (c.json()) {
    Json j = envelope("verify-paper", {{"systems", {"system1", "system2"}}});
    for (const PaperCheck& k : v.checks) {
      Json row{{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}};
      if (timings) row["seconds"] = k.seconds;
      j["checks"].push_back(row);
    }
    j["values"]["all_pass"] = v.all_pass();
    emit_json(out, j);
  } else {
    for (const PaperCheck& k : v.checks) {
      out << (k.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(52) << k.name << std::right << k.detail;
      if (timings) out << " (" << std::fixed << std::setprecision(3) << k.seconds << " s)" << std::defaultfloat;
      out << "\n";
    }
    out << (v.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return v.all_pass() ? kOk : kCheckFailed;
}

int cmd_export(const InputOptions& io, bool circuit, const std::string& output, std::ostream& out) {
  Json j;
  if (circuit) {
    if (!io.builtin.empty()) {
      j = to_json(build_builtin(io.builtin).circuit);
    } else if (!io.path.empty()) {
      const Json src = read_json_file(io.path);
      if (!looks_like_circuit(src)) throw Error(ErrorCode::InvalidArgument, "input is not a circuit file");
      j = to_json(circuit_from_json(src));
    } else {
      throw Error(ErrorCode::InvalidArgument, "give exactly one of --input or --builtin");
    }
  } else {
    j = to_json(load(io).dist);
  }
  if (output.empty()) {
    emit_json(out, j);
  } else {
    write_json_file(output, j);
  }
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::SumNotOne:
    case ErrorCode::DuplicateOutcome:
    case ErrorCode::AlphabetViolation:
    case ErrorCode::SupportTooLarge:
    case ErrorCode::CyclicDefinition:
    case ErrorCode::UnknownBit:
    case ErrorCode::EmptySupport:
      return kInputError;
    case ErrorCode::AxiomViolated:
    case ErrorCode::ResidualTooLarge:
    case ErrorCode::RankDeficient:
    case ErrorCode::ReproductionFailed:
    case ErrorCode::StateStillOpen:
    case ErrorCode::KeyMismatch:
      return kCheckFailed;
    default:
      return kUsage;
  }
}

void add_input(CLI::App* sub, InputOptions& in) {
  auto* file = sub->add_option("--input,-i", in.path, "distribution or circuit file (JSON)");
  auto* builtin = sub->add_option("--builtin,-b", in.builtin, "built-in system")
                      ->check(CLI::IsMember({"system1", "system2"}));
  file->excludes(builtin);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact information decompositions of small discrete systems", "infoatoms"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--tolerance", common.tolerance, "comparison tolerance in bits")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  InputOptions in;
  std::vector<std::string> group, given, a, b, sources, target, subtargets;
  std::size_t n = 3;
  bool half = false, close = false, certificate = false, open = false, timings = false, circuit = false;
  std::string red, scope = "full", output;
  unsigned threads = 1;

  auto* entropy_cmd = app.add_subcommand("entropy", "H(group) or H(group|given)");
  add_input(entropy_cmd, in);
  entropy_cmd->add_option("--group,-g", group, "variables (names or 1-based indices)")->required()->delimiter(',');
  entropy_cmd->add_option("--given", given, "conditioning variables")->delimiter(',');

  auto* mi_cmd = app.add_subcommand("mutual-info", "I(a;b)");
  add_input(mi_cmd, in);
  mi_cmd->add_option("--first", a, "first group")->required()->delimiter(',');
  mi_cmd->add_option("--second", b, "second group")->required()->delimiter(',');

  auto* lattice_cmd = app.add_subcommand("lattice", "antichain lattice and its order");
  lattice_cmd->add_option("--n", n, "number of sources")->check(CLI::Range(1, 4))->capture_default_str();
  lattice_cmd->add_flag("--half", half, "three-source half lattice (antichains with a singleton)");

  auto* gk_cmd = app.add_subcommand("redundancy-gk", "common-part redundancy H(Q)");
  add_input(gk_cmd, in);
  gk_cmd->add_option("--source,-s", sources, "source group, comma separated; repeat per source");

  auto* sid_cmd = app.add_subcommand("decompose-sid", "ten SID atoms of three sources");
  add_input(sid_cmd, in);
  sid_cmd->add_option("--source,-s", sources, "source group, comma separated; repeat three times");
  sid_cmd->add_option("--red", red, "override Red(S1,S2,S3) with a rational");

  auto* pid_cmd = app.add_subcommand("pid-deduce", "axiom-driven PID deduction");
  add_input(pid_cmd, in);
  pid_cmd->add_option("--source,-s", sources, "source group, comma separated; repeat per source");
  pid_cmd->add_option("--target,-t", target, "target variables (default T)")->delimiter(',');
  pid_cmd->add_option("--subtarget", subtargets, "independent sub-target group; repeat to split the target");
  pid_cmd->add_option("--scope", scope, "mutual-sum rows to generate")
      ->check(CLI::IsMember({"full", "subsystems"}))
      ->capture_default_str();
  pid_cmd->add_flag("--close", close, "fix atoms constrained only by nonnegativity to zero");
  pid_cmd->add_flag("--certificate", certificate, "print the contradiction certificate and its replay");

  auto* scan_cmd = app.add_subcommand("theorem1-scan", "search all 2^18 atom subsets of the deduced tables");
  scan_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64))->capture_default_str();
  scan_cmd->add_flag("--open", open, "leave atoms fixed only by the closure rule open above their value");

  auto* verify_cmd = app.add_subcommand("verify-paper", "run every reproduction on the built-in systems");
  verify_cmd->add_option("--threads", threads, "worker threads for the scan")->check(CLI::Range(1, 64));
  verify_cmd->add_flag("--timings", timings, "append run times");

  auto* export_cmd = app.add_subcommand("export", "write the input distribution (or circuit) as JSON");
  add_input(export_cmd, in);
  export_cmd->add_flag("--circuit", circuit, "export the circuit description instead of the pmf");
  export_cmd->add_option("--output,-o", output, "file to write (default stdout)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    const int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*entropy_cmd) return cmd_entropy(common, in, group, given, out);
    if (*mi_cmd) return cmd_mutual(common, in, a, b, out);
    if (*lattice_cmd) return cmd_lattice(common, n, half, out);
    if (*gk_cmd) return cmd_gk(common, in, sources, out);
    if (*sid_cmd) return cmd_sid(common, in, sources, red, out);
    if (*pid_cmd) return cmd_pid(common, in, sources, target, subtargets, scope, close, certificate, out);
    if (*scan_cmd) return cmd_scan(common, threads, open, out);
    if (*verify_cmd) return cmd_verify(common, threads, timings, out);
    if (*export_cmd) return cmd_export(in, circuit, output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsage;
}

}  // namespace infoatoms::cli
