#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "infoatoms/io.hpp"

using infoatoms::Json;
namespace cli = infoatoms::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args);
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  return Json::parse(r.out);
}

// Every {"value": v} leaf under key k, plus plain integer leaves.
void numeric_fields(const Json& j, const std::string& key, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && j.contains("value") && j["value"].is_string()) {
    out.emplace_back(key, j["value"].get<std::string>());
    return;
  }
  if (j.is_number_integer()) {
    out.emplace_back(key, j.dump());
    return;
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) numeric_fields(it.value(), it.key(), out);
  }
}

bool some_line_has(const std::string& text, const std::string& a, const std::string& b) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto at = line.find(a);
    if (at != std::string::npos && line.find(b, at + a.size()) != std::string::npos) return true;
  }
  return false;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "infoatoms_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, EntropyOfTheXorTarget) {
  const auto r = run({"entropy", "--builtin", "system2", "--group", "T"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "H(T) = 2\n");
  const Json j = run_json({"entropy", "-b", "system2", "-g", "T"});
  EXPECT_EQ(j["command"], "entropy");
  EXPECT_EQ(j["values"]["H(T)"]["value"], "2");
  EXPECT_EQ(j["values"]["H(T)"]["bits"], 2.0);
}

TEST(Cli, ConditionalAndMutual) {
  EXPECT_EQ(run({"entropy", "-b", "system2", "-g", "S3", "--given", "S1,S2"}).out, "H(S3|S1,S2) = 0\n");
  EXPECT_EQ(run({"mutual-info", "-b", "system1", "--first", "S1,S2,S3", "--second", "T"}).out, "I(S1,S2,S3;T) = 3\n");
}

TEST(Cli, LatticeOfTwoSources) {
  const auto r = run({"lattice", "--n", "2"});
  EXPECT_EQ(r.code, cli::kOk);
  for (auto a : {"{{1}{2}}", "{{1}}", "{{2}}", "{{12}}"}) EXPECT_NE(r.out.find(a), std::string::npos);
  EXPECT_NE(r.out.find("5 pairs"), std::string::npos);
  const Json j = run_json({"lattice", "--n", "3", "--half"});
  EXPECT_EQ(j["values"]["size"], 10);
}

TEST(Cli, VerifyPaper) {
  const auto r = run({"verify-paper"});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("gap 1"), std::string::npos);
  EXPECT_NE(r.out.find("0 valid of 262144"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  // reproducible byte for byte without timings
  EXPECT_EQ(r.out, run({"verify-paper"}).out);
}

TEST(Cli, PidDeduceCertificate) {
  const auto r = run({"pid-deduce", "-b", "system2", "--certificate"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("contradiction"), std::string::npos);
  EXPECT_NE(r.out.find("mutual-sum"), std::string::npos);
  const auto split = run({"pid-deduce", "-b", "system1", "--subtarget", "T1", "--subtarget", "T2", "--subtarget", "T3"});
  EXPECT_EQ(split.code, cli::kOk) << split.err;
  EXPECT_NE(split.out.find("solved"), std::string::npos);
}

TEST(Cli, TextAndJsonAgree) {
  const std::vector<std::vector<std::string>> commands = {
      {"entropy", "-b", "system1", "-g", "S1,T"},
      {"mutual-info", "-b", "system2", "--first", "S1", "--second", "T"},
      {"redundancy-gk", "-b", "system2"},
      {"decompose-sid", "-b", "system2"},
      {"decompose-sid", "-b", "system1"},
      {"pid-deduce", "-b", "system2", "--scope", "subsystems", "--close"},
      {"theorem1-scan"},
  };
  for (const auto& cmd : commands) {
    const auto text = run(cmd);
    ASSERT_EQ(text.code, cli::kOk) << cmd[0] << text.err;
    const Json j = run_json(cmd);
    std::vector<std::pair<std::string, std::string>> fields;
    numeric_fields(j["values"], "", fields);
    EXPECT_FALSE(fields.empty()) << cmd[0];
    for (const auto& [key, value] : fields) {
      // plain JSON keys are the text labels with spaces turned into underscores
      std::string label = key;
      std::replace(label.begin(), label.end(), '_', ' ');
      EXPECT_TRUE(some_line_has(text.out, key, value) || some_line_has(text.out, label, value)) << cmd[0] << ": " << key << " = " << value << "\n" << text.out;
    }
  }
}

TEST(Cli, ExportRoundTrip) {
  for (const bool circuit : {false, true}) {
    const auto path = scratch(circuit ? "circuit.json" : "pmf.json");
    std::vector<std::string> args{"export", "-b", "system2", "-o", path.string()};
    if (circuit) args.push_back("--circuit");
    ASSERT_EQ(run(args).code, cli::kOk);
    for (const std::string cmd : {"decompose-sid", "pid-deduce"}) {
      const Json from_file = run_json({cmd, "--input", path.string()});
      const Json builtin = run_json({cmd, "--builtin", "system2"});
      EXPECT_EQ(from_file["values"], builtin["values"]) << cmd;
    }
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"entropy", "-b", "system2"}).code, cli::kUsage);
  EXPECT_EQ(run({"no-such-command"}).code, cli::kUsage);
  EXPECT_EQ(run({"entropy", "-b", "system2", "-i", "x.json", "-g", "T"}).code, cli::kUsage);
  EXPECT_EQ(run({"entropy", "-i", scratch("missing.json").string(), "-g", "T"}).code, cli::kInputError);
  EXPECT_EQ(run({"entropy", "-b", "system2", "-g", "Nope"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
  const auto bad = run({"entropy", "-b", "system2", "-g", "T", "--format", "yaml"});
  EXPECT_EQ(bad.code, cli::kUsage);
}

TEST(Cli, DecomposeSidWithGivenRedundancy) {
  const Json j = run_json({"decompose-sid", "-b", "system2", "--red", "1/2"});
  EXPECT_EQ(j["values"]["{{1}{2}{3}}"]["value"], "1/2");
}
