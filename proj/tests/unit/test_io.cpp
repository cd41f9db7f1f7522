#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "infoatoms/error.hpp"
#include "infoatoms/io.hpp"
#include "infoatoms/paper_suite.hpp"

using namespace infoatoms;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "infoatoms_io_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Io, DistributionRoundTrip) {
  const auto d = build_system2().dist;
  const Json j = to_json(d);
  EXPECT_EQ(j["pmf"].size(), 4u);
  EXPECT_EQ(j["pmf"][0]["p"], "1/4");
  EXPECT_EQ(distribution_from_json(j), d);
}

TEST(Io, CircuitRoundTrip) {
  const auto spec = system1_circuit();
  const Json j = to_json(spec);
  EXPECT_TRUE(looks_like_circuit(j));
  EXPECT_EQ(circuit_from_json(j), spec);
}

TEST(Io, FileRoundTripExpandsCircuits) {
  const auto path = scratch("system2_circuit.json");
  write_json_file(path, to_json(system2_circuit()));
  EXPECT_EQ(load_distribution(path), build_system2().dist);

  const auto pmf_path = scratch("system2_pmf.json");
  write_json_file(pmf_path, to_json(build_system2().dist));
  EXPECT_EQ(load_distribution(pmf_path), build_system2().dist);
}

TEST(Io, AcceptsNumericProbabilitiesAndValues) {
  const Json j = Json::parse(R"({"variables": ["X"], "alphabets": [[0, 1]],
    "pmf": [{"outcome": [0], "p": 0.5}, {"outcome": [1], "p": "1/2"}]})");
  const auto d = distribution_from_json(j);
  EXPECT_EQ(d.support_size(), 2u);
  EXPECT_EQ(d.support()[0].second, Rational(1, 2));
}

TEST(Io, ParseErrors) {
  for (const char* text : {R"({"alphabets": [], "pmf": []})", R"({"variables": ["X"], "alphabets": [["0"]], "pmf": 3})",
                           R"({"variables": ["X"], "alphabets": [["0"]], "pmf": [{"outcome": [[1]], "p": "1"}]})",
                           R"({"free_bits": ["a"], "groupings": []})"}) {
    const Json j = Json::parse(text);
    try {
      if (looks_like_circuit(j)) {
        circuit_from_json(j);
      } else {
        distribution_from_json(j);
      }
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << text;
    }
  }
}

TEST(Io, MissingOrBrokenFile) {
  try {
    read_json_file(scratch("does_not_exist.json"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
  const auto path = scratch("broken.json");
  std::ofstream(path) << "{ not json";
  try {
    read_json_file(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}
