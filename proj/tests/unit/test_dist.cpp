#include <gtest/gtest.h>

#include <cmath>

#include "infoatoms/dist.hpp"
#include "infoatoms/error.hpp"
#include "oracles.hpp"

using namespace infoatoms;

namespace {

JointDistribution two_coins() {
  return JointDistribution::from_pmf({"A", "B"}, {{"0", "1"}, {"0", "1"}},
                                     {{{"0", "0"}, Rational(1, 4)},
                                      {{"0", "1"}, Rational(1, 4)},
                                      {{"1", "0"}, Rational(1, 4)},
                                      {{"1", "1"}, Rational(1, 4)}});
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Distribution, BuildsSortedSupportAndDropsZeros) {
  auto d = JointDistribution::from_pmf({"X"}, {{"a", "b", "c"}},
                                       {{{"c"}, Rational(1, 2)}, {{"a"}, Rational(1, 2)}, {{"b"}, Rational(0)}});
  ASSERT_EQ(d.support_size(), 2u);
  EXPECT_EQ(d.support()[0].first, Outcome{0});
  EXPECT_EQ(d.support()[1].first, Outcome{2});
}

TEST(Distribution, ValidationErrors) {
  EXPECT_EQ(code_of([] { JointDistribution::from_pmf({"X"}, {{"0", "1"}}, {{{"0"}, Rational(1, 2)}}); }),
            ErrorCode::SumNotOne);
  EXPECT_EQ(code_of([] {
              JointDistribution::from_pmf({"X"}, {{"0", "1"}},
                                          {{{"0"}, Rational(1, 2)}, {{"0"}, Rational(1, 2)}});
            }),
            ErrorCode::DuplicateOutcome);
  EXPECT_EQ(code_of([] { JointDistribution::from_pmf({"X"}, {{"0", "1"}}, {{{"7"}, Rational(1)}}); }),
            ErrorCode::AlphabetViolation);
  EXPECT_EQ(code_of([] { JointDistribution::from_pmf({"X"}, {{"0"}}, {{{"0", "0"}, Rational(1)}}); }),
            ErrorCode::AlphabetViolation);
  EXPECT_EQ(code_of([] {
              JointDistribution::from_pmf({"X"}, {{"0", "1"}},
                                          {{{"0"}, Rational(1, 2)}, {{"1"}, Rational(1, 2)}}, 1);
            }),
            ErrorCode::SupportTooLarge);
  EXPECT_EQ(code_of([] { two_coins().group({"C"}); }), ErrorCode::UnknownVariable);
  EXPECT_EQ(code_of([] { VariableGroup(std::vector<std::size_t>{}); }), ErrorCode::InvalidArgument);
}

TEST(Distribution, GroupsByNameOrPosition) {
  auto d = two_coins();
  EXPECT_EQ(d.group({"B"}), VariableGroup({1}));
  EXPECT_EQ(d.group(std::vector<std::string>{"2", "1"}), VariableGroup({0, 1}));
  EXPECT_EQ(d.all(), VariableGroup({0, 1}));
}

TEST(Distribution, EntropiesOfIndependentCoinsAreExact) {
  auto d = two_coins();
  auto a = d.group({"A"});
  auto b = d.group({"B"});
  EXPECT_EQ(*entropy(d, a).exact(), Rational(1));
  EXPECT_EQ(*entropy(d, a | b).exact(), Rational(2));
  EXPECT_EQ(*mutual_information(d, a, b).exact(), Rational(0));
  EXPECT_EQ(*conditional_entropy(d, a, b).exact(), Rational(1));
  EXPECT_FALSE(is_deterministic(d, a, b));
  EXPECT_TRUE(is_deterministic(d, a, a | b));
}

TEST(Distribution, NonDyadicEntropyIsApproximate) {
  auto d = JointDistribution::from_pmf({"X"}, {{"0", "1", "2"}},
                                       {{{"0"}, Rational(1, 3)}, {{"1"}, Rational(1, 3)}, {{"2"}, Rational(1, 3)}});
  const Bits h = entropy(d, d.all());
  EXPECT_FALSE(h.is_exact());
  EXPECT_NEAR(h.value(), std::log2(3.0), 1e-12);
}

TEST(Distribution, Marginal) {
  auto d = from_circuit({{"a", "b"}, {{"c", {"a", "b"}}}, {{"X", {"a"}}, {"Y", {"c"}}}, {"a", "b"}});
  auto m = marginal(d, d.group({"X", "Y"}));
  EXPECT_EQ(m.variable_count(), 2u);
  EXPECT_EQ(m.support_size(), 4u);
  EXPECT_EQ(*entropy(m, m.all()).exact(), Rational(2));
}

TEST(Circuit, XorSystemHasTheExpectedEntropies) {
  auto d = from_circuit({{"x1", "x2"},
                         {{"x3", {"x1", "x2"}}},
                         {{"S1", {"x1"}}, {"S2", {"x2"}}, {"S3", {"x3"}}},
                         {"x1", "x2", "x3"}});
  ASSERT_EQ(d.variable_count(), 4u);
  EXPECT_EQ(d.variables().back().name, "T");
  EXPECT_EQ(*entropy(d, d.group({"T"})).exact(), Rational(2));
  EXPECT_EQ(*entropy(d, d.group({"S1", "S2", "S3"})).exact(), Rational(2));
  EXPECT_EQ(*mutual_information(d, d.group({"S1"}), d.group({"S2"})).exact(), Rational(0));
  EXPECT_TRUE(deterministically_equal(d, d.group({"T"}), d.group({"S1", "S2"})));
}

TEST(Circuit, Errors) {
  EXPECT_EQ(code_of([] { from_circuit({{"a"}, {{"b", {"zz"}}}, {{"X", {"a"}}}, {"a"}}); }), ErrorCode::UnknownBit);
  EXPECT_EQ(code_of([] { from_circuit({{"a"}, {{"b", {"c"}}, {"c", {"b"}}}, {{"X", {"a"}}}, {"a"}}); }),
            ErrorCode::CyclicDefinition);
  EXPECT_EQ(code_of([] { from_circuit({{"a"}, {}, {{"X", {"q"}}}, {"a"}}); }), ErrorCode::UnknownBit);
}

// Shannon primitives against the double oracle over the random corpus.
TEST(ShannonProperties, RandomCorpus) {
  const auto corpus = oracle::random_corpus(200, 11);
  for (const auto& sys : corpus) {
    const auto& d = sys.dist;
    VariableGroup x({0}), y({1}), z({2});
    EXPECT_NEAR(entropy(d, x | y).value(), oracle::entropy_double(d, x | y), 1e-9);
    const Bits chain = entropy(d, x) + conditional_entropy(d, y | z, x);
    EXPECT_TRUE(chain.equals(entropy(d, x | y | z)));
    const Bits i = mutual_information(d, x, y);
    EXPECT_TRUE(i.equals(mutual_information(d, y, x)));
    EXPECT_GE(i.value(), -1e-9);
    EXPECT_LE(i.value(), std::min(entropy(d, x).value(), entropy(d, y).value()) + 1e-9);
  }
}
