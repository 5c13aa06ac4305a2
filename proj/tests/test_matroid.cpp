#include <gtest/gtest.h>

#include "support.hpp"

using namespace otk;
using otk::testing::Gen;

namespace {

using V = std::vector<long>;

VectorConfig configA(V theta = {0, -1}) { return VectorConfig(1, {{1}, {-1}}, theta); }
VectorConfig configB(V theta = {0, 0, 1}) { return VectorConfig(2, {{1, 0}, {0, 1}, {1, 1}}, theta); }
VectorConfig basis2() { return VectorConfig(2, {{1, 0}, {0, 1}}, V{0, 0}); }

IndexSet S(std::initializer_list<std::size_t> one_based) {
  IndexSet s;
  for (auto i : one_based) s.push_back(i - 1);
  return s;
}

TEST(VectorConfig, RejectsMalformedVectors) {
  EXPECT_THROW(VectorConfig(2, {{1, 0}, {2, 2}}), InvalidConfig);
  EXPECT_THROW(VectorConfig(2, {{1, 0}, {0, 0}}), InvalidConfig);
  EXPECT_THROW(VectorConfig(2, {{1, 0}, {0}}), InvalidConfig);
  EXPECT_THROW(VectorConfig(2, {{1, 0}}), InvalidConfig);
  EXPECT_THROW(VectorConfig(1, {{1}, {-1}}, V{0}), InvalidConfig);
  EXPECT_THROW(configB().vector(3), std::out_of_range);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(configB(), S({1, 2})), 2u);
  EXPECT_EQ(rank(configB(), S({1, 2, 3})), 2u);
  EXPECT_EQ(rank(configB(), {}), 0u);
  EXPECT_EQ(rank(configA(), S({1, 2})), 1u);
}

TEST(Validate, ConfigAPassesEverything) {
  auto r = validate(configA());
  EXPECT_TRUE(r.full_rank);
  EXPECT_TRUE(r.no_coloops);
  EXPECT_TRUE(r.unimodular);
  ASSERT_TRUE(r.simple);
  EXPECT_TRUE(*r.simple);
  EXPECT_TRUE(r.ok());
}

TEST(Validate, MinorTwoIsNotUnimodular) {
  // (1) and (2) cannot be built since (2) is not primitive; a rank-2 minor of 2 can
  VectorConfig c(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}, V{0, 0, 1, 3});
  auto r = validate(c);
  EXPECT_FALSE(r.unimodular);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.violations.empty());
}

TEST(Validate, BasisHasColoops) {
  auto r = validate(basis2());
  EXPECT_FALSE(r.no_coloops);
  EXPECT_TRUE(r.full_rank);
  EXPECT_TRUE(r.unimodular);
}

TEST(Validate, SimpleNeedsTheta) {
  VectorConfig c(1, {{1}, {-1}});
  EXPECT_THROW(validate(c), MissingTheta);
  EXPECT_FALSE(validate(c, false).simple.has_value());
}

TEST(Validate, CoincidentHyperplanesAreNotSimple) {
  // a1 = -a2 with theta1 = -theta2: both hyperplanes are {x = 0}
  auto r = validate(configA({0, 0}));
  ASSERT_TRUE(r.simple);
  EXPECT_FALSE(*r.simple);
}

TEST(Circuits, Examples) {
  EXPECT_EQ(circuits(configA()), (std::vector<IndexSet>{S({1, 2})}));
  EXPECT_EQ(circuits(configB()), (std::vector<IndexSet>{S({1, 2, 3})}));
  EXPECT_TRUE(circuits(basis2()).empty());
}

TEST(Circuits, MatchBruteForceOracleOnCorpus) {
  for (const auto& e : corpus()) EXPECT_EQ(circuits(e.config), otk::testing::brute_circuits(e.config)) << e.name;
}

TEST(SignedCircuit, ThetaRule) {
  auto a = signed_circuit(configA(), S({1, 2}));
  EXPECT_EQ(a.plus, S({1, 2}));
  EXPECT_TRUE(a.minus.empty());
  EXPECT_EQ(a.tau, -1);

  auto b = signed_circuit(configB(), S({1, 2, 3}));
  EXPECT_EQ(b.plus, S({1, 2}));
  EXPECT_EQ(b.minus, S({3}));
  EXPECT_EQ(b.tau, -1);

  auto flipped = signed_circuit(configA({0, 1}), S({1, 2}));
  EXPECT_TRUE(flipped.plus.empty());
  EXPECT_EQ(flipped.minus, S({1, 2}));
}

TEST(SignedCircuit, DefaultOrientationPutsMinimumInPlus) {
  VectorConfig c(2, {{1, 1}, {0, 1}, {1, 0}});
  auto sc = signed_circuit(c, S({1, 2, 3}), false);
  EXPECT_EQ(sc.plus, S({1}));
  EXPECT_EQ(sc.minus, S({2, 3}));
}

TEST(SignedCircuit, Errors) {
  EXPECT_THROW(signed_circuit(configA({0, 0}), S({1, 2})), DegenerateTheta);
  VectorConfig c(2, {{1, 0}, {1, 2}, {0, 1}}, V{0, 0, 1});
  EXPECT_THROW(signed_circuit(c, S({1, 2, 3})), NotUnimodular);
}

TEST(SignedCircuit, RelationHoldsAndOppositeSwaps) {
  for (const auto& e : corpus()) {
    for (const auto& sc : signed_circuits(e.config)) {
      for (std::size_t r = 0; r < e.config.rank(); ++r) {
        long sum = 0;
        for (auto i : sc.plus) sum += e.config.vector(i)[r];
        for (auto i : sc.minus) sum -= e.config.vector(i)[r];
        EXPECT_EQ(sum, 0) << e.name;
      }
      EXPECT_LT(sc.tau, 0);
      auto o = sc.opposite();
      EXPECT_EQ(o.plus, sc.minus);
      EXPECT_EQ(o.tau, -sc.tau);
    }
  }
}

TEST(Closure, Examples) {
  EXPECT_EQ(closure(configB(), S({1, 2})), S({1, 2, 3}));
  EXPECT_EQ(closure(configB(), S({3})), S({3}));
  EXPECT_EQ(closure(configB(), S({1, 2, 3})), S({1, 2, 3}));
  EXPECT_EQ(closure(configA(), S({1})), S({1, 2}));
}

TEST(Flats, Examples) {
  EXPECT_EQ(flats(configB()), (std::vector<IndexSet>{{}, S({1}), S({2}), S({3}), S({1, 2, 3})}));
  EXPECT_EQ(flats(configA()), (std::vector<IndexSet>{{}, S({1, 2})}));
  EXPECT_EQ(flats(VectorConfig(1, {{1}})), (std::vector<IndexSet>{{}, S({1})}));
}

TEST(BrokenCircuits, Examples) {
  EXPECT_EQ(broken_circuits(configA()), (std::vector<IndexSet>{S({1})}));
  EXPECT_EQ(broken_circuits(configB()), (std::vector<IndexSet>{S({1, 2})}));
  EXPECT_TRUE(broken_circuits(basis2()).empty());
}

TEST(ComplexSummary, Examples) {
  auto bc = complex_summary(configB(), ComplexKind::BrokenCircuit);
  EXPECT_EQ(bc.f_vector, (std::vector<long>{1, 3, 2}));
  EXPECT_EQ(bc.h_vector, (std::vector<long>{1, 1}));
  auto ind = complex_summary(configB(), ComplexKind::Independence);
  EXPECT_EQ(ind.f_vector, (std::vector<long>{1, 3, 3}));
  EXPECT_EQ(ind.h_vector, (std::vector<long>{1, 1, 1}));
  auto a = complex_summary(configA(), ComplexKind::BrokenCircuit);
  EXPECT_EQ(a.f_vector, (std::vector<long>{1, 1}));
  EXPECT_EQ(a.h_vector, (std::vector<long>{1}));
}

TEST(ComplexSummary, BrokenCircuitFacesCountedByBruteForce) {
  for (const auto& e : corpus()) {
    auto bcs = broken_circuits(e.config);
    std::vector<long> f(e.config.rank() + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e.config.size()); ++mask) {
      bool face = std::none_of(bcs.begin(), bcs.end(), [&](const IndexSet& b) {
        auto bm = set_to_mask(b);
        return (mask & bm) == bm;
      });
      if (face) ++f.at(static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    EXPECT_EQ(complex_summary(e.config, ComplexKind::BrokenCircuit).f_vector, f) << e.name;
  }
}

TEST(Corpus, EveryEntryIsValid) {
  for (const auto& e : corpus()) EXPECT_TRUE(validate(e.config).ok()) << e.name;
}

TEST(Corpus, ParseConfig) {
  auto c = parse_config(R"({"rank": 2, "vectors": [[1, 0], [0, 1], [1, 1]], "theta": [0, 0, 1]})");
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.theta(), (V{0, 0, 1}));
  EXPECT_FALSE(parse_config(R"({"rank": 1, "vectors": [[1], [-1]]})").has_theta());
  EXPECT_THROW(parse_config(R"({"rank": 1, "vectors": [[1], [-1]])"), ParseError);
  EXPECT_THROW(parse_config(R"({"rank": "2", "vectors": []})"), ParseError);
  EXPECT_THROW(parse_config(R"({"rank": 1, "vectors": [[1.5]]})"), ParseError);
  EXPECT_THROW(parse_config(R"({"rank": 1, "vectors": [[1]], "extra": 1})"), ParseError);
  EXPECT_THROW(parse_config(R"({"rank": 2, "vectors": [[1, 0], [2, 2]]})"), InvalidConfig);
}

}  // namespace
