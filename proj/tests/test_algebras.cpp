#include <gtest/gtest.h>

#include "support.hpp"

using namespace otk;
using otk::testing::P;

namespace {

using V = std::vector<long>;

VectorConfig configA() { return VectorConfig(1, {{1}, {-1}}, V{0, -1}); }
VectorConfig configB() { return VectorConfig(2, {{1, 0}, {0, 1}, {1, 1}}, V{0, 0, 1}); }
VectorConfig basis2() { return VectorConfig(2, {{1, 0}, {0, 1}}, V{0, 0}); }

std::vector<Polynomial> gens(const Presentation& p) { return p.ideal.generators; }

bool equal_up_to_sign(const Polynomial& a, const Polynomial& b) { return a == b || a == -b; }

TEST(BuildJ0, Examples) {
  auto a = build_J0(configA());
  EXPECT_EQ(gens(a), (std::vector<Polynomial>{P(a.ring, "u1*u2")}));
  auto b = build_J0(configB());
  EXPECT_EQ(gens(b), (std::vector<Polynomial>{P(b.ring, "u1*u2*(h - u3)")}));
  auto c = build_J0(basis2());
  EXPECT_TRUE(gens(c).empty());
  EXPECT_EQ(c.ring->size(), 3u);
  EXPECT_THROW(build_J0(VectorConfig(1, {{1}, {-1}})), MissingTheta);
}

TEST(BuildOT, Examples) {
  auto a = build_OT(configA());
  ASSERT_EQ(gens(a).size(), 1u);
  EXPECT_TRUE(equal_up_to_sign(gens(a)[0], P(a.ring, "u1 + u2")));
  auto ah = build_OTh(configA());
  EXPECT_TRUE(equal_up_to_sign(gens(ah)[0], P(ah.ring, "u1 + u2 - h")));

  auto b = build_OT(configB());
  EXPECT_TRUE(equal_up_to_sign(gens(b)[0], P(b.ring, "u2*u3 + u1*u3 - u1*u2")));
  auto bh = build_OTh(configB());
  EXPECT_TRUE(equal_up_to_sign(gens(bh)[0], P(bh.ring, "u2*u3 + u1*u3 - u1*u2 - h*u3")));

  EXPECT_TRUE(gens(build_OT(basis2())).empty());
  EXPECT_TRUE(gens(build_OTh(basis2())).empty());
}

TEST(BuildOT, AcceptsNonUnimodularRelations) {
  // a3 = a1 + 2 a2 has a coefficient 2; f_{C,0} uses the rational relation directly
  VectorConfig c(2, {{1, 0}, {0, 1}, {1, 2}});
  auto ot = build_OT(c);
  ASSERT_EQ(gens(ot).size(), 1u);
  Polynomial g = gens(ot)[0];
  // u_i -> 1/a_i(x) at x = (2, 3): a = 2, 3, 8
  Rational value = 0;
  for (const auto& [m, coef] : g.terms()) {
    Rational t = coef;
    const Rational a[] = {2, 3, 8};
    for (std::size_t i = 0; i < 3; ++i)
      if (m[i]) t /= a[i];
    value += t;
  }
  EXPECT_EQ(value, 0);
  EXPECT_THROW(build_OTh(c), NotUnimodular);
}

TEST(BuildSR, Examples) {
  auto bbc = build_SR(configB(), ComplexKind::BrokenCircuit);
  EXPECT_EQ(gens(bbc), (std::vector<Polynomial>{P(bbc.ring, "u1*u2")}));
  auto bind = build_SR(configB(), ComplexKind::Independence);
  EXPECT_EQ(gens(bind), (std::vector<Polynomial>{P(bind.ring, "u1*u2*u3")}));
  auto abc = build_SR(configA(), ComplexKind::BrokenCircuit);
  EXPECT_EQ(gens(abc), (std::vector<Polynomial>{P(abc.ring, "u1")}));
}

TEST(BuildJ1, Examples) {
  auto a = build_J1(configA());
  EXPECT_TRUE(equal_up_to_sign(gens(a)[0], P(a.ring, "h*(u1 + u2 - h)")));
  auto b = build_J1(configB());
  EXPECT_TRUE(equal_up_to_sign(gens(b)[0], P(b.ring, "h*(u2*u3 + u1*u3 - u1*u2 - h*u3)")));
  EXPECT_TRUE(gens(build_J1(basis2())).empty());
  // <J1> : h contains J1'
  auto colon = colon_ideal(b.ideal, P(b.ring, "h"));
  EXPECT_TRUE(ideal_contains(colon, build_J1prime(configB()).ideal));
}

TEST(BuildQH, Examples) {
  auto a = build_QH(configA());
  ASSERT_EQ(gens(a).size(), 2u);
  EXPECT_EQ(gens(a)[0], P(a.ring, "u1*u2 - q1*(u1 - h)*(u2 - h)"));
  EXPECT_EQ(gens(a)[1], P(a.ring, "q1*qb1 - 1"));
  Ring uh = ring_uh(2);
  EXPECT_EQ(specialize_q_to_one(gens(a)[0]), -(P(uh, "h*(h - u1 - u2)")));

  auto b = build_QH(configB());
  ASSERT_EQ(gens(b).size(), 2u);
  EXPECT_EQ(gens(b)[0], P(b.ring, "u1*u2*(u3 - h) - q1*(u1 - h)*(u2 - h)*u3"));
  auto lat = curve_class_lattice(configB(), signed_circuits(configB()));
  ASSERT_EQ(lat.basis.size(), 1u);
  EXPECT_EQ(lat.basis[0], (std::vector<Integer>{1, 1, -1}));
}

TEST(BuildQH, SpecialisesToJ1) {
  for (const auto& e : corpus()) {
    auto qh = build_QH(e.config);
    auto j1 = build_J1(e.config);
    const std::size_t k = (qh.ring->size() - e.config.size() - 1) / 2;
    ASSERT_EQ(qh.ideal.generators.size(), j1.ideal.generators.size() + k) << e.name;
    for (std::size_t i = 0; i < j1.ideal.generators.size(); ++i)
      EXPECT_EQ(specialize_q_to_one(qh.ideal.generators[i]), j1.ideal.generators[i]) << e.name;
  }
}

TEST(BuildAOT, Examples) {
  auto a = build_AOT(configA(), false);
  EXPECT_TRUE(same_ideal(a.ideal, Ideal(a.ring, {P(a.ring, "u1 + u2"), P(a.ring, "u1^2"), P(a.ring, "u2^2")})));
  auto ah = build_AOT(configA(), true);
  EXPECT_TRUE(same_ideal(ah.ideal, Ideal(ah.ring, {P(ah.ring, "u1 + u2 - h"), P(ah.ring, "u1*(u1 - h)"),
                                                   P(ah.ring, "u2*(u2 - h)")})));
  EXPECT_EQ(hilbert_series_quotient(a.ideal).coefficient(0) + hilbert_series_quotient(a.ideal).coefficient(1), 2);
  VectorConfig basis3(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, V{0, 0, 0});
  auto s = hilbert_series_quotient(build_AOT(basis3, false).ideal);
  EXPECT_EQ(s.denom_power, 0);
  long total = 0;
  for (long c : s.numerator) total += c;
  EXPECT_EQ(total, 8);
}

TEST(BuildToric, Examples) {
  auto a = build_toric_I1(configA());
  EXPECT_EQ(gens(a), (std::vector<Polynomial>{P(a.ring, "u1*u2 - v1*v2")}));
  auto b = build_toric_I1(configB());
  EXPECT_EQ(gens(b), (std::vector<Polynomial>{P(b.ring, "u1*u2*v3 - v1*v2*u3")}));
  EXPECT_TRUE(gens(build_toric_I1(basis2())).empty());
}

TEST(StructureMap, Examples) {
  auto a = structure_map(configA());
  EXPECT_EQ(a, (std::vector<Polynomial>{P(ring_u(2), "u1 - u2")}));
  Ring r3 = ring_u(3);
  EXPECT_EQ(structure_map(configB()), (std::vector<Polynomial>{P(r3, "u1 + u3"), P(r3, "u2 + u3")}));
  Ring r2 = ring_u(2);
  EXPECT_EQ(structure_map(basis2()), (std::vector<Polynomial>{P(r2, "u1"), P(r2, "u2")}));
}

TEST(WGenerators, Examples) {
  auto a = build_W_generators(configA(), true);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_TRUE(a[0].s.empty());
  EXPECT_EQ(a[0].poly, gens(build_OTh(configA()))[0]);
  auto b = build_W_generators(configB(), true);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_TRUE(b[0].s.empty());
  EXPECT_TRUE(build_W_generators(basis2(), true).empty());
  auto b0 = build_W_generators(configB(), false);
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_TRUE(equal_up_to_sign(b0[0].poly, gens(build_OT(configB()))[0]));
}

TEST(WGenerators, QualifyingPairsOnly) {
  for (const auto& e : corpus()) {
    auto cs = circuits(e.config);
    for (const auto& w : build_W_generators(e.config, true)) {
      IndexSet c = cs.at(w.circuit);
      for (auto i : w.s) EXPECT_FALSE(std::binary_search(c.begin(), c.end(), i)) << e.name;
      IndexSet uni = w.s;
      uni.insert(uni.end(), c.begin(), c.end() - 1);
      std::sort(uni.begin(), uni.end());
      EXPECT_TRUE(is_independent(e.config, uni)) << e.name;
    }
  }
}

TEST(Invariants, DeformationSpecialisesAndOrientationFlipsSign) {
  for (const auto& e : corpus()) {
    Ring ring = ring_uh(e.config.size());
    for (const auto& c : signed_circuits(e.config)) {
      Polynomial f = f_circuit(ring, c);
      Polynomial f_opp = f_circuit(ring, c.opposite());
      EXPECT_EQ(f_opp, -f) << e.name;
      Polynomial f0 = f_circuit_0(ring, c.support(), circuit_relation(e.config, c.support()));
      EXPECT_TRUE(equal_up_to_sign(substitute(f, "h", Rational(0)), f0)) << e.name;
    }
    for (const auto& g : build_J0(e.config).ideal.generators) {
      Polynomial at_zero = substitute(g, "h", Rational(0));
      EXPECT_EQ(at_zero.size(), 1u) << e.name;
    }
  }
}

TEST(Invariants, EveryPresentationIsHomogeneous) {
  for (const auto& e : corpus())
    for (const auto& p : all_presentations(e.config)) EXPECT_TRUE(p.ideal.is_homogeneous()) << e.name << " " << p.label();
}

TEST(Invariants, CircuitPolynomialsLieInEliminationKernel) {
  for (const auto& e : corpus()) {
    if (e.config.size() > kOracleMaxVectors) continue;
    auto ker = kernel_by_elimination(e.config);
    auto gb = buchberger(ker, MonomialOrder::degrevlex(e.config.size()));
    for (const auto& f : build_OT(e.config).ideal.generators)
      EXPECT_TRUE(ideal_membership(f.embed(ker.ring), gb)) << e.name;
  }
}

TEST(Invariants, DeformedOTIsJ1Prime) {
  for (const auto& e : corpus()) {
    auto oth = build_OTh(e.config);
    auto jp = build_J1prime(e.config);
    std::vector<Polynomial> moved;
    for (const auto& p : jp.ideal.generators) moved.push_back(p.embed(oth.ring));
    EXPECT_TRUE(same_ideal(oth.ideal, Ideal(oth.ring, moved))) << e.name;
  }
}

TEST(Labels, ShortNames) {
  std::vector<std::string> labels;
  for (const auto& p : all_presentations(configB())) labels.push_back(p.label());
  EXPECT_EQ(labels, (std::vector<std::string>{"J0", "J", "J1", "J1prime", "OT", "SRind", "SRbc", "AOT", "AOTh",
                                              "ToricI1"}));
}

}  // namespace
