#include <gtest/gtest.h>

#include "perfcode/catalogue.hpp"
#include "perfcode/classify.hpp"
#include "perfcode/error.hpp"
#include "support.hpp"

using namespace perfcode;
using testing_support::elems;
using testing_support::gen;
using testing_support::group;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Internal;
}

void expect_valid(const FiniteGroup& g, const Subgroup& h, const CodeDecision& d) {
  if (!d.verdict) {
    EXPECT_FALSE(d.witness);
    return;
  }
  ASSERT_TRUE(d.witness);
  EXPECT_TRUE(group_ring_product_check(g, *d.witness, h.elements()).all_ones());
  EXPECT_EQ((d.witness->size() + 1) * h.order(), g.order());
}

std::set<ElementSet> code_sets(const std::vector<QuaternionCode>& codes) {
  std::set<ElementSet> out;
  for (const auto& c : codes) out.insert(c.subgroup.elements());
  return out;
}

}  // namespace

TEST(IsCodePerfect, Examples) {
  EXPECT_TRUE(is_code_perfect(group("Z(15)")).code_perfect);
  const auto q = group("Q(8)");
  const auto r = is_code_perfect(q);
  EXPECT_FALSE(r.code_perfect);
  ASSERT_TRUE(r.non_code_subgroup);
  EXPECT_EQ(*r.non_code_subgroup, gen(q, "x^2"));
  ASSERT_TRUE(r.order4_element);
  EXPECT_EQ(element_order(q, *r.order4_element), 4u);
  EXPECT_TRUE(is_code_perfect(group("A(2,2,3)")).code_perfect);
}

TEST(IsCodePerfect, VerifyMode) {
  for (const char* dsl : {"Q(8)", "D(12)", "A(2,2,3)", "perm{(0 1 2 3);(0 1)}@4", "Z(16)"}) {
    const auto g = group(dsl);
    const auto fast = is_code_perfect(g);
    const auto full = is_code_perfect(g, CheckMode::Verify);
    EXPECT_TRUE(full.verified);
    EXPECT_EQ(full.code_perfect, fast.code_perfect);
    EXPECT_EQ(full.subgroups_checked, all_subgroups(g).size());
  }
  DecideOptions tight;
  tight.order_bound = 8;
  EXPECT_EQ(kind_of([&] { is_code_perfect(group("Z(9)"), CheckMode::Verify, tight); }),
            ErrorKind::OrderBoundExceeded);
}

TEST(DecideNormal, Examples) {
  const auto z12 = group("Z(12)");
  const auto d1 = decide_normal(z12, gen(z12, "4"));
  EXPECT_TRUE(d1.verdict);
  EXPECT_EQ(d1.method, Method::NormalCriterion);
  expect_valid(z12, gen(z12, "4"), d1);

  const auto z4 = group("Z(4)");
  const auto d2 = decide_normal(z4, gen(z4, "2"));
  EXPECT_FALSE(d2.verdict);
  ASSERT_TRUE(d2.negative_witness);
  EXPECT_EQ(std::get<FailingElementWitness>(*d2.negative_witness).g, 1u);

  const auto d = group("D(8)");
  EXPECT_TRUE(decide_normal(d, Subgroup::whole(d)).verdict);
  EXPECT_EQ(kind_of([&] { decide_normal(d, gen(d, "s")); }), ErrorKind::NotNormal);
}

TEST(DecideNormal, MatchesOracleOnNormalSubgroups) {
  for (const char* dsl : {"Q(16)", "D(16)", "Q(8) x Z(2)", "perm{(0 1 2 3);(0 1)}@4", "Q(24)",
                          "D(8) x Z(3)", "Q(8) x Z(4)"}) {
    const auto g = group(dsl);
    for (const auto& h : all_subgroups(g)) {
      if (!is_normal(g, h)) continue;
      const auto d = decide_normal(g, h);
      EXPECT_EQ(d.verdict, search_transversal(g, h).found()) << dsl;
      expect_valid(g, h, d);
    }
  }
}

TEST(TwoPure, Examples) {
  const auto z4 = group("Z(4)");
  EXPECT_FALSE(is_2_pure(z4, gen(z4, "2")));
  const auto a = group("A(2,6)");
  EXPECT_TRUE(is_2_pure(a, Subgroup::whole(a)));
  const auto z12 = group("Z(12)");
  EXPECT_TRUE(is_2_pure(z12, Subgroup::from_elements(z12, {0, 4, 8})));
  EXPECT_EQ(kind_of([] {
              const auto d = group("D(6)");
              is_2_pure(d, Subgroup::trivial(d));
            }),
            ErrorKind::NotAbelian);
}

TEST(DecideAbelian, Examples) {
  for (int m = 2; m <= 6; ++m) {
    const auto g = group("Z(" + std::to_string(1 << m) + ")");
    for (const auto& h : all_subgroups(g)) {
      if (h.is_trivial() || h.is_whole()) continue;
      const auto d = decide_abelian(g, h);
      EXPECT_FALSE(d.verdict) << m;
      EXPECT_EQ(d.method, Method::Abelian2Pure);
    }
  }
  const auto z12 = group("Z(12)");
  const auto d = decide_abelian(z12, gen(z12, "4"));
  EXPECT_TRUE(d.verdict);
  expect_valid(z12, gen(z12, "4"), d);

  const auto a = group("A(2,4)");
  const auto h = gen(a, "(0,2)");
  const auto neg = decide_abelian(a, h);
  EXPECT_FALSE(neg.verdict);
  ASSERT_TRUE(neg.negative_witness);
  EXPECT_EQ(std::get<TwoPurityViolator>(*neg.negative_witness).element,
            parse_element(a, "(0,2)"));
  EXPECT_EQ(kind_of([] {
              const auto q = group("Q(8)");
              decide_abelian(q, Subgroup::trivial(q));
            }),
            ErrorKind::NotAbelian);
}

TEST(DecideAbelian, TwoPurityChainMatchesOracle) {
  for (const char* dsl : {"Z(24)", "A(2,4)", "A(2,8)", "A(4,4)", "A(2,2,4)", "A(2,12)", "A(2,2,6)",
                          "A(3,12)", "Z(5) x A(2,4)"}) {
    const auto g = group(dsl);
    const auto [g2, g2p] = torsion_components_abelian(g);
    for (const auto& h : all_subgroups(g)) {
      const auto h2 = intersection(g, h, g2);
      const bool pure = is_2_pure(g, h);
      EXPECT_EQ(pure, is_2_pure(g, g2, h2)) << dsl;
      EXPECT_EQ(pure, search_transversal(g, h).found()) << dsl;
      const auto d = decide_abelian(g, h);
      EXPECT_EQ(d.verdict, pure);
      expect_valid(g, h, d);
    }
  }
}

TEST(QuaternionCodes, Q24) {
  const auto qc = quaternion_codes(6);
  const auto& q = qc.group;
  EXPECT_EQ(code_sets(qc.codes),
            (std::set<ElementSet>{Subgroup::trivial(q).elements(), gen(q, "x^4").elements(),
                                  gen(q, "x^3,y").elements(), gen(q, "x^3,x*y").elements(),
                                  gen(q, "x^3,x^2*y").elements(), Subgroup::whole(q).elements()}));
  for (const auto& c : qc.codes) {
    if (c.subgroup == gen(q, "x^4")) {
      EXPECT_EQ(c.connection_set.elements(), elems(q, "x,x^6,x^11,y,x*y,x^6*y,x^7*y"));
    }
    if (c.family == 'b') {
      EXPECT_EQ(c.connection_set.elements(), elems(q, "x,x^11"));
      EXPECT_EQ(c.t, 3);
    }
  }
}

TEST(QuaternionCodes, SmallCases) {
  {
    const auto qc = quaternion_codes(2);
    const auto& q = qc.group;
    EXPECT_EQ(code_sets(qc.codes), (std::set<ElementSet>{Subgroup::trivial(q).elements(),
                                                         Subgroup::whole(q).elements()}));
  }
  {
    const auto qc = quaternion_codes(3);
    const auto& q = qc.group;
    EXPECT_EQ(code_sets(qc.codes),
              (std::set<ElementSet>{Subgroup::trivial(q).elements(), gen(q, "x^2").elements(),
                                    gen(q, "x^3,y").elements(), gen(q, "x^3,x*y").elements(),
                                    gen(q, "x^3,x^2*y").elements(),
                                    Subgroup::whole(q).elements()}));
  }
  EXPECT_EQ(kind_of([] { quaternion_codes(1); }), ErrorKind::InvalidN);
  EXPECT_EQ(kind_of([] { quaternion_codes(group("D(8)")); }), ErrorKind::InvalidSpec);
}

TEST(QuaternionCodes, MatchesOracle) {
  for (int n = 2; n <= 12; ++n) {
    const auto qc = quaternion_codes(n);
    const auto& q = qc.group;
    std::set<ElementSet> oracle_codes;
    for (const auto& h : all_subgroups(q))
      if (search_transversal(q, h).found()) oracle_codes.insert(h.elements());
    EXPECT_EQ(code_sets(qc.codes), oracle_codes) << n;
    for (const auto& c : qc.codes) {
      EXPECT_TRUE(group_ring_product_check(q, c.connection_set, c.subgroup.elements()).all_ones())
          << n << " " << c.family << c.t;
      EXPECT_TRUE(is_perfect_code_graph(CayleyGraph(q, c.connection_set), c.subgroup.elements()));
    }
  }
}

TEST(Decide, Examples) {
  const auto q = group("Q(24)");
  const auto d = decide(q, gen(q, "x^4"));
  EXPECT_TRUE(d.verdict);
  EXPECT_EQ(d.method, Method::QuaternionClosedForm);
  ASSERT_TRUE(d.witness);
  EXPECT_EQ(d.witness->elements(), elems(q, "x,x^6,x^11,y,x*y,x^6*y,x^7*y"));

  const auto z8 = group("Z(8)");
  EXPECT_FALSE(decide(z8, gen(z8, "4")).verdict);

  const auto s4 = group("perm{(0 1 2 3);(0 1)}@4");
  const auto klein = gen(s4, "(0 1)(2 3),(0 2)(1 3)");
  ASSERT_EQ(klein.order(), 4u);
  EXPECT_EQ(decide(s4, klein).verdict, search_transversal(s4, klein).found());
}

TEST(Decide, TrivialCases) {
  const auto g = group("Q(16)");
  const auto e = decide(g, Subgroup::trivial(g));
  EXPECT_TRUE(e.verdict);
  EXPECT_EQ(e.method, Method::Trivial);
  EXPECT_EQ(e.witness->size(), g.order() - 1);
  const auto w = decide(g, Subgroup::whole(g));
  EXPECT_TRUE(w.verdict);
  EXPECT_TRUE(w.witness->elements().empty());
}

TEST(Decide, DispatchOrder) {
  const auto d6 = group("D(6)");
  EXPECT_EQ(decide(d6, gen(d6, "s")).method, Method::ConstructiveOrder4Free);
  const auto z8 = group("Z(8)");
  EXPECT_EQ(decide(z8, gen(z8, "2")).method, Method::Abelian2Pure);
  const auto q = group("Q(16)");
  EXPECT_EQ(decide(q, gen(q, "x^2")).method, Method::QuaternionClosedForm);
  const auto d8 = group("D(8)");
  EXPECT_EQ(decide(d8, gen(d8, "r^2")).method, Method::NormalCriterion);
  const auto s4 = group("perm{(0 1 2 3);(0 1)}@4");
  EXPECT_EQ(decide(s4, gen(s4, "(0 1)")).method, Method::Complement);
}

TEST(Decide, PermutationQuaternionFallsThrough) {
  // Q_8 acting regularly on itself; same verdicts, different methods.
  const auto q = group("perm{(0 1 2 3)(4 5 6 7);(0 4 2 6)(1 7 3 5)}@8");
  ASSERT_EQ(q.order(), 8u);
  ASSERT_TRUE(oracle::isomorphic(q, group("Q(8)")));
  for (const auto& h : all_subgroups(q)) {
    const auto d = decide(q, h);
    EXPECT_NE(d.method, Method::QuaternionClosedForm);
    EXPECT_EQ(d.verdict, h.is_trivial() || h.is_whole());
  }
}

TEST(Decide, Consistency) {
  for (const auto& entry : builtin_catalogue(32)) {
    const auto g = build_group(entry.spec);
    const auto all = all_subgroups(g);
    const auto sq = squares(g);
    for (const auto& h : all) {
      const auto d = decide(g, h, all);
      expect_valid(g, h, d);
      const bool oracle = search_transversal(g, h).found();
      EXPECT_EQ(d.verdict, oracle) << entry.name;
      if (has_complement(g, h, all)) {
        EXPECT_TRUE(d.verdict) << entry.name;
      }
      if (h.order() == 2) {
        const ElementId x = h.elements()[1];
        EXPECT_EQ(d.verdict, !sq.contains(x)) << entry.name;
      }
      if (std::holds_alternative<CyclicSpec>(entry.spec.node)) {
        EXPECT_EQ(d.verdict, h.order() % 2 == 1 || h.index() % 2 == 1) << entry.name;
      }
    }
  }
}

TEST(EnumerateCodes, Examples) {
  const auto z4 = group("Z(4)");
  const auto codes = enumerate_codes(z4);
  ASSERT_EQ(codes.size(), 3u);
  EXPECT_TRUE(codes[0].decision.verdict);
  EXPECT_FALSE(codes[1].decision.verdict);
  EXPECT_TRUE(codes[2].decision.verdict);

  for (const auto& c : enumerate_codes(group("Z(7)"))) EXPECT_TRUE(c.decision.verdict);

  const auto q = group("Q(24)");
  std::set<ElementSet> positive;
  for (const auto& c : enumerate_codes(q))
    if (c.decision.verdict) positive.insert(c.subgroup.elements());
  EXPECT_EQ(positive, code_sets(quaternion_codes(q)));
}

TEST(MethodNames, Stable) {
  EXPECT_EQ(to_string(Method::Trivial), "Trivial");
  EXPECT_EQ(to_string(Method::NormalCriterion), "Normal-Criterion");
  EXPECT_EQ(to_string(Method::Abelian2Pure), "Abelian-2Pure");
  EXPECT_EQ(to_string(Method::QuaternionClosedForm), "Quaternion-Closed-Form");
  EXPECT_EQ(to_string(Method::ConstructiveOrder4Free), "Constructive-Order4Free");
  EXPECT_EQ(to_string(Method::Complement), "Complement");
  EXPECT_EQ(to_string(Method::BruteForce), "Brute-Force");
}
