#include <gtest/gtest.h>

#include "perfcode/construct.hpp"
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

void expect_certified(const FiniteGroup& g, const Subgroup& h, const Transversal& t) {
  const auto set = t.as_set();
  EXPECT_EQ(t.reps.size(), h.index());
  EXPECT_TRUE(is_transversal(g, h, set, Side::Right));
  EXPECT_TRUE(set.contains(kIdentity));
  EXPECT_TRUE(is_inverse_closed(g, set));
  const auto s = connection_set_from_transversal(g, t);
  EXPECT_TRUE(group_ring_product_check(g, s, h.elements()).all_ones());
}

const char* kOrder4Free[] = {"Z(15)",       "D(6)",        "D(12)",  "A(2,2,2)",
                             "D(6) x Z(3)", "D(10) x Z(3)", "Z(2) x D(6)",
                             "perm{(0 1 2);(0 1)(2 3)}@4", "perm{(0 1 2);(0 1)}@3 x Z(5)",
                             "perm{(0 1 2 3 4 5 6);(1 2 4)(3 6 5)}@7"};

}  // namespace

TEST(InvolutionTransversal, Examples) {
  const auto g = group("Z(2) x Z(3)");
  const ElementId x = parse_element(g, "(1,0)");
  const auto t = involution_transversal(g, x);
  EXPECT_EQ(t.as_set(), (ElementSet{0, 1, 2}));
  expect_certified(g, generated_subgroup(g, {x}), t);

  const auto d = group("D(6)");
  const ElementId s = parse_element(d, "s");
  const auto td = involution_transversal(d, s);
  EXPECT_EQ(td.reps.size(), 3u);
  expect_certified(d, generated_subgroup(d, {s}), td);

  EXPECT_EQ(kind_of([] { involution_transversal(group("Z(4)"), 2); }), ErrorKind::IsSquare);
  EXPECT_EQ(kind_of([] { involution_transversal(group("Z(4)"), 1); }), ErrorKind::NotInvolution);
  EXPECT_EQ(kind_of([] { involution_transversal(group("Z(4)"), 0); }), ErrorKind::NotInvolution);
}

TEST(InvolutionTransversal, EveryNonSquareInvolution) {
  for (const char* dsl : {"D(8)", "D(16)", "Q(8) x Z(2)", "D(8) x Z(2)", "A(2,4)", "Z(2) x Q(12)",
                          "perm{(0 1 2 3);(0 1)}@4", "D(6) x Z(4)"}) {
    const auto g = group(dsl);
    const auto sq = squares(g);
    for (ElementId x = 1; x < g.order(); ++x) {
      if (!is_involution(g, x)) continue;
      if (sq.contains(x)) {
        EXPECT_EQ(kind_of([&] { involution_transversal(g, x); }), ErrorKind::IsSquare);
        EXPECT_FALSE(search_transversal(g, generated_subgroup(g, {x})).found());
      } else {
        expect_certified(g, generated_subgroup(g, {x}), involution_transversal(g, x));
      }
    }
  }
}

TEST(Order4FreeTransversal, Examples) {
  const auto z = group("Z(15)");
  const auto h = gen(z, "5");
  ASSERT_EQ(h.order(), 3u);
  const auto t = order4free_transversal(z, h);
  EXPECT_EQ(t.reps.size(), 5u);
  expect_certified(z, h, t);
  EXPECT_EQ(connection_set_from_transversal(z, t).size(), 4u);

  const auto d = group("D(10)");
  EXPECT_EQ(order4free_transversal(d, Subgroup::whole(d)).as_set(), (ElementSet{0}));

  const auto p = group("D(6) x Z(3)");
  for (const auto& k : all_subgroups(p)) {
    if (k.order() != 2) continue;
    const auto tk = order4free_transversal(p, k);
    EXPECT_EQ(tk.reps.size(), 9u);
    expect_certified(p, k, tk);
  }

  EXPECT_EQ(kind_of([] {
              const auto q = group("Q(8)");
              order4free_transversal(q, Subgroup::trivial(q));
            }),
            ErrorKind::HasOrder4Element);
}

TEST(Order4FreeTransversal, CertifiedOnEverySubgroup) {
  for (const char* dsl : kOrder4Free) {
    const auto g = group(dsl);
    for (const auto& h : all_subgroups(g)) expect_certified(g, h, order4free_transversal(g, h));
  }
}

TEST(Order4FreeTransversal, OrbitStructure) {
  for (const char* dsl : kOrder4Free) {
    const auto g = group(dsl);
    for (const auto& h : all_subgroups(g)) {
      const auto trace = order4free_transversal_traced(g, h);
      const auto part = coset_partition(g, h, Side::Right);
      ASSERT_EQ(trace.classes.size(), part.count());
      std::vector<int> seen(part.count(), 0);
      for (std::size_t k = 0; k < part.count(); ++k) {
        const auto c = coset_of(g, h, part.representative[k], Side::Right);
        bool has_involution = false;
        for (ElementId a : c.elements) has_involution = has_involution || is_involution(g, a);
        if (k == 0)
          EXPECT_EQ(trace.classes[k], CosetClass::Trivial);
        else
          EXPECT_EQ(trace.classes[k],
                    has_involution ? CosetClass::WithInvolution : CosetClass::InvolutionFree);
        if (trace.classes[k] == CosetClass::InvolutionFree) {
          EXPECT_NE(part.coset_of[g.inv(part.representative[k])], k);
        }
      }
      for (const auto& p : trace.pairings) {
        EXPECT_EQ(p.orbit_plus.size(), p.orbit_minus.size());
        for (auto a : p.orbit_plus) {
          EXPECT_EQ(std::count(p.orbit_minus.begin(), p.orbit_minus.end(), a), 0);
          EXPECT_EQ(trace.classes[a], CosetClass::InvolutionFree);
          ++seen[a];
        }
        for (auto a : p.orbit_minus) ++seen[a];
        ASSERT_EQ(p.multipliers_plus.size(), p.orbit_plus.size());
        for (std::size_t j = 0; j < p.orbit_plus.size(); ++j) {
          EXPECT_TRUE(h.contains(p.multipliers_plus[j]));
          EXPECT_EQ(part.coset_of[g.mul(p.base, p.multipliers_plus[j])], p.orbit_plus[j]);
          EXPECT_EQ(part.coset_of[g.mul(g.inv(p.base), p.multipliers_minus[j])],
                    p.orbit_minus[j]);
        }
      }
      for (std::size_t k = 0; k < part.count(); ++k)
        EXPECT_EQ(seen[k], trace.classes[k] == CosetClass::InvolutionFree ? 1 : 0);
    }
  }
}

TEST(ConnectionSetFromTransversal, Examples) {
  const auto q = group("Q(24)");
  const auto h = gen(q, "x^4");
  const auto s1 = elems(q, "x,x^6,x^11,y,x*y,x^6*y,x^7*y");
  const auto part = coset_partition(q, h, Side::Right);
  Transversal t;
  t.reps.assign(part.count(), 0);
  for (ElementId a : s1.with(kIdentity)) t.reps[part.coset_of[a]] = a;
  EXPECT_EQ(connection_set_from_transversal(q, t).elements(), s1);

  Transversal whole;
  whole.reps = {0};
  EXPECT_TRUE(connection_set_from_transversal(q, whole).elements().empty());

  Transversal missing;
  missing.reps = {1, 11};
  EXPECT_EQ(kind_of([&] { connection_set_from_transversal(q, missing); }),
            ErrorKind::MissingIdentity);
  Transversal lopsided;
  lopsided.reps = {0, 1, 12};
  EXPECT_EQ(kind_of([&] { connection_set_from_transversal(q, lopsided); }),
            ErrorKind::NotInverseClosed);
}

TEST(SearchTransversal, Examples) {
  const auto z4 = group("Z(4)");
  const auto r = search_transversal(z4, gen(z4, "2"));
  EXPECT_EQ(r.outcome, SearchResult::Outcome::Exhausted);
  EXPECT_FALSE(r.witness);

  const auto d = group("D(8)");
  const auto all = search_transversal(d, Subgroup::trivial(d));
  ASSERT_TRUE(all.found());
  EXPECT_EQ(all.witness->as_set(), Subgroup::whole(d).elements());

  const auto q = group("Q(8)");
  EXPECT_FALSE(search_transversal(q, gen(q, "x^2")).found());
  EXPECT_EQ(kind_of([&] { involution_transversal(q, parse_element(q, "x^2")); }),
            ErrorKind::IsSquare);
}

TEST(SearchTransversal, WitnessesAreCertifiedAndLexicographicallyFirst) {
  const auto q = group("Q(24)");
  const auto h = gen(q, "x^4");
  const auto r = search_transversal(q, h);
  ASSERT_TRUE(r.found());
  expect_certified(q, h, *r.witness);
  EXPECT_EQ(r.witness->reps[0], kIdentity);
  // Coset of x is represented by x itself, the smallest candidate.
  const auto part = coset_partition(q, h, Side::Right);
  EXPECT_EQ(r.witness->reps[part.coset_of[1]], 1u);
}

TEST(SearchTransversal, AgreesWithExhaustiveConnectionSetSearch) {
  for (const char* dsl : {"Z(4)", "Z(8)", "Q(8)", "D(8)", "A(2,4)", "Q(12)", "D(12)", "Z(12)",
                          "perm{(0 1 2);(0 1)(2 3)}@4", "A(2,6)", "Z(16)", "Q(16)", "D(16)",
                          "A(4,4)", "A(2,8)", "Z(2) x Q(8)", "Z(2) x D(8)", "A(2,2,4)"}) {
    const auto g = group(dsl);
    for (const auto& h : all_subgroups(g)) {
      const bool expected = oracle::is_code_exhaustive(g, testing_support::to_std(h.elements()));
      const auto r = search_transversal(g, h);
      EXPECT_EQ(r.found(), expected) << dsl << " |H|=" << h.order();
      if (r.found()) expect_certified(g, h, *r.witness);
    }
  }
}

TEST(SearchTransversal, Budget) {
  const auto g = group("Q(8) x Q(8)");
  SearchOptions opts;
  opts.node_budget = 3;
  EXPECT_EQ(kind_of([&] { search_transversal(g, Subgroup::trivial(g), opts); }),
            ErrorKind::SearchBudgetExceeded);
  opts.node_budget = 1000;
  EXPECT_TRUE(search_transversal(g, Subgroup::trivial(g), opts).found());
}

TEST(SearchTransversal, MatchesConstructionOnOrder4FreeGroups) {
  for (const char* dsl : kOrder4Free) {
    const auto g = group(dsl);
    for (const auto& h : all_subgroups(g)) {
      EXPECT_NO_THROW(order4free_transversal(g, h));
      EXPECT_TRUE(search_transversal(g, h).found()) << dsl;
    }
  }
}

TEST(CosetObstruction, Examples) {
  const auto z4 = group("Z(4)");
  const auto c = coset_obstruction(z4, gen(z4, "2"));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->elements, (ElementSet{1, 3}));

  const auto z6 = group("Z(6)");
  EXPECT_FALSE(coset_obstruction(z6, gen(z6, "3")));

  const auto q = group("Q(8)");
  const auto cq = coset_obstruction(q, gen(q, "x^2"));
  ASSERT_TRUE(cq);
  EXPECT_EQ(cq->elements, elems(q, "x,x^3"));
}

TEST(CosetObstruction, SoundAgainstSearch) {
  for (const char* dsl : {"Q(16)", "D(16)", "Q(8) x Z(2)", "A(4,4)", "Q(24)", "Z(2) x Q(12)",
                          "D(8) x Z(3)", "perm{(0 1 2 3);(0 1)}@4", "Z(32)", "Q(8) x Z(4)"}) {
    const auto g = group(dsl);
    for (const auto& h : all_subgroups(g)) {
      const auto c = coset_obstruction(g, h);
      if (!c) continue;
      EXPECT_FALSE(search_transversal(g, h).found()) << dsl;
      EXPECT_FALSE(h.contains(c->representative));
      EXPECT_TRUE(is_inverse_closed(g, c->elements));
      for (ElementId a : c->elements) EXPECT_FALSE(is_involution(g, a));
    }
  }
}
