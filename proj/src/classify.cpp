#include "perfcode/classify.hpp"

#include <algorithm>

#include "perfcode/error.hpp"

namespace perfcode {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Trivial: return "Trivial";
    case Method::NormalCriterion: return "Normal-Criterion";
    case Method::Abelian2Pure: return "Abelian-2Pure";
    case Method::QuaternionClosedForm: return "Quaternion-Closed-Form";
    case Method::ConstructiveOrder4Free: return "Constructive-Order4Free";
    case Method::Complement: return "Complement";
    case Method::BruteForce: return "Brute-Force";
  }
  return "Unknown";
}

namespace {

ElementSet all_but_identity(const FiniteGroup& g) {
  std::vector<ElementId> ids;
  for (ElementId a = 1; a < g.order(); ++a) ids.push_back(a);
  return ElementSet(std::move(ids));
}

CodeDecision positive(const FiniteGroup& g, const Subgroup& h, Method method,
                      ConnectionSet s) {
  const auto mu = group_ring_product_check(g, s, h.elements());
  if (!mu.all_ones() || (s.size() + 1) * h.order() != g.order())
    throw Error(ErrorKind::Internal,
                "witness from " + std::string(to_string(method)) + " fails the group-ring check");
  return CodeDecision{true, method, std::move(s), std::nullopt};
}

CodeDecision negative(Method method, NegativeWitness w) {
  return CodeDecision{false, method, std::nullopt, std::move(w)};
}

// Witness for a subgroup already known to be a perfect code.
ConnectionSet searched_witness(const FiniteGroup& g, const Subgroup& h,
                               const DecideOptions& options) {
  auto r = search_transversal(g, h, options.search);
  if (!r.found())
    throw Error(ErrorKind::Internal, "criterion accepted a subgroup the search rejects");
  return connection_set_from_transversal(g, *r.witness);
}

NegativeWitness searched_refutation(const FiniteGroup& g, const Subgroup& h,
                                    const DecideOptions& options) {
  if (auto c = coset_obstruction(g, h)) return ObstructionWitness{std::move(*c)};
  auto r = search_transversal(g, h, options.search);
  if (r.found())
    throw Error(ErrorKind::Internal, "criterion rejected a subgroup the search accepts");
  return ExhaustionWitness{r.nodes_explored};
}

ElementId x_power(std::size_t n, long long k) {
  const auto two_n = static_cast<long long>(2 * n);
  return static_cast<ElementId>(((k % two_n) + two_n) % two_n);
}
ElementId x_power_y(std::size_t n, long long k) {
  return static_cast<ElementId>(2 * n + x_power(n, k));
}

// Connection set for <x^t> when 2n/t is odd:
// {x^n, x^i, x^-i : 1 <= i <= t/2 - 1} ∪ {x^i y, x^{n+i} y : 0 <= i <= t/2 - 1}.
ElementSet cyclic_part_connection_set(std::size_t n, long long t) {
  std::vector<ElementId> ids{x_power(n, static_cast<long long>(n))};
  for (long long i = 1; i <= t / 2 - 1; ++i) {
    ids.push_back(x_power(n, i));
    ids.push_back(x_power(n, -i));
  }
  for (long long i = 0; i <= t / 2 - 1; ++i) {
    ids.push_back(x_power_y(n, i));
    ids.push_back(x_power_y(n, static_cast<long long>(n) + i));
  }
  return ElementSet(std::move(ids));
}

// Connection set for <x^t, x^s y> with t odd: {x^i, x^-i : 1 <= i <= (t-1)/2}.
ElementSet dicyclic_part_connection_set(std::size_t n, long long t) {
  std::vector<ElementId> ids;
  for (long long i = 1; i <= (t - 1) / 2; ++i) {
    ids.push_back(x_power(n, i));
    ids.push_back(x_power(n, -i));
  }
  return ElementSet(std::move(ids));
}

std::size_t quaternion_n(const FiniteGroup& q) {
  if (q.family().kind != GroupFamily::Kind::Quaternion)
    throw Error(ErrorKind::InvalidSpec, "group was not built as a generalized quaternion group");
  return static_cast<std::size_t>(q.family().parameter);
}

CodeDecision decide_quaternion(const FiniteGroup& g, const Subgroup& h,
                               const DecideOptions& options) {
  const std::size_t n = quaternion_n(g);
  const std::size_t two_n = 2 * n;
  std::size_t in_cyclic = 0;
  std::optional<ElementId> first_outside;
  for (ElementId a : h.elements()) {
    if (a < two_n)
      ++in_cyclic;
    else if (!first_outside)
      first_outside = a;
  }
  const auto t = static_cast<long long>(two_n / in_cyclic);
  if (!first_outside) {
    // H = <x^t>.
    if ((two_n / static_cast<std::size_t>(t)) % 2 == 1)
      return positive(g, h, Method::QuaternionClosedForm,
                      ConnectionSet::make(g, cyclic_part_connection_set(n, t)));
  } else if (t % 2 == 1) {
    // H = <x^t, x^s y>.
    return positive(g, h, Method::QuaternionClosedForm,
                    ConnectionSet::make(g, dicyclic_part_connection_set(n, t)));
  }
  return negative(Method::QuaternionClosedForm, searched_refutation(g, h, options));
}

CodeDecision decide_impl(const FiniteGroup& g, const Subgroup& h, const std::vector<Subgroup>* all,
                         const DecideOptions& options) {
  if (h.parent_order() != g.order())
    throw Error(ErrorKind::NotSubgroup, "subgroup belongs to a group of different order");
  if (h.is_whole()) return positive(g, h, Method::Trivial, ConnectionSet::empty());
  if (h.is_trivial())
    return positive(g, h, Method::Trivial, ConnectionSet::make(g, all_but_identity(g)));
  if (!has_element_of_order_4(g))
    return positive(g, h, Method::ConstructiveOrder4Free,
                    connection_set_from_transversal(g, order4free_transversal(g, h)));
  if (g.is_abelian()) return decide_abelian(g, h, options);
  if (g.family().kind == GroupFamily::Kind::Quaternion) return decide_quaternion(g, h, options);
  if (is_normal(g, h)) return decide_normal(g, h, options);

  if (g.order() <= options.order_bound) {
    std::vector<Subgroup> local;
    if (!all) {
      local = all_subgroups(g, options.order_bound);
      all = &local;
    }
    if (auto k = has_complement(g, h, *all))
      return positive(g, h, Method::Complement,
                      ConnectionSet::make(g, k->elements().without(kIdentity)));
  }

  auto r = search_transversal(g, h, options.search);
  if (r.found())
    return positive(g, h, Method::BruteForce, connection_set_from_transversal(g, *r.witness));
  if (auto c = coset_obstruction(g, h)) return negative(Method::BruteForce, ObstructionWitness{*c});
  return negative(Method::BruteForce, ExhaustionWitness{r.nodes_explored});
}

}  // namespace

CodeDecision decide(const FiniteGroup& g, const Subgroup& h, const DecideOptions& options) {
  return decide_impl(g, h, nullptr, options);
}

CodeDecision decide(const FiniteGroup& g, const Subgroup& h, const std::vector<Subgroup>& all,
                    const DecideOptions& options) {
  return decide_impl(g, h, &all, options);
}

CodeDecision decide_normal(const FiniteGroup& g, const Subgroup& h,
                           const DecideOptions& options) {
  if (!is_normal(g, h)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  for (ElementId x = 0; x < g.order(); ++x) {
    if (!h.contains(g.mul(x, x))) continue;
    bool rescued = false;
    for (ElementId m : h.elements()) {
      const ElementId xm = g.mul(x, m);
      if (g.mul(xm, xm) == kIdentity) {
        rescued = true;
        break;
      }
    }
    if (!rescued) return negative(Method::NormalCriterion, FailingElementWitness{x});
  }
  return positive(g, h, Method::NormalCriterion, searched_witness(g, h, options));
}

bool is_2_pure(const FiniteGroup& g, const Subgroup& ambient, const Subgroup& h) {
  if (!g.is_abelian()) throw Error(ErrorKind::NotAbelian, "2-purity is defined for abelian groups");
  for (ElementId a : h.elements())
    if (!ambient.contains(a))
      throw Error(ErrorKind::NotSubgroup, "subgroup is not contained in the ambient subgroup");
  return set_intersection(squares_of(g, ambient.elements()), h.elements()) ==
         squares_of(g, h.elements());
}

bool is_2_pure(const FiniteGroup& g, const Subgroup& h) {
  return is_2_pure(g, Subgroup::whole(g), h);
}

CodeDecision decide_abelian(const FiniteGroup& g, const Subgroup& h,
                            const DecideOptions& options) {
  if (!g.is_abelian()) throw Error(ErrorKind::NotAbelian, "decide_abelian needs an abelian group");
  const auto [g2, g2_odd] = torsion_components_abelian(g);
  const auto h2 = intersection(g, h, g2);
  if (is_2_pure(g, g2, h2)) return positive(g, h, Method::Abelian2Pure, searched_witness(g, h, options));
  const auto meet = set_intersection(squares_of(g, g2.elements()), h2.elements());
  const auto h2_squares = squares_of(g, h2.elements());
  for (ElementId a : meet)
    if (!h2_squares.contains(a)) return negative(Method::Abelian2Pure, TwoPurityViolator{a});
  throw Error(ErrorKind::Internal, "2-purity failed without a violating element");
}

std::vector<QuaternionCode> quaternion_codes(const FiniteGroup& q) {
  const std::size_t n = quaternion_n(q);
  const auto two_n = static_cast<long long>(2 * n);
  std::vector<QuaternionCode> out;
  auto push = [&](Subgroup h, ElementSet s, char family, long long t, long long sh) {
    auto decision = positive(q, h, Method::QuaternionClosedForm, ConnectionSet::make(q, std::move(s)));
    out.push_back({std::move(h), std::move(*decision.witness), family, static_cast<int>(t),
                   static_cast<int>(sh)});
  };
  for (long long t = two_n; t >= 1; --t) {
    if (two_n % t != 0 || (two_n / t) % 2 == 0) continue;
    push(generated_subgroup(q, ElementSet{x_power(n, t)}), cyclic_part_connection_set(n, t), 'a', t,
         -1);
  }
  for (long long t = 3; t <= two_n; t += 2) {
    if (two_n % t != 0) continue;
    for (long long s = 0; s < t; ++s)
      push(generated_subgroup(q, ElementSet{x_power(n, t), x_power_y(n, s)}),
           dicyclic_part_connection_set(n, t), 'b', t, s);
  }
  push(Subgroup::whole(q), ElementSet{}, 'g', 1, -1);
  return out;
}

QuaternionCodes quaternion_codes(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidN, "generalized quaternion Q_4n needs n >= 2");
  auto q = build_group(GroupSpec{QuaternionSpec{4 * n}});
  auto codes = quaternion_codes(q);
  return {std::move(q), std::move(codes)};
}

CodePerfectReport is_code_perfect(const FiniteGroup& g, CheckMode mode,
                                  const DecideOptions& options) {
  CodePerfectReport report;
  if (auto y = first_element_of_order(g, 4)) {
    report.code_perfect = false;
    report.order4_element = *y;
    const ElementId y2 = g.mul(*y, *y);
    report.non_code_subgroup = generated_subgroup(g, ElementSet{y2});
    report.reason = "element " + g.label(*y) + " has order 4, so <" + g.label(y2) +
                    "> is not a perfect code";
  } else {
    report.code_perfect = true;
    report.reason = "no element of order 4";
  }
  if (mode == CheckMode::Fast) return report;

  const auto all = all_subgroups(g, options.order_bound);
  bool every_code = true;
  for (const auto& h : all) {
    const auto d = decide(g, h, all, options);
    const auto oracle = search_transversal(g, h, options.search);
    if (d.verdict != oracle.found())
      throw Error(ErrorKind::VerificationFailed,
                  "dispatcher (" + std::string(to_string(d.method)) +
                      ") and transversal search disagree on a subgroup of order " +
                      std::to_string(h.order()));
    every_code = every_code && d.verdict;
  }
  if (every_code != report.code_perfect)
    throw Error(ErrorKind::VerificationFailed,
                "order-4 criterion disagrees with exhaustive subgroup check");
  if (report.non_code_subgroup &&
      search_transversal(g, *report.non_code_subgroup, options.search).found())
    throw Error(ErrorKind::VerificationFailed, "<y^2> unexpectedly admits a transversal");
  report.verified = true;
  report.subgroups_checked = all.size();
  return report;
}

std::vector<SubgroupDecision> enumerate_codes(const FiniteGroup& g, const DecideOptions& options) {
  const auto all = all_subgroups(g, options.order_bound);
  std::vector<SubgroupDecision> out;
  out.reserve(all.size());
  for (const auto& h : all) out.push_back({h, decide(g, h, all, options)});
  return out;
}

}  // namespace perfcode
