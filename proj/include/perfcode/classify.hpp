#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "perfcode/cayley.hpp"
#include "perfcode/construct.hpp"
#include "perfcode/finite_group.hpp"
#include "perfcode/subgroups.hpp"

namespace perfcode {

enum class Method {
  Trivial,
  NormalCriterion,
  Abelian2Pure,
  QuaternionClosedForm,
  ConstructiveOrder4Free,
  Complement,
  BruteForce,
};

std::string_view to_string(Method m);

struct ObstructionWitness {
  Coset coset;
};
struct ExhaustionWitness {
  std::uint64_t nodes = 0;
};
/// g with g^2 ∈ H but (gh)^2 ≠ e for every h ∈ H.
struct FailingElementWitness {
  ElementId g = kIdentity;
};
/// An element of G_2^2 ∩ H_2 that is not a square of H_2.
struct TwoPurityViolator {
  ElementId element = kIdentity;
};

using NegativeWitness =
    std::variant<ObstructionWitness, ExhaustionWitness, FailingElementWitness, TwoPurityViolator>;

struct CodeDecision {
  bool verdict = false;
  Method method = Method::BruteForce;
  std::optional<ConnectionSet> witness;
  std::optional<NegativeWitness> negative_witness;
};

struct DecideOptions {
  std::size_t order_bound = 512;
  SearchOptions search;
};

/// Whether H is a perfect code of some Cayley graph of G. Dispatches to the
/// cheapest applicable criterion; every positive verdict carries a witness
/// connection set that has passed the group-ring check.
CodeDecision decide(const FiniteGroup& g, const Subgroup& h, const DecideOptions& options = {});
/// Same, reusing a precomputed all_subgroups(g) list for the complement step.
CodeDecision decide(const FiniteGroup& g, const Subgroup& h, const std::vector<Subgroup>& all,
                    const DecideOptions& options = {});

/// For normal H: for every g with g^2 ∈ H there is h ∈ H with (gh)^2 = e.
/// Throws NotNormal.
CodeDecision decide_normal(const FiniteGroup& g, const Subgroup& h,
                           const DecideOptions& options = {});

/// G^2 ∩ H = H^2. Throws NotAbelian.
bool is_2_pure(const FiniteGroup& g, const Subgroup& h);
/// 2-purity of H inside the subgroup `ambient` (squares taken within ambient).
bool is_2_pure(const FiniteGroup& g, const Subgroup& ambient, const Subgroup& h);

/// Reduces to the Sylow 2-parts: H is a code iff H_2 is 2-pure in G_2.
/// Throws NotAbelian.
CodeDecision decide_abelian(const FiniteGroup& g, const Subgroup& h,
                            const DecideOptions& options = {});

struct QuaternionCode {
  Subgroup subgroup;
  ConnectionSet connection_set;
  /// 'a' for <x^t>, 'b' for <x^t, x^s y>, 'g' for the whole group.
  char family = 'a';
  int t = 0;
  int s = -1;
};

struct QuaternionCodes {
  FiniteGroup group;
  std::vector<QuaternionCode> codes;
};

/// Every subgroup perfect code of Q_{4n} with its closed-form connection set:
/// <x^t> for t | 2n with 2n/t odd (t = 2n gives {e}), <x^t, x^s y> for odd
/// t >= 3 dividing 2n, and Q_{4n} itself. Throws InvalidN for n < 2.
QuaternionCodes quaternion_codes(int n);
/// Same, for a group built as GeneralizedQuaternion (InvalidSpec otherwise).
std::vector<QuaternionCode> quaternion_codes(const FiniteGroup& q);

struct CodePerfectReport {
  bool code_perfect = false;
  std::string reason;
  std::optional<ElementId> order4_element;
  /// <y^2> for the order-4 element y; never a perfect code.
  std::optional<Subgroup> non_code_subgroup;
  bool verified = false;
  std::size_t subgroups_checked = 0;
};

enum class CheckMode { Fast, Verify };

/// Fast: no element of order 4. Verify: additionally decides every subgroup
/// with the dispatcher and the brute-force oracle and throws
/// VerificationFailed on any disagreement.
CodePerfectReport is_code_perfect(const FiniteGroup& g, CheckMode mode = CheckMode::Fast,
                                  const DecideOptions& options = {});

struct SubgroupDecision {
  Subgroup subgroup;
  CodeDecision decision;
};

std::vector<SubgroupDecision> enumerate_codes(const FiniteGroup& g,
                                              const DecideOptions& options = {});

}  // namespace perfcode
