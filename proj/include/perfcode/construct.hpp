#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "perfcode/cayley.hpp"
#include "perfcode/element_set.hpp"
#include "perfcode/finite_group.hpp"
#include "perfcode/subgroups.hpp"

namespace perfcode {

/// One representative per coset of a subgroup. `reps[k]` represents the
/// k-th coset in the canonical coset_partition numbering.
struct Transversal {
  Side side = Side::Right;
  std::vector<ElementId> reps;

  ElementSet as_set() const { return ElementSet(reps); }
};

/// Coset classes used by the order-4-free construction: the subgroup itself,
/// cosets containing an involution, and involution-free cosets.
enum class CosetClass { Trivial, WithInvolution, InvolutionFree };

/// A paired pair of orbits of the right H-action Hx -> Hxh on involution-free
/// cosets, based at x and x^-1. `multipliers_plus[j]` maps Hx to
/// `orbit_plus[j]`, `multipliers_minus[j]` maps Hx^-1 to `orbit_minus[j]`.
struct OrbitPairing {
  ElementId base = kIdentity;
  std::vector<std::size_t> orbit_plus;   // coset numbers
  std::vector<std::size_t> orbit_minus;
  std::vector<ElementId> multipliers_plus;
  std::vector<ElementId> multipliers_minus;
};

struct Order4FreeTrace {
  Transversal transversal;
  std::vector<CosetClass> classes;  // per coset number
  std::vector<OrbitPairing> pairings;
};

/// Right transversal of <x> containing e and closed under inverses.
/// Requires x to be an involution that is not a square in G
/// (NotInvolution, IsSquare otherwise).
Transversal involution_transversal(const FiniteGroup& g, ElementId x);

/// Right transversal of H containing e and closed under inverses, for groups
/// without elements of order 4 (HasOrder4Element otherwise).
Transversal order4free_transversal(const FiniteGroup& g, const Subgroup& h);
Order4FreeTrace order4free_transversal_traced(const FiniteGroup& g, const Subgroup& h);

/// S = T \ {e}. Throws MissingIdentity or NotInverseClosed.
ConnectionSet connection_set_from_transversal(const FiniteGroup& g, const Transversal& t);

struct SearchOptions {
  std::uint64_t node_budget = 100'000'000;
};

struct SearchResult {
  enum class Outcome { Witness, Exhausted };
  Outcome outcome = Outcome::Exhausted;
  std::optional<Transversal> witness;
  std::uint64_t nodes_explored = 0;

  bool found() const noexcept { return outcome == Outcome::Witness; }
};

/// Complete backtracking search for a right transversal of H that contains e
/// and is inverse-closed. Returns the lexicographically first witness in
/// ascending-ElementId candidate order. Throws SearchBudgetExceeded.
SearchResult search_transversal(const FiniteGroup& g, const Subgroup& h,
                                const SearchOptions& options = {});

/// A coset xH or Hx with x ∉ H that is inverse-closed as a set and contains
/// no involution. Its existence rules H out as a perfect code; its absence
/// proves nothing.
std::optional<Coset> coset_obstruction(const FiniteGroup& g, const Subgroup& h);

}  // namespace perfcode
