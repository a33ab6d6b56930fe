#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "perfcode/element_set.hpp"
#include "perfcode/finite_group.hpp"

namespace perfcode {

enum class Side { Left, Right };

std::string_view to_string(Side side);

/// A subgroup of a parent FiniteGroup. Always contains the identity.
/// Ordered by (order, sorted element list), the canonical enumeration order.
class Subgroup {
 public:
  /// Validates closure under the parent's multiplication; throws NotSubgroup.
  static Subgroup from_elements(const FiniteGroup& g, ElementSet elements);
  static Subgroup trivial(const FiniteGroup& g);
  static Subgroup whole(const FiniteGroup& g);

  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t parent_order() const noexcept { return member_.size(); }
  std::size_t index() const noexcept { return member_.size() / elements_.size(); }
  bool contains(ElementId a) const { return a < member_.size() && member_[a]; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == member_.size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

 private:
  Subgroup(ElementSet elements, std::vector<bool> member)
      : elements_(std::move(elements)), member_(std::move(member)) {}

  ElementSet elements_;
  std::vector<bool> member_;
};

struct Coset {
  Side side = Side::Right;
  ElementId representative = kIdentity;  // minimal element of the coset
  ElementSet elements;

  friend bool operator==(const Coset&, const Coset&) = default;
};

/// Assigns every element the index of its coset; cosets are numbered in
/// order of their minimal element.
struct CosetPartition {
  Side side = Side::Right;
  std::vector<std::size_t> coset_of;      // element -> coset number
  std::vector<ElementId> representative;  // coset number -> minimal element
  std::size_t count() const noexcept { return representative.size(); }
};

CosetPartition coset_partition(const FiniteGroup& g, const Subgroup& h, Side side);

Subgroup generated_subgroup(const FiniteGroup& g, const ElementSet& gens);

/// Every subgroup exactly once, sorted by (order, elements).
/// Throws OrderBoundExceeded when |G| > order_bound.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t order_bound = 512);

std::vector<Coset> cosets(const FiniteGroup& g, const Subgroup& h, Side side);
Coset coset_of(const FiniteGroup& g, const Subgroup& h, ElementId x, Side side);

bool is_normal(const FiniteGroup& g, const Subgroup& h);

/// x^-1 H x.
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, ElementId x);

Subgroup intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Some K with HK = G and H ∩ K = {e}, scanning candidates in canonical order.
std::optional<Subgroup> has_complement(const FiniteGroup& g, const Subgroup& h,
                                       std::size_t order_bound = 512);
std::optional<Subgroup> has_complement(const FiniteGroup& g, const Subgroup& h,
                                       const std::vector<Subgroup>& all);

/// (G_2, G_2'): elements of 2-power order and elements of odd order.
/// Throws NotAbelian for non-abelian groups.
std::pair<Subgroup, Subgroup> torsion_components_abelian(const FiniteGroup& g);

}  // namespace perfcode
