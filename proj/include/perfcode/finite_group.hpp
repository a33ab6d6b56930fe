#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "perfcode/element_set.hpp"
#include "perfcode/group_spec.hpp"

namespace perfcode {

/// Which constructor produced a group. Used for structure-aware dispatch;
/// groups are never recognized up to isomorphism.
struct GroupFamily {
  enum class Kind { Cyclic, Dihedral, Quaternion, Abelian, Product, Permutation, Table };
  Kind kind = Kind::Table;
  int parameter = 0;  // n for Cyclic, order for Dihedral, n for Q_{4n}
};

/// Immutable finite group given by its complete multiplication table.
/// Safe to share across threads once constructed.
class FiniteGroup {
 public:
  using GeneratorMap = std::map<std::string, ElementId, std::less<>>;

  /// Builds and validates a group from a row-major table (table[a*n+b] = a*b).
  /// Throws BadTableFile when the table is not a group with identity 0.
  FiniteGroup(std::vector<ElementId> table, std::vector<std::string> labels, GroupFamily family,
              bool strict_associativity = false, GeneratorMap generators = {});

  std::size_t order() const noexcept { return order_; }

  ElementId mul(ElementId a, ElementId b) const { return table_[a * order_ + b]; }
  ElementId inv(ElementId a) const { return inverse_[a]; }
  ElementId pow(ElementId a, long long k) const;
  ElementId conj(ElementId h, ElementId x) const { return mul(inv(x), mul(h, x)); }  // x^-1 h x

  std::span<const ElementId> row(ElementId a) const {
    return {table_.data() + a * order_, order_};
  }
  std::span<const ElementId> inverses() const noexcept { return inverse_; }

  const std::string& label(ElementId a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<ElementId> find_label(std::string_view label) const;

  bool is_abelian() const noexcept { return abelian_; }
  const GroupFamily& family() const noexcept { return family_; }

  /// Named generators usable in label expressions (e.g. "x", "y" for Q_{4n}).
  const GeneratorMap& generators() const noexcept { return generators_; }

  bool valid(ElementId a) const noexcept { return a < order_; }

 private:
  std::size_t order_;
  std::vector<ElementId> table_;
  std::vector<ElementId> inverse_;
  std::vector<std::string> labels_;
  GroupFamily family_;
  bool abelian_ = true;
  GeneratorMap generators_;
};

struct BuildOptions {
  std::size_t order_bound = 10240;
  /// Exhaustive associativity check regardless of order.
  bool strict = false;
};

FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& options = {});

/// Loads a table file: {"order": n, "labels": [...], "table": [[...], ...]}.
FiniteGroup load_table_file(const std::string& path, bool strict = false);
std::string table_file_json(const FiniteGroup& g);

std::size_t element_order(const FiniteGroup& g, ElementId a);
bool is_involution(const FiniteGroup& g, ElementId a);

/// {a*a : a in G}.
ElementSet squares(const FiniteGroup& g);
/// {a*a : a in subset}; the subset is typically a subgroup.
ElementSet squares_of(const FiniteGroup& g, const ElementSet& subset);

bool has_element_of_order_4(const FiniteGroup& g);
std::optional<ElementId> first_element_of_order(const FiniteGroup& g, std::size_t k);

/// Throws InvalidElement when an index is out of range.
void check_elements(const FiniteGroup& g, const ElementSet& s);

}  // namespace perfcode
