#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perfcode/element_set.hpp"
#include "perfcode/finite_group.hpp"
#include "perfcode/subgroups.hpp"

namespace perfcode {

/// Inverse-closed subset S of G with e ∉ S.
class ConnectionSet {
 public:
  /// Throws ContainsIdentity or NotInverseClosed (naming a violating element).
  static ConnectionSet make(const FiniteGroup& g, ElementSet s);
  static ConnectionSet empty() { return ConnectionSet(ElementSet{}); }

  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  explicit ConnectionSet(ElementSet s) : elements_(std::move(s)) {}
  ElementSet elements_;
};

/// Cay(G, S): x ~ y iff y x^-1 ∈ S. The graph refers to `g`, which must
/// outlive it.
class CayleyGraph {
 public:
  CayleyGraph(const FiniteGroup& g, ConnectionSet s);

  const FiniteGroup& group() const noexcept { return *group_; }
  const ConnectionSet& connection_set() const noexcept { return s_; }
  std::size_t vertex_count() const noexcept { return group_->order(); }
  std::size_t degree() const noexcept { return s_.size(); }
  std::size_t edge_count() const noexcept { return vertex_count() * degree() / 2; }

  bool adjacent(ElementId x, ElementId y) const;
  /// Neighbors s*x for s ∈ S, in ascending S order.
  std::vector<ElementId> neighbors(ElementId x) const;

  /// Component index per vertex, numbered by minimal vertex.
  std::vector<std::size_t> components() const;

 private:
  static constexpr std::size_t kCacheThreshold = 1024;

  const FiniteGroup* group_;
  ConnectionSet s_;
  std::vector<bool> in_s_;
  // Row-major bitset adjacency, populated only above kCacheThreshold.
  std::vector<std::uint64_t> adjacency_;
  std::size_t words_per_row_ = 0;
};

CayleyGraph build_cayley(const FiniteGroup& g, const ElementSet& s);

/// C is independent and every vertex outside C has exactly one neighbor in C.
bool is_perfect_code_graph(const CayleyGraph& graph, const ElementSet& c);

/// counts[g] = #{(s, c) ∈ (S ∪ {e}) × C : s c = g}.
struct MultiplicityMap {
  std::vector<std::uint32_t> counts;

  bool all_ones() const;
  std::uint64_t total() const;
};

MultiplicityMap group_ring_product_check(const FiniteGroup& g, const ConnectionSet& s,
                                         const ElementSet& c);

/// |T| = [G:H] and T meets every coset of the given side exactly once.
bool is_transversal(const FiniteGroup& g, const Subgroup& h, const ElementSet& t, Side side);

bool is_inverse_closed(const FiniteGroup& g, const ElementSet& t);

std::string export_dot(const CayleyGraph& graph, const ElementSet& highlight = {});

}  // namespace perfcode
