#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace perfcode {

/// Index of a group element in its parent multiplication table.
/// The identity is always index 0.
using ElementId = std::uint32_t;

inline constexpr ElementId kIdentity = 0;

/// Sorted, duplicate-free set of element indices.
class ElementSet {
 public:
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids) : ElementSet(std::vector<ElementId>(ids)) {}
  explicit ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  bool contains(ElementId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
  }

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  ElementId operator[](std::size_t i) const { return ids_[i]; }
  const_iterator begin() const noexcept { return ids_.begin(); }
  const_iterator end() const noexcept { return ids_.end(); }
  const std::vector<ElementId>& ids() const noexcept { return ids_; }
  std::span<const ElementId> span() const noexcept { return ids_; }

  ElementSet with(ElementId id) const {
    auto out = ids_;
    out.push_back(id);
    return ElementSet(std::move(out));
  }

  ElementSet without(ElementId id) const {
    ElementSet out;
    out.ids_.reserve(ids_.size());
    for (ElementId v : ids_)
      if (v != id) out.ids_.push_back(v);
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<ElementId> ids_;
};

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElementSet(std::move(out));
}

}  // namespace perfcode
