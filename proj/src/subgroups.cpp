#include "perfcode/subgroups.hpp"

#include <algorithm>
#include <unordered_set>

#include "perfcode/error.hpp"

namespace perfcode {

namespace {

// Membership bitset packed into words; used as the subgroup dedup key.
using Key = std::vector<std::uint64_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : k) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

Key key_of(const std::vector<bool>& member) {
  Key k((member.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) k[i / 64] |= std::uint64_t{1} << (i % 64);
  return k;
}

// Closure of `seed` (already containing e) under right multiplication by gens.
std::vector<bool> close(const FiniteGroup& g, std::vector<bool> member,
                        const std::vector<ElementId>& gens) {
  std::vector<ElementId> queue;
  for (ElementId a = 0; a < g.order(); ++a)
    if (member[a]) queue.push_back(a);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElementId a = queue[head];
    for (ElementId s : gens) {
      const ElementId b = g.mul(a, s);
      if (!member[b]) {
        member[b] = true;
        queue.push_back(b);
      }
    }
  }
  return member;
}

ElementSet to_set(const std::vector<bool>& member) {
  std::vector<ElementId> ids;
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) ids.push_back(static_cast<ElementId>(i));
  return ElementSet(std::move(ids));
}

bool is_power_of_two(std::size_t k) { return k != 0 && (k & (k - 1)) == 0; }

}  // namespace

std::string_view to_string(Side side) { return side == Side::Left ? "left" : "right"; }

Subgroup Subgroup::from_elements(const FiniteGroup& g, ElementSet elements) {
  check_elements(g, elements);
  if (!elements.contains(kIdentity))
    throw Error(ErrorKind::NotSubgroup, "subgroup must contain the identity");
  std::vector<bool> member(g.order(), false);
  for (ElementId a : elements) member[a] = true;
  for (ElementId a : elements)
    for (ElementId b : elements)
      if (!member[g.mul(a, b)])
        throw Error(ErrorKind::NotSubgroup, "set is not closed: " + g.label(a) + " * " +
                                                g.label(b) + " lies outside");
  return Subgroup(std::move(elements), std::move(member));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) {
  std::vector<bool> member(g.order(), false);
  member[kIdentity] = true;
  return Subgroup(ElementSet{kIdentity}, std::move(member));
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
  std::vector<ElementId> ids(g.order());
  for (ElementId a = 0; a < g.order(); ++a) ids[a] = a;
  return Subgroup(ElementSet(std::move(ids)), std::vector<bool>(g.order(), true));
}

Subgroup generated_subgroup(const FiniteGroup& g, const ElementSet& gens) {
  check_elements(g, gens);
  std::vector<bool> member(g.order(), false);
  member[kIdentity] = true;
  member = close(g, std::move(member), gens.ids());
  auto elements = to_set(member);
  return Subgroup::from_elements(g, std::move(elements));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t order_bound) {
  if (g.order() > order_bound)
    throw Error(ErrorKind::OrderBoundExceeded,
                "subgroup enumeration limited to order " + std::to_string(order_bound) +
                    ", group has order " + std::to_string(g.order()));
  const std::size_t n = g.order();

  struct Entry {
    std::vector<bool> member;
    std::vector<ElementId> gens;
  };
  std::vector<Entry> found;
  std::unordered_set<Key, KeyHash> seen;

  auto add = [&](std::vector<bool> member, std::vector<ElementId> gens) {
    if (seen.insert(key_of(member)).second) found.push_back({std::move(member), std::move(gens)});
  };

  for (ElementId a = 0; a < n; ++a) {
    std::vector<bool> member(n, false);
    member[kIdentity] = true;
    add(close(g, std::move(member), {a}), {a});
  }
  // Extend every known subgroup by one outside element until no new subgroup appears.
  // <H, a> depends only on the coset Ha, so one element per coset suffices.
  for (std::size_t i = 0; i < found.size(); ++i) {
    std::vector<bool> covered = found[i].member;
    std::vector<ElementId> h_elems;
    for (ElementId b = 0; b < n; ++b)
      if (found[i].member[b]) h_elems.push_back(b);
    for (ElementId a = 0; a < n; ++a) {
      if (covered[a]) continue;
      for (ElementId h : h_elems) covered[g.mul(h, a)] = true;
      auto gens = found[i].gens;
      gens.push_back(a);
      auto member = close(g, found[i].member, gens);
      add(std::move(member), std::move(gens));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& e : found) out.push_back(Subgroup::from_elements(g, to_set(e.member)));
  std::sort(out.begin(), out.end());
  return out;
}

CosetPartition coset_partition(const FiniteGroup& g, const Subgroup& h, Side side) {
  const std::size_t unassigned = static_cast<std::size_t>(-1);
  CosetPartition p;
  p.side = side;
  p.coset_of.assign(g.order(), unassigned);
  for (ElementId x = 0; x < g.order(); ++x) {
    if (p.coset_of[x] != unassigned) continue;
    const std::size_t id = p.representative.size();
    p.representative.push_back(x);
    for (ElementId s : h.elements()) {
      const ElementId y = side == Side::Right ? g.mul(s, x) : g.mul(x, s);
      p.coset_of[y] = id;
    }
  }
  return p;
}

Coset coset_of(const FiniteGroup& g, const Subgroup& h, ElementId x, Side side) {
  std::vector<ElementId> ids;
  ids.reserve(h.order());
  for (ElementId s : h.elements()) ids.push_back(side == Side::Right ? g.mul(s, x) : g.mul(x, s));
  ElementSet elements(std::move(ids));
  const ElementId rep = elements[0];
  return Coset{side, rep, std::move(elements)};
}

std::vector<Coset> cosets(const FiniteGroup& g, const Subgroup& h, Side side) {
  const auto p = coset_partition(g, h, side);
  std::vector<Coset> out;
  out.reserve(p.count());
  for (ElementId rep : p.representative) out.push_back(coset_of(g, h, rep, side));
  return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (ElementId x = 0; x < g.order(); ++x)
    for (ElementId s : h.elements())
      if (!h.contains(g.conj(s, x))) return false;
  return true;
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, ElementId x) {
  if (!g.valid(x)) throw Error(ErrorKind::InvalidElement, "conjugating element out of range");
  std::vector<ElementId> ids;
  ids.reserve(h.order());
  for (ElementId s : h.elements()) ids.push_back(g.conj(s, x));
  return Subgroup::from_elements(g, ElementSet(std::move(ids)));
}

Subgroup intersection(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  return Subgroup::from_elements(g, set_intersection(a.elements(), b.elements()));
}

std::optional<Subgroup> has_complement(const FiniteGroup& g, const Subgroup& h,
                                       const std::vector<Subgroup>& all) {
  const std::size_t want = h.index();
  for (const auto& k : all) {
    if (k.order() != want) continue;
    bool trivial_meet = true;
    for (ElementId a : k.elements())
      if (a != kIdentity && h.contains(a)) {
        trivial_meet = false;
        break;
      }
    // |HK| = |H||K| / |H ∩ K| = |G| once the intersection is trivial.
    if (trivial_meet) return k;
  }
  (void)g;
  return std::nullopt;
}

std::optional<Subgroup> has_complement(const FiniteGroup& g, const Subgroup& h,
                                       std::size_t order_bound) {
  return has_complement(g, h, all_subgroups(g, order_bound));
}

std::pair<Subgroup, Subgroup> torsion_components_abelian(const FiniteGroup& g) {
  if (!g.is_abelian())
    throw Error(ErrorKind::NotAbelian, "torsion decomposition requires an abelian group");
  std::vector<ElementId> two, odd;
  for (ElementId a = 0; a < g.order(); ++a) {
    const auto k = element_order(g, a);
    if (is_power_of_two(k)) two.push_back(a);
    if (k % 2 == 1) odd.push_back(a);
  }
  return {Subgroup::from_elements(g, ElementSet(std::move(two))),
          Subgroup::from_elements(g, ElementSet(std::move(odd)))};
}

}  // namespace perfcode
