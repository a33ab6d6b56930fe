#include "perfcode/construct.hpp"

#include <algorithm>

#include "perfcode/error.hpp"

namespace perfcode {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
constexpr ElementId kNoRep = static_cast<ElementId>(-1);

[[noreturn]] void internal(const std::string& msg) { throw Error(ErrorKind::Internal, msg); }

// Records representatives per right coset and refuses double assignment.
class RepresentativeTable {
 public:
  explicit RepresentativeTable(const CosetPartition& p)
      : partition_(p), reps_(p.count(), kNoRep) {}

  bool assigned_coset(std::size_t k) const { return reps_[k] != kNoRep; }
  bool assigned(ElementId a) const { return assigned_coset(partition_.coset_of[a]); }

  void assign(ElementId rep, std::size_t coset) {
    if (partition_.coset_of[rep] != coset) internal("representative outside its coset");
    if (reps_[coset] != kNoRep) internal("coset represented twice");
    reps_[coset] = rep;
  }
  void assign(ElementId rep) { assign(rep, partition_.coset_of[rep]); }

  Transversal finish(Side side) const {
    for (auto r : reps_)
      if (r == kNoRep) internal("coset left without a representative");
    return Transversal{side, reps_};
  }

 private:
  const CosetPartition& partition_;
  std::vector<ElementId> reps_;
};

}  // namespace

Transversal involution_transversal(const FiniteGroup& g, ElementId x) {
  if (!g.valid(x)) throw Error(ErrorKind::InvalidElement, "element out of range");
  if (!is_involution(g, x))
    throw Error(ErrorKind::NotInvolution, g.label(x) + " is not an involution");
  if (squares(g).contains(x))
    throw Error(ErrorKind::IsSquare, g.label(x) + " is a square; <" + g.label(x) +
                                         "> admits no inverse-closed transversal");
  const auto h = Subgroup::from_elements(g, ElementSet{kIdentity, x});
  const auto partition = coset_partition(g, h, Side::Right);
  RepresentativeTable reps(partition);
  reps.assign(kIdentity);

  for (ElementId y = 0; y < g.order(); ++y) {
    if (reps.assigned(y)) continue;
    const ElementId xy = g.mul(x, y);
    const ElementId y_inv = g.inv(y);
    if (is_involution(g, y)) {
      reps.assign(y);
    } else if (is_involution(g, xy)) {
      reps.assign(xy);
    } else if (xy == g.mul(y, x)) {
      reps.assign(y);
      reps.assign(y_inv);
    } else {
      // Cosets Hy, H(xy)^-1, H(xy^-1x)^-1, H(yx)^-1.
      reps.assign(y);
      reps.assign(g.mul(x, g.mul(y_inv, x)));
      reps.assign(g.mul(xy, x));
      reps.assign(y_inv);
    }
  }
  return reps.finish(Side::Right);
}

Order4FreeTrace order4free_transversal_traced(const FiniteGroup& g, const Subgroup& h) {
  if (auto y = first_element_of_order(g, 4))
    throw Error(ErrorKind::HasOrder4Element,
                "group has an element of order 4: " + g.label(*y));
  const auto partition = coset_partition(g, h, Side::Right);
  const std::size_t count = partition.count();

  Order4FreeTrace trace;
  trace.classes.assign(count, CosetClass::InvolutionFree);
  std::vector<ElementId> first_involution(count, kNoRep);
  for (ElementId a = 0; a < g.order(); ++a) {
    const auto k = partition.coset_of[a];
    if (is_involution(g, a) && first_involution[k] == kNoRep) first_involution[k] = a;
  }
  const auto home = partition.coset_of[kIdentity];

  RepresentativeTable reps(partition);
  reps.assign(kIdentity, home);
  trace.classes[home] = CosetClass::Trivial;
  for (std::size_t k = 0; k < count; ++k) {
    if (k == home || first_involution[k] == kNoRep) continue;
    trace.classes[k] = CosetClass::WithInvolution;
    reps.assign(first_involution[k], k);
  }

  auto orbit = [&](ElementId base, std::vector<std::size_t>& members,
                   std::vector<ElementId>& multipliers) {
    std::vector<bool> seen(count, false);
    for (ElementId m : h.elements()) {
      const auto k = partition.coset_of[g.mul(base, m)];
      if (trace.classes[k] != CosetClass::InvolutionFree)
        internal("right H-action left the involution-free cosets");
      if (seen[k]) continue;
      seen[k] = true;
      members.push_back(k);
      multipliers.push_back(m);
    }
  };

  for (std::size_t k = 0; k < count; ++k) {
    if (trace.classes[k] != CosetClass::InvolutionFree || reps.assigned_coset(k)) continue;
    OrbitPairing pair;
    pair.base = partition.representative[k];
    const ElementId base_inv = g.inv(pair.base);
    const auto k_inv = partition.coset_of[base_inv];
    if (k_inv == k) internal("involution-free coset equals its inverse coset");
    if (trace.classes[k_inv] != CosetClass::InvolutionFree)
      internal("inverse of an involution-free coset contains an involution");

    orbit(pair.base, pair.orbit_plus, pair.multipliers_plus);
    orbit(base_inv, pair.orbit_minus, pair.multipliers_minus);
    if (pair.orbit_plus.size() != pair.orbit_minus.size())
      internal("paired orbits differ in size");
    for (auto a : pair.orbit_plus)
      if (std::find(pair.orbit_minus.begin(), pair.orbit_minus.end(), a) != pair.orbit_minus.end())
        internal("paired orbits intersect");

    for (std::size_t j = 0; j < pair.orbit_plus.size(); ++j) {
      const ElementId hj = pair.multipliers_plus[j];
      const ElementId gj = pair.multipliers_minus[j];
      // g_j^-1 x h_j lies in Hxh_j; its inverse h_j^-1 x^-1 g_j lies in Hx^-1 g_j.
      const ElementId rep = g.mul(g.inv(gj), g.mul(pair.base, hj));
      reps.assign(rep, pair.orbit_plus[j]);
      reps.assign(g.inv(rep), pair.orbit_minus[j]);
    }
    trace.pairings.push_back(std::move(pair));
  }
  trace.transversal = reps.finish(Side::Right);
  return trace;
}

Transversal order4free_transversal(const FiniteGroup& g, const Subgroup& h) {
  return order4free_transversal_traced(g, h).transversal;
}

ConnectionSet connection_set_from_transversal(const FiniteGroup& g, const Transversal& t) {
  const auto set = t.as_set();
  check_elements(g, set);
  if (!set.contains(kIdentity))
    throw Error(ErrorKind::MissingIdentity, "transversal does not contain the identity");
  if (!is_inverse_closed(g, set))
    throw Error(ErrorKind::NotInverseClosed, "transversal is not inverse-closed");
  return ConnectionSet::make(g, set.without(kIdentity));
}

namespace {

class TransversalSearch {
 public:
  TransversalSearch(const FiniteGroup& g, const Subgroup& h, const SearchOptions& options)
      : g_(g),
        partition_(coset_partition(g, h, Side::Right)),
        budget_(options.node_budget),
        members_(partition_.count()),
        rep_(partition_.count(), kNoRep) {
    for (ElementId a = 0; a < g.order(); ++a) members_[partition_.coset_of[a]].push_back(a);
    rep_[partition_.coset_of[kIdentity]] = kIdentity;
  }

  SearchResult run() {
    SearchResult result;
    if (feasible() && extend(0)) {
      result.outcome = SearchResult::Outcome::Witness;
      result.witness = Transversal{Side::Right, rep_};
    }
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  // Whether t may represent coset k given the current partial assignment.
  bool candidate(ElementId t, std::size_t k) const {
    const ElementId t_inv = g_.inv(t);
    const auto k_inv = partition_.coset_of[t_inv];
    if (k_inv == k) return t == t_inv;
    return rep_[k_inv] == kNoRep;
  }

  // Every open coset still has at least one admissible representative.
  bool feasible() const {
    for (std::size_t k = 0; k < rep_.size(); ++k) {
      if (rep_[k] != kNoRep) continue;
      bool any = false;
      for (ElementId t : members_[k])
        if (candidate(t, k)) {
          any = true;
          break;
        }
      if (!any) return false;
    }
    return true;
  }

  bool extend(std::size_t from) {
    std::size_t k = from;
    while (k < rep_.size() && rep_[k] != kNoRep) ++k;
    if (k == rep_.size()) return true;
    for (ElementId t : members_[k]) {
      if (!candidate(t, k)) continue;
      if (++nodes_ > budget_)
        throw Error(ErrorKind::SearchBudgetExceeded,
                    "transversal search exceeded " + std::to_string(budget_) + " nodes");
      const ElementId t_inv = g_.inv(t);
      const auto k_inv = partition_.coset_of[t_inv];
      rep_[k] = t;
      rep_[k_inv] = t_inv;
      if (feasible() && extend(k + 1)) return true;
      rep_[k] = kNoRep;
      rep_[k_inv] = kNoRep;
    }
    return false;
  }

  const FiniteGroup& g_;
  CosetPartition partition_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<ElementId>> members_;
  std::vector<ElementId> rep_;
};

bool inverse_closed_involution_free(const FiniteGroup& g, const ElementSet& s) {
  for (ElementId a : s)
    if (is_involution(g, a) || !s.contains(g.inv(a))) return false;
  return true;
}

}  // namespace

SearchResult search_transversal(const FiniteGroup& g, const Subgroup& h,
                                const SearchOptions& options) {
  return TransversalSearch(g, h, options).run();
}

std::optional<Coset> coset_obstruction(const FiniteGroup& g, const Subgroup& h) {
  for (ElementId x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    for (Side side : {Side::Right, Side::Left}) {
      auto c = coset_of(g, h, x, side);
      if (c.representative != x) continue;  // already examined via its minimum
      if (inverse_closed_involution_free(g, c.elements)) return c;
    }
  }
  return std::nullopt;
}

}  // namespace perfcode
