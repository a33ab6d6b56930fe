#include "perfcode/cayley.hpp"

#include <sstream>

#include "perfcode/error.hpp"

namespace perfcode {

ConnectionSet ConnectionSet::make(const FiniteGroup& g, ElementSet s) {
  check_elements(g, s);
  if (s.contains(kIdentity))
    throw Error(ErrorKind::ContainsIdentity, "connection set contains the identity");
  for (ElementId a : s)
    if (!s.contains(g.inv(a)))
      throw Error(ErrorKind::NotInverseClosed, "connection set contains " + g.label(a) +
                                                   " but not its inverse " +
                                                   g.label(g.inv(a)));
  return ConnectionSet(std::move(s));
}

CayleyGraph::CayleyGraph(const FiniteGroup& g, ConnectionSet s)
    : group_(&g), s_(std::move(s)), in_s_(g.order(), false) {
  for (ElementId a : s_.elements()) in_s_[a] = true;
  const std::size_t n = g.order();
  if (n > kCacheThreshold) {
    words_per_row_ = (n + 63) / 64;
    adjacency_.assign(n * words_per_row_, 0);
    for (ElementId x = 0; x < n; ++x)
      for (ElementId a : s_.elements()) {
        const ElementId y = g.mul(a, x);
        adjacency_[x * words_per_row_ + y / 64] |= std::uint64_t{1} << (y % 64);
      }
  }
}

bool CayleyGraph::adjacent(ElementId x, ElementId y) const {
  if (!adjacency_.empty())
    return (adjacency_[x * words_per_row_ + y / 64] >> (y % 64)) & 1u;
  return in_s_[group_->mul(y, group_->inv(x))];
}

std::vector<ElementId> CayleyGraph::neighbors(ElementId x) const {
  std::vector<ElementId> out;
  out.reserve(s_.size());
  for (ElementId a : s_.elements()) out.push_back(group_->mul(a, x));
  return out;
}

std::vector<std::size_t> CayleyGraph::components() const {
  const std::size_t n = vertex_count();
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, none);
  std::size_t next = 0;
  for (ElementId start = 0; start < n; ++start) {
    if (comp[start] != none) continue;
    std::vector<ElementId> stack{start};
    comp[start] = next;
    while (!stack.empty()) {
      const ElementId v = stack.back();
      stack.pop_back();
      for (ElementId w : neighbors(v))
        if (comp[w] == none) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

CayleyGraph build_cayley(const FiniteGroup& g, const ElementSet& s) {
  return CayleyGraph(g, ConnectionSet::make(g, s));
}

bool is_perfect_code_graph(const CayleyGraph& graph, const ElementSet& c) {
  const auto& g = graph.group();
  check_elements(g, c);
  std::vector<bool> in_c(g.order(), false);
  for (ElementId v : c) in_c[v] = true;
  for (ElementId v = 0; v < g.order(); ++v) {
    std::size_t hits = 0;
    for (ElementId w : graph.neighbors(v))
      if (in_c[w]) ++hits;
    if (in_c[v] ? hits != 0 : hits != 1) return false;
  }
  return true;
}

bool MultiplicityMap::all_ones() const {
  for (auto c : counts)
    if (c != 1) return false;
  return true;
}

std::uint64_t MultiplicityMap::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

MultiplicityMap group_ring_product_check(const FiniteGroup& g, const ConnectionSet& s,
                                         const ElementSet& c) {
  check_elements(g, c);
  MultiplicityMap m;
  m.counts.assign(g.order(), 0);
  for (ElementId b : c) {
    ++m.counts[b];
    for (ElementId a : s.elements()) ++m.counts[g.mul(a, b)];
  }
  return m;
}

bool is_transversal(const FiniteGroup& g, const Subgroup& h, const ElementSet& t, Side side) {
  check_elements(g, t);
  if (t.size() != h.index()) return false;
  const auto p = coset_partition(g, h, side);
  std::vector<bool> hit(p.count(), false);
  for (ElementId a : t) {
    const auto k = p.coset_of[a];
    if (hit[k]) return false;
    hit[k] = true;
  }
  return true;
}

bool is_inverse_closed(const FiniteGroup& g, const ElementSet& t) {
  for (ElementId a : t)
    if (!t.contains(g.inv(a))) return false;
  return true;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string export_dot(const CayleyGraph& graph, const ElementSet& highlight) {
  const auto& g = graph.group();
  std::ostringstream out;
  out << "graph cayley {\n";
  for (ElementId v = 0; v < g.order(); ++v) {
    out << "  n" << v << " [label=\"" << dot_escape(g.label(v)) << "\"";
    if (highlight.contains(v)) out << ", style=filled, fillcolor=\"#e34a33\"";
    out << "];\n";
  }
  for (ElementId v = 0; v < g.order(); ++v)
    for (ElementId w : ElementSet(graph.neighbors(v)))
      if (v < w) out << "  n" << v << " -- n" << w << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace perfcode
