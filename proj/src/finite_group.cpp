#include "perfcode/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "perfcode/error.hpp"

namespace perfcode {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 256;
constexpr int kSampledAssociativityTriples = 100000;

[[noreturn]] void bad_table(const std::string& msg) { throw Error(ErrorKind::BadTableFile, msg); }

std::string power_label(const std::string& base, std::size_t k) {
  if (k == 0) return "e";
  if (k == 1) return base;
  return base + "^" + std::to_string(k);
}

std::string join_tuple(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out + ")";
}

void require_bound(std::size_t order, const BuildOptions& options) {
  if (order > options.order_bound)
    throw Error(ErrorKind::OrderBoundExceeded, "group order " + std::to_string(order) +
                                                   " exceeds bound " +
                                                   std::to_string(options.order_bound));
}

FiniteGroup cyclic(int n, const BuildOptions& options) {
  if (n < 1) throw Error(ErrorKind::InvalidSpec, "cyclic group order must be >= 1");
  const auto order = static_cast<std::size_t>(n);
  require_bound(order, options);
  std::vector<ElementId> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < order; ++b)
      table[a * order + b] = static_cast<ElementId>((a + b) % order);
  }
  FiniteGroup::GeneratorMap gens;
  if (order > 1) gens["a"] = 1;
  return FiniteGroup(std::move(table), std::move(labels), {GroupFamily::Kind::Cyclic, n},
                     options.strict, std::move(gens));
}

// Elements r^i (index i) and r^i*s (index m+i), with s r s = r^-1.
FiniteGroup dihedral(int order_in, const BuildOptions& options) {
  if (order_in < 2 || order_in % 2 != 0)
    throw Error(ErrorKind::InvalidSpec, "dihedral group order must be even and >= 2");
  const auto order = static_cast<std::size_t>(order_in);
  require_bound(order, options);
  const std::size_t m = order / 2;
  std::vector<ElementId> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < m; ++i) {
    labels[i] = power_label("r", i);
    labels[m + i] = i == 0 ? "s" : power_label("r", i) + "*s";
  }
  for (std::size_t a = 0; a < order; ++a) {
    const bool a_refl = a >= m;
    const std::size_t ai = a % m;
    for (std::size_t b = 0; b < order; ++b) {
      const bool b_refl = b >= m;
      const std::size_t bi = b % m;
      const std::size_t exp = a_refl ? (ai + m - bi) % m : (ai + bi) % m;
      table[a * order + b] = static_cast<ElementId>((a_refl != b_refl) ? m + exp : exp);
    }
  }
  FiniteGroup::GeneratorMap gens;
  if (m > 1) gens["r"] = 1;
  gens["s"] = static_cast<ElementId>(m);
  return FiniteGroup(std::move(table), std::move(labels), {GroupFamily::Kind::Dihedral, order_in},
                     options.strict, std::move(gens));
}

// Q_{4n} = <x, y | x^n = y^2, x^{2n} = e, y^-1 x y = x^-1>.
// Index i is x^i and index 2n+i is x^i*y, for 0 <= i < 2n.
FiniteGroup quaternion(int order_in, const BuildOptions& options) {
  if (order_in % 4 != 0 || order_in / 4 < 2)
    throw Error(ErrorKind::InvalidSpec,
                "generalized quaternion order must be 4n with n >= 2, got " +
                    std::to_string(order_in));
  const auto order = static_cast<std::size_t>(order_in);
  require_bound(order, options);
  const std::size_t n = order / 4;
  const std::size_t two_n = 2 * n;
  std::vector<ElementId> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < two_n; ++i) {
    labels[i] = power_label("x", i);
    labels[two_n + i] = i == 0 ? "y" : power_label("x", i) + "*y";
  }
  for (std::size_t a = 0; a < order; ++a) {
    const bool ay = a >= two_n;
    const std::size_t ai = a % two_n;
    for (std::size_t b = 0; b < order; ++b) {
      const bool by = b >= two_n;
      const std::size_t bi = b % two_n;
      ElementId r;
      if (!ay && !by) {
        r = static_cast<ElementId>((ai + bi) % two_n);
      } else if (!ay && by) {
        r = static_cast<ElementId>(two_n + (ai + bi) % two_n);
      } else if (ay && !by) {
        // x^a y x^b = x^{a-b} y
        r = static_cast<ElementId>(two_n + (ai + two_n - bi) % two_n);
      } else {
        // x^a y x^b y = x^{a-b} y^2 = x^{a-b+n}
        r = static_cast<ElementId>((ai + two_n - bi + n) % two_n);
      }
      table[a * order + b] = r;
    }
  }
  FiniteGroup::GeneratorMap gens{{"x", 1}, {"y", static_cast<ElementId>(two_n)}};
  return FiniteGroup(std::move(table), std::move(labels),
                     {GroupFamily::Kind::Quaternion, static_cast<int>(n)}, options.strict,
                     std::move(gens));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, GroupFamily family,
                           const BuildOptions& options) {
  const std::size_t na = a.order(), nb = b.order();
  const std::size_t order = na * nb;
  require_bound(order, options);
  std::vector<ElementId> table(order * order);
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < order; ++i)
    labels[i] = join_tuple({a.label(static_cast<ElementId>(i / nb)),
                            b.label(static_cast<ElementId>(i % nb))});
  for (std::size_t p = 0; p < order; ++p) {
    const auto pa = static_cast<ElementId>(p / nb), pb = static_cast<ElementId>(p % nb);
    for (std::size_t q = 0; q < order; ++q) {
      const auto qa = static_cast<ElementId>(q / nb), qb = static_cast<ElementId>(q % nb);
      table[p * order + q] = static_cast<ElementId>(a.mul(pa, qa) * nb + b.mul(pb, qb));
    }
  }
  return FiniteGroup(std::move(table), std::move(labels), family, options.strict);
}

FiniteGroup abelian(const std::vector<int>& factors, const BuildOptions& options) {
  if (factors.empty()) throw Error(ErrorKind::InvalidSpec, "abelian spec needs at least one factor");
  std::size_t order = 1;
  for (int f : factors) {
    if (f < 2) throw Error(ErrorKind::InvalidSpec, "abelian factors must be >= 2");
    order *= static_cast<std::size_t>(f);
    require_bound(order, options);
  }
  const int abelian_order = static_cast<int>(order);
  if (factors.size() == 1) {
    auto c = cyclic(factors[0], options);
    std::vector<ElementId> table(c.order() * c.order());
    for (ElementId x = 0; x < c.order(); ++x)
      std::copy(c.row(x).begin(), c.row(x).end(), table.begin() + x * c.order());
    return FiniteGroup(std::move(table), c.labels(), {GroupFamily::Kind::Abelian, abelian_order},
                       options.strict, c.generators());
  }
  // Mixed-radix tuples, first factor most significant.
  std::vector<ElementId> table(order * order);
  std::vector<std::string> labels(order);
  std::vector<std::size_t> stride(factors.size());
  std::size_t s = 1;
  for (std::size_t k = factors.size(); k-- > 0;) {
    stride[k] = s;
    s *= static_cast<std::size_t>(factors[k]);
  }
  auto digit = [&](std::size_t v, std::size_t k) { return (v / stride[k]) % factors[k]; };
  for (std::size_t v = 0; v < order; ++v) {
    std::vector<std::string> parts;
    for (std::size_t k = 0; k < factors.size(); ++k) parts.push_back(std::to_string(digit(v, k)));
    labels[v] = join_tuple(parts);
  }
  for (std::size_t p = 0; p < order; ++p)
    for (std::size_t q = 0; q < order; ++q) {
      std::size_t r = 0;
      for (std::size_t k = 0; k < factors.size(); ++k)
        r += ((digit(p, k) + digit(q, k)) % factors[k]) * stride[k];
      table[p * order + q] = static_cast<ElementId>(r);
    }
  return FiniteGroup(std::move(table), std::move(labels), {GroupFamily::Kind::Abelian, abelian_order},
                     options.strict);
}

using Perm = std::vector<int>;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

std::string cycle_label(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// Product p*q applies p first, then q.
FiniteGroup permutation(const PermutationSpec& spec, const BuildOptions& options) {
  if (spec.degree < 1) throw Error(ErrorKind::InvalidSpec, "permutation degree must be >= 1");
  const auto degree = static_cast<std::size_t>(spec.degree);
  std::vector<Perm> gens;
  for (const auto& cycles : spec.generators) {
    Perm p(degree);
    std::iota(p.begin(), p.end(), 0);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
      for (int pt : cycle) {
        if (pt < 0 || static_cast<std::size_t>(pt) >= degree)
          throw Error(ErrorKind::InvalidSpec,
                      "point " + std::to_string(pt) + " outside degree " + std::to_string(degree));
        if (used[pt])
          throw Error(ErrorKind::InvalidSpec,
                      "point " + std::to_string(pt) + " repeated within a generator");
        used[pt] = true;
      }
      for (std::size_t k = 0; k < cycle.size(); ++k)
        p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    gens.push_back(std::move(p));
  }

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::unordered_map<Perm, ElementId, PermHash> index{{id, 0}};
  auto compose = [&](const Perm& p, const Perm& q) {
    Perm r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = q[p[i]];
    return r;
  };
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Perm next = compose(elements[head], g);
      if (index.contains(next)) continue;
      if (elements.size() + 1 > options.order_bound)
        throw Error(ErrorKind::OrderBoundExceeded,
                    "permutation closure exceeds order bound " +
                        std::to_string(options.order_bound));
      index.emplace(next, static_cast<ElementId>(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t order = elements.size();
  std::vector<ElementId> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      table[a * order + b] = index.at(compose(elements[a], elements[b]));
  std::vector<std::string> labels;
  labels.reserve(order);
  for (const auto& p : elements) labels.push_back(cycle_label(p));
  FiniteGroup::GeneratorMap named;
  for (std::size_t k = 0; k < gens.size(); ++k)
    named["g" + std::to_string(k + 1)] = index.at(gens[k]);
  return FiniteGroup(std::move(table), std::move(labels),
                     {GroupFamily::Kind::Permutation, spec.degree}, options.strict,
                     std::move(named));
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<ElementId> table, std::vector<std::string> labels,
                         GroupFamily family, bool strict_associativity, GeneratorMap generators)
    : order_(labels.size()),
      table_(std::move(table)),
      labels_(std::move(labels)),
      family_(family),
      generators_(std::move(generators)) {
  const std::size_t n = order_;
  if (n == 0) bad_table("group must have at least one element");
  if (table_.size() != n * n)
    bad_table("table has " + std::to_string(table_.size()) + " entries, expected " +
              std::to_string(n * n));
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= n)
      bad_table("entry out of range at row " + std::to_string(i / n) + ", column " +
                std::to_string(i % n));
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[a] != a)
      bad_table("index 0 is not a left identity at column " + std::to_string(a));
    if (table_[a * n] != a)
      bad_table("index 0 is not a right identity at row " + std::to_string(a));
  }
  std::vector<std::size_t> seen(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto v = table_[a * n + b];
      if (seen[v] == a)
        bad_table("row " + std::to_string(a) + " repeats entry " + std::to_string(v) +
                  " at column " + std::to_string(b));
      seen[v] = a;
    }
  std::fill(seen.begin(), seen.end(), n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      const auto v = table_[a * n + b];
      if (seen[v] == b)
        bad_table("column " + std::to_string(b) + " repeats entry " + std::to_string(v) +
                  " at row " + std::to_string(a));
      seen[v] = b;
    }

  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const auto r = row(static_cast<ElementId>(a));
    const auto it = std::find(r.begin(), r.end(), kIdentity);
    const auto b = static_cast<std::size_t>(it - r.begin());
    if (table_[b * n + a] != kIdentity)
      bad_table("element " + std::to_string(a) + " has no two-sided inverse");
    inverse_[a] = static_cast<ElementId>(b);
  }

  auto assoc_fail = [&](std::size_t a, std::size_t b, std::size_t c) {
    bad_table("associativity fails for (" + std::to_string(a) + ", " + std::to_string(b) +
              ", " + std::to_string(c) + ")");
  };
  if (n <= kExhaustiveAssociativityLimit || strict_associativity) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = table_[a * n + b];
        for (std::size_t c = 0; c < n; ++c)
          if (table_[ab * n + c] != table_[a * n + table_[b * n + c]]) assoc_fail(a, b, c);
      }
  } else {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int k = 0; k < kSampledAssociativityTriples; ++k) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      if (table_[table_[a * n + b] * n + c] != table_[a * n + table_[b * n + c]])
        assoc_fail(a, b, c);
    }
  }

  for (std::size_t a = 0; a < n && abelian_; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (table_[a * n + b] != table_[b * n + a]) {
        abelian_ = false;
        break;
      }
  for (const auto& [name, id] : generators_)
    if (id >= n) bad_table("generator " + name + " out of range");
}

ElementId FiniteGroup::pow(ElementId a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  ElementId result = kIdentity;
  ElementId base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<ElementId> FiniteGroup::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<ElementId>(i);
  return std::nullopt;
}

FiniteGroup build_group(const GroupSpec& spec, const BuildOptions& options) {
  return std::visit(
      [&](const auto& node) -> FiniteGroup {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return cyclic(node.order, options);
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          return dihedral(node.order, options);
        } else if constexpr (std::is_same_v<T, QuaternionSpec>) {
          return quaternion(node.order, options);
        } else if constexpr (std::is_same_v<T, AbelianSpec>) {
          return abelian(node.factors, options);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          if (!node.left || !node.right)
            throw Error(ErrorKind::InvalidSpec, "product with missing factor");
          const auto a = build_group(*node.left, options);
          const auto b = build_group(*node.right, options);
          return direct_product(a, b, {GroupFamily::Kind::Product, 0}, options);
        } else if constexpr (std::is_same_v<T, PermutationSpec>) {
          return permutation(node, options);
        } else {
          auto g = load_table_file(node.path, options.strict);
          require_bound(g.order(), options);
          return g;
        }
      },
      spec.node);
}

FiniteGroup load_table_file(const std::string& path, bool strict) {
  std::ifstream in(path);
  if (!in) bad_table("cannot open table file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    bad_table("table file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
    bad_table("table file must be an object with 'order' and 'table'");
  if (!doc["order"].is_number_unsigned() || doc["order"].get<std::size_t>() == 0)
    bad_table("'order' must be a positive integer");
  const auto n = doc["order"].get<std::size_t>();
  const auto& rows = doc["table"];
  if (!rows.is_array() || rows.size() != n)
    bad_table("'table' must have " + std::to_string(n) + " rows");
  std::vector<ElementId> table;
  table.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!rows[r].is_array() || rows[r].size() != n)
      bad_table("row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& v = rows[r][c];
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n)
        bad_table("entry at row " + std::to_string(r) + ", column " + std::to_string(c) +
                  " is not an index in [0, " + std::to_string(n) + ")");
      table.push_back(v.get<ElementId>());
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != n)
      bad_table("'labels' must have " + std::to_string(n) + " strings");
    for (const auto& s : l) {
      if (!s.is_string()) bad_table("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  return FiniteGroup(std::move(table), std::move(labels), {GroupFamily::Kind::Table, 0}, strict);
}

std::string table_file_json(const FiniteGroup& g) {
  nlohmann::json doc;
  doc["order"] = g.order();
  doc["labels"] = g.labels();
  auto rows = nlohmann::json::array();
  for (ElementId a = 0; a < g.order(); ++a)
    rows.push_back(std::vector<ElementId>(g.row(a).begin(), g.row(a).end()));
  doc["table"] = std::move(rows);
  return doc.dump();
}

std::size_t element_order(const FiniteGroup& g, ElementId a) {
  std::size_t k = 1;
  for (ElementId p = a; p != kIdentity; p = g.mul(p, a)) ++k;
  return k;
}

bool is_involution(const FiniteGroup& g, ElementId a) {
  return a != kIdentity && g.mul(a, a) == kIdentity;
}

ElementSet squares(const FiniteGroup& g) {
  std::vector<ElementId> out;
  out.reserve(g.order());
  for (ElementId a = 0; a < g.order(); ++a) out.push_back(g.mul(a, a));
  return ElementSet(std::move(out));
}

ElementSet squares_of(const FiniteGroup& g, const ElementSet& subset) {
  std::vector<ElementId> out;
  out.reserve(subset.size());
  for (ElementId a : subset) out.push_back(g.mul(a, a));
  return ElementSet(std::move(out));
}

std::optional<ElementId> first_element_of_order(const FiniteGroup& g, std::size_t k) {
  for (ElementId a = 0; a < g.order(); ++a)
    if (element_order(g, a) == k) return a;
  return std::nullopt;
}

bool has_element_of_order_4(const FiniteGroup& g) {
  return first_element_of_order(g, 4).has_value();
}

void check_elements(const FiniteGroup& g, const ElementSet& s) {
  for (ElementId a : s)
    if (!g.valid(a))
      throw Error(ErrorKind::InvalidElement, "element index " + std::to_string(a) +
                                                 " out of range for group of order " +
                                                 std::to_string(g.order()));
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorKind::BadTableFile: return "BadTableFile";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::ContainsIdentity: return "ContainsIdentity";
    case ErrorKind::NotInverseClosed: return "NotInverseClosed";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::IsSquare: return "IsSquare";
    case ErrorKind::HasOrder4Element: return "HasOrder4Element";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace perfcode
