#include "perfcode/catalogue.hpp"

#include <functional>

#include "perfcode/parser.hpp"

namespace perfcode {

namespace {

constexpr const char* kS3 = "perm{(0 1 2);(0 1)}@3";
constexpr const char* kA4 = "perm{(0 1 2);(0 1)(2 3)}@4";
constexpr const char* kS4 = "perm{(0 1 2 3);(0 1)}@4";

struct NamedPerm {
  const char* name;
  const char* dsl;
  std::size_t order;
};

constexpr NamedPerm kPermGroups[] = {{"S3", kS3, 6}, {"A4", kA4, 12}, {"S4", kS4, 24}};

struct ProductEntry {
  const char* dsl;
  std::size_t order;
};

constexpr ProductEntry kProducts[] = {
    {"D(6) x Z(3)", 18},      {"Z(3) x Q(8)", 24},      {"D(8) x Z(2)", 16},
    {"Q(8) x Z(2)", 16},      {"D(6) x Z(4)", 24},      {"D(8) x Z(3)", 24},
    {"Q(12) x Z(2)", 24},     {"D(10) x Z(3)", 30},     {"Q(8) x Z(4)", 32},
    {"Q(8) x A(2,2)", 32},    {"D(6) x D(6)", 36},      {"Q(8) x D(6)", 48},
    {"D(8) x D(8)", 64},      {"Q(8) x Q(8)", 64},      {"Q(8) x Z(8)", 64},
    {"perm{(0 1 2);(0 1)(2 3)}@4 x Z(2)", 24},        {"perm{(0 1 2);(0 1)}@3 x Z(5)", 30},
    {"perm{(0 1 2 3);(0 1)}@4 x Z(2)", 48},
};

}  // namespace

std::vector<std::vector<int>> invariant_factor_lists(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  // Build d_k | d_{k-1} | ... from the largest factor down.
  std::function<void(int, int)> rec = [&](int remaining, int must_divide) {
    if (remaining == 1) {
      if (!current.empty()) out.emplace_back(current.rbegin(), current.rend());
      return;
    }
    for (int d = 2; d <= must_divide; ++d) {
      if (must_divide % d != 0 || remaining % d != 0) continue;
      current.push_back(d);
      rec(remaining / d, d);
      current.pop_back();
    }
  };
  if (n == 1) return out;
  for (int top = 2; top <= n; ++top) {
    if (n % top != 0) continue;
    current = {top};
    rec(n / top, top);
  }
  return out;
}

std::vector<CatalogueEntry> builtin_catalogue(std::size_t max_order) {
  std::vector<CatalogueEntry> out;
  auto add = [&](std::string name, const std::string& dsl, std::size_t order) {
    if (order <= max_order) out.push_back({std::move(name), parse_spec(dsl), order});
  };
  for (std::size_t n = 1; n <= max_order; ++n)
    add("Z(" + std::to_string(n) + ")", "Z(" + std::to_string(n) + ")", n);
  for (std::size_t n = 4; n <= max_order; n += 2)
    add("D(" + std::to_string(n) + ")", "D(" + std::to_string(n) + ")", n);
  for (std::size_t n = 8; n <= max_order; n += 4)
    add("Q(" + std::to_string(n) + ")", "Q(" + std::to_string(n) + ")", n);
  for (std::size_t n = 4; n <= max_order; ++n)
    for (const auto& factors : invariant_factor_lists(static_cast<int>(n))) {
      if (factors.size() < 2) continue;
      const auto dsl = to_dsl(GroupSpec{AbelianSpec{factors}});
      add(dsl, dsl, n);
    }
  for (const auto& p : kProducts) add(p.dsl, p.dsl, p.order);
  for (const auto& p : kPermGroups) add(p.name, p.dsl, p.order);
  return out;
}

}  // namespace perfcode
