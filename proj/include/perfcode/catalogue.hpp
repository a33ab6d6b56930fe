#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "perfcode/group_spec.hpp"

namespace perfcode {

struct CatalogueEntry {
  std::string name;  // DSL text, or S3/A4/S4 for the permutation groups
  GroupSpec spec;
  std::size_t order = 0;
};

/// Built-in test catalogue: every Z(n), D(2m), Q(4m), every non-cyclic
/// invariant-factor abelian group A(...), a set of direct products, and the
/// permutation groups S3, A4, S4, all of order <= max_order, in that order.
std::vector<CatalogueEntry> builtin_catalogue(std::size_t max_order = 64);

/// Invariant-factor lists d1 | d2 | ... | dk (k >= 1, d1 >= 2) with product n.
std::vector<std::vector<int>> invariant_factor_lists(int n);

}  // namespace perfcode
