#pragma once

#include <set>
#include <string_view>

#include "oracles.hpp"
#include "perfcode/finite_group.hpp"
#include "perfcode/parser.hpp"
#include "perfcode/subgroups.hpp"

namespace testing_support {

inline perfcode::FiniteGroup group(std::string_view dsl) {
  return perfcode::build_group(perfcode::parse_spec(dsl));
}

inline perfcode::ElementSet elems(const perfcode::FiniteGroup& g, std::string_view list) {
  return perfcode::parse_element_list(g, list);
}

inline perfcode::Subgroup gen(const perfcode::FiniteGroup& g, std::string_view list) {
  return perfcode::generated_subgroup(g, elems(g, list));
}

inline std::set<perfcode::ElementId> to_std(const perfcode::ElementSet& s) {
  return {s.begin(), s.end()};
}

}  // namespace testing_support
