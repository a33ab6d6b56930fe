#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "perfcode/classify.hpp"

namespace perfcode {

/// Runs the command-line front end. Exit codes: 0 success / positive
/// verdict, 1 negative verdict, 2 error (JSON error object on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const FiniteGroup& g, const CodeDecision& d);
nlohmann::json to_json(const FiniteGroup& g, const Subgroup& h);
nlohmann::json to_json(const MultiplicityMap& m);

}  // namespace perfcode
