#pragma once

#include <iosfwd>
#include <string>

#include "chevalley/collector.hpp"
#include "chevalley/commutator_formulas.hpp"
#include "chevalley/root_graphs.hpp"

namespace chevalley {

// Textual renderings shared by the CLI, the exports and the test fixtures.

// "1232", "-1232".
std::string quadruple(const Root& r);
// "a+2b+3c+2d", "-b-2c", "d".
std::string sum_form(const Root& r);
// Table-1 style e-basis form: "e1", "e3-e4", "(e1-e2-e3-e4)/2".
std::string euclid_form(const Root& r);

// Accepts a signed ordinal ("21", "-3") or a signed quadruple ("1232",
// "-0110") and returns the root.
Root parse_root(const RootSystem& rs, const std::string& text);

// Assignment sources: the literal "all-plus" or a JSON file mapping symbol
// names ("e1".."e9","e0","d1".."d6","g1".."g3","a1") to +-1.
SignAssignment parse_assignment_file(const std::string& path);
SignAssignment parse_assignment_spec(const std::string& spec);

// One commutator formula line in the style of the printed lists, e.g.
// "[x_{d}(u),x_{b+2c}(t)] = x_{b+2c+d}(e3 tu) x_{b+2c+2d}(-e34 tu^2)".
std::string formula_line(const CommutatorFormula& f);
std::string formula_line(const CommutatorFormula& f, const SignAssignment& assignment);

}  // namespace chevalley
