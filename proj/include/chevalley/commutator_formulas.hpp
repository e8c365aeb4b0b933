#pragma once

#include <stdexcept>
#include <vector>

#include "chevalley/structure_constants.hpp"

namespace chevalley {

struct UndefinedFactorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedPairError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OppositeRootsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// M_{r,s,i} = (1/i!) N_{r,s} N_{r,r+s} ... N_{r,(i-1)r+s}.
SignMonomial m_coeff(const ConstantTable& table, const Root& r, const Root& s, int i);

// C_{ij,rs} for (i,j) in {(1,1),(2,1),(1,2),(3,1),(1,3),(3,2),(2,3)}; the
// value is integral under every sign assignment (asserted).
SignMonomial c_coeff(const ConstantTable& table, int i, int j, const Root& r, const Root& s);

// Expansion of [x_s(u),x_r(t)] into root elements x_{ir+js}(coeff (-t)^i u^j),
// terms in order of increasing i+j. Empty when r+s is not a root.
struct CommutatorFormula {
    struct Term {
        int i, j;
        Root root;           // i*r + j*s
        SignMonomial coeff;  // C_{ij,rs}; the printed argument folds in (-1)^i
        SignMonomial argument_coeff() const { return i % 2 ? -coeff : coeff; }
    };
    Root s, r;
    std::vector<Term> terms;
};

CommutatorFormula formula(const ConstantTable& table, const Root& s, const Root& r);

// All formulas grouped the way the lists group them: both-positive pairs
// (s before r in the order), both-negative mirrors, and mixed-sign pairs.
struct FormulaCatalog {
    std::vector<CommutatorFormula> positive;
    std::vector<CommutatorFormula> negative;
    std::vector<CommutatorFormula> mixed;
};

FormulaCatalog formula_catalog(const ConstantTable& table);

}  // namespace chevalley
