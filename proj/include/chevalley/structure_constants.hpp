#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevalley/root_system.hpp"
#include "chevalley/sign_algebra.hpp"

namespace chevalley {

struct IncompleteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The 20 extraspecial pairs with their designated free signs: a fresh symbol
// family per first component (epsilon for d, delta for c, gamma for b, alpha
// for a), indices ascending with the second component, magnitude p+1.
struct ExtraspecialChoice {
    struct Pair {
        int r_ord;  // first component (positive ordinal)
        int s_ord;  // second component
        SignMonomial value;
    };
    std::vector<Pair> pairs;

    const Pair* find(int r_ord, int s_ord) const {
        for (const auto& p : pairs)
            if (p.r_ord == r_ord && p.s_ord == s_ord) return &p;
        return nullptr;
    }
};

ExtraspecialChoice find_extraspecial(const RootSystem& rs);

// Total map (r,s) -> N_{r,s} over all ordered root pairs with r+s a root.
class ConstantTable {
public:
    explicit ConstantTable(const RootSystem& rs);

    const RootSystem& system() const { return *rs_; }

    bool is_pair(int r_ord, int s_ord) const { return pair_flag_[idx(r_ord, s_ord)]; }
    bool defined(int r_ord, int s_ord) const { return cells_[idx(r_ord, s_ord)].has_value(); }

    const SignMonomial& entry(int r_ord, int s_ord) const;
    const SignMonomial& entry(const Root& r, const Root& s) const {
        return entry(rs_->ordinal(r), rs_->ordinal(s));
    }

    void set(int r_ord, int s_ord, const SignMonomial& v);

    // Number of (r,s) with r+s a root; all must be defined in a solved table.
    size_t pair_count() const { return pair_count_; }
    size_t defined_count() const { return defined_count_; }
    bool total() const { return defined_count_ == pair_count_; }

    std::vector<std::pair<int, int>> pairs() const;  // all valid ordered pairs

private:
    static int idx(int r_ord, int s_ord) {
        return RootSystem::dense_index(r_ord) * 48 + RootSystem::dense_index(s_ord);
    }

    const RootSystem* rs_;
    std::vector<std::optional<SignMonomial>> cells_;
    std::vector<char> pair_flag_;
    size_t pair_count_ = 0;
    size_t defined_count_ = 0;
};

// Integer specialization of a ConstantTable under a full sign assignment.
class IntConstantTable {
public:
    explicit IntConstantTable(const RootSystem& rs);

    const RootSystem& system() const { return *rs_; }
    bool is_pair(int r_ord, int s_ord) const;
    // N_{r,s}; zero when r+s is not a root.
    long long value(int r_ord, int s_ord) const { return cells_[idx(r_ord, s_ord)]; }
    long long value(const Root& r, const Root& s) const {
        return value(rs_->ordinal(r), rs_->ordinal(s));
    }
    void set(int r_ord, int s_ord, long long v) { cells_[idx(r_ord, s_ord)] = v; }

private:
    static int idx(int r_ord, int s_ord) {
        return RootSystem::dense_index(r_ord) * 48 + RootSystem::dense_index(s_ord);
    }
    const RootSystem* rs_;
    std::vector<long long> cells_;
};

// Solve all N_{r,s} from the extraspecial choice by fixpoint propagation of
// the four structure-constant relations. Throws IncompleteError if the rules
// stall before totality and MultiTermError on an inconsistent derivation.
ConstantTable solve_constants(const RootSystem& rs, const ExtraspecialChoice& choice);

IntConstantTable specialize(const ConstantTable& table, const SignAssignment& assignment);

// Exhaustive numeric re-check of relations (i)-(iv) on a specialized table,
// independent of the solver's derivation order.
struct RelationReport {
    struct Violation {
        std::string relation;  // "i", "ii", "iii", "iv", "magnitude"
        std::string detail;
    };
    std::vector<Violation> violations;
    size_t checked_i = 0, checked_ii = 0, checked_iii = 0, checked_iv = 0;
    bool ok() const { return violations.empty(); }
};

RelationReport verify_relations(const IntConstantTable& table);

// Builds the 52-dimensional Chevalley basis {e_r} u {h_a,h_b,h_c,h_d} with
// the bracket induced by the specialized table and verifies the Jacobi
// identity on every basis triple.
bool jacobi_oracle(const RootSystem& rs, const IntConstantTable& table, int jobs = 1);

}  // namespace chevalley
