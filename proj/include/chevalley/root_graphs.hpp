#pragma once

#include <array>
#include <string>
#include <vector>

#include "chevalley/structure_constants.hpp"

namespace chevalley {

struct EmptyDeltaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Directed graph on one sign side of the root system: an edge s -> s+q for
// every q in delta keeping s+q on the same side, weighted by N_{s,q}.
struct RootGraph {
    int sign;                    // +1 or -1
    std::vector<Root> delta;     // nonempty subset of the fundamentals
    std::vector<Root> vertices;  // the 24 roots of the side, table order

    struct Edge {
        int s_ord, r_ord;    // signed ordinals, r = s + q
        char label;          // 'a'..'d'
        SignMonomial weight; // N_{s,q}
    };
    std::vector<Edge> edges;

    // Row = source s, column = target r, both indexed by |ordinal|-1.
    std::array<std::array<int, 24>, 24> adjacency{};
    std::array<std::array<SignMonomial, 24>, 24> weights{};
};

RootGraph build_graph(const RootSystem& rs, const ConstantTable& table, int sign,
                      const std::vector<Root>& delta);

// Number of s-decompositions of r: entry (s,r) of the k-th power of the
// adjacency matrix, k = ht(r) - ht(s); 1 on the diagonal, 0 for k <= 0.
long long path_count(const RootGraph& graph, const Root& s, const Root& r);

// All K_{r,s} for one side, computed by powers of the specialized weight
// matrix. values[|r|-1][|s|-1] = K_{r,s}.
struct KTable {
    int sign;
    std::vector<Root> delta;
    std::array<std::array<long long, 24>, 24> values{};
};

KTable k_table(const RootSystem& rs, const RootGraph& graph, const SignAssignment& assignment);

long long k_number(const RootSystem& rs, const RootGraph& graph,
                   const SignAssignment& assignment, const Root& r, const Root& s);

// Independent oracle: enumerate the decomposition tuples by depth-first
// search over root-preserving prefix sums and add up the weight products.
long long k_number_bruteforce(const RootSystem& rs, const ConstantTable& table,
                              const SignAssignment& assignment, const std::vector<Root>& delta,
                              const Root& r, const Root& s);

// K_{r,s} = (-1)^{ht r - ht s} (r,r)/(s,s) K_{-s,-r} for all positive r,s.
struct Theorem5Report {
    struct Violation {
        int r_ord, s_ord;
        long long lhs, rhs;
    };
    std::vector<Violation> violations;
    size_t checked = 0;
    bool ok() const { return violations.empty(); }
};

Theorem5Report theorem5_check(const RootSystem& rs, const KTable& positive_side,
                              const KTable& negative_side);

// Parse "a,b,c,d"-style delta lists into fundamental roots.
std::vector<Root> parse_delta(const RootSystem& rs, const std::string& letters);

}  // namespace chevalley
