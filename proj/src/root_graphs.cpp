#include "chevalley/root_graphs.hpp"

#include <algorithm>

namespace chevalley {

namespace {

using Matrix = std::array<std::array<long long, 24>, 24>;

Matrix multiply(const Matrix& x, const Matrix& y) {
    Matrix out{};
    for (int i = 0; i < 24; ++i)
        for (int k = 0; k < 24; ++k) {
            if (x[i][k] == 0) continue;
            for (int j = 0; j < 24; ++j)
                out[i][j] = Rational::checked_add(out[i][j],
                                                  Rational::checked_mul(x[i][k], y[k][j]));
        }
    return out;
}

Matrix identity_matrix() {
    Matrix out{};
    for (int i = 0; i < 24; ++i) out[i][i] = 1;
    return out;
}

char fundamental_letter(const RootSystem& rs, const Root& q) {
    for (char l : {'a', 'b', 'c', 'd'})
        if (rs.fundamental(l) == q) return l;
    throw std::invalid_argument("delta may only contain fundamental roots");
}

}  // namespace

std::vector<Root> parse_delta(const RootSystem& rs, const std::string& letters) {
    std::vector<Root> delta;
    for (char ch : letters) {
        if (ch == ',' || ch == ' ') continue;
        Root q = rs.fundamental(ch);  // throws on unknown letters
        if (std::find(delta.begin(), delta.end(), q) == delta.end()) delta.push_back(q);
    }
    return delta;
}

RootGraph build_graph(const RootSystem& rs, const ConstantTable& table, int sign,
                      const std::vector<Root>& delta) {
    if (delta.empty()) throw EmptyDeltaError("build_graph: delta must be nonempty");
    RootGraph g;
    g.sign = sign;
    g.delta = delta;
    for (int k = 1; k <= 24; ++k) g.vertices.push_back(rs.root(sign * k));

    for (int k = 1; k <= 24; ++k) {
        const Root s = rs.root(sign * k);
        for (const Root& q : delta) {
            auto r = rs.root_sum(s, q);
            if (!r) continue;
            int r_ord = rs.ordinal(*r);
            if ((r_ord > 0) != (sign > 0)) continue;  // stay on one side
            RootGraph::Edge e;
            e.s_ord = sign * k;
            e.r_ord = r_ord;
            e.label = fundamental_letter(rs, q);
            e.weight = table.entry(s, q);
            g.adjacency[k - 1][std::abs(r_ord) - 1] = 1;
            g.weights[k - 1][std::abs(r_ord) - 1] = e.weight;
            g.edges.push_back(e);
        }
    }
    return g;
}

long long path_count(const RootGraph& graph, const Root& s, const Root& r) {
    if (s == r) return 1;
    int k = r.height() - s.height();
    if (k <= 0) return 0;
    Matrix adj{};
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) adj[i][j] = graph.adjacency[i][j];
    Matrix power = identity_matrix();
    for (int step = 0; step < k; ++step) power = multiply(power, adj);
    // Index by position in the side's vertex list.
    auto pos = [&](const Root& x) {
        for (int i = 0; i < 24; ++i)
            if (graph.vertices[i] == x) return i;
        throw std::invalid_argument("path_count: root not on this graph's side");
    };
    return power[pos(s)][pos(r)];
}

KTable k_table(const RootSystem& rs, const RootGraph& graph, const SignAssignment& assignment) {
    KTable out;
    out.sign = graph.sign;
    out.delta = graph.delta;

    Matrix weight{};
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j)
            weight[i][j] = graph.weights[i][j].evaluate(assignment).as_integer();

    // K_{r,s} sits at (s,r) of the k-th power, k = ht(r)-ht(s); accumulate
    // every power once since k <= 10 for F4.
    Matrix power = identity_matrix();
    for (int s = 0; s < 24; ++s) out.values[s][s] = 1;
    for (int k = 1; k <= 11; ++k) {
        power = multiply(power, weight);
        for (int si = 0; si < 24; ++si)
            for (int ri = 0; ri < 24; ++ri) {
                if (power[si][ri] == 0) continue;
                const Root& s = graph.vertices[si];
                const Root& r = graph.vertices[ri];
                if (r.height() - s.height() == k) out.values[ri][si] = power[si][ri];
            }
    }
    (void)rs;
    return out;
}

long long k_number(const RootSystem& rs, const RootGraph& graph,
                   const SignAssignment& assignment, const Root& r, const Root& s) {
    return k_table(rs, graph, assignment).values[std::abs(rs.ordinal(r)) - 1]
                                         [std::abs(rs.ordinal(s)) - 1];
}

namespace {

long long brute_force_from(const RootSystem& rs, const ConstantTable& table,
                           const SignAssignment& assignment, const std::vector<Root>& delta,
                           const Root& target, const Root& at) {
    if (at == target) return 1;
    if (at.height() >= target.height()) return 0;
    long long acc = 0;
    for (const Root& q : delta) {
        auto next = rs.root_sum(at, q);
        if (!next) continue;
        long long step = table.entry(at, q).evaluate(assignment).as_integer();
        acc = Rational::checked_add(
            acc, Rational::checked_mul(
                     step, brute_force_from(rs, table, assignment, delta, target, *next)));
    }
    return acc;
}

}  // namespace

long long k_number_bruteforce(const RootSystem& rs, const ConstantTable& table,
                              const SignAssignment& assignment, const std::vector<Root>& delta,
                              const Root& r, const Root& s) {
    if (r == s) return 1;
    return brute_force_from(rs, table, assignment, delta, r, s);
}

Theorem5Report theorem5_check(const RootSystem& rs, const KTable& positive_side,
                              const KTable& negative_side) {
    Theorem5Report report;
    for (int ri = 1; ri <= 24; ++ri)
        for (int si = 1; si <= 24; ++si) {
            const Root& r = rs.root(ri);
            const Root& s = rs.root(si);
            ++report.checked;
            long long lhs = positive_side.values[ri - 1][si - 1];
            long long knr = negative_side.values[si - 1][ri - 1];  // K_{-s,-r}
            int ht_gap = r.height() - s.height();
            Rational rhs = Rational(ht_gap % 2 ? -1 : 1) * inner(r, r) / inner(s, s) *
                           Rational(knr);
            if (Rational(lhs) != rhs)
                report.violations.push_back(
                    {ri, si, lhs, (rhs.is_integer() ? rhs.as_integer() : -999999)});
        }
    return report;
}

}  // namespace chevalley
