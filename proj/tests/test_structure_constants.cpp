#include "doctest.h"

#include <random>
#include <set>

#include "chevalley/structure_constants.hpp"
#include "chevalley/table_io.hpp"
#include "fixtures.hpp"

using namespace chevalley;
using testutil::engine;

TEST_CASE("extraspecial pairs match the printed choice") {
    const auto& e = engine();
    auto fixture = testutil::load_csv("table2.csv");
    REQUIRE(e.choice.pairs.size() == 20);
    REQUIRE(fixture.size() == 21);  // header + 20 pairs
    for (size_t i = 1; i < fixture.size(); ++i) {
        const auto& row = fixture[i];
        const auto& pair = e.choice.pairs[i - 1];
        CHECK(quadruple(e.rs.root(pair.r_ord)) == row[0]);
        CHECK(quadruple(e.rs.root(pair.s_ord)) == row[1]);
        CHECK(pair.value == SignMonomial::parse(row[2]));
    }

    // Every non-fundamental positive root is hit exactly once, first
    // components are order-minimal, and magnitudes are chain numbers.
    std::set<int> sums;
    for (const auto& p : e.choice.pairs) {
        const Root r = e.rs.root(p.r_ord);
        const Root s = e.rs.root(p.s_ord);
        CHECK(order_less(r, s));
        auto t = e.rs.root_sum(r, s);
        REQUIRE(t.has_value());
        CHECK(sums.insert(e.rs.ordinal(*t)).second);
        CHECK(p.value.coeff() == Rational(e.rs.chain_p(r, s) + 1));
        for (int r2 = 1; r2 < p.r_ord; ++r2) {
            auto diff = e.rs.find({t->coeffs[0] - e.rs.root(r2).coeffs[0],
                                   t->coeffs[1] - e.rs.root(r2).coeffs[1],
                                   t->coeffs[2] - e.rs.root(r2).coeffs[2],
                                   t->coeffs[3] - e.rs.root(r2).coeffs[3]});
            bool special = diff && diff->is_positive() &&
                           order_less(e.rs.root(r2), *diff);
            CHECK_FALSE(special);  // no smaller first component exists
        }
    }
    CHECK(sums.size() == 20);
}

TEST_CASE("solved table matches the symbolic fixtures") {
    const auto& e = engine();
    CHECK(e.table.total());
    auto fixture = testutil::load_csv("tables34.csv");
    REQUIRE(fixture.size() >= 31);
    for (size_t i = 1; i < fixture.size(); ++i) {
        int r = std::stoi(fixture[i][0]);
        int s = std::stoi(fixture[i][1]);
        INFO("entry (", r, ",", s, ") expected ", fixture[i][2]);
        CHECK(e.table.entry(r, s) == SignMonomial::parse(fixture[i][2]));
    }
}

TEST_CASE("single entries named in the derivations") {
    const auto& e = engine();
    auto at = [&](const char* r, const char* s) {
        return e.table.entry(parse_root(e.rs, r), parse_root(e.rs, s)).str();
    };
    CHECK(at("0011", "0110") == "e13d2");     // N_{c+d,b+c}
    CHECK(at("0121", "1221") == "-2e30d1256g3");
    CHECK(at("0001", "-0011") == "-e1");      // N_{d,-c-d}
    CHECK(at("1122", "1220") == "-e6780d3456g13a1");
}

TEST_CASE("magnitudes are chain numbers, independent of signs") {
    const auto& e = engine();
    for (const auto& [r, s] : e.table.pairs()) {
        Rational mag = e.table.entry(r, s).coeff();
        if (mag.num() < 0) mag = -mag;
        CHECK(mag == Rational(e.rs.chain_p(e.rs.root(r), e.rs.root(s)) + 1));
    }
}

TEST_CASE("specialization commutes with symbolic solving") {
    const auto& e = engine();
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        SignAssignment a = testutil::random_assignment(rng);
        // Re-solve with numeric seeds: pre-apply the assignment to the choice.
        ExtraspecialChoice numeric = e.choice;
        for (auto& p : numeric.pairs)
            p.value = SignMonomial(p.value.evaluate(a));
        ConstantTable resolved = solve_constants(e.rs, numeric);
        IntConstantTable direct = specialize(e.table, a);
        for (const auto& [r, s] : e.table.pairs())
            CHECK(resolved.entry(r, s).evaluate(SignAssignment::all_plus()) ==
                  Rational(direct.value(r, s)));
    }
}

TEST_CASE("all-plus specialization matches the printed integer tables") {
    const auto& e = engine();
    IntConstantTable t = specialize(e.table, SignAssignment::all_plus());
    for (const char* name : {"table5.csv", "table6.csv"}) {
        auto m = testutil::load_matrix(name);
        for (int r : m.row_labels)
            for (int s : m.col_labels) {
                const std::string& cell = m.at(r, s);
                INFO(name, " cell (", r, ",", s, ") = '", cell, "'");
                if (cell.empty())
                    CHECK_FALSE(t.is_pair(r, s));
                else {
                    CHECK(t.is_pair(r, s));
                    CHECK(t.value(r, s) == std::stoll(cell));
                }
            }
    }
}

TEST_CASE("relations hold and mutations are caught") {
    const auto& e = engine();
    IntConstantTable t = specialize(e.table, SignAssignment::all_plus());
    RelationReport clean = verify_relations(t);
    CHECK(clean.ok());
    CHECK(clean.checked_i > 0);
    CHECK(clean.checked_iv > 0);

    // Flipping one entry's sign must violate something.
    IntConstantTable mutated = t;
    mutated.set(1, 2, -t.value(1, 2));
    CHECK_FALSE(verify_relations(mutated).ok());

    // Relation (iii) on (c, b+c): p = 1 forces product -4.
    int c = 2, bc = 5;
    CHECK(t.value(c, bc) * t.value(-c, -bc) == -4);
}

TEST_CASE("relations hold under random assignments") {
    const auto& e = engine();
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        SignAssignment a = testutil::random_assignment(rng);
        CHECK(verify_relations(specialize(e.table, a)).ok());
    }
}

TEST_CASE("jacobi oracle accepts the table and rejects corruption") {
    const auto& e = engine();
    IntConstantTable t = specialize(e.table, SignAssignment::all_plus());
    CHECK(jacobi_oracle(e.rs, t));

    IntConstantTable broken = t;
    broken.set(1, 2, 0);  // zero out one bracket
    CHECK_FALSE(jacobi_oracle(e.rs, broken));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial)
        CHECK(jacobi_oracle(e.rs, specialize(e.table, testutil::random_assignment(rng)), 2));
}

TEST_CASE("partial assignments are rejected") {
    const auto& e = engine();
    SignAssignment partial;
    partial.set({SignFamily::epsilon, 1}, 1);
    CHECK_THROWS_AS(specialize(e.table, partial), MissingSymbolError);
}
