#include "doctest.h"

#include <random>

#include "chevalley/collector.hpp"
#include "chevalley/table_io.hpp"
#include "fixtures.hpp"

using namespace chevalley;
using testutil::engine;

namespace {

struct CollectorFixture {
    IntConstantTable table;
    Collector collector;
    CollectorFixture()
        : table(specialize(engine().table, SignAssignment::all_plus())),
          collector(engine().rs, table) {}
};

const CollectorFixture& fx() {
    static CollectorFixture f;
    return f;
}

GroupWord single(int root_ord, const TPolynomial& arg) {
    return fx().collector.word({{root_ord, arg}});
}

GroupWord random_word(std::mt19937_64& rng, int nvars, int max_factors) {
    std::vector<GroupWord::Factor> factors;
    int n = 1 + static_cast<int>(rng() % max_factors);
    for (int k = 0; k < n; ++k) {
        int root = 1 + static_cast<int>(rng() % 24);
        TPolynomial arg = TPolynomial::constant(nvars, static_cast<long long>(rng() % 5) - 2);
        if (rng() % 2) arg += TPolynomial::variable(nvars, static_cast<int>(rng() % nvars));
        factors.push_back({root, arg});
    }
    return fx().collector.word(std::move(factors));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    TPolynomial t1 = TPolynomial::variable(2, 0);
    TPolynomial t2 = TPolynomial::variable(2, 1);
    TPolynomial p = t1 * t1 + t2.scaled(3) + TPolynomial::constant(2, -1);
    CHECK(p.coefficient({2, 0}) == 1);
    CHECK(p.coefficient({0, 1}) == 3);
    CHECK(p.coefficient({0, 0}) == -1);
    CHECK(p.linear_coefficient(1) == 3);
    CHECK((p - p).is_zero());
    CHECK(p.str() == "-1 + t1^2 + 3*t2");
    CHECK((t1 * t2).str([](int v) { return v == 0 ? "t" : "u"; }) == "t*u");
}

TEST_CASE("one-parameter subgroup merging and zero elision") {
    TPolynomial u = TPolynomial::variable(2, 0);
    TPolynomial v = TPolynomial::variable(2, 1);
    GroupWord x = single(5, u);
    GroupWord y = single(5, v);
    GroupWord xy = fx().collector.multiply(x, y);
    REQUIRE(xy.factors.size() == 1);
    CHECK(xy.factors[0].arg == u + v);

    GroupWord z = single(5, TPolynomial::constant(2, 0));
    CHECK(z.is_identity());
    CHECK(fx().collector.multiply(x, fx().collector.inverse(x)).is_identity());
}

TEST_CASE("collection of the fundamental pair a, b") {
    const auto& e = engine();
    TPolynomial t = TPolynomial::variable(2, 0);
    TPolynomial u = TPolynomial::variable(2, 1);
    int a = e.rs.ordinal(e.rs.fund_a());
    int b = e.rs.ordinal(e.rs.fund_b());
    int ab = e.rs.ordinal(*e.rs.root_sum(e.rs.fund_a(), e.rs.fund_b()));

    // x_b(u) x_a(t) is already in normal form: b precedes a in the order.
    GroupWord sorted = fx().collector.multiply(single(b, u), single(a, t));
    REQUIRE(sorted.factors.size() == 2);
    CHECK(sorted.factors[0].root_ord == b);
    CHECK(sorted.factors[1].root_ord == a);

    // Reversing the product pays a commutator: N_{a,b} = -1 under all-plus.
    GroupWord swapped = fx().collector.multiply(single(a, t), single(b, u));
    REQUIRE(swapped.factors.size() == 3);
    CHECK(swapped.factors[0].root_ord == b);
    CHECK(swapped.factors[1].root_ord == a);
    CHECK(swapped.factors[2].root_ord == ab);
    CHECK(swapped.factors[2].arg == -(t * u));

    // Both orderings denote the same group element.
    CHECK(swapped.factors == fx().collector.multiply(sorted, single(ab, -(t * u))).factors);
}

TEST_CASE("commutator basics") {
    const auto& e = engine();
    TPolynomial t = TPolynomial::variable(2, 0);
    TPolynomial u = TPolynomial::variable(2, 1);

    CHECK(fx().collector.commutator(single(5, t), GroupWord{}).is_identity());

    // The highest root is central.
    GroupWord top = single(24, t);
    for (int q : {1, 2, 4, 10, 13, 23})
        CHECK(fx().collector.commutator(top, single(q, u)).is_identity());

    // [x_d(u), x_c(t)] = x_{c+d}(N_{d,c} t u) with N_{d,c} = 1 under all-plus.
    GroupWord dc = fx().collector.commutator(single(1, u), single(2, t));
    REQUIRE(dc.factors.size() == 1);
    CHECK(dc.factors[0].root_ord == 3);
    CHECK(dc.factors[0].arg == t * u);
}

TEST_CASE("group axioms on randomized words") {
    std::mt19937_64 rng(71);
    const auto& c = fx().collector;
    for (int trial = 0; trial < 500; ++trial) {
        GroupWord x = random_word(rng, 3, 3);
        GroupWord y = random_word(rng, 3, 3);
        GroupWord z = random_word(rng, 3, 2);
        GroupWord left = c.multiply(c.multiply(x, y), z);
        GroupWord right = c.multiply(x, c.multiply(y, z));
        CHECK(left.factors == right.factors);
        CHECK(c.multiply(x, c.inverse(x)).is_identity());
        CHECK(c.multiply(c.inverse(y), y).is_identity());
    }
}

TEST_CASE("normal form does not depend on collection direction") {
    // Multiply the factors of a scrambled word one at a time from the left
    // and from the right; the normal forms must agree.
    std::mt19937_64 rng(73);
    const auto& c = fx().collector;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<GroupWord::Factor> raw;
        int n = 2 + static_cast<int>(rng() % 4);
        for (int k = 0; k < n; ++k)
            raw.push_back({1 + static_cast<int>(rng() % 24),
                           TPolynomial::constant(2, static_cast<long long>(rng() % 7) - 3)});
        GroupWord left_to_right;
        for (const auto& f : raw) left_to_right = c.multiply(left_to_right, c.word({f}));
        GroupWord right_to_left;
        for (auto it = raw.rbegin(); it != raw.rend(); ++it)
            right_to_left = c.multiply(c.word({*it}), right_to_left);
        CHECK(left_to_right.factors == right_to_left.factors);
    }
}

TEST_CASE("theorem 6 for the first heights") {
    const auto& e = engine();
    auto delta = parse_delta(e.rs, "a,b,c,d");
    Theorem6Report rep = theorem6_check(e.rs, fx().table, delta, 1, 1);
    CHECK(rep.ok());
    // Coefficient of x_{c+d}: t1 - t2.
    bool saw_cd = false;
    for (const auto& entry : rep.entries)
        if (entry.root_ord == 3) {
            saw_cd = true;
            CHECK(entry.actual == std::vector<long long>{1, -1, 0, 0});
        }
    CHECK(saw_cd);
}

TEST_CASE("theorem 6 at the top height pins the printed row") {
    const auto& e = engine();
    Theorem6Report rep = theorem6_check(e.rs, fx().table, parse_delta(e.rs, "a,b,c,d"), 1, 10);
    CHECK(rep.ok());
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].root_ord == 24);
    CHECK(rep.entries[0].actual == std::vector<long long>{-24, 150, -168, 42});

    Theorem6Report bcd = theorem6_check(e.rs, fx().table, parse_delta(e.rs, "b,c,d"), 1, 10);
    CHECK(bcd.ok());
    REQUIRE(bcd.entries.size() == 1);
    CHECK(bcd.entries[0].actual == std::vector<long long>{0, 0, 0, 0});
}

TEST_CASE("theorem 6 across all depths, deltas and random signs") {
    const auto& e = engine();
    for (const char* dl : {"a,b,c,d", "b,c,d"}) {
        auto delta = parse_delta(e.rs, dl);
        for (int w = 1; w <= 10; ++w) {
            Theorem6Report rep = theorem6_check(e.rs, fx().table, delta, 1, w);
            INFO("delta=", dl, " w=", w);
            CHECK(rep.ok());
            CHECK(rep.tail_heights_ok);
        }
    }
    CHECK(theorem6_check(e.rs, fx().table, parse_delta(e.rs, "a,b,c,d"), 1, 11).trivially_empty);

    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 5; ++trial) {
        IntConstantTable t = specialize(engine().table, testutil::random_assignment(rng));
        for (const char* dl : {"a,b,c,d", "b,c,d"})
            for (int w : {1, 4, 10})
                CHECK(theorem6_check(engine().rs, t, parse_delta(engine().rs, dl), 1, w).ok());
    }
}

TEST_CASE("word rendering") {
    TPolynomial t = TPolynomial::variable(2, 0);
    GroupWord wrd = fx().collector.multiply(single(3, t), single(5, t.scaled(-2)));
    auto name = [](int v) { return v == 0 ? std::string("t") : std::string("u"); };
    CHECK(fx().collector.render(wrd, name) == "x[3](t) x[5](-2*t)");
    CHECK(fx().collector.render(GroupWord{}, name) == "1");
}
