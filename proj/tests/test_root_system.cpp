#include "doctest.h"

#include "chevalley/root_system.hpp"
#include "chevalley/table_io.hpp"

using namespace chevalley;

namespace {
const RootSystem& f4() {
    static RootSystem rs = RootSystem::build_f4();
    return rs;
}
Root rt(const std::string& spec) { return parse_root(f4(), spec); }
}  // namespace

TEST_CASE("build_f4 reproduces the table data") {
    const auto& rs = f4();
    CHECK(rs.positive().size() == 24);
    CHECK(rs.all().size() == 48);

    // Row 24 is the highest root, row 1 the order-minimal one.
    CHECK(rs.positive()[23].coeffs == std::array<int, 4>{2, 3, 4, 2});
    CHECK(rs.positive()[23].height() == 11);
    CHECK(inner(rs.positive()[23], rs.positive()[23]) == Rational(2));
    CHECK(rs.positive()[0].coeffs == std::array<int, 4>{0, 0, 0, 1});
    CHECK(rs.positive()[0].euclid ==
          std::array<Rational, 4>{Rational(1, 2), Rational(-1, 2), Rational(-1, 2),
                                  Rational(-1, 2)});

    // The multiset of (height, squared length) over the positive roots.
    int expected_height[24] = {1, 1, 2, 1, 2, 3, 3, 4, 5, 1, 2, 3,
                               4, 4, 5, 6, 5, 6, 7, 7, 8, 9, 10, 11};
    int expected_norm[24] = {1, 1, 1, 2, 1, 1, 2, 1, 2, 2, 2, 1,
                             1, 2, 1, 2, 2, 1, 2, 1, 1, 2, 2, 2};
    for (int k = 1; k <= 24; ++k) {
        CHECK(rs.root(k).height() == expected_height[k - 1]);
        CHECK(inner(rs.root(k), rs.root(k)) == Rational(expected_norm[k - 1]));
    }

    CHECK(rs.root(-5).coeffs == std::array<int, 4>{0, -1, -1, 0});
    CHECK(rs.ordinal(-rs.root(5)) == -5);
}

TEST_CASE("order is the strict total order of the printed chain") {
    const auto& rs = f4();
    CHECK(order_less(rt("0010"), rt("0100")));
    CHECK(order_less(rt("0010"), rt("0011")));
    CHECK(order_less(rt("0011"), rt("0100")));
    CHECK_FALSE(order_less(rt("0100"), rt("0010")));
    for (const Root& r : rs.all()) CHECK_FALSE(order_less(r, r));

    // Trichotomy and transitivity over all ordered pairs.
    for (const Root& x : rs.all())
        for (const Root& y : rs.all()) {
            if (x == y) continue;
            CHECK(order_less(x, y) != order_less(y, x));
            for (const Root& z : rs.all())
                if (order_less(x, y) && order_less(y, z)) CHECK(order_less(x, z));
        }

    // Sorting by the order reproduces the table numbering.
    std::vector<Root> sorted = rs.positive();
    std::sort(sorted.begin(), sorted.end(), order_less);
    for (int i = 0; i < 24; ++i) CHECK(sorted[i] == rs.positive()[i]);
}

TEST_CASE("height and inner products") {
    const auto& rs = f4();
    CHECK(rt("1232").height() == 8);
    CHECK(rt("-1232").height() == -8);
    CHECK(rt("1000").height() == 1);

    CHECK(inner(rs.root(2), rs.root(2)) == Rational(1));
    CHECK(inner(rs.root(4), rs.root(4)) == Rational(2));
    for (const Root& r : rs.all())
        for (const Root& s : rs.all()) CHECK(inner(r, s) == inner(s, r));
}

TEST_CASE("root sums and chains") {
    const auto& rs = f4();
    auto cd = rs.root_sum(rt("0010"), rt("0001"));
    REQUIRE(cd.has_value());
    CHECK(rs.ordinal(*cd) == 3);
    CHECK_FALSE(rs.root_sum(rt("1000"), rt("0010")).has_value());  // a+c
    for (const Root& r : rs.all()) CHECK_FALSE(rs.root_sum(r, -r).has_value());

    CHECK(rs.chain_p(rt("0010"), rt("0100")) == 0);
    CHECK(rs.chain_p(rt("0001"), rt("0121")) == 1);
    CHECK(rs.chain_p(rt("0010"), rt("0110")) == 1);

    // Heights add along sums and chains have no gaps.
    for (const Root& r : rs.all())
        for (const Root& s : rs.all()) {
            auto t = rs.root_sum(r, s);
            if (t) CHECK(t->height() == r.height() + s.height());
            if (r == s || r == -s) continue;
            int p = rs.chain_p(r, s);
            std::array<int, 4> c = s.coeffs;
            for (int k = 1; k <= p; ++k) {
                for (int i = 0; i < 4; ++i) c[i] -= r.coeffs[i];
                CHECK(rs.contains(c));
            }
        }
}

TEST_CASE("cartan integers") {
    const auto& rs = f4();
    CHECK(cartan_integer(rt("0100"), rt("0010")) == -2);
    CHECK(cartan_integer(rt("1000"), rt("0001")) == 0);
    for (const Root& r : rs.all()) CHECK(cartan_integer(r, r) == 2);
}

TEST_CASE("root parsing and rendering") {
    const auto& rs = f4();
    CHECK(rs.ordinal(rt("21")) == 21);
    CHECK(rs.ordinal(rt("-21")) == -21);
    CHECK(rs.ordinal(rt("1232")) == 21);
    CHECK(quadruple(rs.root(21)) == "1232");
    CHECK(quadruple(rs.root(-21)) == "-1232");
    CHECK(sum_form(rs.root(21)) == "a+2b+3c+2d");
    CHECK(sum_form(rs.root(-7)) == "-b-2c");
    CHECK(euclid_form(rs.root(21)) == "e1");
    CHECK(euclid_form(rs.root(4)) == "e3-e4");
    CHECK(euclid_form(rs.root(1)) == "(e1-e2-e3-e4)/2");
    CHECK(euclid_form(rs.root(-1)) == "(-e1+e2+e3+e4)/2");
    CHECK_THROWS_AS(parse_root(rs, "1010"), std::invalid_argument);
    CHECK_THROWS_AS(parse_root(rs, "0"), std::out_of_range);
    CHECK_THROWS_AS(parse_root(rs, "25"), std::out_of_range);
}
