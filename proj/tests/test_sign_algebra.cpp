#include "doctest.h"

#include <random>

#include "chevalley/sign_algebra.hpp"

using namespace chevalley;

namespace {
SignMonomial mono(const std::string& text) { return SignMonomial::parse(text); }

SignAssignment random_assignment(std::mt19937_64& rng) {
    SignAssignment a;
    for (int id = 0; id < SignSymbol::count; ++id)
        a.set(SignSymbol::from_id(id), (rng() & 1) ? 1 : -1);
    return a;
}

SignMonomial random_monomial(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 9) - 4;
    if (num == 0) num = 1;
    long long den = 1 + rng() % 3;
    return SignMonomial(Rational(num, den), static_cast<uint32_t>(rng() & 0xfffff));
}
}  // namespace

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-4, 6) == Rational(2, -3));
    CHECK((Rational(1, 3) * Rational(3)).as_integer() == 1);
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("monomial product combines symbol sets mod 2") {
    // The cancellation pattern behind the two-factor products in the tables.
    CHECK(mono("e23d2") * mono("-e2680d15") == mono("-e3680d125"));
    CHECK(mono("e23d2") * SignMonomial::identity() == mono("e23d2"));
    CHECK(mono("2e4") * mono("2e4") == mono("4"));
    CHECK(mono("e13d2").inverse() * mono("e13d2") == SignMonomial::identity());
}

TEST_CASE("monomial grammar round-trips") {
    for (const char* text : {"0", "1", "-1", "2", "-2", "1/2", "-3/2", "e1", "-e13d2",
                             "2e4", "-2e30d1256g3", "e6780d3456g13a1", "e9d1g123a1"}) {
        SignMonomial m = mono(text);
        CHECK(m.str() == text);
        CHECK(SignMonomial::parse(m.str()) == m);
    }
    // The tenth epsilon renders as a trailing 0 in the e-block.
    CHECK(SignMonomial::symbol({SignFamily::epsilon, 10}).str() == "e0");
    CHECK(mono("e90") == SignMonomial::symbol({SignFamily::epsilon, 9}) *
                             SignMonomial::symbol({SignFamily::epsilon, 10}));
    CHECK_THROWS_AS(mono("x3"), std::invalid_argument);
    CHECK_THROWS_AS(mono("e"), std::invalid_argument);
    CHECK_THROWS_AS(mono("d0"), std::invalid_argument);
    CHECK_THROWS_AS(mono("e11"), std::invalid_argument);
}

TEST_CASE("polynomial addition cancels and merges") {
    SignPolynomial x(mono("e123d2"));
    CHECK((x + x).as_monomial() == mono("2e123d2"));
    CHECK((x + (-x)).is_zero());
    CHECK((x + (-x)).as_monomial() == SignMonomial());

    SignPolynomial two = SignPolynomial(mono("e1")) + SignPolynomial(mono("d1"));
    CHECK(two.term_count() == 2);
    CHECK_THROWS_AS(two.as_monomial(), MultiTermError);
}

TEST_CASE("evaluation substitutes signs") {
    SignAssignment plus = SignAssignment::all_plus();
    CHECK(mono("-e34").evaluate(plus) == Rational(-1));
    SignAssignment a = plus;
    a.set({SignFamily::epsilon, 4}, -1);
    CHECK(mono("2e4").evaluate(a) == Rational(-2));
    CHECK(SignPolynomial().evaluate(a) == Rational(0));

    SignAssignment partial;
    partial.set({SignFamily::epsilon, 1}, 1);
    CHECK(mono("e1").evaluate(partial) == Rational(1));
    CHECK_THROWS_AS(mono("e2").evaluate(partial), MissingSymbolError);
}

TEST_CASE("ring structure respected under random evaluation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        SignMonomial x = random_monomial(rng);
        SignMonomial y = random_monomial(rng);
        SignAssignment a = random_assignment(rng);
        CHECK((x * y).evaluate(a) == x.evaluate(a) * y.evaluate(a));
        SignPolynomial p = SignPolynomial(x) + SignPolynomial(y);
        CHECK(p.evaluate(a) == x.evaluate(a) + y.evaluate(a));
        CHECK((p * y).evaluate(a) == p.evaluate(a) * y.evaluate(a));
        // Commutativity and associativity of the monomial product.
        SignMonomial z = random_monomial(rng);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
    }
}
