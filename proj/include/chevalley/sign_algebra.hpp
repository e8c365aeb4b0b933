#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chevalley/rational.hpp"

namespace chevalley {

// The 20 sign symbols: epsilon 1..9 plus the tenth epsilon (written "e0"),
// delta 1..6, gamma 1..3, alpha 1. Each squares to one.
enum class SignFamily { epsilon, delta, gamma, alpha };

struct SignSymbol {
    SignFamily family;
    int index;  // epsilon 1..10 (10 is the "0" symbol), delta 1..6, gamma 1..3, alpha 1

    // Compact id 0..19 in rendering order: e1..e9,e0, d1..d6, g1..g3, a1.
    int id() const;
    static SignSymbol from_id(int id);
    static constexpr int count = 20;

    std::string str() const;  // "e4", "e0", "d2", "g1", "a1"

    friend bool operator==(const SignSymbol& x, const SignSymbol& y) {
        return x.family == y.family && x.index == y.index;
    }
};

struct MultiTermError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingSymbolError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Total assignment of +1/-1 to sign symbols; 0 marks "unset".
class SignAssignment {
public:
    SignAssignment() { values_.fill(0); }
    static SignAssignment all_plus() {
        SignAssignment a;
        a.values_.fill(1);
        return a;
    }
    void set(const SignSymbol& s, int v) {
        if (v != 1 && v != -1) throw std::invalid_argument("sign value must be +1 or -1");
        values_[s.id()] = static_cast<int8_t>(v);
    }
    int get(int id) const {
        if (values_[id] == 0)
            throw MissingSymbolError("no value assigned to " + SignSymbol::from_id(id).str());
        return values_[id];
    }
    bool total() const {
        for (int8_t v : values_)
            if (v == 0) return false;
        return true;
    }

private:
    std::array<int8_t, SignSymbol::count> values_;
};

// An exact rational coefficient times a square-free product of sign symbols,
// the symbol set held as a 20-bit mask. Multiplication is coefficient product
// plus symmetric difference of the masks.
class SignMonomial {
public:
    SignMonomial() : coeff_(0), symbols_(0) {}  // canonical zero
    explicit SignMonomial(Rational c, uint32_t symbol_mask = 0)
        : coeff_(c), symbols_(c.is_zero() ? 0 : symbol_mask) {}
    static SignMonomial identity() { return SignMonomial(Rational(1)); }
    static SignMonomial symbol(const SignSymbol& s) {
        return SignMonomial(Rational(1), 1u << s.id());
    }

    const Rational& coeff() const { return coeff_; }
    uint32_t symbols() const { return symbols_; }
    bool is_zero() const { return coeff_.is_zero(); }

    std::vector<SignSymbol> symbol_list() const;

    SignMonomial operator-() const { return SignMonomial(-coeff_, symbols_); }
    friend SignMonomial operator*(const SignMonomial& x, const SignMonomial& y) {
        Rational c = x.coeff_ * y.coeff_;
        return SignMonomial(c, x.symbols_ ^ y.symbols_);
    }
    SignMonomial scaled(const Rational& f) const { return SignMonomial(coeff_ * f, symbols_); }

    // Multiplicative inverse; symbols are their own inverses.
    SignMonomial inverse() const {
        if (is_zero()) throw std::domain_error("SignMonomial: zero has no inverse");
        return SignMonomial(Rational(1) / coeff_, symbols_);
    }

    Rational evaluate(const SignAssignment& a) const;

    // Grammar: [-]<int>[/<int>][e<digits>][d<digits>][g<digits>][a<digits>],
    // a coefficient of +-1 printed as bare sign when symbols follow.
    std::string str() const;
    static SignMonomial parse(const std::string& text);

    friend bool operator==(const SignMonomial& x, const SignMonomial& y) {
        return x.coeff_ == y.coeff_ && x.symbols_ == y.symbols_;
    }
    friend bool operator!=(const SignMonomial& x, const SignMonomial& y) { return !(x == y); }

private:
    Rational coeff_;
    uint32_t symbols_;
};

// Finite sum of monomials with distinct symbol sets, kept canonical
// (no zero terms). Only an intermediate: solved constants must collapse
// back to single monomials.
class SignPolynomial {
public:
    SignPolynomial() = default;
    SignPolynomial(const SignMonomial& m) { add_term(m); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    SignPolynomial& operator+=(const SignPolynomial& o) {
        for (const auto& [mask, c] : o.terms_) add_term(SignMonomial(c, mask));
        return *this;
    }
    friend SignPolynomial operator+(SignPolynomial x, const SignPolynomial& y) { return x += y; }
    SignPolynomial operator-() const {
        SignPolynomial r;
        for (const auto& [mask, c] : terms_) r.terms_[mask] = -c;
        return r;
    }
    friend SignPolynomial operator*(const SignPolynomial& x, const SignMonomial& m) {
        SignPolynomial r;
        if (m.is_zero()) return r;
        for (const auto& [mask, c] : x.terms_)
            r.add_term(SignMonomial(c * m.coeff(), mask ^ m.symbols()));
        return r;
    }
    SignPolynomial scaled(const Rational& f) const {
        SignPolynomial r;
        if (f.is_zero()) return r;
        for (const auto& [mask, c] : terms_) r.terms_[mask] = c * f;
        return r;
    }

    // The unique term when there is at most one; MultiTermError otherwise.
    SignMonomial as_monomial() const {
        if (terms_.empty()) return SignMonomial();
        if (terms_.size() > 1)
            throw MultiTermError("as_monomial: polynomial has " +
                                 std::to_string(terms_.size()) + " terms");
        auto& [mask, c] = *terms_.begin();
        return SignMonomial(c, mask);
    }

    Rational evaluate(const SignAssignment& a) const {
        Rational acc;
        for (const auto& [mask, c] : terms_) acc += SignMonomial(c, mask).evaluate(a);
        return acc;
    }

    const std::map<uint32_t, Rational>& terms() const { return terms_; }

    friend bool operator==(const SignPolynomial& x, const SignPolynomial& y) {
        return x.terms_ == y.terms_;
    }

private:
    void add_term(const SignMonomial& m) {
        if (m.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m.symbols(), m.coeff());
        if (!inserted) {
            it->second += m.coeff();
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<uint32_t, Rational> terms_;
};

}  // namespace chevalley
