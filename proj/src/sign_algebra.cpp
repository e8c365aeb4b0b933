#include "chevalley/sign_algebra.hpp"

#include <cctype>

namespace chevalley {

namespace {
// Family layout inside the 20-bit mask.
constexpr int kEpsilonBase = 0;   // ids 0..9  (index 1..10; index 10 prints "0")
constexpr int kDeltaBase = 10;    // ids 10..15
constexpr int kGammaBase = 16;    // ids 16..18
constexpr int kAlphaBase = 19;    // id 19
}  // namespace

int SignSymbol::id() const {
    switch (family) {
        case SignFamily::epsilon:
            if (index < 1 || index > 10) break;
            return kEpsilonBase + index - 1;
        case SignFamily::delta:
            if (index < 1 || index > 6) break;
            return kDeltaBase + index - 1;
        case SignFamily::gamma:
            if (index < 1 || index > 3) break;
            return kGammaBase + index - 1;
        case SignFamily::alpha:
            if (index != 1) break;
            return kAlphaBase;
    }
    throw std::invalid_argument("SignSymbol: index out of range for family");
}

SignSymbol SignSymbol::from_id(int id) {
    if (id >= kEpsilonBase && id < kDeltaBase) return {SignFamily::epsilon, id - kEpsilonBase + 1};
    if (id >= kDeltaBase && id < kGammaBase) return {SignFamily::delta, id - kDeltaBase + 1};
    if (id >= kGammaBase && id < kAlphaBase) return {SignFamily::gamma, id - kGammaBase + 1};
    if (id == kAlphaBase) return {SignFamily::alpha, 1};
    throw std::out_of_range("SignSymbol: id out of range 0..19");
}

std::string SignSymbol::str() const {
    char fam;
    switch (family) {
        case SignFamily::epsilon: fam = 'e'; break;
        case SignFamily::delta: fam = 'd'; break;
        case SignFamily::gamma: fam = 'g'; break;
        case SignFamily::alpha: fam = 'a'; break;
        default: throw std::logic_error("SignSymbol: bad family");
    }
    // The tenth epsilon is printed with subscript 0, as in the tables.
    int shown = (family == SignFamily::epsilon && index == 10) ? 0 : index;
    return std::string(1, fam) + std::to_string(shown);
}

std::vector<SignSymbol> SignMonomial::symbol_list() const {
    std::vector<SignSymbol> out;
    for (int id = 0; id < SignSymbol::count; ++id)
        if (symbols_ & (1u << id)) out.push_back(SignSymbol::from_id(id));
    return out;
}

Rational SignMonomial::evaluate(const SignAssignment& a) const {
    if (is_zero()) return Rational(0);
    int sign = 1;
    for (int id = 0; id < SignSymbol::count; ++id)
        if (symbols_ & (1u << id)) sign *= a.get(id);
    return sign > 0 ? coeff_ : -coeff_;
}

std::string SignMonomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    Rational c = coeff_;
    if (c.num() < 0) {
        out += "-";
        c = -c;
    }
    bool unit = (c == Rational(1)) && symbols_ != 0;
    if (!unit) out += c.str();

    auto block = [&](char fam, int base, int len, bool zero_last) {
        std::string digits;
        for (int k = 0; k < len; ++k)
            if (symbols_ & (1u << (base + k))) {
                int shown = (zero_last && k == len - 1) ? 0 : k + 1;
                digits += std::to_string(shown);
            }
        if (!digits.empty()) out += std::string(1, fam) + digits;
    };
    block('e', kEpsilonBase, 10, true);
    block('d', kDeltaBase, 6, false);
    block('g', kGammaBase, 3, false);
    block('a', kAlphaBase, 1, false);
    return out;
}

SignMonomial SignMonomial::parse(const std::string& text) {
    size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("SignMonomial::parse(\"" + text + "\"): " + why);
    };
    if (text.empty()) fail("empty input");

    bool neg = false;
    if (text[i] == '-') { neg = true; ++i; }
    else if (text[i] == '+') { ++i; }

    long long num = 1, den = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            num = num * 10 + (text[i++] - '0');
        if (i < text.size() && text[i] == '/') {
            ++i;
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                fail("expected denominator digits after '/'");
            den = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                den = den * 10 + (text[i++] - '0');
        }
    }

    uint32_t mask = 0;
    while (i < text.size()) {
        char fam = text[i++];
        int base, len;
        bool zero_last = false;
        switch (fam) {
            case 'e': base = kEpsilonBase; len = 10; zero_last = true; break;
            case 'd': base = kDeltaBase; len = 6; break;
            case 'g': base = kGammaBase; len = 3; break;
            case 'a': base = kAlphaBase; len = 1; break;
            default: fail(std::string("unknown family letter '") + fam + "'"); return {};
        }
        bool any = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            int digit = text[i++] - '0';
            int k = (zero_last && digit == 0) ? len - 1 : digit - 1;
            if (digit != 0 && (digit < 1 || digit > len))
                fail("subscript out of range for family");
            if (!zero_last && digit == 0) fail("subscript 0 only allowed for 'e'");
            uint32_t bit = 1u << (base + k);
            if (mask & bit) fail("repeated symbol");
            mask |= bit;
            any = true;
        }
        if (!any) fail("family letter without subscripts");
    }

    Rational c(neg ? -num : num, den);
    if (c.is_zero() && mask != 0) fail("zero coefficient with symbols");
    return SignMonomial(c, mask);
}

}  // namespace chevalley
