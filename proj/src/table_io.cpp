#include "chevalley/table_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

namespace chevalley {

std::string quadruple(const Root& r) {
    bool neg = !r.is_positive();
    std::string out = neg ? "-" : "";
    for (int c : r.coeffs) out += std::to_string(neg ? -c : c);
    return out;
}

std::string sum_form(const Root& r) {
    static const char* names[4] = {"a", "b", "c", "d"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        int c = r.coeffs[i];
        if (c == 0) continue;
        if (c > 0 && !out.empty()) out += "+";
        if (c < 0) out += "-";
        if (std::abs(c) > 1) out += std::to_string(std::abs(c));
        out += names[i];
    }
    return out;
}

std::string euclid_form(const Root& r) {
    bool halves = false;
    for (const Rational& x : r.euclid)
        if (!x.is_integer()) halves = true;
    std::string out;
    for (int i = 0; i < 4; ++i) {
        Rational x = halves ? r.euclid[i] * Rational(2) : r.euclid[i];
        long long c = x.as_integer();
        if (c == 0) continue;
        if (c > 0 && !out.empty()) out += "+";
        if (c < 0) out += "-";
        if (std::abs(c) > 1) out += std::to_string(std::abs(c));
        out += "e" + std::to_string(i + 1);
    }
    return halves ? "(" + out + ")/2" : out;
}

Root parse_root(const RootSystem& rs, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty root spec");
    bool neg = text[0] == '-';
    std::string body = neg ? text.substr(1) : text;
    if (body.empty() || !std::all_of(body.begin(), body.end(), [](unsigned char c) {
            return std::isdigit(c);
        }))
        throw std::invalid_argument("root spec must be a signed ordinal or quadruple: " + text);
    if (body.size() == 4) {
        std::array<int, 4> coeffs;
        for (int i = 0; i < 4; ++i) coeffs[i] = (body[i] - '0') * (neg ? -1 : 1);
        auto r = rs.find(coeffs);
        if (!r) throw std::invalid_argument("not an F4 root: " + text);
        return *r;
    }
    int ord = std::stoi(body) * (neg ? -1 : 1);
    return rs.root(ord);
}

SignAssignment parse_assignment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open assignment file: " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_object()) throw std::invalid_argument("assignment file must be a JSON object");
    SignAssignment a;
    for (auto& [key, val] : j.items()) {
        if (key.size() < 2) throw std::invalid_argument("bad symbol name: " + key);
        SignFamily fam;
        switch (key[0]) {
            case 'e': fam = SignFamily::epsilon; break;
            case 'd': fam = SignFamily::delta; break;
            case 'g': fam = SignFamily::gamma; break;
            case 'a': fam = SignFamily::alpha; break;
            default: throw std::invalid_argument("bad symbol name: " + key);
        }
        int index = std::stoi(key.substr(1));
        if (fam == SignFamily::epsilon && index == 0) index = 10;
        int v = val.get<int>();
        a.set(SignSymbol{fam, index}, v);
    }
    if (!a.total())
        throw MissingSymbolError("assignment file must set all 20 symbols: " + path);
    return a;
}

SignAssignment parse_assignment_spec(const std::string& spec) {
    if (spec == "all-plus") return SignAssignment::all_plus();
    return parse_assignment_file(spec);
}

namespace {

std::string argument_text(const std::string& coeff, const std::string& sep, int i, int j) {
    std::string powers;
    powers += "t";
    if (i > 1) powers += "^" + std::to_string(i);
    powers += "u";
    if (j > 1) powers += "^" + std::to_string(j);
    if (coeff == "1") return powers;
    if (coeff == "-1") return "-" + powers;
    return coeff + sep + powers;
}

std::string line_for(const CommutatorFormula& f, const std::string& sep,
                     const std::function<std::string(const CommutatorFormula::Term&)>& coeff) {
    std::string out = "[x_{" + sum_form(f.s) + "}(u),x_{" + sum_form(f.r) + "}(t)] = ";
    if (f.terms.empty()) return out + "1";
    bool first = true;
    for (const auto& t : f.terms) {
        if (!first) out += " ";
        first = false;
        out += "x_{" + sum_form(t.root) + "}(" + argument_text(coeff(t), sep, t.i, t.j) + ")";
    }
    return out;
}

}  // namespace

std::string formula_line(const CommutatorFormula& f) {
    return line_for(f, " ", [](const CommutatorFormula::Term& t) {
        return t.argument_coeff().str();
    });
}

std::string formula_line(const CommutatorFormula& f, const SignAssignment& assignment) {
    return line_for(f, "", [&](const CommutatorFormula::Term& t) {
        return t.argument_coeff().evaluate(assignment).str();
    });
}

}  // namespace chevalley
