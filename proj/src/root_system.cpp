#include "chevalley/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace chevalley {

int cartan_integer(const Root& r, const Root& s) {
    Rational v = Rational(2) * inner(r, s) / inner(s, s);
    if (!v.is_integer())
        throw std::logic_error("cartan_integer: non-integral value " + v.str() +
                               " (embedding corrupted)");
    return static_cast<int>(v.as_integer());
}

const Root& RootSystem::fundamental(char letter) const {
    switch (letter) {
        case 'a': return fund_a();
        case 'b': return fund_b();
        case 'c': return fund_c();
        case 'd': return fund_d();
    }
    throw std::invalid_argument(std::string("no fundamental root named '") + letter + "'");
}

int RootSystem::ordinal(const Root& r) const {
    auto it = by_coeffs_.find(r.coeffs);
    if (it == by_coeffs_.end()) throw std::invalid_argument("ordinal: not a root of F4");
    return it->second;
}

const Root& RootSystem::root(int ord) const {
    if (ord >= 1 && ord <= 24) return all_[ord - 1];
    if (ord <= -1 && ord >= -24) return all_[23 - ord];
    throw std::out_of_range("root: ordinal out of range -24..-1,1..24");
}

std::optional<Root> RootSystem::find(const std::array<int, 4>& coeffs) const {
    auto it = by_coeffs_.find(coeffs);
    if (it == by_coeffs_.end()) return std::nullopt;
    return root(it->second);
}

std::optional<Root> RootSystem::root_sum(const Root& r, const Root& s) const {
    std::array<int, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = r.coeffs[i] + s.coeffs[i];
    return find(c);
}

int RootSystem::chain_p(const Root& r, const Root& s) const {
    int p = 0;
    std::array<int, 4> c = s.coeffs;
    for (;;) {
        for (int i = 0; i < 4; ++i) c[i] -= r.coeffs[i];
        if (!contains(c)) break;
        ++p;
    }
    return p;
}

namespace {

Root make_root(const std::array<int, 4>& coeffs,
               const std::array<Root, 4>& fundamentals) {
    Root r;
    r.coeffs = coeffs;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r.euclid[j] += Rational(coeffs[i]) * fundamentals[i].euclid[j];
    return r;
}

}  // namespace

RootSystem RootSystem::build_f4() {
    // a = e2-e1, b = e3-e2, c = e4, d = (e1-e2-e3-e4)/2.
    std::array<Root, 4> fund;
    fund[0].coeffs = {1, 0, 0, 0};
    fund[0].euclid = {Rational(-1), Rational(1), Rational(0), Rational(0)};
    fund[1].coeffs = {0, 1, 0, 0};
    fund[1].euclid = {Rational(0), Rational(-1), Rational(1), Rational(0)};
    fund[2].coeffs = {0, 0, 1, 0};
    fund[2].euclid = {Rational(0), Rational(0), Rational(0), Rational(1)};
    fund[3].coeffs = {0, 0, 0, 1};
    fund[3].euclid = {Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)};

    RootSystem rs;
    // A lattice vector is a root exactly when its squared length is 1 or 2;
    // scan the coefficient box covering the highest root 2a+3b+4c+2d.
    for (int al = 0; al <= 2; ++al)
        for (int be = 0; be <= 3; ++be)
            for (int ga = 0; ga <= 4; ++ga)
                for (int de = 0; de <= 2; ++de) {
                    if (al + be + ga + de == 0) continue;
                    Root r = make_root({al, be, ga, de}, fund);
                    Rational n = inner(r, r);
                    if (n == Rational(1) || n == Rational(2)) rs.positive_.push_back(r);
                }
    std::sort(rs.positive_.begin(), rs.positive_.end(), order_less);

    rs.all_ = rs.positive_;
    for (const Root& r : rs.positive_) rs.all_.push_back(-r);
    for (int i = 0; i < 24; ++i) {
        rs.by_coeffs_[rs.all_[i].coeffs] = i + 1;
        rs.by_coeffs_[rs.all_[24 + i].coeffs] = -(i + 1);
    }

    rs.validate();
    return rs;
}

void RootSystem::validate() const {
    if (positive_.size() != 24 || all_.size() != 48)
        throw std::logic_error("build_f4: wrong root count");
    // Order is strict and the expected chain endpoints hold.
    if (positive_.front().coeffs != std::array<int, 4>{0, 0, 0, 1} ||
        positive_.back().coeffs != std::array<int, 4>{2, 3, 4, 2})
        throw std::logic_error("build_f4: ordering does not match the expected chain");
    for (int i = 0; i + 1 < 24; ++i)
        if (!order_less(positive_[i], positive_[i + 1]))
            throw std::logic_error("build_f4: positive roots not strictly ascending");
    // Heights of r+s must add; spot-validate closure data.
    for (const Root& r : all_)
        for (const Root& s : all_) {
            auto t = root_sum(r, s);
            if (t && t->height() != r.height() + s.height())
                throw std::logic_error("build_f4: height additivity violated");
        }
    for (const Root& r : all_) {
        Rational n = inner(r, r);
        if (n != Rational(1) && n != Rational(2))
            throw std::logic_error("build_f4: root of unexpected length");
        if (by_coeffs_.count((-r).coeffs) == 0)
            throw std::logic_error("build_f4: set not symmetric under negation");
    }
}

}  // namespace chevalley
