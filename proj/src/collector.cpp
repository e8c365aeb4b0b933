#include "chevalley/collector.hpp"

#include <algorithm>

namespace chevalley {

TPolynomial::TPolynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > 8)
        throw std::invalid_argument("TPolynomial: supports 1..8 variables");
}

TPolynomial TPolynomial::constant(int nvars, long long c) {
    TPolynomial p(nvars);
    if (c != 0) p.terms_[0] = c;
    return p;
}

TPolynomial TPolynomial::variable(int nvars, int index) {
    TPolynomial p(nvars);
    if (index < 0 || index >= nvars) throw std::out_of_range("TPolynomial: variable index");
    p.terms_[uint64_t(1) << (8 * index)] = 1;
    return p;
}

void TPolynomial::add_term(uint64_t key, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second = Rational::checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

TPolynomial TPolynomial::operator-() const {
    TPolynomial r(nvars_);
    for (const auto& [k, c] : terms_) r.terms_[k] = Rational::checked_neg(c);
    return r;
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("TPolynomial: variable sets differ");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TPolynomial operator*(const TPolynomial& x, const TPolynomial& y) {
    if (x.nvars_ != y.nvars_) throw std::invalid_argument("TPolynomial: variable sets differ");
    TPolynomial r(x.nvars_);
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_) {
            // Exponents add per variable; guard each byte lane.
            uint64_t key = 0;
            for (int v = 0; v < x.nvars_; ++v) {
                uint64_t e = ((kx >> (8 * v)) & 0xff) + ((ky >> (8 * v)) & 0xff);
                if (e > 0xff) throw std::overflow_error("TPolynomial: exponent overflow");
                key |= e << (8 * v);
            }
            r.add_term(key, Rational::checked_mul(cx, cy));
        }
    return r;
}

TPolynomial TPolynomial::scaled(long long f) const {
    TPolynomial r(nvars_);
    if (f == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_[k] = Rational::checked_mul(c, f);
    return r;
}

long long TPolynomial::coefficient(const std::vector<int>& exponents) const {
    uint64_t key = 0;
    for (size_t v = 0; v < exponents.size(); ++v) key |= uint64_t(exponents[v]) << (8 * v);
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
}

long long TPolynomial::linear_coefficient(int index) const {
    auto it = terms_.find(uint64_t(1) << (8 * index));
    return it == terms_.end() ? 0 : it->second;
}

std::string TPolynomial::str(const std::function<std::string(int)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : terms_) {
        long long mag = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string vars;
        for (int v = 0; v < nvars_; ++v) {
            int e = int((key >> (8 * v)) & 0xff);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += name(v);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += vars;
        else
            out += std::to_string(mag) + "*" + vars;
    }
    return out;
}

std::string TPolynomial::str() const {
    return str([](int v) { return "t" + std::to_string(v + 1); });
}

Collector::Collector(const RootSystem& rs, const IntConstantTable& table)
    : rs_(rs), table_(table), rewrites_(24 * 24) {
    // Tail of the rewrite x_big(f) x_small(g) = x_small(g) x_big(f) * tail:
    // tail factor for (i,j) is x_{i*small+j*big}(C_{ij,small,big} (-g)^i f^j).
    for (int big = 1; big <= 24; ++big)
        for (int small = 1; small <= 24; ++small) {
            if (big == small) continue;
            const Root& rb = rs.root(big);
            const Root& rsm = rs.root(small);
            if (!rs.root_sum(rb, rsm)) continue;
            auto& list = rewrites_[(big - 1) * 24 + (small - 1)];
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) {
                    std::array<int, 4> c;
                    for (int t = 0; t < 4; ++t)
                        c[t] = i * rsm.coeffs[t] + j * rb.coeffs[t];
                    auto root = rs.find(c);
                    if (!root) continue;
                    // C_{i1} = M_{small,big,i}, C_{1j} = (-1)^j M_{big,small,j};
                    // the remaining cases never occur for F4 root chains.
                    long long coeff;
                    if (j == 1) {
                        coeff = 1;
                        for (int k = 0; k < i; ++k) {
                            std::array<int, 4> base;
                            for (int t = 0; t < 4; ++t)
                                base[t] = k * rsm.coeffs[t] + rb.coeffs[t];
                            coeff = Rational::checked_mul(
                                coeff, table_.value(small, rs.ordinal(*rs.find(base))));
                        }
                        for (int k = 2; k <= i; ++k) coeff /= k;
                    } else if (i == 1) {
                        coeff = 1;
                        for (int k = 0; k < j; ++k) {
                            std::array<int, 4> base;
                            for (int t = 0; t < 4; ++t)
                                base[t] = k * rb.coeffs[t] + rsm.coeffs[t];
                            coeff = Rational::checked_mul(
                                coeff, table_.value(big, rs.ordinal(*rs.find(base))));
                        }
                        for (int k = 2; k <= j; ++k) coeff /= k;
                        if (j % 2) coeff = -coeff;
                    } else {
                        throw std::logic_error("Collector: unexpected exponent pair for F4");
                    }
                    list.push_back({i, j, rs.ordinal(*root), coeff});
                }
            std::sort(list.begin(), list.end(), [](const auto& x, const auto& y) {
                if (x.i + x.j != y.i + y.j) return x.i + x.j < y.i + y.j;
                return x.i < y.i;
            });
        }
}

const std::vector<Collector::RewriteTerm>& Collector::rewrite(int big_ord,
                                                              int small_ord) const {
    return rewrites_[(big_ord - 1) * 24 + (small_ord - 1)];
}

GroupWord Collector::word(std::vector<GroupWord::Factor> factors) const {
    normalize(factors);
    return GroupWord{std::move(factors)};
}

void Collector::normalize(std::vector<GroupWord::Factor>& w) const {
    for (auto& f : w)
        if (f.root_ord < 1 || f.root_ord > 24)
            throw std::invalid_argument("GroupWord factors must carry positive roots");

    size_t pos = 0;
    size_t steps = 0;
    while (pos < w.size()) {
        if (w[pos].arg.is_zero()) {
            w.erase(w.begin() + pos);
            if (pos > 0) --pos;
            continue;
        }
        if (pos + 1 >= w.size()) break;
        if (++steps > 100000000) throw std::logic_error("normalize: rewrite did not terminate");

        GroupWord::Factor& f = w[pos];
        GroupWord::Factor& g = w[pos + 1];
        if (g.arg.is_zero()) {
            w.erase(w.begin() + pos + 1);
            continue;
        }
        if (f.root_ord == g.root_ord) {  // one-parameter subgroup
            f.arg += g.arg;
            w.erase(w.begin() + pos + 1);
            if (pos > 0) --pos;
            continue;
        }
        const Root& rf = rs_.root(f.root_ord);
        const Root& rg = rs_.root(g.root_ord);
        if (order_less(rf, rg)) {  // already ascending
            ++pos;
            continue;
        }
        // x_f(p) x_g(q) -> x_g(q) x_f(p) * tail.
        TPolynomial p = f.arg;
        TPolynomial q = g.arg;
        std::vector<GroupWord::Factor> tail;
        for (const auto& term : rewrite(f.root_ord, g.root_ord)) {
            TPolynomial arg = TPolynomial::constant(p.nvars(), term.c);
            for (int k = 0; k < term.i; ++k) arg = arg * q;
            if (term.i % 2) arg = -arg;
            for (int k = 0; k < term.j; ++k) arg = arg * p;
            if (!arg.is_zero()) tail.push_back({term.root_ord, std::move(arg)});
        }
        std::swap(w[pos], w[pos + 1]);
        w[pos].arg = std::move(q);
        w[pos + 1].arg = std::move(p);
        w.insert(w.begin() + pos + 2, tail.begin(), tail.end());
        if (pos > 0) --pos;
    }
}

GroupWord Collector::multiply(const GroupWord& x, const GroupWord& y) const {
    std::vector<GroupWord::Factor> w = x.factors;
    w.insert(w.end(), y.factors.begin(), y.factors.end());
    normalize(w);
    return GroupWord{std::move(w)};
}

GroupWord Collector::inverse(const GroupWord& x) const {
    std::vector<GroupWord::Factor> w;
    for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it)
        w.push_back({it->root_ord, -it->arg});
    normalize(w);
    return GroupWord{std::move(w)};
}

GroupWord Collector::commutator(const GroupWord& x, const GroupWord& y) const {
    return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

std::string Collector::render(const GroupWord& w,
                              const std::function<std::string(int)>& var_name) const {
    if (w.is_identity()) return "1";
    std::string out;
    for (const auto& f : w.factors) {
        if (!out.empty()) out += " ";
        out += "x[" + std::to_string(f.root_ord) + "](" + f.arg.str(var_name) + ")";
    }
    return out;
}

KTable k_table(const RootSystem& rs, const IntConstantTable& table, int sign,
               const std::vector<Root>& delta) {
    if (delta.empty()) throw EmptyDeltaError("k_table: delta must be nonempty");
    KTable out;
    out.sign = sign;
    out.delta = delta;

    std::array<std::array<long long, 24>, 24> weight{};
    for (int k = 1; k <= 24; ++k) {
        const Root s = rs.root(sign * k);
        for (const Root& q : delta) {
            auto r = rs.root_sum(s, q);
            if (!r) continue;
            int r_ord = rs.ordinal(*r);
            if ((r_ord > 0) != (sign > 0)) continue;
            weight[k - 1][std::abs(r_ord) - 1] = table.value(sign * k, rs.ordinal(q));
        }
    }

    std::array<std::array<long long, 24>, 24> power{};
    for (int i = 0; i < 24; ++i) power[i][i] = 1;
    for (int i = 0; i < 24; ++i) out.values[i][i] = 1;
    for (int k = 1; k <= 10; ++k) {
        std::array<std::array<long long, 24>, 24> next{};
        for (int i = 0; i < 24; ++i)
            for (int m = 0; m < 24; ++m) {
                if (power[i][m] == 0) continue;
                for (int j = 0; j < 24; ++j)
                    next[i][j] = Rational::checked_add(
                        next[i][j], Rational::checked_mul(power[i][m], weight[m][j]));
            }
        power = next;
        for (int si = 0; si < 24; ++si)
            for (int ri = 0; ri < 24; ++ri) {
                if (power[si][ri] == 0) continue;
                if (rs.root(sign * (ri + 1)).height() - rs.root(sign * (si + 1)).height() == k)
                    out.values[ri][si] = power[si][ri];
            }
    }
    return out;
}

Theorem6Report theorem6_check(const RootSystem& rs, const IntConstantTable& table,
                              const std::vector<Root>& delta, int m, int w) {
    Theorem6Report report;
    report.m = m;
    report.w = w;
    if (m < 1 || w < 1) throw std::invalid_argument("theorem6_check: m, w must be >= 1");
    if (m + w > 11) {
        // No root reaches this height: the product is empty.
        report.trivially_empty = true;
        return report;
    }

    std::vector<int> base_roots;  // ordinals of the height-m positive roots
    for (int k = 1; k <= 24; ++k)
        if (rs.root(k).height() == m) base_roots.push_back(k);
    int l = static_cast<int>(base_roots.size());

    Collector collector(rs, table);
    std::vector<GroupWord::Factor> bf, af;
    for (int j = 0; j < l; ++j)
        bf.push_back({base_roots[j], TPolynomial::variable(l, j)});
    std::vector<Root> delta_sorted = delta;
    std::sort(delta_sorted.begin(), delta_sorted.end(), order_less);
    for (const Root& q : delta_sorted)
        af.push_back({rs.ordinal(q), TPolynomial::constant(l, 1)});
    GroupWord b = collector.word(std::move(bf));
    GroupWord a = collector.word(std::move(af));

    GroupWord c = b;
    for (int step = 0; step < w; ++step) c = collector.commutator(c, a);

    for (const auto& f : c.factors)
        if (rs.root(f.root_ord).height() < m + w) report.tail_heights_ok = false;

    KTable kt = k_table(rs, table, +1, delta);
    for (int k = 1; k <= 24; ++k) {
        if (rs.root(k).height() != m + w) continue;
        Theorem6Report::Entry e;
        e.root_ord = k;
        const TPolynomial* arg = nullptr;
        for (const auto& f : c.factors)
            if (f.root_ord == k) arg = &f.arg;
        for (int j = 0; j < l; ++j) {
            e.expected.push_back(kt.values[k - 1][base_roots[j] - 1]);
            e.actual.push_back(arg ? arg->linear_coefficient(j) : 0);
        }
        e.match = e.expected == e.actual;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace chevalley
