#include "chevalley/commutator_formulas.hpp"

#include <algorithm>

namespace chevalley {

namespace {
Root scaled_sum(const Root& r, int i, const Root& s, int j) {
    Root out;
    for (int t = 0; t < 4; ++t) {
        out.coeffs[t] = i * r.coeffs[t] + j * s.coeffs[t];
        out.euclid[t] = Rational(i) * r.euclid[t] + Rational(j) * s.euclid[t];
    }
    return out;
}
long long factorial(int i) {
    long long f = 1;
    for (int k = 2; k <= i; ++k) f *= k;
    return f;
}
}  // namespace

SignMonomial m_coeff(const ConstantTable& table, const Root& r, const Root& s, int i) {
    const RootSystem& rs = table.system();
    SignMonomial acc = SignMonomial::identity();
    for (int k = 0; k < i; ++k) {
        Root base = scaled_sum(r, k, s, 1);
        if (!rs.contains(base.coeffs))
            throw UndefinedFactorError("m_coeff: " + std::to_string(k) + "r+s is not a root");
        acc = acc * table.entry(r, *rs.find(base.coeffs));
    }
    return acc.scaled(Rational(1, factorial(i)));
}

SignMonomial c_coeff(const ConstantTable& table, int i, int j, const Root& r, const Root& s) {
    const RootSystem& rs = table.system();
    if (!rs.contains(scaled_sum(r, i, s, j).coeffs))
        throw UnsupportedPairError("c_coeff: ir+js is not a root");

    SignMonomial v;
    if (j == 1)
        v = m_coeff(table, r, s, i);
    else if (i == 1)
        v = (j % 2 ? -m_coeff(table, s, r, j) : m_coeff(table, s, r, j));
    else if (i == 3 && j == 2)
        v = m_coeff(table, *rs.root_sum(r, s), r, 2).scaled(Rational(1, 3));
    else if (i == 2 && j == 3)
        v = m_coeff(table, *rs.root_sum(s, r), s, 2).scaled(Rational(-2, 3));
    else
        throw UnsupportedPairError("c_coeff: unsupported exponents (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");

    // Integral under every assignment iff the rational coefficient is.
    if (!v.coeff().is_integer())
        throw NonIntegralError("c_coeff(" + std::to_string(i) + "," + std::to_string(j) +
                               "): non-integral coefficient " + v.coeff().str());
    return v;
}

CommutatorFormula formula(const ConstantTable& table, const Root& s, const Root& r) {
    const RootSystem& rs = table.system();
    if (r == -s) throw OppositeRootsError("formula: r = -s has no expansion of this form");

    CommutatorFormula f;
    f.s = s;
    f.r = r;
    if (!rs.root_sum(r, s)) return f;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            Root t = scaled_sum(r, i, s, j);
            if (!rs.contains(t.coeffs)) continue;
            f.terms.push_back({i, j, *rs.find(t.coeffs), c_coeff(table, i, j, r, s)});
        }
    std::sort(f.terms.begin(), f.terms.end(), [](const auto& x, const auto& y) {
        if (x.i + x.j != y.i + y.j) return x.i + x.j < y.i + y.j;
        return x.i < y.i;
    });
    return f;
}

FormulaCatalog formula_catalog(const ConstantTable& table) {
    const RootSystem& rs = table.system();
    FormulaCatalog cat;
    // Both positive: one formula per pair s < r with r+s a root.
    for (int si = 1; si <= 24; ++si)
        for (int ri = si + 1; ri <= 24; ++ri) {
            if (!rs.root_sum(rs.root(ri), rs.root(si))) continue;
            cat.positive.push_back(formula(table, rs.root(si), rs.root(ri)));
            cat.negative.push_back(formula(table, rs.root(-si), rs.root(-ri)));
        }
    // Mixed: positive s against negative r, grouped by s.
    for (int si = 1; si <= 24; ++si)
        for (int ri = 1; ri <= 24; ++ri) {
            if (ri == si) continue;
            if (!rs.root_sum(rs.root(-ri), rs.root(si))) continue;
            cat.mixed.push_back(formula(table, rs.root(si), rs.root(-ri)));
        }
    return cat;
}

}  // namespace chevalley
