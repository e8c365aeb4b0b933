#include "chevalley/structure_constants.hpp"

#include <algorithm>
#include <thread>

namespace chevalley {

ExtraspecialChoice find_extraspecial(const RootSystem& rs) {
    // Special pairs: 0 < r < s with r+s a positive root. The extraspecial
    // pair for a sum t is the one whose first component is order-minimal.
    std::map<int, std::pair<int, int>> by_sum;  // ordinal(t) -> (r_ord, s_ord)
    const auto& pos = rs.positive();
    for (int ri = 0; ri < 24; ++ri)
        for (int si = ri + 1; si < 24; ++si) {
            auto t = rs.root_sum(pos[ri], pos[si]);
            if (!t) continue;
            int t_ord = rs.ordinal(*t);
            auto it = by_sum.find(t_ord);
            if (it == by_sum.end() || ri + 1 < it->second.first)
                by_sum[t_ord] = {ri + 1, si + 1};
        }

    // One free symbol per pair: family by first component (epsilon for d,
    // delta for c, gamma for b, alpha for a), indices ascending with the
    // second component; magnitude p+1 from the root chain.
    ExtraspecialChoice choice;
    const struct {
        char letter;
        SignFamily family;
    } scheme[4] = {{'d', SignFamily::epsilon},
                   {'c', SignFamily::delta},
                   {'b', SignFamily::gamma},
                   {'a', SignFamily::alpha}};
    for (const auto& fam : scheme) {
        int first_ord = rs.ordinal(rs.fundamental(fam.letter));
        std::vector<std::pair<int, int>> group;
        for (const auto& [t_ord, pr] : by_sum)
            if (pr.first == first_ord) group.push_back(pr);
        std::sort(group.begin(), group.end(),
                  [](const auto& x, const auto& y) { return x.second < y.second; });
        int index = 0;
        for (const auto& [r_ord, s_ord] : group) {
            ++index;
            int p = rs.chain_p(rs.root(r_ord), rs.root(s_ord));
            SignMonomial v =
                SignMonomial::symbol({fam.family, index}).scaled(Rational(p + 1));
            choice.pairs.push_back({r_ord, s_ord, v});
        }
    }
    if (choice.pairs.size() != by_sum.size())
        throw std::logic_error("find_extraspecial: a first component is not fundamental");
    return choice;
}

ConstantTable::ConstantTable(const RootSystem& rs)
    : rs_(&rs), cells_(48 * 48), pair_flag_(48 * 48, 0) {
    for (const Root& r : rs.all())
        for (const Root& s : rs.all())
            if (rs.root_sum(r, s)) {
                pair_flag_[idx(rs.ordinal(r), rs.ordinal(s))] = 1;
                ++pair_count_;
            }
}

const SignMonomial& ConstantTable::entry(int r_ord, int s_ord) const {
    const auto& cell = cells_[idx(r_ord, s_ord)];
    if (!cell)
        throw std::logic_error("ConstantTable::entry(" + std::to_string(r_ord) + "," +
                               std::to_string(s_ord) + "): no value");
    return *cell;
}

void ConstantTable::set(int r_ord, int s_ord, const SignMonomial& v) {
    auto& cell = cells_[idx(r_ord, s_ord)];
    if (!pair_flag_[idx(r_ord, s_ord)])
        throw std::logic_error("ConstantTable::set: r+s is not a root");
    if (cell) {
        if (*cell != v)
            throw MultiTermError("ConstantTable::set(" + std::to_string(r_ord) + "," +
                                 std::to_string(s_ord) + "): conflicting values " +
                                 cell->str() + " vs " + v.str());
        return;
    }
    cell = v;
    ++defined_count_;
}

std::vector<std::pair<int, int>> ConstantTable::pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(pair_count_);
    for (int i = 0; i < 48; ++i)
        for (int j = 0; j < 48; ++j)
            if (pair_flag_[i * 48 + j])
                out.emplace_back(RootSystem::ordinal_of_dense(i), RootSystem::ordinal_of_dense(j));
    return out;
}

IntConstantTable::IntConstantTable(const RootSystem& rs) : rs_(&rs), cells_(48 * 48, 0) {}

bool IntConstantTable::is_pair(int r_ord, int s_ord) const {
    return rs_->root_sum(rs_->root(r_ord), rs_->root(s_ord)).has_value();
}

namespace {

// Zero-sum quadruples with no opposite pair, one per multiset: sorted by
// dense index with the implied fourth component largest.
struct Quadruple {
    std::array<int, 4> ords;
};

std::vector<Quadruple> zero_sum_quadruples(const RootSystem& rs) {
    std::vector<Quadruple> out;
    const auto& all = rs.all();
    auto opposite = [](const Root& x, const Root& y) {
        for (int i = 0; i < 4; ++i)
            if (x.coeffs[i] + y.coeffs[i] != 0) return false;
        return true;
    };
    for (int i = 0; i < 48; ++i)
        for (int j = i; j < 48; ++j)
            for (int k = j; k < 48; ++k) {
                std::array<int, 4> c;
                for (int t = 0; t < 4; ++t)
                    c[t] = -(all[i].coeffs[t] + all[j].coeffs[t] + all[k].coeffs[t]);
                auto r4 = rs.find(c);
                if (!r4) continue;
                int l = RootSystem::dense_index(rs.ordinal(*r4));
                if (l < k) continue;  // keep one representative per multiset
                const Root& a = all[i];
                const Root& b = all[j];
                const Root& d = all[k];
                if (opposite(a, b) || opposite(a, d) || opposite(a, *r4) || opposite(b, d) ||
                    opposite(b, *r4) || opposite(d, *r4))
                    continue;
                out.push_back({{RootSystem::ordinal_of_dense(i), RootSystem::ordinal_of_dense(j),
                                RootSystem::ordinal_of_dense(k), rs.ordinal(*r4)}});
            }
    return out;
}

// The three pair products of relation (iv) for an ordered quadruple
// r1+r2+r3+r4 = 0: (r1,r2)(r3,r4), (r2,r3)(r1,r4), (r3,r1)(r2,r4), each
// divided by the squared length of the corresponding pair sum.
struct IvProduct {
    int x1, y1, x2, y2;  // ordinals of the two factors' components
    Rational denom;      // squared length of x1+y1 (nonzero: no opposite pair)
    bool sum_is_root;    // if false the product is identically zero
};

std::array<IvProduct, 3> iv_products(const RootSystem& rs, const Quadruple& q) {
    auto make = [&](int a, int b, int c, int d) {
        IvProduct p;
        p.x1 = q.ords[a];
        p.y1 = q.ords[b];
        p.x2 = q.ords[c];
        p.y2 = q.ords[d];
        const Root& ra = rs.root(p.x1);
        const Root& rb = rs.root(p.y1);
        Root sum;
        for (int t = 0; t < 4; ++t) sum.coeffs[t] = ra.coeffs[t] + rb.coeffs[t];
        for (int t = 0; t < 4; ++t)
            sum.euclid[t] = ra.euclid[t] + rb.euclid[t];
        p.denom = inner(sum, sum);
        p.sum_is_root = rs.contains(sum.coeffs);
        return p;
    };
    return {make(0, 1, 2, 3), make(1, 2, 0, 3), make(2, 0, 1, 3)};
}

class Solver {
public:
    Solver(const RootSystem& rs, const ExtraspecialChoice& choice)
        : rs_(rs), table_(rs), quadruples_(zero_sum_quadruples(rs)) {
        for (const auto& p : choice.pairs) table_.set(p.r_ord, p.s_ord, p.value);
        // Deterministic processing order: ascending height of the pair sum,
        // then the total order on (r,s).
        order_ = table_.pairs();
        std::stable_sort(order_.begin(), order_.end(), [&](const auto& x, const auto& y) {
            int hx = rs_.root(x.first).height() + rs_.root(x.second).height();
            int hy = rs_.root(y.first).height() + rs_.root(y.second).height();
            if (hx != hy) return hx < hy;
            if (x.first != y.first)
                return order_less(rs_.root(x.first), rs_.root(y.first));
            return order_less(rs_.root(x.second), rs_.root(y.second));
        });
    }

    ConstantTable run() {
        bool progress = true;
        while (progress) {
            progress = false;
            progress |= pass_antisymmetry();
            progress |= pass_triples();
            progress |= pass_negation();
            progress |= pass_quadruples();
        }
        if (!table_.total())
            throw IncompleteError("solve_constants: propagation stalled at " +
                                  std::to_string(table_.defined_count()) + "/" +
                                  std::to_string(table_.pair_count()) + " entries");
        return std::move(table_);
    }

private:
    // Relation (i): N_{s,r} = -N_{r,s}.
    bool pass_antisymmetry() {
        bool progress = false;
        for (const auto& [r, s] : order_)
            if (table_.defined(r, s) && !table_.defined(s, r)) {
                table_.set(s, r, -table_.entry(r, s));
                progress = true;
            }
        return progress;
    }

    // Relation (ii) on the triple (r, s, t=-(r+s)): rotating a known entry.
    bool pass_triples() {
        bool progress = false;
        for (const auto& [r_ord, s_ord] : order_) {
            if (!table_.defined(r_ord, s_ord)) continue;
            const Root& r = rs_.root(r_ord);
            const Root& s = rs_.root(s_ord);
            Root t = -*rs_.root_sum(r, s);
            int t_ord = rs_.ordinal(t);
            const SignMonomial& v = table_.entry(r_ord, s_ord);
            if (!table_.defined(s_ord, t_ord)) {
                table_.set(s_ord, t_ord, v.scaled(inner(r, r) / inner(t, t)));
                progress = true;
            }
            if (!table_.defined(t_ord, r_ord)) {
                table_.set(t_ord, r_ord, v.scaled(inner(s, s) / inner(t, t)));
                progress = true;
            }
        }
        return progress;
    }

    // Relation (iii): N_{r,s} N_{-r,-s} = -(p+1)^2.
    bool pass_negation() {
        bool progress = false;
        for (const auto& [r_ord, s_ord] : order_) {
            if (!table_.defined(r_ord, s_ord) || table_.defined(-r_ord, -s_ord)) continue;
            int p = rs_.chain_p(rs_.root(r_ord), rs_.root(s_ord));
            SignMonomial v =
                table_.entry(r_ord, s_ord).inverse().scaled(Rational(-(p + 1) * (p + 1)));
            table_.set(-r_ord, -s_ord, v);
            progress = true;
        }
        return progress;
    }

    // Looks an entry up through antisymmetry without materializing mirrors.
    std::optional<SignMonomial> lookup(int x, int y) const {
        if (table_.defined(x, y)) return table_.entry(x, y);
        if (table_.defined(y, x)) return -table_.entry(y, x);
        return std::nullopt;
    }

    // Relation (iv): solve the single unknown factor of a quadruple identity
    // when the other two products are fully known.
    bool pass_quadruples() {
        bool progress = false;
        for (const auto& q : quadruples_) {
            auto prods = iv_products(rs_, q);
            int unknown_prod = -1, unknown_slot = -1;
            bool solvable = true;
            for (int pi = 0; pi < 3 && solvable; ++pi) {
                const auto& p = prods[pi];
                if (!p.sum_is_root) continue;
                bool u1 = !lookup(p.x1, p.y1).has_value();
                bool u2 = !lookup(p.x2, p.y2).has_value();
                if (!u1 && !u2) continue;
                if (u1 && u2) {
                    solvable = false;
                    break;
                }
                if (unknown_prod >= 0) {
                    solvable = false;  // unknowns in two products
                    break;
                }
                unknown_prod = pi;
                unknown_slot = u1 ? 0 : 1;
            }
            if (!solvable || unknown_prod < 0) continue;

            SignPolynomial known_sum;
            for (int pi = 0; pi < 3; ++pi) {
                if (pi == unknown_prod || !prods[pi].sum_is_root) continue;
                const auto& p = prods[pi];
                SignMonomial prod = *lookup(p.x1, p.y1) * *lookup(p.x2, p.y2);
                known_sum += SignPolynomial(prod.scaled(Rational(1) / p.denom));
            }
            const auto& p = prods[unknown_prod];
            SignMonomial partner =
                unknown_slot == 0 ? *lookup(p.x2, p.y2) : *lookup(p.x1, p.y1);
            // X * partner / denom + known_sum = 0.
            SignMonomial x =
                (-known_sum).as_monomial().scaled(p.denom) * partner.inverse();
            if (unknown_slot == 0)
                table_.set(p.x1, p.y1, x);
            else
                table_.set(p.x2, p.y2, x);
            progress = true;
        }
        return progress;
    }

    const RootSystem& rs_;
    ConstantTable table_;
    std::vector<Quadruple> quadruples_;
    std::vector<std::pair<int, int>> order_;
};

}  // namespace

ConstantTable solve_constants(const RootSystem& rs, const ExtraspecialChoice& choice) {
    return Solver(rs, choice).run();
}

IntConstantTable specialize(const ConstantTable& table, const SignAssignment& assignment) {
    const RootSystem& rs = table.system();
    IntConstantTable out(rs);
    for (const auto& [r, s] : table.pairs())
        out.set(r, s, table.entry(r, s).evaluate(assignment).as_integer());
    return out;
}

RelationReport verify_relations(const IntConstantTable& table) {
    const RootSystem& rs = table.system();
    RelationReport report;
    auto note = [&](const std::string& rel, const std::string& detail) {
        report.violations.push_back({rel, detail});
    };
    auto norm2 = [&](const Root& r) { return inner(r, r).as_integer(); };

    for (const Root& r : rs.all())
        for (const Root& s : rs.all()) {
            if (!rs.root_sum(r, s)) continue;
            int r_ord = rs.ordinal(r), s_ord = rs.ordinal(s);
            long long n = table.value(r_ord, s_ord);

            ++report.checked_i;
            if (table.value(s_ord, r_ord) != -n)
                note("i", "N(" + std::to_string(s_ord) + "," + std::to_string(r_ord) +
                              ") != -N(" + std::to_string(r_ord) + "," + std::to_string(s_ord) + ")");

            long long p = rs.chain_p(r, s);
            if (n < 0 ? -n != p + 1 : n != p + 1)
                note("magnitude", "|N(" + std::to_string(r_ord) + "," + std::to_string(s_ord) +
                                      ")| = " + std::to_string(n < 0 ? -n : n) + " != p+1 = " +
                                      std::to_string(p + 1));

            ++report.checked_iii;
            if (n * table.value(-r_ord, -s_ord) != -(p + 1) * (p + 1))
                note("iii", "N*N(neg) != -(p+1)^2 at (" + std::to_string(r_ord) + "," +
                                std::to_string(s_ord) + ")");

            // (ii) on (r, s, t = -(r+s)): equality of the three ratios.
            Root t = -*rs.root_sum(r, s);
            int t_ord = rs.ordinal(t);
            ++report.checked_ii;
            long long n2 = table.value(s_ord, t_ord);
            long long n3 = table.value(t_ord, r_ord);
            if (n * norm2(r) != n2 * norm2(t) || n * norm2(s) != n3 * norm2(t))
                note("ii", "ratio mismatch on triple (" + std::to_string(r_ord) + "," +
                               std::to_string(s_ord) + "," + std::to_string(t_ord) + ")");
        }

    for (const auto& q : zero_sum_quadruples(rs)) {
        auto prods = iv_products(rs, q);
        Rational sum;
        for (const auto& p : prods) {
            if (!p.sum_is_root) continue;
            sum += Rational(table.value(p.x1, p.y1) * table.value(p.x2, p.y2)) / p.denom;
        }
        ++report.checked_iv;
        if (!sum.is_zero())
            note("iv", "sum " + sum.str() + " != 0 on quadruple (" + std::to_string(q.ords[0]) +
                           "," + std::to_string(q.ords[1]) + "," + std::to_string(q.ords[2]) +
                           "," + std::to_string(q.ords[3]) + ")");
    }
    return report;
}

namespace {

// Sparse vector in the 52-dimensional basis: 0..47 root vectors e_r (dense
// root order), 48..51 the fundamental co-root elements h_a..h_d.
using Sparse = std::vector<std::pair<int, long long>>;

struct ChevalleyBasis {
    const RootSystem& rs;
    const IntConstantTable& table;
    std::array<std::array<int, 4>, 48> coroot_coords;  // r^vee over a^vee..d^vee
    std::array<std::array<int, 48>, 4> pairing;        // <s, alpha_i^vee>

    ChevalleyBasis(const RootSystem& r, const IntConstantTable& t) : rs(r), table(t) {
        const Root fund[4] = {rs.fund_a(), rs.fund_b(), rs.fund_c(), rs.fund_d()};
        // Solve r^vee = sum lambda_i alpha_i^vee exactly via the pairing with
        // each fundamental root: <a_j, r^vee> = sum_i lambda_i <a_j, a_i^vee>.
        long long cartan[4][4];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) cartan[j][i] = cartan_integer(fund[j], fund[i]);
        for (int d = 0; d < 48; ++d) {
            const Root& root = rs.all()[d];
            Rational rhs[4];
            for (int j = 0; j < 4; ++j) rhs[j] = Rational(cartan_integer(fund[j], root));
            // Gaussian elimination on a copy of the Cartan matrix.
            Rational m[4][5];
            for (int j = 0; j < 4; ++j) {
                for (int i = 0; i < 4; ++i) m[j][i] = Rational(cartan[j][i]);
                m[j][4] = rhs[j];
            }
            for (int col = 0; col < 4; ++col) {
                int piv = col;
                while (piv < 4 && m[piv][col].is_zero()) ++piv;
                if (piv == 4) throw std::logic_error("jacobi_oracle: singular Cartan matrix");
                std::swap(m[piv], m[col]);
                for (int row = 0; row < 4; ++row) {
                    if (row == col || m[row][col].is_zero()) continue;
                    Rational f = m[row][col] / m[col][col];
                    for (int i = col; i < 5; ++i) m[row][i] -= f * m[col][i];
                }
            }
            for (int i = 0; i < 4; ++i)
                coroot_coords[d][i] = static_cast<int>((m[i][4] / m[i][i]).as_integer());
        }
        for (int i = 0; i < 4; ++i)
            for (int d = 0; d < 48; ++d)
                pairing[i][d] = cartan_integer(rs.all()[d], fund[i]);
    }

    Sparse bracket(int x, int y) const {
        Sparse out;
        if (x >= 48 && y >= 48) return out;
        if (x >= 48) {  // [h_i, e_s]
            int v = pairing[x - 48][y];
            if (v != 0) out.emplace_back(y, v);
            return out;
        }
        if (y >= 48) {
            int v = pairing[y - 48][x];
            if (v != 0) out.emplace_back(x, -v);
            return out;
        }
        const Root& r = rs.all()[x];
        const Root& s = rs.all()[y];
        if (r == -s) {  // [e_r, e_{-r}] = h_r
            for (int i = 0; i < 4; ++i)
                if (coroot_coords[x][i] != 0) out.emplace_back(48 + i, coroot_coords[x][i]);
            return out;
        }
        if (auto t = rs.root_sum(r, s)) {
            long long n = table.value(rs.ordinal(r), rs.ordinal(s));
            out.emplace_back(RootSystem::dense_index(rs.ordinal(*t)), n);
        }
        return out;
    }
};

}  // namespace

bool jacobi_oracle(const RootSystem& rs, const IntConstantTable& table, int jobs) {
    ChevalleyBasis basis(rs, table);

    // Precompute all basis brackets once.
    std::vector<Sparse> bk(52 * 52);
    for (int x = 0; x < 52; ++x)
        for (int y = 0; y < 52; ++y) bk[x * 52 + y] = basis.bracket(x, y);

    auto check_range = [&](int lo, int hi, bool* ok) {
        std::array<long long, 52> acc{};
        for (int i = lo; i < hi && *ok; ++i)
            for (int j = 0; j < 52; ++j)
                for (int k = 0; k < 52; ++k) {
                    acc.fill(0);
                    for (const auto& [m, c] : bk[i * 52 + j])
                        for (const auto& [n, c2] : bk[m * 52 + k]) acc[n] += c * c2;
                    for (const auto& [m, c] : bk[j * 52 + k])
                        for (const auto& [n, c2] : bk[m * 52 + i]) acc[n] += c * c2;
                    for (const auto& [m, c] : bk[k * 52 + i])
                        for (const auto& [n, c2] : bk[m * 52 + j]) acc[n] += c * c2;
                    for (long long v : acc)
                        if (v != 0) {
                            *ok = false;
                            break;
                        }
                }
    };

    if (jobs <= 1) {
        bool ok = true;
        check_range(0, 52, &ok);
        return ok;
    }
    int n = std::min(jobs, 52);
    std::vector<char> oks(n, 1);
    std::vector<std::thread> workers;
    for (int w = 0; w < n; ++w) {
        int lo = 52 * w / n, hi = 52 * (w + 1) / n;
        workers.emplace_back([&, lo, hi, w] {
            bool ok = true;
            check_range(lo, hi, &ok);
            oks[w] = ok;
        });
    }
    for (auto& t : workers) t.join();
    return std::all_of(oks.begin(), oks.end(), [](char c) { return c != 0; });
}

}  // namespace chevalley
