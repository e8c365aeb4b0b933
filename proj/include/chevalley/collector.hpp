#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "chevalley/root_graphs.hpp"
#include "chevalley/structure_constants.hpp"

namespace chevalley {

struct HeightOverflow : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Sparse multivariate polynomial with exact integer coefficients over a
// fixed set of at most 8 variables; exponents packed into a 64-bit key.
class TPolynomial {
public:
    explicit TPolynomial(int nvars = 1);
    static TPolynomial constant(int nvars, long long c);
    static TPolynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }

    TPolynomial operator-() const;
    TPolynomial& operator+=(const TPolynomial& o);
    friend TPolynomial operator+(TPolynomial x, const TPolynomial& y) { return x += y; }
    friend TPolynomial operator-(TPolynomial x, const TPolynomial& y) { return x += -y; }
    friend TPolynomial operator*(const TPolynomial& x, const TPolynomial& y);
    TPolynomial scaled(long long f) const;

    long long coefficient(const std::vector<int>& exponents) const;
    // Coefficient of the degree-1 monomial in variable `index`.
    long long linear_coefficient(int index) const;

    const std::map<uint64_t, long long>& terms() const { return terms_; }

    // Sparse monomial text, e.g. "2*t1*t2^2 - t3". Variables named by `name`.
    std::string str(const std::function<std::string(int)>& name) const;
    std::string str() const;  // default names t1..tn

    friend bool operator==(const TPolynomial& x, const TPolynomial& y) {
        return x.nvars_ == y.nvars_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const TPolynomial& x, const TPolynomial& y) { return !(x == y); }

private:
    void add_term(uint64_t key, long long c);
    int nvars_;
    std::map<uint64_t, long long> terms_;
};

// Ordered product of positive-root elements x_r(arg). Normal form: roots
// strictly ascending in the root order, no zero arguments.
struct GroupWord {
    struct Factor {
        int root_ord;  // positive ordinal
        TPolynomial arg;
        friend bool operator==(const Factor& x, const Factor& y) {
            return x.root_ord == y.root_ord && x.arg == y.arg;
        }
    };
    std::vector<Factor> factors;

    bool is_identity() const { return factors.empty(); }
};

// Collection engine over a specialized constant table: normalizes words by
// commutator insertion; roots generated by a swap are strictly higher, which
// bounds the rewriting.
class Collector {
public:
    Collector(const RootSystem& rs, const IntConstantTable& table);

    const RootSystem& system() const { return rs_; }

    GroupWord word(std::vector<GroupWord::Factor> factors) const;
    GroupWord multiply(const GroupWord& x, const GroupWord& y) const;
    GroupWord inverse(const GroupWord& x) const;
    // x^-1 y^-1 x y.
    GroupWord commutator(const GroupWord& x, const GroupWord& y) const;

    std::string render(const GroupWord& w,
                       const std::function<std::string(int)>& var_name) const;

private:
    struct RewriteTerm {
        int i, j;
        int root_ord;   // i*small + j*big
        long long c;    // specialized C_{ij}
    };

    void normalize(std::vector<GroupWord::Factor>& w) const;
    // Rewrite data for x_big(f) x_small(g) -> x_small(g) x_big(f) * tail.
    const std::vector<RewriteTerm>& rewrite(int big_ord, int small_ord) const;

    const RootSystem& rs_;
    const IntConstantTable& table_;
    std::vector<std::vector<RewriteTerm>> rewrites_;  // indexed (big-1)*24+(small-1)
};

// Theorem 6: with B the product of x_{s_j}(t_j) over the height-m positive
// roots and A the product of x_q(1) over delta, the height-(m+w) factors of
// [B,_wA] have linear parts sum_j t_j K_{r,s_j}.
struct Theorem6Report {
    struct Entry {
        int root_ord;
        std::vector<long long> expected;  // K_{r,s_j} per variable
        std::vector<long long> actual;    // linear coefficients found
        bool match;
    };
    int m = 0, w = 0;
    bool trivially_empty = false;  // m+w above the highest root's height
    std::vector<Entry> entries;
    bool tail_heights_ok = true;  // every factor has height >= m+w
    bool ok() const {
        if (!tail_heights_ok) return false;
        for (const auto& e : entries)
            if (!e.match) return false;
        return true;
    }
};

Theorem6Report theorem6_check(const RootSystem& rs, const IntConstantTable& table,
                              const std::vector<Root>& delta, int m, int w);

// K table computed directly from a specialized constant table.
KTable k_table(const RootSystem& rs, const IntConstantTable& table, int sign,
               const std::vector<Root>& delta);

}  // namespace chevalley
