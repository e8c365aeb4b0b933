#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chevalley/rational.hpp"

namespace chevalley {

// A root of F4, stored as integer coefficients over the fundamental roots
// a, b, c, d together with its exact coordinates in the orthonormal e-basis.
// Identity is by coefficients; the Euclidean embedding is derived data.
struct Root {
    std::array<int, 4> coeffs{};         // (alpha, beta, gamma, delta) over a,b,c,d
    std::array<Rational, 4> euclid{};    // coordinates in e1..e4

    int height() const { return coeffs[0] + coeffs[1] + coeffs[2] + coeffs[3]; }
    bool is_positive() const {
        for (int c : coeffs)
            if (c != 0) return c > 0;
        return false;
    }

    Root operator-() const {
        Root n;
        for (int i = 0; i < 4; ++i) {
            n.coeffs[i] = -coeffs[i];
            n.euclid[i] = -euclid[i];
        }
        return n;
    }

    friend bool operator==(const Root& x, const Root& y) { return x.coeffs == y.coeffs; }
    friend bool operator!=(const Root& x, const Root& y) { return !(x == y); }
};

inline int height(const Root& r) { return r.height(); }

// Euclidean scalar product from the e-basis embedding.
inline Rational inner(const Root& r, const Root& s) {
    Rational acc;
    for (int i = 0; i < 4; ++i) acc += r.euclid[i] * s.euclid[i];
    return acc;
}

// x < y iff the first nonzero coefficient of y - x, read in (a,b,c,d) order,
// is positive. Irreflexive; a strict total order on the 48 roots.
inline bool order_less(const Root& x, const Root& y) {
    for (int i = 0; i < 4; ++i) {
        int d = y.coeffs[i] - x.coeffs[i];
        if (d != 0) return d > 0;
    }
    return false;
}

// 2(r,s)/(s,s); always an integer for roots of the same system.
int cartan_integer(const Root& r, const Root& s);

// The F4 root system: 24 positive roots in the total order above, their
// negatives, and the lookup structures everything downstream queries.
// Immutable after construction.
class RootSystem {
public:
    static RootSystem build_f4();

    int rank() const { return 4; }

    const std::vector<Root>& positive() const { return positive_; }
    const std::vector<Root>& all() const { return all_; }

    // Fundamental roots a, b, c, d (in that naming order).
    const Root& fund_a() const { return positive_[9]; }
    const Root& fund_b() const { return positive_[3]; }
    const Root& fund_c() const { return positive_[1]; }
    const Root& fund_d() const { return positive_[0]; }
    // Fundamentals by letter, 'a'..'d'.
    const Root& fundamental(char letter) const;

    // Signed ordinal: 1..24 for positive roots in order, -k for the negative
    // of root k. Matches the numbering used by every table.
    int ordinal(const Root& r) const;
    const Root& root(int ordinal) const;

    bool contains(const std::array<int, 4>& coeffs) const {
        return by_coeffs_.count(coeffs) != 0;
    }
    std::optional<Root> find(const std::array<int, 4>& coeffs) const;

    // r + s when it is a root; nullopt otherwise (in particular when s = -r).
    std::optional<Root> root_sum(const Root& r, const Root& s) const;

    // Greatest p >= 0 with s - p*r still a root.
    int chain_p(const Root& r, const Root& s) const;

    // Dense index 0..47 used by table storage: positive k -> k-1, -k -> 23+k.
    static int dense_index(int ordinal) {
        return ordinal > 0 ? ordinal - 1 : 23 - ordinal;
    }
    static int ordinal_of_dense(int idx) { return idx < 24 ? idx + 1 : 24 - idx; }

private:
    RootSystem() = default;
    void validate() const;

    std::vector<Root> positive_;
    std::vector<Root> all_;                       // ordinals 1..24 then -1..-24
    std::map<std::array<int, 4>, int> by_coeffs_; // coeffs -> signed ordinal
};

}  // namespace chevalley
