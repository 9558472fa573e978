#pragma once

/**
 * The finite group of 2x2 determinant-one matrices over Z_n taken up to sign.
 * Its elements act on Farey fractions by Moebius action and label the darts of
 * the level-n map; the group order equals mu(n).
 */

#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "fareymap/errors.hpp"
#include "fareymap/fraction.hpp"
#include "fareymap/modular.hpp"

namespace fareymap {

inline constexpr std::int64_t default_group_cap = 10'000'000;

class psl2_element {
public:
    /// Entries are reduced mod n; the determinant must be 1 mod n. Of the two
    /// representatives (a,b,c,d) and (-a,-b,-c,-d) the lexicographically
    /// smaller tuple is stored.
    static psl2_element make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, level n) {
        const std::int64_t m = n.value();
        a = mod_reduce(a, m);
        b = mod_reduce(b, m);
        c = mod_reduce(c, m);
        d = mod_reduce(d, m);
        if (mod_reduce(a * d - b * c, m) != 1)
            throw precondition_error("matrix determinant is not 1 mod n");
        const auto neg = std::array{mod_reduce(-a, m), mod_reduce(-b, m), mod_reduce(-c, m), mod_reduce(-d, m)};
        if (neg < std::array{a, b, c, d}) return psl2_element(m, neg[0], neg[1], neg[2], neg[3]);
        return psl2_element(m, a, b, c, d);
    }

    static psl2_element identity(level n) { return make(1, 0, 0, 1, n); }

    /// U = (1 1; 0 1), the order-n shear generating the stabilizer of 1/0.
    static psl2_element shear_u(level n) { return make(1, 1, 0, 1, n); }

    /// X = (0 -1; 1 0), the order-2 rotation.
    static psl2_element rotation_x(level n) { return make(0, -1, 1, 0, n); }

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t d() const { return d_; }
    std::int64_t modulus() const { return n_; }

    psl2_element operator*(const psl2_element& rhs) const {
        if (n_ != rhs.n_) throw level_mismatch("multiplying matrices at different levels");
        return make(a_ * rhs.a_ + b_ * rhs.c_, a_ * rhs.b_ + b_ * rhs.d_,
                    c_ * rhs.a_ + d_ * rhs.c_, c_ * rhs.b_ + d_ * rhs.d_, level(n_));
    }

    psl2_element inverse() const { return make(d_, -b_, -c_, a_, level(n_)); }

    psl2_element pow(std::int64_t k) const {
        if (k < 0) return inverse().pow(-k);
        psl2_element out = identity(level(n_));
        psl2_element base = *this;
        while (k > 0) {
            if (k & 1) out = out * base;
            base = base * base;
            k >>= 1;
        }
        return out;
    }

    /// Moebius action on a vertex: x/y -> (a*x + b*y) / (c*x + d*y).
    farey_fraction act(const farey_fraction& v) const {
        if (n_ != v.modulus()) throw level_mismatch("matrix and vertex at different levels");
        return farey_fraction::make(a_ * v.num() + b_ * v.den(), c_ * v.num() + d_ * v.den(), level(n_));
    }

    std::string str() const {
        return "[" + std::to_string(a_) + " " + std::to_string(b_) + "; " + std::to_string(c_) +
               " " + std::to_string(d_) + "]";
    }

    auto operator<=>(const psl2_element&) const = default;

private:
    psl2_element(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
        : n_(n), a_(a), b_(b), c_(c), d_(d) {}

    std::int64_t n_, a_, b_, c_, d_;
};

/// All elements at level n, by brute force over the n^4 entry tuples with
/// determinant 1 mod n. Deliberately naive: this is the verification oracle
/// for the order formula, so it must not depend on it. Sorted ascending.
inline std::vector<psl2_element> enumerate_group(level n, std::int64_t cap = default_group_cap) {
    if (mu(n) > cap)
        throw too_large("group at level " + std::to_string(n.value()) + " exceeds the enumeration cap");
    const std::int64_t m = n.value();
    std::vector<psl2_element> out;
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b)
            for (std::int64_t c = 0; c < m; ++c)
                for (std::int64_t d = 0; d < m; ++d) {
                    if (mod_reduce(a * d - b * c, m) != 1) continue;
                    const auto neg = std::array{mod_reduce(-a, m), mod_reduce(-b, m),
                                                mod_reduce(-c, m), mod_reduce(-d, m)};
                    if (neg < std::array{a, b, c, d}) continue; // canonical representatives only
                    out.push_back(psl2_element::make(a, b, c, d, n));
                }
    return out;
}

/// The stabilizer of 1/0: the cyclic group generated by the shear U, of order
/// n for n > 2 (and 2 at level 2).
inline std::vector<psl2_element> stabilizer_of_infinity(level n, std::int64_t cap = default_group_cap) {
    const auto infinity = farey_fraction::make(1, 0, n);
    std::vector<psl2_element> out;
    for (const auto& t : enumerate_group(n, cap))
        if (t.act(infinity) == infinity) out.push_back(t);
    return out;
}

/// The homomorphism +-(1 b; 0 1) -> b from the stabilizer of 1/0 onto Z_n.
inline std::int64_t chi_of_stabilizer_element(const psl2_element& t) {
    const std::int64_t n = t.modulus();
    if (t.c() != 0 || t.a() != t.d() || (t.a() != 1 && t.a() != n - 1))
        throw precondition_error("chi is defined on the stabilizer of 1/0 only");
    return t.a() == 1 ? t.b() : mod_reduce(-t.b(), n);
}

/// Checks the (2, 3, n) presentation on the standard generators: X of order 2,
/// Z = U of order exactly n, Y = X^-1 * Z^-1 of order 3 (so X*Y*Z = 1), and
/// that X and Z generate the whole group (closure reaches mu(n) elements).
inline bool verify_triangle_relations(level n, std::int64_t cap = default_group_cap) {
    const std::int64_t order = mu(n);
    if (order > cap)
        throw too_large("group at level " + std::to_string(n.value()) + " exceeds the enumeration cap");
    const auto id = psl2_element::identity(n);
    const auto x = psl2_element::rotation_x(n);
    const auto z = psl2_element::shear_u(n);
    const auto y = x.inverse() * z.inverse();

    if (x * x != id || x == id) return false;
    if (y * y * y != id || y == id || y * y == id) return false;
    if (x * y * z != id) return false;

    psl2_element zk = z;
    for (std::int64_t k = 1; k < n.value(); ++k) {
        if (zk == id) return false; // order of Z must be exactly n
        zk = zk * z;
    }
    if (zk != id) return false;

    std::set<psl2_element> seen{id};
    std::deque<psl2_element> frontier{id};
    while (!frontier.empty()) {
        const psl2_element cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : {cur * x, cur * z}) {
            if (seen.insert(g).second) frontier.push_back(g);
        }
    }
    return static_cast<std::int64_t>(seen.size()) == order;
}

} // namespace fareymap
