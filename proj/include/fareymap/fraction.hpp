#pragma once

/**
 * Farey fractions mod n: the vertex set of the level-n Farey map.
 *
 * A vertex is a pair (a : c) of residues mod n with gcd(a, c, n) = 1, taken up
 * to global negation. Two vertices a/c and b/d are joined by an edge exactly
 * when a*d - b*c == +-1 mod n.
 */

#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "fareymap/errors.hpp"
#include "fareymap/modular.hpp"

namespace fareymap {

class farey_fraction {
public:
    /// Builds the canonical representative of the class of (a mod n, c mod n).
    /// Of the two representatives (a, c) and (-a, -c) the lexicographically
    /// smaller pair of residues in [0, n) is stored.
    static farey_fraction make(std::int64_t a, std::int64_t c, level n) {
        const std::int64_t m = n.value();
        std::int64_t p = mod_reduce(a, m);
        std::int64_t q = mod_reduce(c, m);
        if (std::gcd(std::gcd(p, q), m) != 1)
            throw invalid_vertex("no vertex " + std::to_string(p) + "/" + std::to_string(q) +
                                 " at level " + std::to_string(m) + ": gcd(a, c, n) != 1");
        const std::int64_t np = mod_reduce(-p, m);
        const std::int64_t nq = mod_reduce(-q, m);
        if (std::pair(np, nq) < std::pair(p, q)) {
            p = np;
            q = nq;
        }
        return farey_fraction(m, p, q);
    }

    /// Parses "a/c" (optional sign on either residue) at the given level.
    static farey_fraction parse(std::string_view text, level n) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            throw format_error("expected a fraction of the form a/c, got '" + std::string(text) + "'");
        return make(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)), n);
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::int64_t modulus() const { return mod_; }

    /// The other representative of this class, (-a mod n, -c mod n).
    std::pair<std::int64_t, std::int64_t> negated_representative() const {
        return {mod_reduce(-num_, mod_), mod_reduce(-den_, mod_)};
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    auto operator<=>(const farey_fraction&) const = default;

private:
    farey_fraction(std::int64_t mod, std::int64_t num, std::int64_t den)
        : mod_(mod), num_(num), den_(den) {}

    static std::int64_t parse_integer(std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw format_error("expected an integer, got '" + std::string(s) + "'");
        return value;
    }

    std::int64_t mod_, num_, den_;
};

/// a*d - b*c mod n for u = a/c, v = b/d, reduced into [0, n). Negating either
/// representative flips the sign, so only the class {delta, -delta} is
/// meaningful to callers.
inline std::int64_t determinant_mod(const farey_fraction& u, const farey_fraction& v) {
    if (u.modulus() != v.modulus())
        throw level_mismatch("determinant of vertices at different levels");
    const std::int64_t n = u.modulus();
    return mod_reduce(u.num() * v.den() - v.num() * u.den(), n);
}

inline bool adjacent(const farey_fraction& u, const farey_fraction& v) {
    const std::int64_t d = determinant_mod(u, v);
    return d == 1 || d == u.modulus() - 1;
}

/// A completion (b, d) of the column (a, c) to a matrix of determinant 1.
struct unimodular_lift {
    std::int64_t b, d;
};

/// Completes the vertex a/c to a matrix (a b; c d) with a*d - b*c == 1 mod n,
/// constructively: write gcd(a, c) = x*a + y*c, invert that gcd mod n (it is a
/// unit because gcd(a, c, n) = 1), and scale. The choice of (b, d) is fixed by
/// this algorithm; any caller needing lift-independence should treat the star
/// it induces as a cyclic sequence.
inline unimodular_lift lift_to_unimodular(const farey_fraction& v) {
    const std::int64_t n = v.modulus(), a = v.num(), c = v.den();
    const auto eg = extended_gcd(a, c); // eg.g = gcd(a, c), a unit mod n
    const std::int64_t alpha = mod_inverse(eg.g, n);
    const std::int64_t d = mod_reduce(alpha * mod_reduce(eg.x, n), n);
    const std::int64_t b = mod_reduce(-alpha * mod_reduce(eg.y, n), n);
    if (mod_reduce(a * d - b * c, n) != 1)
        throw arithmetic_error("unimodular lift construction failed");
    return {b, d};
}

/// The smallest-by-construction k with gcd(a + c*k, n) = 1: the product of the
/// primes dividing n that divide neither a nor c (an empty product is 1).
inline std::int64_t unit_shift(std::int64_t a, std::int64_t c, level n) {
    const std::int64_t m = n.value();
    a = mod_reduce(a, m);
    c = mod_reduce(c, m);
    if (std::gcd(std::gcd(a, c), m) != 1)
        throw precondition_error("unit_shift requires gcd(a, c, n) = 1");
    std::int64_t k = 1;
    for (const auto& [p, e] : factorize(m))
        if (a % p != 0 && c % p != 0) k *= p;
    if (std::gcd(mod_reduce(a + c * k, m), m) != 1)
        throw arithmetic_error("unit_shift construction failed");
    return k;
}

/// All vertices at level n, canonical and sorted. The count equals
/// vertex_count(n).
inline std::vector<farey_fraction> enumerate_vertices(level n) {
    const std::int64_t m = n.value();
    std::vector<farey_fraction> out;
    for (std::int64_t a = 0; a < m; ++a) {
        for (std::int64_t c = 0; c < m; ++c) {
            if (std::gcd(std::gcd(a, c), m) != 1) continue;
            // keep only the canonical representative of each +- class
            if (std::pair(mod_reduce(-a, m), mod_reduce(-c, m)) < std::pair(a, c)) continue;
            out.push_back(farey_fraction::make(a, c, n));
        }
    }
    return out;
}

} // namespace fareymap
