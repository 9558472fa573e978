#pragma once

/**
 * Exact integer and modular number theory for Farey maps: gcd machinery,
 * Euler's totient, prime factorization, the index/genus/vertex-count formulas
 * for the level-n map, and Fibonacci semiperiods.
 *
 * Everything here is exact integer arithmetic; products that could leave the
 * 64-bit range are checked and raise arithmetic_error instead of wrapping.
 */

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "fareymap/errors.hpp"

namespace fareymap {

/// The congruence level n >= 2. Level 1 is rejected: the level-1 quotient
/// degenerates to a point and none of the formulas below apply to it.
class level {
public:
    explicit level(std::int64_t n) : n_(n) {
        if (n < 2) throw precondition_error("level must be an integer >= 2");
    }

    std::int64_t value() const { return n_; }

    friend bool operator==(const level&, const level&) = default;

private:
    std::int64_t n_;
};

/// Dart/edge/face/vertex counts of the level-n map together with its valency
/// and genus. Satisfies edges = darts/2, faces = darts/3 and the Euler
/// identity vertices - edges + faces = 2 - 2*genus.
struct map_statistics {
    std::int64_t darts = 0;
    std::int64_t edges = 0;
    std::int64_t faces = 0;
    std::int64_t vertices = 0;
    std::int64_t valency = 0;
    std::int64_t genus = 0;

    friend bool operator==(const map_statistics&, const map_statistics&) = default;
};

inline std::int64_t mod_reduce(std::int64_t a, std::int64_t n) {
    a %= n;
    return a < 0 ? a + n : a;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw arithmetic_error("integer overflow in exact arithmetic");
    return out;
}

inline std::int64_t checked_pow(std::int64_t base, int exp) {
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

/// Result of the extended Euclidean algorithm: g = gcd >= 0 and a*x + b*y = g.
struct extended_gcd_result {
    std::int64_t g, x, y;
};

inline extended_gcd_result extended_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_x = 1, x = 0;
    std::int64_t old_y = 0, y = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_x = std::exchange(x, old_x - q * x);
        old_y = std::exchange(y, old_y - q * y);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t n) {
    a = mod_reduce(a, n);
    const auto eg = extended_gcd(a, n);
    if (eg.g != 1) throw arithmetic_error("element is not invertible modulo n");
    return mod_reduce(eg.x, n);
}

/// Prime factorization by trial division, as (prime, multiplicity) pairs in
/// increasing prime order. Fine at this library's scales (n up to ~10^4).
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m) {
    if (m < 1) throw precondition_error("factorize requires a positive integer");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

inline bool is_prime(std::int64_t m) {
    if (m < 2) return false;
    for (std::int64_t p = 2; p * p <= m; ++p)
        if (m % p == 0) return false;
    return true;
}

/// Number of darts of the level-n map, equivalently the order of the level-n
/// projective matrix group: n^3/2 * prod_{p|n} (1 - 1/p^2) for n > 2, and 6
/// for n = 2. Evaluated exactly as prod p^(3e-2) * (p^2 - 1), halved.
inline std::int64_t mu(level n) {
    const std::int64_t m = n.value();
    if (m == 2) return 6;
    std::int64_t product = 1;
    for (const auto& [p, e] : factorize(m)) {
        product = checked_mul(product, checked_pow(p, 3 * e - 2));
        product = checked_mul(product, p * p - 1);
    }
    if (product % 2 != 0) throw arithmetic_error("mu(n): exact expression is not an even integer");
    return product / 2;
}

/// Number of vertices: n^2/2 * prod_{p|n} (1 - 1/p^2) for n > 2, and 3 for
/// n = 2. Equals mu(n)/n in both cases.
inline std::int64_t vertex_count(level n) {
    const std::int64_t m = n.value();
    if (m == 2) return 3;
    const std::int64_t index = mu(n);
    if (index % m != 0) throw arithmetic_error("vertex_count(n): mu(n) not divisible by n");
    return index / m;
}

/// Genus of the level-n map, from the Euler characteristic
/// 2 - 2g = mu(n) * (6 - n) / (6n). Always a nonnegative integer.
inline std::int64_t genus(level n) {
    const std::int64_t m = n.value();
    const std::int64_t numerator = checked_mul(mu(n), m - 6);
    const std::int64_t denominator = 12 * m;
    if (numerator % denominator != 0)
        throw arithmetic_error("genus(n): exact expression is not an integer");
    const std::int64_t g = 1 + numerator / denominator;
    if (g < 0) throw arithmetic_error("genus(n): negative genus");
    return g;
}

inline map_statistics statistics(level n) {
    const std::int64_t m = n.value();
    const std::int64_t darts = mu(n);
    if (darts % 6 != 0) throw arithmetic_error("statistics(n): dart count not divisible by 6");
    map_statistics st;
    st.darts = darts;
    st.edges = darts / 2;
    st.faces = darts / 3;
    st.vertices = vertex_count(n);
    st.valency = m;
    st.genus = genus(n);
    if (st.vertices - st.edges + st.faces != 2 - 2 * st.genus)
        throw arithmetic_error("statistics(n): Euler identity violated");
    return st;
}

inline std::int64_t euler_phi(std::int64_t m) {
    if (m < 1) throw precondition_error("euler_phi requires a positive integer");
    std::int64_t out = 1;
    for (const auto& [p, e] : factorize(m)) out = checked_mul(out, checked_pow(p, e - 1) * (p - 1));
    return out;
}

/// Semiperiod of the Fibonacci sequence mod n with seeds f0 = 1, f1 = 0 and
/// f_{k+1} = f_k + f_{k-1}: the smallest k >= 1 with
/// (f_k, f_{k+1}) == +-(1, 0) mod n, the same sign on both coordinates.
/// Note the seeds differ from the usual Fibonacci convention by one position.
inline std::int64_t fibonacci_semiperiod(level n) {
    const std::int64_t m = n.value();
    std::int64_t prev = 1, cur = 0; // (f_0, f_1)
    const std::int64_t bound = 6 * m * m + 2; // classical Pisano-period bound
    for (std::int64_t k = 1; k <= bound; ++k) {
        const std::int64_t next = (prev + cur) % m;
        prev = std::exchange(cur, next); // now (f_k, f_{k+1})
        if (cur == 0 && (prev == 1 || prev == m - 1)) return k;
    }
    throw arithmetic_error("fibonacci_semiperiod: scan exceeded the Pisano bound");
}

} // namespace fareymap
