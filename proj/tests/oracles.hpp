#pragma once

// Brute-force oracles for the test suite. These deliberately avoid the library
// code paths they are used to check: everything here works on raw residue
// pairs with its own loops.

#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracles {

inline std::int64_t reduce(std::int64_t a, std::int64_t n) {
    a %= n;
    return a < 0 ? a + n : a;
}

// Canonical +- class representatives of all valid vertex pairs at level n.
inline std::vector<std::pair<std::int64_t, std::int64_t>> vertex_classes(std::int64_t n) {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t a = 0; a < n; ++a) {
        for (std::int64_t c = 0; c < n; ++c) {
            if (std::gcd(std::gcd(a, c), n) != 1) continue;
            const auto rep = std::pair(a, c);
            const auto neg = std::pair(reduce(-a, n), reduce(-c, n));
            out.insert(std::min(rep, neg));
        }
    }
    return {out.begin(), out.end()};
}

inline bool pairs_adjacent(std::pair<std::int64_t, std::int64_t> u,
                           std::pair<std::int64_t, std::int64_t> v, std::int64_t n) {
    const std::int64_t det = reduce(u.first * v.second - v.first * u.second, n);
    return det == 1 || det == n - 1;
}

// Number of ordered adjacent vertex pairs (= darts) at level n.
inline std::int64_t dart_count(std::int64_t n) {
    const auto classes = vertex_classes(n);
    std::int64_t count = 0;
    for (const auto& u : classes)
        for (const auto& v : classes)
            if (pairs_adjacent(u, v, n)) ++count;
    return count;
}

// Full period of the Fibonacci pair sequence mod n with seeds (1, 0): the
// smallest k >= 1 with (f_k, f_{k+1}) == (1, 0) exactly (no sign freedom).
inline std::int64_t fibonacci_pair_period(std::int64_t n) {
    std::int64_t prev = 1, cur = 0;
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t next = (prev + cur) % n;
        prev = cur;
        cur = next;
        if (prev == 1 % n && cur == 0) return k;
    }
}

// Equality of cyclic sequences: b is some rotation of a (reversal is not
// accepted).
template <typename T>
inline bool cyclically_equal(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const std::size_t len = a.size();
    for (std::size_t shift = 0; shift < len; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < len && match; ++i) match = a[(i + shift) % len] == b[i];
        if (match) return true;
    }
    return false;
}

} // namespace oracles
