#pragma once

/**
 * Petrie (zig-zag) paths on the level-n map.
 *
 * A Petrie path turns alternately left and right: from dart e the next dart is
 * sigma_inv(alpha(e)) on even steps and sigma(alpha(e)) on odd steps. The
 * first turn is pinned so that the traversal started on the dart (1/0 -> 0/1)
 * visits the vertices f_{k-1}/f_k of the Fibonacci sequence with seeds
 * f0 = 1, f1 = 0; the closed length is the Fibonacci semiperiod of n.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "fareymap/errors.hpp"
#include "fareymap/fraction.hpp"
#include "fareymap/map.hpp"
#include "fareymap/modular.hpp"

namespace fareymap {

struct petrie_path {
    std::vector<farey_fraction> vertices; // one entry per edge; the path closes back to front()
    bool closed = false;
    std::int64_t length = 0; // number of edges of the closed polygon
};

/// Traverses the Petrie polygon through start. Closure is detected when the
/// (dart, turn-parity) state recurs, not when a vertex recurs; at level 2 the
/// two turn directions coincide (valency 2), so parity is ignored there.
inline petrie_path petrie_path_from(const combinatorial_map& m, combinatorial_map::dart_id start) {
    if (start < 0 || start >= m.dart_count()) throw precondition_error("start dart out of range");
    const bool parity_matters = m.level_value() > 2;
    petrie_path path;
    path.vertices.push_back(m.from(start));

    combinatorial_map::dart_id e = start;
    int parity = 0;
    const std::int64_t bound = 2 * m.dart_count() + 1;
    for (std::int64_t steps = 1; steps <= bound; ++steps) {
        const auto reversed = m.alpha(e);
        e = parity == 0 ? m.sigma_inv(reversed) : m.sigma(reversed);
        if (parity_matters) parity ^= 1;
        if (e == start && parity == 0) {
            path.closed = true;
            path.length = steps;
            return path;
        }
        path.vertices.push_back(m.from(e));
    }
    throw arithmetic_error("petrie traversal failed to close"); // unreachable on a finite map
}

inline petrie_path petrie_path_from(const combinatorial_map& m, const farey_fraction& u,
                                    const farey_fraction& v) {
    return petrie_path_from(m, m.find_dart(u, v));
}

/// The k-th vertex (k >= 1) of the Petrie path through (1/0 -> 0/1):
/// f_{k-1}/f_k mod n with f0 = 1, f1 = 0. Consecutive Fibonacci pairs are
/// coprime, so this is always a valid vertex.
inline farey_fraction fibonacci_vertex(std::int64_t k, level n) {
    if (k < 1) throw precondition_error("fibonacci_vertex is indexed from k = 1");
    const std::int64_t m = n.value();
    std::int64_t prev = 1, cur = 0; // (f_0, f_1)
    for (std::int64_t i = 1; i < k; ++i) prev = std::exchange(cur, (prev + cur) % m);
    return farey_fraction::make(prev, cur, n);
}

/// Petrie length of the level-n map: the Fibonacci semiperiod. When the map is
/// small enough to build explicitly the traversal length is cross-checked.
inline std::int64_t petrie_length(level n, std::int64_t crosscheck_dart_cap = 1'000'000) {
    const std::int64_t semiperiod = fibonacci_semiperiod(n);
    if (mu(n) <= crosscheck_dart_cap) {
        const auto m = build_map(n, crosscheck_dart_cap);
        const auto path = petrie_path_from(m, m.base_dart());
        if (path.length != semiperiod)
            throw arithmetic_error("petrie traversal length disagrees with the Fibonacci semiperiod");
    }
    return semiperiod;
}

} // namespace fareymap
