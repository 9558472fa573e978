#pragma once

/**
 * Graphical distance on the level-n map: the BFS oracle, poles, diameter, the
 * distance-two divisibility criterion, the prime-level distance trichotomy,
 * and the disjoint star decomposition at odd prime levels.
 *
 * The closed-form classifiers are independent of the BFS oracle; the tests
 * check them against each other exhaustively.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "fareymap/errors.hpp"
#include "fareymap/fraction.hpp"
#include "fareymap/graph.hpp"
#include "fareymap/map.hpp"
#include "fareymap/modular.hpp"

namespace fareymap {

/// Distance between two vertices; never exceeds three on any level-n map.
enum class distance_class : int {
    same = 0,
    adjacent = 1,
    two = 2,
    three = 3,
};

/// The poles of the level-n map: the vertices of the form a/0.
struct pole_set {
    level map_level;
    std::vector<farey_fraction> poles;
};

/// Exact shortest-path distance by breadth-first search. This is the oracle
/// all distance theorems are verified against.
inline std::int64_t bfs_distance(level n, const farey_fraction& u, const farey_fraction& v,
                                 std::int64_t max_level = default_level_cap) {
    require_level_within(n, max_level);
    const auto g = build_graph(n);
    return g.distance(g.index_of(u), g.index_of(v));
}

/// Maximum pairwise distance, by BFS from every vertex. Equals 1, 1, 2 at
/// levels 2, 3, 4 and 3 from level 5 on.
inline std::int64_t diameter(level n, std::int64_t max_level = default_level_cap) {
    require_level_within(n, max_level);
    return build_graph(n).diameter();
}

/// All canonical poles a/0 with gcd(a, n) = 1. There are phi(n)/2 of them for
/// n > 2 and a single pole 1/0 at level 2.
inline pole_set poles(level n) {
    const std::int64_t m = n.value();
    pole_set out{n, {}};
    for (std::int64_t a = 1; 2 * a <= m; ++a)
        if (std::gcd(a, m) == 1) out.poles.push_back(farey_fraction::make(a, 0, n));
    return out;
}

/// Distance-two criterion for a vertex b/d with d not congruent to +-1:
/// the distance from 1/0 to b/d is two exactly when gcd(d, n) divides b + 1
/// or b - 1. Evaluated on residue representatives; the answer only depends on
/// the class of b/d.
inline bool distance2_criterion(level n, std::int64_t b, std::int64_t d) {
    const std::int64_t m = n.value();
    b = mod_reduce(b, m);
    d = mod_reduce(d, m);
    (void)farey_fraction::make(b, d, n); // must be a valid vertex
    if (d == 1 || d == m - 1)
        throw precondition_error("distance2_criterion requires d not congruent to +-1 mod n");
    const std::int64_t g = std::gcd(d, m); // gcd(0, n) = n handles the poles
    return (b + 1) % g == 0 || (b + g - 1) % g == 0;
}

/// Full distance classification at a prime level p >= 5 from the determinant
/// delta = a*d - b*c of the two vertices: adjacent when delta is +-1, distance
/// three when delta is 0, distance two otherwise. Levels 2 and 3 have diameter
/// one, where the trichotomy degenerates; they are delegated to BFS.
inline distance_class classify_distance_prime(level p, const farey_fraction& u,
                                              const farey_fraction& v,
                                              std::int64_t max_level = default_level_cap) {
    const std::int64_t m = p.value();
    if (!is_prime(m)) throw not_prime("classify_distance_prime requires a prime level");
    if (u.modulus() != m || v.modulus() != m)
        throw level_mismatch("vertices do not match the classifier level");
    if (u == v) return distance_class::same;
    if (m <= 3) return static_cast<distance_class>(bfs_distance(p, u, v, max_level));
    const std::int64_t delta = determinant_mod(u, v);
    if (delta == 1 || delta == m - 1) return distance_class::adjacent;
    if (delta == 0) return distance_class::three;
    return distance_class::two;
}

/// For an odd prime p, the stars of the poles 1/0, 2/0, ..., ((p-1)/2)/0 are
/// pairwise disjoint and cover every vertex. Returns (pole, neighbours) pairs
/// and verifies the partition before returning.
inline std::vector<std::pair<farey_fraction, std::vector<farey_fraction>>>
star_decomposition(level p) {
    const std::int64_t m = p.value();
    if (m == 2 || !is_prime(m)) throw not_prime("star_decomposition requires an odd prime level");
    std::vector<std::pair<farey_fraction, std::vector<farey_fraction>>> out;
    std::vector<farey_fraction> covered;
    for (std::int64_t k = 1; k <= (m - 1) / 2; ++k) {
        const auto pole = farey_fraction::make(k, 0, p);
        auto neighbors = star(pole);
        covered.push_back(pole);
        covered.insert(covered.end(), neighbors.begin(), neighbors.end());
        out.emplace_back(pole, std::move(neighbors));
    }
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
        throw arithmetic_error("star decomposition: stars are not disjoint");
    if (static_cast<std::int64_t>(covered.size()) != vertex_count(p))
        throw arithmetic_error("star decomposition: stars do not cover the vertex set");
    return out;
}

/// The explicit length-three path 1/0 -> 0/1 -> 1/(a^-1) -> a/0 to the pole
/// a/0, for a a unit with a not congruent to +-1.
inline std::array<farey_fraction, 4> path_witness_distance3(level n, std::int64_t a) {
    const std::int64_t m = n.value();
    a = mod_reduce(a, m);
    if (std::gcd(a, m) != 1) throw precondition_error("path witness requires gcd(a, n) = 1");
    if (a == 1 || a == m - 1)
        throw precondition_error("path witness requires a not congruent to +-1 mod n");
    const std::int64_t a_inv = mod_inverse(a, m);
    const std::array<farey_fraction, 4> path{
        farey_fraction::make(1, 0, n),
        farey_fraction::make(0, 1, n),
        farey_fraction::make(1, a_inv, n),
        farey_fraction::make(a, 0, n),
    };
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!adjacent(path[i], path[i + 1]))
            throw arithmetic_error("distance-three witness path is broken");
    return path;
}

} // namespace fareymap
