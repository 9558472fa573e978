// Acceptance suite: runs every top-level correctness criterion end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero if any criterion
// fails or exceeds its time budget.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fareymap/fareymap.hpp"

using namespace fareymap;

namespace {

int failures = 0;

using body_fn = std::function<bool(std::string&)>;

void criterion(int number, const std::string& title, double time_limit_s, const body_fn& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && elapsed > time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("time budget of ") +
                  std::to_string(time_limit_s) + " s exceeded";
    }
    if (!ok) ++failures;
    std::printf("criterion %d [%s] %s (%.2f s)%s%s\n", number, ok ? "PASS" : "FAIL", title.c_str(),
                elapsed, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

farey_fraction frac(std::int64_t a, std::int64_t c, std::int64_t n) {
    return farey_fraction::make(a, c, level(n));
}

std::vector<farey_fraction> classes(const std::vector<std::pair<int, int>>& raw, std::int64_t n) {
    std::vector<farey_fraction> out;
    for (const auto& [a, c] : raw) out.push_back(frac(a, c, n));
    return out;
}

bool cyclically_equal(const std::vector<farey_fraction>& a, const std::vector<farey_fraction>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t shift = 0; shift < a.size(); ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < a.size() && match; ++i) match = a[(i + shift) % a.size()] == b[i];
        if (match) return true;
    }
    return false;
}

// Reference vertex lists for levels 2..8, transcribed fraction by fraction.
const std::vector<std::vector<std::pair<int, int>>> reference_vertices = {
    /* n=2 */ {{1, 0}, {0, 1}, {1, 1}},
    /* n=3 */ {{1, 0}, {0, 1}, {1, 1}, {2, 1}},
    /* n=4 */ {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {1, 2}},
    /* n=5 */
    {{1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 2}},
    /* n=6 */
    {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {1, 2}, {3, 2}, {5, 2}, {1, 3}, {2, 3}},
    /* n=7 */
    {{1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {0, 2}, {1, 2},
     {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}, {4, 3}, {5, 3}, {6, 3}},
    /* n=8 */
    {{1, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {1, 2}, {3, 2},
     {5, 2}, {7, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}, {4, 3}, {5, 3}, {6, 3}, {7, 3}, {1, 4}, {3, 4}},
};

bool criterion1_statistics(std::string& detail) {
    const std::vector<map_statistics> expected = {
        {6, 3, 2, 3, 2, 0},        {12, 6, 4, 4, 3, 0},   {24, 12, 8, 6, 4, 0},
        {60, 30, 20, 12, 5, 0},    {72, 36, 24, 12, 6, 1}, {168, 84, 56, 24, 7, 3},
        {192, 96, 64, 24, 8, 5},
    };
    for (std::int64_t n = 2; n <= 8; ++n) {
        const auto& want = expected[static_cast<std::size_t>(n - 2)];
        if (statistics(level(n)) != want) {
            detail = "formula statistics differ at n=" + std::to_string(n);
            return false;
        }
        if (build_map(level(n)).orbit_statistics() != want) {
            detail = "built map statistics differ at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n=2..8: (darts,edges,faces,vertices,genus) incl. triangle/tetrahedron/"
             "octahedron/icosahedron and the level-8 counts (96 edges, 64 faces, 24 vertices)";
    return true;
}

bool criterion2_vertex_lists(std::string& detail) {
    for (std::int64_t n = 2; n <= 8; ++n) {
        const auto& raw = reference_vertices[static_cast<std::size_t>(n - 2)];
        std::set<farey_fraction> expected;
        for (const auto& [a, c] : raw) expected.insert(frac(a, c, n));
        const auto verts = enumerate_vertices(level(n));
        const std::set<farey_fraction> actual(verts.begin(), verts.end());
        if (expected.size() != raw.size()) {
            detail = "reference list at n=" + std::to_string(n) + " has duplicate classes";
            return false;
        }
        if (expected != actual) {
            detail = "vertex set mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "canonical vertex sets reproduce the reference lists for n=2..8";
    return true;
}

bool criterion3_stars(std::string& detail) {
    const auto star7 = star(frac(3, 5, 7));
    const auto ref7 = classes({{0, 5}, {3, 3}, {6, 1}, {2, 6}, {5, 4}, {1, 2}, {4, 0}}, 7);
    if (!cyclically_equal(star7, ref7)) {
        detail = "star(3/5) at n=7 is not a rotation of the reference list";
        return false;
    }
    auto ref7_reversed = ref7;
    std::reverse(ref7_reversed.begin(), ref7_reversed.end());
    if (cyclically_equal(star7, ref7_reversed)) {
        detail = "star(3/5) at n=7 unexpectedly matches its own reversal";
        return false;
    }

    // The reference list for star(1/2) at n=8 was generated from the
    // completion (b, d) = (2, 3), whose determinant is -1 mod 8; a valid
    // determinant-one lift traverses the same neighbour set in the opposite
    // rotational sense. The oriented expectation is therefore the reversal.
    const auto star8 = star(frac(1, 2, 8));
    const auto ref8 = classes({{2, 3}, {3, 5}, {4, 7}, {5, 1}, {6, 3}, {7, 5}, {0, 7}, {1, 1}}, 8);
    if (mod_reduce(1 * 3 - 2 * 2, 8) != 7) {
        detail = "reference completion for star(1/2) at n=8 does not have determinant -1";
        return false;
    }
    if (std::set<farey_fraction>(star8.begin(), star8.end()) !=
        std::set<farey_fraction>(ref8.begin(), ref8.end())) {
        detail = "star(1/2) at n=8 has the wrong neighbour set";
        return false;
    }
    auto ref8_oriented = ref8;
    std::reverse(ref8_oriented.begin(), ref8_oriented.end());
    if (!cyclically_equal(star8, ref8_oriented)) {
        detail = "star(1/2) at n=8 is not a rotation of the orientation-corrected reference";
        return false;
    }
    if (cyclically_equal(star8, ref8)) {
        detail = "star(1/2) at n=8 matches the determinant-minus-one ordering";
        return false;
    }
    detail = "7- and 8-element cyclic star lists match up to rotation (level-8 reference "
             "orientation-corrected: its printed completion has determinant -1)";
    return true;
}

bool criterion4_petrie(std::string& detail) {
    if (fibonacci_semiperiod(level(7)) != 8 || fibonacci_semiperiod(level(8)) != 12) {
        detail = "sigma(7) or sigma(8) wrong";
        return false;
    }
    const auto m7 = build_map(level(7));
    const auto golden = petrie_path_from(m7, m7.base_dart());
    const auto expected7 = classes({{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 1}, {1, 6}}, 7);
    if (golden.vertices != expected7 || golden.length != 8) {
        detail = "level-7 Petrie polygon does not match the reference vertex sequence";
        return false;
    }
    for (std::int64_t n = 2; n <= 30; ++n) {
        const auto m = build_map(level(n));
        const std::int64_t sigma_n = fibonacci_semiperiod(level(n));
        for (std::int32_t d = 0; d < m.dart_count(); ++d) {
            const auto path = petrie_path_from(m, d);
            if (!path.closed || path.length != sigma_n) {
                detail = "petrie length mismatch at n=" + std::to_string(n) + ", dart " +
                         std::to_string(d);
                return false;
            }
        }
    }
    detail = "every start dart closes with length sigma(n) for n=2..30; level-7 polygon exact";
    return true;
}

bool criterion5_distances(std::string& detail) {
    std::vector<std::string> issues;
    for (std::int64_t n = 2; n <= 100; ++n) {
        const auto g = build_graph(level(n));
        const auto& verts = g.vertices();
        // stated expectation: 1, 1, 2 at n = 2, 3, 4 and 3 for every n >= 5
        const std::int64_t expected_diameter = n <= 3 ? 1 : n == 4 ? 2 : 3;
        std::vector<std::int8_t> dist;

        // (a) exhaustive BFS diameter
        const std::int64_t observed_diameter = g.diameter();
        if (observed_diameter != expected_diameter) {
            issues.push_back("exhaustive BFS gives diameter " + std::to_string(observed_diameter) +
                             ", expected " + std::to_string(expected_diameter) + " at n=" +
                             std::to_string(n));
        }

        // (b) pairwise pole distances
        if (n >= 5) {
            std::vector<std::int32_t> pole_indices;
            for (const auto& p : poles(level(n)).poles) pole_indices.push_back(g.index_of(p));
            for (const auto src : pole_indices) {
                g.distances_from(src, dist);
                for (const auto other : pole_indices) {
                    if (other == src) continue;
                    if (dist[static_cast<std::size_t>(other)] != 3)
                        issues.push_back("pole pair not at distance 3 at n=" + std::to_string(n));
                }
            }
        }

        // (c) prime trichotomy against the BFS oracle, all pairs
        if (is_prime(n) && n % 2 == 1 && n <= 23) {
            for (std::int32_t src = 0; src < g.vertex_count(); ++src) {
                g.distances_from(src, dist);
                for (std::int32_t j = 0; j < g.vertex_count(); ++j) {
                    const auto cls = classify_distance_prime(level(n), verts[static_cast<std::size_t>(src)],
                                                             verts[static_cast<std::size_t>(j)]);
                    if (static_cast<int>(cls) != dist[static_cast<std::size_t>(j)])
                        issues.push_back("trichotomy mismatch at p=" + std::to_string(n));
                }
            }
        }
        // (d) distance-2 criterion against BFS for every applicable representative
        if (n <= 50) {
            const auto one_zero = frac(1, 0, n);
            g.distances_from(g.index_of(one_zero), dist);
            for (std::int64_t b = 0; b < n; ++b) {
                for (std::int64_t d = 0; d < n; ++d) {
                    if (std::gcd(std::gcd(b, d), n) != 1) continue;
                    if (d == 1 || d == n - 1) continue;
                    const auto v = frac(b, d, n);
                    if (v == one_zero) continue;
                    const bool at_two = dist[static_cast<std::size_t>(g.index_of(v))] == 2;
                    if (distance2_criterion(level(n), b, d) != at_two)
                        issues.push_back("distance-2 criterion mismatch at n=" + std::to_string(n) +
                                         ", " + std::to_string(b) + "/" + std::to_string(d));
                }
            }
        }
    }
    if (!issues.empty()) {
        detail = issues.front();
        if (issues.size() > 1) detail += " (+" + std::to_string(issues.size() - 1) + " more)";
        detail += "; all other distance checks up to n=100 pass";
        return false;
    }
    detail = "diameters as stated up to n=100 (exhaustive BFS); poles pairwise at 3; "
             "trichotomy exact for odd primes <= 23; distance-2 criterion exact for n <= 50";
    return true;
}

bool criterion6_star_decomposition(std::string& detail) {
    for (std::int64_t p = 3; p <= 23; ++p) {
        if (!is_prime(p) || p == 2) continue;
        const auto stars = star_decomposition(level(p)); // throws if not a partition
        if (static_cast<std::int64_t>(stars.size()) != (p - 1) / 2) {
            detail = "wrong number of stars at p=" + std::to_string(p);
            return false;
        }
        std::set<farey_fraction> covered;
        for (const auto& [pole, neighbors] : stars) {
            if (static_cast<std::int64_t>(neighbors.size()) != p) {
                detail = "star with wrong neighbour count at p=" + std::to_string(p);
                return false;
            }
            covered.insert(pole);
            covered.insert(neighbors.begin(), neighbors.end());
            if (static_cast<std::int64_t>(covered.size()) % (p + 1) != 0) {
                detail = "overlapping stars at p=" + std::to_string(p);
                return false;
            }
        }
        if (static_cast<std::int64_t>(covered.size()) != vertex_count(level(p)) ||
            covered.size() != stars.size() * static_cast<std::size_t>(p + 1)) {
            detail = "stars do not partition the vertex set at p=" + std::to_string(p);
            return false;
        }
    }
    detail = "for odd primes p <= 23: (p-1)/2 disjoint stars of p+1 vertices each cover all "
             "(p^2-1)/2 vertices";
    return true;
}

bool criterion7_regularity(std::string& detail) {
    for (std::int64_t n = 2; n <= 12; ++n) {
        const auto group = enumerate_group(level(n));
        const auto m = build_map(level(n));
        if (static_cast<std::int64_t>(group.size()) != mu(level(n)) ||
            m.dart_count() != mu(level(n))) {
            detail = "group order != mu != dart count at n=" + std::to_string(n);
            return false;
        }
        // free transitive action: dart representatives biject onto the group
        std::vector<psl2_element> reps;
        reps.reserve(static_cast<std::size_t>(m.dart_count()));
        for (std::int32_t d = 0; d < m.dart_count(); ++d) reps.push_back(m.dart_representative(d));
        std::sort(reps.begin(), reps.end());
        if (std::adjacent_find(reps.begin(), reps.end()) != reps.end() ||
            !std::equal(reps.begin(), reps.end(), group.begin(), group.end())) {
            detail = "dart action is not free and transitive at n=" + std::to_string(n);
            return false;
        }
        // stabilizer of 1/0: cyclic of order n generated by U
        const auto stab = stabilizer_of_infinity(level(n));
        const std::int64_t expected_order = n == 2 ? 2 : n;
        std::set<psl2_element> powers;
        auto cur = psl2_element::identity(level(n));
        for (std::int64_t k = 0; k < expected_order; ++k) {
            powers.insert(cur);
            cur = cur * psl2_element::shear_u(level(n));
        }
        if (static_cast<std::int64_t>(stab.size()) != expected_order ||
            std::set<psl2_element>(stab.begin(), stab.end()) != powers) {
            detail = "stabilizer of 1/0 is not <U> at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "n<=12: |group| = mu(n) = #darts, dart action free and transitive, stabilizer = <U>";
    return true;
}

bool criterion8_properties(std::string& detail) {
    std::mt19937_64 rng(987654321);
    for (std::int64_t n = 2; n <= 30; ++n) {
        const auto m = build_map(level(n));
        const auto st = m.orbit_statistics();
        if (st.vertices - st.edges + st.faces != 2 - 2 * genus(level(n)) ||
            st.genus != genus(level(n))) {
            detail = "Euler identity fails at n=" + std::to_string(n);
            return false;
        }
        for (std::int32_t d = 0; d < m.dart_count(); ++d) {
            if (m.alpha(d) == d || m.alpha(m.alpha(d)) != d) {
                detail = "alpha is not a fixed-point-free involution at n=" + std::to_string(n);
                return false;
            }
            if (m.phi(m.phi(m.phi(d))) != d) {
                detail = "phi^3 != id at n=" + std::to_string(n);
                return false;
            }
        }
        // valency and rotation-star consistency
        for (const auto& v : m.vertices()) {
            auto s = star(v);
            if (static_cast<std::int64_t>(s.size()) != n) {
                detail = "valency != n at n=" + std::to_string(n);
                return false;
            }
            auto d = m.find_dart(v, s[0]);
            for (std::size_t k = 0; k < s.size(); ++k) {
                if (m.from(d) != v || m.to(d) != s[k] || !adjacent(v, s[k])) {
                    detail = "rotation does not follow the star at n=" + std::to_string(n);
                    return false;
                }
                d = m.sigma(d);
            }
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
                detail = "repeated star entry at n=" + std::to_string(n);
                return false;
            }
        }
        // adjacency is invariant under sampled group elements
        std::uniform_int_distribution<int> coin(0, 1);
        for (int trial = 0; trial < 3; ++trial) {
            auto t = psl2_element::identity(level(n));
            for (int i = 0; i < 10; ++i)
                t = t * (coin(rng) ? psl2_element::shear_u(level(n))
                                   : psl2_element::rotation_x(level(n)));
            for (std::int32_t d = 0; d < m.dart_count(); ++d) {
                if (!adjacent(t.act(m.from(d)), t.act(m.to(d)))) {
                    detail = "group action broke adjacency at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    detail = "Euler identity, phi^3=id, alpha involution, valency, rotation-star consistency, "
             "adjacency invariance for n=2..30";
    return true;
}

bool criterion9_determinism(std::string& detail) {
    for (const auto fmt :
         {export_format::dot, export_format::graphml, export_format::json, export_format::csv}) {
        if (export_graph(level(7), fmt) != export_graph(level(7), fmt)) {
            detail = "export_graph output differs between invocations";
            return false;
        }
    }
    render_spec spec;
    spec.max_denominator = 7;
    if (render_universal_farey(spec) != render_universal_farey(spec)) {
        detail = "render output differs between invocations";
        return false;
    }
    detail = "repeated export_graph and render invocations are byte-identical";
    return true;
}

} // namespace

int main() {
    criterion(1, "golden statistics table, formulas vs built maps (n=2..8)", 1.0,
              criterion1_statistics);
    criterion(2, "vertex-list reproduction (n=2..8)", 0, criterion2_vertex_lists);
    criterion(3, "star examples at n=7 and n=8, cyclic rotation only", 0, criterion3_stars);
    criterion(4, "Petrie lengths = sigma(n), every dart, n=2..30", 10.0, criterion4_petrie);
    criterion(5, "distance theorems by exhaustive BFS (n<=100)", 60.0, criterion5_distances);
    criterion(6, "disjoint star decomposition, odd primes p<=23", 0, criterion6_star_decomposition);
    criterion(7, "group order, free transitive dart action, stabilizer (n<=12)", 0,
              criterion7_regularity);
    criterion(8, "oracle-independence property suite (n<=30)", 30.0, criterion8_properties);
    criterion(9, "deterministic export and render", 0, criterion9_determinism);

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
