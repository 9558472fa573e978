#pragma once

/**
 * The level-n Farey map as a combinatorial map.
 *
 * Darts are ordered adjacent vertex pairs, one dart (v, k) for the k-th entry
 * of the star of v. The vertex rotation sigma advances k cyclically, following
 * the arithmetic-progression star (a*k + b)/(c*k + d) built from a
 * determinant-one lift (b, d) of the vertex a/c. The edge involution alpha
 * reverses darts. Faces are the orbits of phi = alpha after sigma: advancing
 * the star by one step lands on the mediant of the dart's columns, so every
 * orbit is a triangle {a/c, b/d, (a+b)/(c+d)}.
 *
 * Each dart carries a determinant-one matrix representative whose columns are
 * its endpoints; this realises the bijection between darts and the level-n
 * projective matrix group.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "fareymap/errors.hpp"
#include "fareymap/fraction.hpp"
#include "fareymap/graph.hpp"
#include "fareymap/modular.hpp"
#include "fareymap/psl2.hpp"

namespace fareymap {

inline constexpr std::int64_t default_dart_cap = 10'000'000;

/// The neighbours of v in cyclic rotation order: (a*k + b)/(c*k + d) for
/// k = 0..n-1, with (b, d) the unimodular lift of v = a/c. A different valid
/// lift rotates the list; the cyclic order is lift-independent.
inline std::vector<farey_fraction> star(const farey_fraction& v) {
    const std::int64_t n = v.modulus(), a = v.num(), c = v.den();
    const auto [b, d] = lift_to_unimodular(v);
    std::vector<farey_fraction> out;
    out.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k)
        out.push_back(farey_fraction::make(a * k + b, c * k + d, level(n)));
    return out;
}

class combinatorial_map {
public:
    using dart_id = std::int32_t;

    static combinatorial_map build(level n, std::int64_t dart_cap = default_dart_cap) {
        if (mu(n) > dart_cap)
            throw too_large("map at level " + std::to_string(n.value()) +
                            " exceeds the dart cap of " + std::to_string(dart_cap));
        return combinatorial_map(n);
    }

    std::int64_t level_value() const { return n_; }
    std::int64_t valency() const { return n_; }
    std::int64_t dart_count() const { return static_cast<std::int64_t>(to_vertex_.size()); }
    std::int64_t face_count() const { return face_count_; }
    const std::vector<farey_fraction>& vertices() const { return vertices_; }

    std::int32_t vertex_index(const farey_fraction& v) const {
        if (v.modulus() != n_) throw level_mismatch("vertex level does not match map level");
        const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v)
            throw invalid_vertex("vertex " + v.str() + " not found in map");
        return static_cast<std::int32_t>(it - vertices_.begin());
    }

    const farey_fraction& from(dart_id d) const { return vertices_[static_cast<std::size_t>(d / n_)]; }
    const farey_fraction& to(dart_id d) const {
        return vertices_[static_cast<std::size_t>(to_vertex_[static_cast<std::size_t>(d)])];
    }

    dart_id sigma(dart_id d) const {
        const std::int64_t v = d / n_, k = d % n_;
        return static_cast<dart_id>(v * n_ + (k + 1) % n_);
    }

    dart_id sigma_inv(dart_id d) const {
        const std::int64_t v = d / n_, k = d % n_;
        return static_cast<dart_id>(v * n_ + (k + n_ - 1) % n_);
    }

    dart_id alpha(dart_id d) const { return alpha_[static_cast<std::size_t>(d)]; }

    /// Next dart around the face of d. The composition order (alpha after
    /// sigma) is the one whose faces are the mediant triangles; the reverse
    /// composition also has order 3 but walks the anti-mediant triangles.
    dart_id phi(dart_id d) const { return alpha(sigma(d)); }

    std::int32_t face_of(dart_id d) const { return face_id_[static_cast<std::size_t>(d)]; }

    /// Face orbits as dart triples (d, phi(d), phi^2(d)), ordered by their
    /// smallest dart id.
    std::vector<std::array<dart_id, 3>> faces() const {
        std::vector<std::array<dart_id, 3>> out;
        out.reserve(static_cast<std::size_t>(face_count_));
        std::vector<bool> seen(to_vertex_.size(), false);
        for (dart_id d = 0; d < static_cast<dart_id>(to_vertex_.size()); ++d) {
            if (seen[static_cast<std::size_t>(d)]) continue;
            const dart_id e = phi(d), f = phi(e);
            seen[static_cast<std::size_t>(d)] = seen[static_cast<std::size_t>(e)] =
                seen[static_cast<std::size_t>(f)] = true;
            out.push_back({d, e, f});
        }
        return out;
    }

    /// The determinant-one matrix whose columns are from(d) and to(d).
    psl2_element dart_representative(dart_id d) const {
        const std::int64_t v = d / n_, k = d % n_;
        const std::int64_t a = vertices_[static_cast<std::size_t>(v)].num();
        const std::int64_t c = vertices_[static_cast<std::size_t>(v)].den();
        const auto [b, dd] = lifts_[static_cast<std::size_t>(v)];
        return psl2_element::make(a, a * k + b, c, c * k + dd, level(n_));
    }

    dart_id find_dart(const farey_fraction& u, const farey_fraction& v) const {
        const std::int64_t i = vertex_index(u);
        const std::int32_t j = vertex_index(v);
        for (std::int64_t k = 0; k < n_; ++k)
            if (to_vertex_[static_cast<std::size_t>(i * n_ + k)] == j)
                return static_cast<dart_id>(i * n_ + k);
        throw precondition_error("no dart from " + u.str() + " to " + v.str() +
                                 ": vertices are not adjacent");
    }

    /// The dart (1/0 -> 0/1), the reference dart of the matrix bijection.
    dart_id base_dart() const {
        return find_dart(farey_fraction::make(1, 0, level(n_)), farey_fraction::make(0, 1, level(n_)));
    }

    /// Counts derived from the built permutations (vertex enumeration, alpha
    /// orbits, phi orbits) plus the genus from the Euler characteristic.
    map_statistics orbit_statistics() const {
        map_statistics st;
        st.darts = dart_count();
        st.edges = st.darts / 2;
        st.faces = face_count_;
        st.vertices = static_cast<std::int64_t>(vertices_.size());
        st.valency = n_;
        const std::int64_t chi = st.vertices - st.edges + st.faces;
        if ((2 - chi) % 2 != 0) throw arithmetic_error("odd Euler characteristic defect");
        st.genus = (2 - chi) / 2;
        return st;
    }

    /// The simple graph on the same vertices with the dart targets as
    /// adjacency rows.
    farey_graph underlying_graph() const { return farey_graph(level(n_), vertices_, to_vertex_); }

private:
    explicit combinatorial_map(level n) : n_(n.value()) {
        vertices_ = enumerate_vertices(n);
        const std::int64_t nv = static_cast<std::int64_t>(vertices_.size());
        const std::int64_t darts = nv * n_;

        lifts_.reserve(static_cast<std::size_t>(nv));
        for (const auto& v : vertices_) {
            const auto lift = lift_to_unimodular(v);
            lifts_.push_back({lift.b, lift.d});
        }

        to_vertex_.resize(static_cast<std::size_t>(darts));
        for (std::int64_t i = 0; i < nv; ++i) {
            const std::int64_t a = vertices_[static_cast<std::size_t>(i)].num();
            const std::int64_t c = vertices_[static_cast<std::size_t>(i)].den();
            const auto [b, d] = lifts_[static_cast<std::size_t>(i)];
            for (std::int64_t k = 0; k < n_; ++k) {
                const auto w = farey_fraction::make(a * k + b, c * k + d, n);
                to_vertex_[static_cast<std::size_t>(i * n_ + k)] = vertex_index(w);
            }
        }

        build_alpha(darts);
        build_faces(darts);
    }

    void build_alpha(std::int64_t darts) {
        alpha_.assign(static_cast<std::size_t>(darts), -1);
        for (std::int64_t d = 0; d < darts; ++d) {
            const std::int32_t v = static_cast<std::int32_t>(d / n_);
            const std::int32_t w = to_vertex_[static_cast<std::size_t>(d)];
            dart_id reverse = -1;
            for (std::int64_t k = 0; k < n_; ++k) {
                if (to_vertex_[static_cast<std::size_t>(w * n_ + k)] == v) {
                    reverse = static_cast<dart_id>(w * n_ + k);
                    break;
                }
            }
            if (reverse < 0) throw arithmetic_error("edge involution: reverse dart not found");
            alpha_[static_cast<std::size_t>(d)] = reverse;
        }
        for (std::int64_t d = 0; d < darts; ++d) {
            const dart_id r = alpha_[static_cast<std::size_t>(d)];
            if (r == d || alpha_[static_cast<std::size_t>(r)] != d)
                throw arithmetic_error("edge involution is not a fixed-point-free involution");
        }
    }

    void build_faces(std::int64_t darts) {
        if (darts % 3 != 0) throw arithmetic_error("dart count not divisible by 3");
        face_id_.assign(static_cast<std::size_t>(darts), -1);
        std::int32_t next_face = 0;
        for (dart_id d = 0; d < static_cast<dart_id>(darts); ++d) {
            if (face_id_[static_cast<std::size_t>(d)] >= 0) continue;
            const dart_id e = phi(d), f = phi(e);
            if (phi(f) != d || e == d || f == d || e == f)
                throw arithmetic_error("face orbit is not a triangle");
            // the three corner vertices must be distinct and pairwise adjacent
            const auto& u0 = from(d);
            const auto& u1 = from(e);
            const auto& u2 = from(f);
            if (!adjacent(u0, u1) || !adjacent(u1, u2) || !adjacent(u2, u0))
                throw arithmetic_error("face corners are not pairwise adjacent");
            face_id_[static_cast<std::size_t>(d)] = face_id_[static_cast<std::size_t>(e)] =
                face_id_[static_cast<std::size_t>(f)] = next_face;
            ++next_face;
        }
        face_count_ = next_face;
    }

    std::int64_t n_;
    std::vector<farey_fraction> vertices_;
    std::vector<std::array<std::int64_t, 2>> lifts_; // (b, d) per vertex
    std::vector<std::int32_t> to_vertex_;            // dart -> target vertex index
    std::vector<dart_id> alpha_;
    std::vector<std::int32_t> face_id_;
    std::int64_t face_count_ = 0;
};

inline combinatorial_map build_map(level n, std::int64_t dart_cap = default_dart_cap) {
    return combinatorial_map::build(n, dart_cap);
}

/// Builds the underlying graph directly from vertex enumeration and stars,
/// without materialising the dart permutations.
inline farey_graph build_graph(level n) {
    auto vertices = enumerate_vertices(n);
    const std::int64_t m = n.value();
    const std::int64_t nv = static_cast<std::int64_t>(vertices.size());
    std::vector<std::int32_t> adjacency(static_cast<std::size_t>(nv * m));
    for (std::int64_t i = 0; i < nv; ++i) {
        const auto& v = vertices[static_cast<std::size_t>(i)];
        const std::int64_t a = v.num(), c = v.den();
        const auto [b, d] = lift_to_unimodular(v);
        for (std::int64_t k = 0; k < m; ++k) {
            const auto w = farey_fraction::make(a * k + b, c * k + d, n);
            const auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
            adjacency[static_cast<std::size_t>(i * m + k)] =
                static_cast<std::int32_t>(it - vertices.begin());
        }
    }
    return farey_graph(n, std::move(vertices), std::move(adjacency));
}

} // namespace fareymap
