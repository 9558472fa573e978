#pragma once

/**
 * The simple graph underlying the level-n map, stored as a flat adjacency
 * array (every vertex has exactly n neighbours), with breadth-first search
 * primitives. This is the distance oracle against which the closed-form
 * distance theorems are checked.
 */

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "fareymap/errors.hpp"
#include "fareymap/fraction.hpp"
#include "fareymap/modular.hpp"

namespace fareymap {

/// Explicit graphs and distance computations are only attempted up to this
/// level by default; beyond it the formula-only operations still work.
inline constexpr std::int64_t default_level_cap = 200;

inline void require_level_within(level n, std::int64_t max_level) {
    if (n.value() > max_level)
        throw too_large("level " + std::to_string(n.value()) +
                        " exceeds the explicit-graph cap of " + std::to_string(max_level));
}

class farey_graph {
public:
    /// Wraps an existing vertex list and row-major adjacency (degree rows of
    /// length n). Used by the map builder to expose its underlying graph.
    farey_graph(level n, std::vector<farey_fraction> vertices, std::vector<std::int32_t> adjacency)
        : n_(n.value()), vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
        if (adjacency_.size() != vertices_.size() * static_cast<std::size_t>(n_))
            throw precondition_error("adjacency array does not match vertex count and valency");
    }

    std::int64_t level_value() const { return n_; }
    std::int32_t vertex_count() const { return static_cast<std::int32_t>(vertices_.size()); }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(adjacency_.size()) / 2; }
    const std::vector<farey_fraction>& vertices() const { return vertices_; }

    std::int32_t index_of(const farey_fraction& v) const {
        if (v.modulus() != n_) throw level_mismatch("vertex level does not match graph level");
        const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end() || *it != v)
            throw invalid_vertex("vertex " + v.str() + " not found in graph");
        return static_cast<std::int32_t>(it - vertices_.begin());
    }

    std::span<const std::int32_t> neighbors(std::int32_t i) const {
        return {adjacency_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
    }

    /// Fills dist with BFS distances from src (-1 for unreachable).
    void distances_from(std::int32_t src, std::vector<std::int8_t>& dist) const {
        dist.assign(vertices_.size(), -1);
        std::vector<std::int32_t> queue;
        queue.reserve(vertices_.size());
        dist[static_cast<std::size_t>(src)] = 0;
        queue.push_back(src);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::int32_t u = queue[head];
            const std::int8_t next = static_cast<std::int8_t>(dist[static_cast<std::size_t>(u)] + 1);
            for (const std::int32_t w : neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] >= 0) continue;
                dist[static_cast<std::size_t>(w)] = next;
                queue.push_back(w);
            }
        }
    }

    std::int64_t distance(std::int32_t from, std::int32_t to) const {
        if (from == to) return 0;
        std::vector<std::int8_t> dist;
        distances_from(from, dist);
        const std::int8_t d = dist[static_cast<std::size_t>(to)];
        if (d < 0) throw arithmetic_error("graph is disconnected");
        return d;
    }

    std::int64_t eccentricity(std::int32_t src, std::vector<std::int8_t>& dist) const {
        distances_from(src, dist);
        std::int64_t ecc = 0;
        for (const std::int8_t d : dist) {
            if (d < 0) throw arithmetic_error("graph is disconnected");
            ecc = std::max<std::int64_t>(ecc, d);
        }
        return ecc;
    }

    /// Exhaustive diameter: the maximum BFS eccentricity over all sources.
    /// Sources are processed concurrently; each BFS only reads the shared
    /// adjacency and writes its own buffers.
    std::int64_t diameter() const {
        const std::int32_t nv = vertex_count();
        const unsigned workers =
            std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
        if (nv < 512 || workers == 1) {
            std::vector<std::int8_t> dist;
            std::int64_t out = 0;
            for (std::int32_t src = 0; src < nv; ++src)
                out = std::max(out, eccentricity(src, dist));
            return out;
        }

        std::atomic<std::int32_t> next{0};
        std::atomic<bool> disconnected{false};
        std::vector<std::int64_t> partial(workers, 0);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                std::vector<std::int8_t> dist;
                std::int64_t local = 0;
                for (;;) {
                    const std::int32_t src = next.fetch_add(1, std::memory_order_relaxed);
                    if (src >= nv) break;
                    try {
                        local = std::max(local, eccentricity(src, dist));
                    } catch (const arithmetic_error&) {
                        disconnected.store(true, std::memory_order_relaxed);
                        break;
                    }
                }
                partial[w] = local;
            });
        }
        for (auto& t : pool) t.join();
        if (disconnected.load()) throw arithmetic_error("graph is disconnected");
        return *std::max_element(partial.begin(), partial.end());
    }

private:
    std::int64_t n_;
    std::vector<farey_fraction> vertices_;
    std::vector<std::int32_t> adjacency_; // row-major, n entries per vertex
};

} // namespace fareymap
