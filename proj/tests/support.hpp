#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include <cstdint>
#include <utility>
#include <vector>

#include "netgrowth/graph.hpp"
#include "netgrowth/rng.hpp"

namespace testsupport {

inline constexpr int kFarAway = 1 << 20;

// Exhaustive all-pairs shortest paths over an adjacency matrix. The library
// uses per-source BFS; this is the brute-force cross-check.
inline std::vector<std::vector<int>> floyd_warshall(
    int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> dist(
        static_cast<std::size_t>(n),
        std::vector<int>(static_cast<std::size_t>(n), kFarAway));
    for (int v = 0; v < n; ++v) {
        dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
    }
    for (auto [u, v] : edges) {
        dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int through =
                    dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                    dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (through < dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                    dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = through;
                }
            }
        }
    }
    return dist;
}

// Random simple graph: every unordered pair becomes an edge with the given
// probability.
inline std::vector<std::pair<int, int>> random_edges(int n, double edge_prob,
                                                     netgrowth::SplitMix64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.next_double() < edge_prob) {
                edges.emplace_back(u, v);
            }
        }
    }
    return edges;
}

// Brute-force count of weak compositions: the number of ways to hand r
// indistinguishable units to n receivers, by direct enumeration.
inline std::uint64_t weak_composition_count(std::uint32_t n, std::uint32_t r) {
    if (n == 1) {
        return 1;
    }
    std::uint64_t total = 0;
    for (std::uint32_t first = 0; first <= r; ++first) {
        total += weak_composition_count(n - 1, r - first);
    }
    return total;
}

} // namespace testsupport
