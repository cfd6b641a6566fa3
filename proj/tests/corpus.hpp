#pragma once

// Exhaustive small-graph corpus: one representative per isomorphism class,
// found by minimizing the edge bitmask over all vertex permutations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "repdim/graph.hpp"

namespace repdim::corpus {

inline std::vector<std::pair<int, int>> edge_order(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return e;
}

// All graphs on exactly n vertices, up to isomorphism. Feasible for n <= 6.
inline std::vector<Graph> all_graphs(int n) {
    auto edges = edge_order(n);
    const int nbits = static_cast<int>(edges.size());

    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    // bit position of edge (u,v) for u < v
    std::vector<std::vector<int>> bit(n, std::vector<int>(n, -1));
    for (int i = 0; i < nbits; ++i)
        bit[edges[static_cast<size_t>(i)].first][edges[static_cast<size_t>(i)].second] = i;

    std::vector<Graph> out;
    std::unordered_set<uint32_t> seen;
    for (uint32_t mask = 0; mask < (1u << nbits); ++mask) {
        if (seen.count(mask)) continue;
        // mark the whole isomorphism orbit as seen
        for (const auto& perm : perms) {
            uint32_t img = 0;
            for (int i = 0; i < nbits; ++i) {
                if (!(mask & (1u << i))) continue;
                int u = perm[static_cast<size_t>(edges[static_cast<size_t>(i)].first)];
                int v = perm[static_cast<size_t>(edges[static_cast<size_t>(i)].second)];
                if (u > v) std::swap(u, v);
                img |= 1u << bit[u][v];
            }
            seen.insert(img);
        }
        Graph g(n);
        for (int i = 0; i < nbits; ++i)
            if (mask & (1u << i))
                g.add_edge(edges[static_cast<size_t>(i)].first,
                           edges[static_cast<size_t>(i)].second);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace repdim::corpus
