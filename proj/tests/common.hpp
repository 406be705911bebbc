#pragma once

#include <map>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "shedlab/census.hpp"

namespace testing_support {

// Connected isomorphism classes on n vertices, computed once per process.
inline const std::vector<shedlab::Graph>& connected(int n) {
    static std::map<int, std::vector<shedlab::Graph>> memo;
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, shedlab::enumerate_connected(n)).first;
    return it->second;
}

inline std::vector<shedlab::Graph> connected_up_to(int n) {
    std::vector<shedlab::Graph> out;
    for (int k = 1; k <= n; ++k) out.insert(out.end(), connected(k).begin(), connected(k).end());
    return out;
}

// Every graph (connected or not) on 1..n vertices up to isomorphism, deduped
// with the permutation oracle. Small n only.
inline std::vector<shedlab::Graph> all_graphs_up_to(int n) {
    std::vector<shedlab::Graph> out;
    for (int k = 1; k <= n; ++k) {
        std::vector<shedlab::Graph> level;
        for (const auto& g : oracle::all_labeled_graphs(k)) {
            bool seen = false;
            for (const auto& h : level)
                if (oracle::isomorphic(g, h)) {
                    seen = true;
                    break;
                }
            if (!seen) level.push_back(g);
        }
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline shedlab::VertexSet to_set(oracle::Mask m) { return shedlab::VertexSet(m); }

} // namespace testing_support
