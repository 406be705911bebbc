#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "shedlab/graph.hpp"

namespace shedlab {

// Isomorphism-invariant key: the graph6 string of the canonically relabeled
// graph. Equal keys iff isomorphic graphs.
struct CanonicalKey {
    std::string bytes;

    auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalForm {
    Graph graph;             // relabeled graph (names dropped)
    std::vector<int> label;  // vertex v of the input becomes label[v]
};

// Color refinement to an equitable partition, then individualization over
// the search tree with automorphism pruning; the leaf with the least
// adjacency encoding wins.
CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);

// Generators of the automorphism group found during the canonical search.
std::vector<std::vector<int>> automorphism_generators(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace shedlab

template <>
struct std::hash<shedlab::CanonicalKey> {
    std::size_t operator()(const shedlab::CanonicalKey& k) const noexcept {
        return std::hash<std::string>{}(k.bytes);
    }
};
