#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "shedlab/graph.hpp"

namespace shedlab {

bool is_independent(const Graph& g, VertexSet w);

// Calls `visit` once per maximal independent set of G[within]; enumeration
// stops early when `visit` returns false. Bron-Kerbosch on the complement
// with Tomita pivoting.
void for_each_maximal_independent_set(const Graph& g, VertexSet within,
                                      const std::function<bool(VertexSet)>& visit);
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

int independence_number(const Graph& g);
int independence_number(const Graph& g, VertexSet within);

bool is_well_covered(const Graph& g);
bool is_well_covered(const Graph& g, VertexSet within);

// Well-covered, n even, and alpha = n/2.
bool is_very_well_covered(const Graph& g);

// Independent sets of G by cardinality: (i_0, ..., i_alpha). Limited to
// n <= 32; larger inputs raise TooLarge.
inline constexpr int kMaxCountingOrder = 32;
std::vector<std::int64_t> independent_set_counts(const Graph& g);

// h_k = sum_{r<=k} (-1)^(k-r) C(alpha-r, k-r) i_r, kept as exact integers.
// The f-vector of the independence complex is (i_1, ..., i_alpha) shifted by
// one index; only counts and h are exposed.
struct HVector {
    int alpha = 0;
    std::vector<std::int64_t> counts;
    std::vector<std::int64_t> h;
};

HVector h_vector(const Graph& g);
HVector h_vector_from_counts(std::vector<std::int64_t> counts);
bool is_nonnegative(const HVector& hv);

bool is_dominating_set(const Graph& g, VertexSet d);

} // namespace shedlab
