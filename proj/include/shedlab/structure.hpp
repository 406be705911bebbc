#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "shedlab/graph.hpp"

namespace shedlab {

VertexSet simplicial_vertices(const Graph& g);
// Every vertex is simplicial or adjacent to a simplicial vertex.
bool is_simplicial_graph(const Graph& g);
// Repeatedly strips a simplicial vertex; chordal iff this empties the graph.
bool is_chordal(const Graph& g);
std::optional<std::vector<int>> perfect_elimination_order(const Graph& g);

// Disjoint cliques covering V, each containing a vertex simplicial in G.
struct SimplexPartition {
    std::vector<VertexSet> blocks;
};

std::optional<SimplexPartition> simplex_partition(const Graph& g);
bool is_valid_simplex_partition(const Graph& g, const SimplexPartition& p);

// Induced 5-cycle listed in cyclic order.
using FiveCycle = std::array<int, 5>;

// Induced 5-cycles with no two consecutive vertices of degree >= 3 in G.
std::vector<FiveCycle> basic_five_cycles(const Graph& g);

// P: vertices on pendant edges, perfectly matched by them. C: the rest,
// partitioned by basic 5-cycles.
struct PCCertificate {
    std::vector<Edge> pendant_edges;  // (leaf-side endpoint first when unique)
    std::vector<FiveCycle> cycles;
};

std::optional<PCCertificate> pc_membership(const Graph& g);
bool is_valid_pc_certificate(const Graph& g, const PCCertificate& cert);

// Pairs (x_i, y_i) in order; X a minimal vertex cover, Y a maximal
// independent set, satisfying the pairing/ordering conditions checked by
// is_valid_vwc_labeling.
struct VWCLabeling {
    std::vector<Edge> pairs;  // (x_i, y_i)
};

// Throws NotVeryWellCovered unless G is very well-covered.
std::optional<VWCLabeling> vwc_labeling(const Graph& g);
bool is_valid_vwc_labeling(const Graph& g, const VWCLabeling& lab);

std::string to_json_string(const SimplexPartition& p, const Graph& g);
std::string to_json_string(const PCCertificate& c, const Graph& g);
std::string to_json_string(const VWCLabeling& l, const Graph& g);

} // namespace shedlab
