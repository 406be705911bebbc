#pragma once

#include <string>
#include <variant>
#include <vector>

#include "shedlab/graph.hpp"

namespace shedlab {

// Disjoint cliques covering V.
struct CliquePartition {
    std::vector<VertexSet> blocks;
};

// Adds a leaf at every vertex of S (in increasing label order).
Graph whisker(const Graph& g, VertexSet s);

// Attaches a clique of size ks[i] at vertex i; vertex i becomes x_{i,1}.
// Every ks[i] must be at least 2.
Graph clique_append(const Graph& g, const std::vector<int>& ks);

// One new vertex per block, adjacent exactly to that block.
Graph clique_whisker(const Graph& g, const CliquePartition& pi);
void validate_clique_partition(const Graph& g, const CliquePartition& pi);
// Every partition of V into cliques; small graphs only.
std::vector<CliquePartition> all_clique_partitions(const Graph& g);

// Replaces vertex i by a clique of s[i] copies; copies of adjacent vertices
// are adjacent. s[i] >= 1.
Graph expand(const Graph& g, const std::vector<int>& s);

// New vertex x' adjacent to N[x], appended as the last vertex.
Graph duplicate_vertex(const Graph& g, int x);

// C_n(S): {a,b} is an edge when |a-b| or n-|a-b| lies in S, S within 1..n/2.
Graph circulant(int n, const std::vector<int>& offsets);

// D_n(k_1..k_m) on 5n vertices, n = sum k_i, each k_i >= 2. Vertex order:
// x1..x2n, y1..y2n, z1..zn.
Graph gen_dn(const std::vector<int>& ks);
// P_m on 2m+5 vertices, m >= 2. Order: x1..x2m, y1, y2, z1, z2, z3.
Graph gen_pm(int m);
// L_n on 8n+1 vertices, n >= 1. Order per block i: xi.1, xi.2, yi.1..yi.3;
// then zi.1..zi.3 for every i; then w.
Graph gen_ln(int n);

struct DnFamily { std::vector<int> ks; };
struct PmFamily { int m = 2; };
struct LnFamily { int n = 1; };
struct CirculantFamily { int n = 1; std::vector<int> offsets; };
using FamilySpec = std::variant<DnFamily, PmFamily, LnFamily, CirculantFamily>;

Graph generate(const FamilySpec& spec);

// Vertices of a generated graph whose display name starts with `prefix`.
VertexSet named_group(const Graph& g, const std::string& prefix);

} // namespace shedlab
