#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "shedlab/error.hpp"
#include "shedlab/vertex_set.hpp"

namespace shedlab {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1 (n <= 64). Each
// adjacency row is a VertexSet. Generators may attach display names; graphs
// without names print their vertices as decimal labels.
class Graph {
public:
    Graph() = default;

    // Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    // Rows must already be symmetric and loop-free; checked.
    static Graph from_rows(std::vector<VertexSet> rows);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const;  // number of edges
    VertexSet vertices() const { return VertexSet::range(order()); }

    VertexSet neighbors(int v) const { return adj_[v]; }
    VertexSet closed_neighborhood(int v) const { return adj_[v].with(v); }
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].size(); }
    const std::vector<VertexSet>& rows() const { return adj_; }
    std::vector<Edge> edges() const;

    bool has_names() const { return !names_.empty(); }
    const std::vector<std::string>& names() const { return names_; }
    // Display label: the attached name, else the decimal index.
    std::string name(int v) const;
    // Index of the vertex carrying `name`, or of the decimal label.
    std::optional<int> find(const std::string& name) const;

    Graph with_names(std::vector<std::string> names) const;
    Graph without_names() const;
    // Attaches "0".."n-1" when no names are present, so later surgery keeps
    // the original labels visible.
    Graph with_default_names() const;

    // Adjacency equality; names are ignored.
    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<VertexSet> adj_;
    std::vector<std::string> names_;
};

// Incremental edge collection for generators.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    int add_vertex(std::string name = {});
    void add_edge(int u, int v);
    void add_clique(const std::vector<int>& vs);
    void set_name(int v, std::string name);
    int order() const { return static_cast<int>(rows_.size()); }
    Graph build() const;

private:
    std::vector<VertexSet> rows_;
    std::vector<std::string> names_;
    bool named_ = false;
};

// Order-preserving relabel: vertices of the result are the members of `keep`
// in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph delete_vertex(const Graph& g, int v);
Graph delete_vertices(const Graph& g, VertexSet drop);
Graph delete_closed_neighborhood(const Graph& g, int v);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph relabel(const Graph& g, std::span<const int> perm);  // vertex v -> perm[v]
Graph complement(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
// Components of G[within]; sorted by least label.
std::vector<VertexSet> connected_components(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

// Shortest cycle length, nullopt for forests.
std::optional<int> girth(const Graph& g);

void check_vertex(const Graph& g, int v);
void check_subset(const Graph& g, VertexSet s);

// Named small graphs used throughout tests and the CLI.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph complete_bipartite(int a, int b);

} // namespace shedlab
