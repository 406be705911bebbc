#include "shedlab/graph.hpp"

#include <algorithm>
#include <limits>

namespace shedlab {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices)
        throw TooLarge("graph order " + std::to_string(n) + " outside 0..64");
    adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidEdge("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} out of range for n=" + std::to_string(n));
        if (u == v) throw InvalidEdge("loop at vertex " + std::to_string(u));
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
    }
    return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    Graph g(static_cast<int>(rows.size()));
    const VertexSet all = g.vertices();
    for (int v = 0; v < g.order(); ++v) {
        if (!rows[v].subset_of(all)) throw InvalidEdge("neighbor label out of range");
        if (rows[v].contains(v)) throw InvalidEdge("loop at vertex " + std::to_string(v));
        for (int u : rows[v])
            if (!rows[u].contains(v)) throw InvalidEdge("adjacency rows not symmetric");
    }
    g.adj_ = std::move(rows);
    return g;
}

int Graph::size() const {
    int twice = 0;
    for (VertexSet r : adj_) twice += r.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string Graph::name(int v) const {
    if (!names_.empty() && !names_[v].empty()) return names_[v];
    return std::to_string(v);
}

std::optional<int> Graph::find(const std::string& label) const {
    for (int v = 0; v < order(); ++v)
        if (!names_.empty() && names_[v] == label) return v;
    try {
        std::size_t pos = 0;
        int v = std::stoi(label, &pos);
        if (pos == label.size() && v >= 0 && v < order()) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
}

Graph Graph::with_names(std::vector<std::string> names) const {
    if (!names.empty() && static_cast<int>(names.size()) != order())
        throw BadParameter("name list length does not match vertex count");
    Graph g = *this;
    g.names_ = std::move(names);
    return g;
}

Graph Graph::without_names() const {
    Graph g = *this;
    g.names_.clear();
    return g;
}

Graph Graph::with_default_names() const {
    if (has_names()) return *this;
    std::vector<std::string> names;
    for (int v = 0; v < order(); ++v) names.push_back(std::to_string(v));
    return with_names(std::move(names));
}

GraphBuilder::GraphBuilder(int n) : rows_(static_cast<std::size_t>(n)), names_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices) throw TooLarge("graph order outside 0..64");
}

int GraphBuilder::add_vertex(std::string name) {
    if (order() >= kMaxVertices) throw TooLarge("graph would exceed 64 vertices");
    rows_.emplace_back();
    if (!name.empty()) named_ = true;
    names_.push_back(std::move(name));
    return order() - 1;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order()) throw InvalidEdge("edge endpoint out of range");
    if (u == v) throw InvalidEdge("loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
}

void GraphBuilder::add_clique(const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
}

void GraphBuilder::set_name(int v, std::string name) {
    names_.at(static_cast<std::size_t>(v)) = std::move(name);
    named_ = true;
}

Graph GraphBuilder::build() const {
    Graph g = Graph::from_rows(rows_);
    if (named_) {
        std::vector<std::string> names = names_;
        for (int v = 0; v < g.order(); ++v)
            if (names[v].empty()) names[v] = std::to_string(v);
        g = g.with_names(std::move(names));
    }
    return g;
}

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw OutOfRange("vertex " + std::to_string(v) + " not in graph of order " + std::to_string(g.order()));
}

void check_subset(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices())) throw OutOfRange("vertex set not contained in V(G)");
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    check_subset(g, keep);
    std::vector<int> old_to_new(static_cast<std::size_t>(g.order()), -1);
    int next = 0;
    for (int v : keep) old_to_new[v] = next++;

    std::vector<VertexSet> rows(static_cast<std::size_t>(next));
    std::vector<std::string> names;
    for (int v : keep) {
        VertexSet r;
        for (int u : g.neighbors(v) & keep) r.insert(old_to_new[u]);
        rows[old_to_new[v]] = r;
        if (g.has_names()) names.push_back(g.names()[v]);
    }
    return Graph::from_rows(std::move(rows)).with_names(std::move(names));
}

Graph delete_vertex(const Graph& g, int v) {
    check_vertex(g, v);
    return induced_subgraph(g, g.vertices().without(v));
}

Graph delete_vertices(const Graph& g, VertexSet drop) {
    check_subset(g, drop);
    return induced_subgraph(g, g.vertices() - drop);
}

Graph delete_closed_neighborhood(const Graph& g, int v) {
    check_vertex(g, v);
    return induced_subgraph(g, g.vertices() - g.closed_neighborhood(v));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    GraphBuilder builder(a.order() + b.order());
    for (auto [u, v] : a.edges()) builder.add_edge(u, v);
    for (auto [u, v] : b.edges()) builder.add_edge(u + a.order(), v + a.order());
    if (a.has_names() || b.has_names()) {
        for (int v = 0; v < a.order(); ++v) builder.set_name(v, a.name(v));
        for (int v = 0; v < b.order(); ++v) builder.set_name(v + a.order(), b.name(v));
    }
    return builder.build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw BadParameter("permutation length mismatch");
    std::vector<VertexSet> rows(perm.size());
    std::vector<std::string> names(g.has_names() ? perm.size() : 0);
    for (int v = 0; v < g.order(); ++v) {
        VertexSet r;
        for (int u : g.neighbors(v)) r.insert(perm[u]);
        rows[perm[v]] = r;
        if (g.has_names()) names[perm[v]] = g.names()[v];
    }
    return Graph::from_rows(std::move(rows)).with_names(std::move(names));
}

Graph complement(const Graph& g) {
    std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) rows[v] = (g.vertices() - g.neighbors(v)).without(v);
    return Graph::from_rows(std::move(rows)).with_names(g.names());
}

std::vector<VertexSet> connected_components(const Graph& g, VertexSet within) {
    std::vector<VertexSet> comps;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v);
            next = (next & within) - comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        left -= comp;
    }
    return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components(g, g.vertices());
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<int> girth(const Graph& g) {
    // BFS from every root; a non-tree edge closing at depths d(u), d(v) gives
    // a closed walk of length d(u)+d(v)+1 containing a cycle no longer than it,
    // and the minimum over roots is attained on a shortest cycle.
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = -1;
        queue.assign(1, root);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            if (2 * dist[u] >= best) break;
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph cycle_graph(int n) {
    if (n < 3) throw BadParameter("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph star_graph(int leaves) {
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
    return b.build();
}

Graph complete_bipartite(int a, int c) {
    GraphBuilder b(a + c);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < c; ++v) b.add_edge(u, a + v);
    return b.build();
}

} // namespace shedlab
