#include "shedlab/constructions.hpp"

#include <functional>
#include <numeric>

namespace shedlab {

namespace {

std::string indexed(const std::string& stem, int i) { return stem + std::to_string(i); }
std::string indexed(const std::string& stem, int i, int j) {
    return stem + std::to_string(i) + "." + std::to_string(j);
}

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s)
        if (!s.without(v).subset_of(g.neighbors(v))) return false;
    return true;
}

} // namespace

Graph whisker(const Graph& g, VertexSet s) {
    check_subset(g, s);
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    if (g.has_names())
        for (int v : g.vertices()) b.set_name(v, g.name(v));
    for (int x : s) {
        int leaf = b.add_vertex(g.has_names() ? g.name(x) + "_w" : std::string{});
        b.add_edge(x, leaf);
    }
    return b.build();
}

Graph clique_append(const Graph& g, const std::vector<int>& ks) {
    if (static_cast<int>(ks.size()) != g.order())
        throw BadParameter("clique_append needs one clique size per vertex");
    for (int k : ks)
        if (k < 2) throw BadParameter("clique sizes must be at least 2");

    std::vector<int> first(ks.size());
    int total = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        first[i] = total;
        total += ks[i];
    }
    GraphBuilder b(total);
    for (int i = 0; i < g.order(); ++i) {
        std::vector<int> block(static_cast<std::size_t>(ks[i]));
        std::iota(block.begin(), block.end(), first[i]);
        b.add_clique(block);
        for (int j = 1; j <= ks[i]; ++j) b.set_name(first[i] + j - 1, indexed("x", i + 1, j));
    }
    for (auto [u, v] : g.edges()) b.add_edge(first[u], first[v]);
    return b.build();
}

void validate_clique_partition(const Graph& g, const CliquePartition& pi) {
    VertexSet seen;
    for (VertexSet block : pi.blocks) {
        if (block.empty()) throw InvalidPartition("empty block");
        if (!block.subset_of(g.vertices())) throw InvalidPartition("block outside V(G)");
        if (block.intersects(seen)) throw InvalidPartition("blocks overlap");
        if (!is_clique(g, block)) throw InvalidPartition("block does not induce a clique");
        seen |= block;
    }
    if (seen != g.vertices()) throw InvalidPartition("blocks do not cover V(G)");
}

Graph clique_whisker(const Graph& g, const CliquePartition& pi) {
    validate_clique_partition(g, pi);
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    if (g.has_names())
        for (int v : g.vertices()) b.set_name(v, g.name(v));
    int t = 0;
    for (VertexSet block : pi.blocks) {
        ++t;
        int w = b.add_vertex(g.has_names() ? indexed("w", t) : std::string{});
        for (int x : block) b.add_edge(x, w);
    }
    return b.build();
}

std::vector<CliquePartition> all_clique_partitions(const Graph& g) {
    std::vector<CliquePartition> out;
    CliquePartition current;
    std::function<void(VertexSet)> rec = [&](VertexSet left) {
        if (left.empty()) {
            out.push_back(current);
            return;
        }
        const int u = left.first();
        const std::uint64_t room = (g.neighbors(u) & left).bits();
        for (std::uint64_t sub = room;; sub = (sub - 1) & room) {
            VertexSet block = VertexSet(sub).with(u);
            if (is_clique(g, block)) {
                current.blocks.push_back(block);
                rec(left - block);
                current.blocks.pop_back();
            }
            if (sub == 0) break;
        }
    };
    rec(g.vertices());
    return out;
}

Graph expand(const Graph& g, const std::vector<int>& s) {
    if (static_cast<int>(s.size()) != g.order()) throw BadParameter("expand needs one multiplicity per vertex");
    for (int k : s)
        if (k < 1) throw BadParameter("expansion multiplicities must be at least 1");

    std::vector<std::vector<int>> copies(s.size());
    int total = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (int j = 0; j < s[i]; ++j) copies[i].push_back(total++);
    GraphBuilder b(total);
    for (int i = 0; i < g.order(); ++i) {
        b.add_clique(copies[i]);
        if (g.has_names())
            for (int j = 0; j < s[i]; ++j)
                b.set_name(copies[i][j], j == 0 ? g.name(i) : g.name(i) + "." + std::to_string(j + 1));
    }
    for (auto [u, v] : g.edges())
        for (int a : copies[u])
            for (int c : copies[v]) b.add_edge(a, c);
    return b.build();
}

Graph duplicate_vertex(const Graph& g, int x) {
    check_vertex(g, x);
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    if (g.has_names())
        for (int v : g.vertices()) b.set_name(v, g.name(v));
    int twin = b.add_vertex(g.has_names() ? g.name(x) + "'" : std::string{});
    for (int y : g.closed_neighborhood(x)) b.add_edge(twin, y);
    return b.build();
}

Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 1) throw BadParameter("circulant needs n >= 1");
    for (int s : offsets)
        if (s < 1 || s > n / 2) throw BadParameter("circulant offset " + std::to_string(s) + " outside 1..n/2");
    GraphBuilder b(n);
    for (int a = 0; a < n; ++a)
        for (int s : offsets) {
            int c = (a + s) % n;
            if (c != a) b.add_edge(a, c);
        }
    return b.build();
}

Graph gen_dn(const std::vector<int>& ks) {
    if (ks.empty()) throw BadParameter("D_n needs at least one block");
    for (int k : ks)
        if (k < 2) throw BadParameter("D_n block sizes must be at least 2");
    const int n = std::accumulate(ks.begin(), ks.end(), 0);
    if (5 * n > kMaxVertices) throw TooLarge("D_n exceeds 64 vertices");

    // 1-based helpers matching the construction's indices.
    auto x = [&](int j) { return j - 1; };
    auto y = [&](int j) { return 2 * n + j - 1; };
    auto z = [&](int j) { return 4 * n + j - 1; };

    GraphBuilder b(5 * n);
    for (int j = 1; j <= 2 * n; ++j) {
        b.set_name(x(j), indexed("x", j));
        b.set_name(y(j), indexed("y", j));
        b.add_edge(x(j), y(j));
    }
    for (int j = 1; j <= n; ++j) {
        b.set_name(z(j), indexed("z", j));
        b.add_edge(z(j), y(2 * j));
        b.add_edge(z(j), y(2 * j - 1));
        for (int l = j + 1; l <= n; ++l) b.add_edge(z(j), z(l));
    }
    int w = 0;
    for (int k : ks) {
        // Odd side x_{2w+1}, x_{2w+3}, ..., x_{2(w+k)-1}; even side x_{2w+2}, ..., x_{2(w+k)}.
        for (int a = 2 * w + 1; a <= 2 * (w + k) - 1; a += 2)
            for (int c = 2 * w + 2; c <= 2 * (w + k); c += 2) b.add_edge(x(a), x(c));
        w += k;
    }
    return b.build();
}

Graph gen_pm(int m) {
    if (m < 2) throw BadParameter("P_m needs m >= 2");
    if (2 * m + 5 > kMaxVertices) throw TooLarge("P_m exceeds 64 vertices");
    auto x = [](int j) { return j - 1; };
    const int y1 = 2 * m;
    const int y2 = 2 * m + 1;
    auto z = [&](int j) { return 2 * m + 1 + j; };

    GraphBuilder b(2 * m + 5);
    for (int j = 1; j <= 2 * m; ++j) b.set_name(x(j), indexed("x", j));
    b.set_name(y1, "y1");
    b.set_name(y2, "y2");
    for (int j = 1; j <= 3; ++j) b.set_name(z(j), indexed("z", j));

    // K_{2,...,2}: everything except the pairs {x_{2i-1}, x_{2i}}.
    for (int a = 1; a <= 2 * m; ++a)
        for (int c = a + 1; c <= 2 * m; ++c)
            if (!(a % 2 == 1 && c == a + 1)) b.add_edge(x(a), x(c));
    b.add_edge(y1, z(1));
    b.add_edge(y2, z(2));
    for (int i = 1; i <= m; ++i) {
        b.add_edge(y1, x(2 * i - 1));
        b.add_edge(y2, x(2 * i));
    }
    b.add_clique({z(1), z(2), z(3)});
    return b.build();
}

Graph gen_ln(int n) {
    if (n < 1) throw BadParameter("L_n needs n >= 1");
    if (8 * n + 1 > kMaxVertices) throw TooLarge("L_n exceeds 64 vertices");
    auto x = [](int i, int j) { return 5 * (i - 1) + (j - 1); };
    auto y = [](int i, int j) { return 5 * (i - 1) + 2 + (j - 1); };
    auto z = [n](int i, int j) { return 5 * n + 3 * (i - 1) + (j - 1); };
    const int w = 8 * n;

    GraphBuilder b(8 * n + 1);
    std::vector<int> top{w};
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= 2; ++j) b.set_name(x(i, j), indexed("x", i, j));
        for (int j = 1; j <= 3; ++j) {
            b.set_name(y(i, j), indexed("y", i, j));
            b.set_name(z(i, j), indexed("z", i, j));
            b.add_edge(z(i, j), y(i, j));
            top.push_back(z(i, j));
        }
        b.add_edge(y(i, 1), y(i, 2));
        b.add_edge(y(i, 2), y(i, 3));
        b.add_edge(y(i, 3), x(i, 2));
        b.add_edge(x(i, 2), x(i, 1));
        b.add_edge(x(i, 1), y(i, 1));
    }
    b.set_name(w, "w");
    b.add_clique(top);
    return b.build();
}

Graph generate(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, DnFamily>) return gen_dn(s.ks);
            else if constexpr (std::is_same_v<T, PmFamily>) return gen_pm(s.m);
            else if constexpr (std::is_same_v<T, LnFamily>) return gen_ln(s.n);
            else return circulant(s.n, s.offsets);
        },
        spec);
}

VertexSet named_group(const Graph& g, const std::string& prefix) {
    VertexSet out;
    for (int v : g.vertices())
        if (g.name(v).rfind(prefix, 0) == 0) out.insert(v);
    return out;
}

} // namespace shedlab
