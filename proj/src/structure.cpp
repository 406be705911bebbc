#include "shedlab/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "shedlab/independence.hpp"

namespace shedlab {

using nlohmann::json;

namespace {

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s)
        if (!s.without(v).subset_of(g.neighbors(v))) return false;
    return true;
}

bool simplicial_within(const Graph& g, VertexSet within, int v) {
    return is_clique(g, g.neighbors(v) & within);
}

json names_of(const Graph& g, VertexSet s) {
    json out = json::array();
    for (int v : s) out.push_back(g.name(v));
    return out;
}

} // namespace

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (int v : g.vertices())
        if (simplicial_within(g, g.vertices(), v)) out.insert(v);
    return out;
}

bool is_simplicial_graph(const Graph& g) {
    const VertexSet simp = simplicial_vertices(g);
    for (int v : g.vertices())
        if (!simp.contains(v) && !g.neighbors(v).intersects(simp)) return false;
    return true;
}

std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
    std::vector<int> order;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        int pick = -1;
        for (int v : left)
            if (simplicial_within(g, left, v)) {
                pick = v;
                break;
            }
        if (pick < 0) return std::nullopt;
        order.push_back(pick);
        left.erase(pick);
    }
    return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

std::optional<SimplexPartition> simplex_partition(const Graph& g) {
    const VertexSet simp = simplicial_vertices(g);
    std::unordered_set<std::uint64_t> dead_ends;
    SimplexPartition result;

    std::function<bool(VertexSet)> cover = [&](VertexSet uncovered) -> bool {
        if (uncovered.empty()) return true;
        if (dead_ends.count(uncovered.bits())) return false;
        const int u = uncovered.first();
        std::set<std::uint64_t> tried;
        // A block holding simplicial s is a clique, hence inside N[s].
        for (int s : simp & uncovered) {
            const VertexSet room = g.closed_neighborhood(s) & uncovered;
            if (!room.contains(u)) continue;
            const VertexSet fixed = VertexSet{s, u};
            const std::uint64_t free_bits = (room - fixed).bits();
            // Submasks of the free part, largest first.
            for (std::uint64_t sub = free_bits;; sub = (sub - 1) & free_bits) {
                const VertexSet block = fixed | VertexSet(sub);
                if (tried.insert(block.bits()).second) {
                    result.blocks.push_back(block);
                    if (cover(uncovered - block)) return true;
                    result.blocks.pop_back();
                }
                if (sub == 0) break;
            }
        }
        dead_ends.insert(uncovered.bits());
        return false;
    };

    if (!cover(g.vertices())) return std::nullopt;
    return result;
}

bool is_valid_simplex_partition(const Graph& g, const SimplexPartition& p) {
    const VertexSet simp = simplicial_vertices(g);
    VertexSet seen;
    for (VertexSet b : p.blocks) {
        if (b.empty() || b.intersects(seen) || !b.subset_of(g.vertices())) return false;
        if (!is_clique(g, b) || !b.intersects(simp)) return false;
        seen |= b;
    }
    return seen == g.vertices();
}

std::vector<FiveCycle> basic_five_cycles(const Graph& g) {
    std::vector<FiveCycle> out;
    auto heavy = [&](int v) { return g.degree(v) >= 3; };
    for (int a : g.vertices()) {
        const VertexSet above = VertexSet(~((std::uint64_t{2} << a) - 1));  // labels > a
        const VertexSet na = g.neighbors(a);
        for (int b : na & above) {
            const VertexSet nb = g.neighbors(b);
            for (int c : (nb & above) - na.with(a)) {
                const VertexSet nc = g.neighbors(c);
                for (int d : (nc & above) - (na | nb).with(a).with(b)) {
                    const VertexSet nd = g.neighbors(d);
                    for (int e : (nd & na & above) - (nb | nc).with(b).with(c)) {
                        if (e < b) continue;  // each cycle once, not in both directions
                        FiveCycle cyc{a, b, c, d, e};
                        bool basic = true;
                        for (int i = 0; i < 5; ++i)
                            if (heavy(cyc[i]) && heavy(cyc[(i + 1) % 5])) basic = false;
                        if (basic) out.push_back(cyc);
                    }
                }
            }
        }
    }
    return out;
}

std::optional<PCCertificate> pc_membership(const Graph& g) {
    PCCertificate cert;
    VertexSet p;
    std::vector<int> pendant_count(static_cast<std::size_t>(g.order()), 0);
    for (auto [u, v] : g.edges()) {
        if (g.degree(u) != 1 && g.degree(v) != 1) continue;
        if (g.degree(v) == 1 && g.degree(u) != 1) std::swap(u, v);
        cert.pendant_edges.emplace_back(u, v);
        ++pendant_count[u];
        ++pendant_count[v];
        p.insert(u);
        p.insert(v);
    }
    for (int v : p)
        if (pendant_count[v] != 1) return std::nullopt;

    const VertexSet c_part = g.vertices() - p;
    std::vector<FiveCycle> usable;
    std::vector<VertexSet> usable_sets;
    for (const FiveCycle& cyc : basic_five_cycles(g)) {
        VertexSet s = VertexSet::from({cyc.begin(), cyc.end()});
        if (s.subset_of(c_part)) {
            usable.push_back(cyc);
            usable_sets.push_back(s);
        }
    }

    std::function<bool(VertexSet)> cover = [&](VertexSet uncovered) -> bool {
        if (uncovered.empty()) return true;
        // Branch on the vertex with the fewest fitting cycles.
        int best_v = -1;
        std::size_t best_count = usable.size() + 1;
        for (int v : uncovered) {
            std::size_t k = 0;
            for (VertexSet s : usable_sets)
                if (s.contains(v) && s.subset_of(uncovered)) ++k;
            if (k < best_count) {
                best_count = k;
                best_v = v;
            }
        }
        if (best_count == 0) return false;
        for (std::size_t i = 0; i < usable.size(); ++i) {
            if (!usable_sets[i].contains(best_v) || !usable_sets[i].subset_of(uncovered)) continue;
            cert.cycles.push_back(usable[i]);
            if (cover(uncovered - usable_sets[i])) return true;
            cert.cycles.pop_back();
        }
        return false;
    };

    if (!cover(c_part)) return std::nullopt;
    return cert;
}

bool is_valid_pc_certificate(const Graph& g, const PCCertificate& cert) {
    VertexSet p;
    for (auto [u, v] : cert.pendant_edges) {
        if (!g.adjacent(u, v) || (g.degree(u) != 1 && g.degree(v) != 1)) return false;
        if (p.contains(u) || p.contains(v)) return false;
        p.insert(u);
        p.insert(v);
    }
    // P must hold every vertex touched by a pendant edge.
    for (auto [u, v] : g.edges())
        if ((g.degree(u) == 1 || g.degree(v) == 1) && !(p.contains(u) && p.contains(v))) return false;

    const auto basic = basic_five_cycles(g);
    std::set<std::uint64_t> basic_sets;
    for (const auto& cyc : basic) basic_sets.insert(VertexSet::from({cyc.begin(), cyc.end()}).bits());
    VertexSet c;
    for (const auto& cyc : cert.cycles) {
        VertexSet s = VertexSet::from({cyc.begin(), cyc.end()});
        if (s.size() != 5 || s.intersects(c) || s.intersects(p)) return false;
        if (!basic_sets.count(s.bits())) return false;
        for (int i = 0; i < 5; ++i)
            if (!g.adjacent(cyc[i], cyc[(i + 1) % 5])) return false;
        c |= s;
    }
    return (p | c) == g.vertices();
}

namespace {

// Checks the pairing conditions for a fixed matching; returns the ordered
// labeling when the precedence constraints admit one.
std::optional<VWCLabeling> order_pairs(const Graph& g, const std::vector<Edge>& pairs) {
    const int h = static_cast<int>(pairs.size());
    auto x = [&](int i) { return pairs[i].first; };
    auto y = [&](int i) { return pairs[i].second; };

    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            if (i != j && g.adjacent(x(i), y(j)) && g.adjacent(x(i), x(j))) return std::nullopt;

    // Literal reading: distinct i, j, k and z_i in {x_i, y_i}.
    for (int i = 0; i < h; ++i)
        for (int z : {x(i), y(i)})
            for (int j = 0; j < h; ++j) {
                if (j == i || !g.adjacent(z, x(j))) continue;
                for (int k = 0; k < h; ++k) {
                    if (k == i || k == j) continue;
                    if (g.adjacent(y(j), x(k)) && !g.adjacent(z, x(k))) return std::nullopt;
                }
            }

    // {x_i, y_j} in E forces i before j. Kahn's algorithm, ties to the least
    // x label.
    std::vector<std::vector<int>> after(static_cast<std::size_t>(h));
    std::vector<int> indegree(static_cast<std::size_t>(h), 0);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j)
            if (i != j && g.adjacent(x(i), y(j))) {
                after[i].push_back(j);
                ++indegree[j];
            }
    using Item = std::pair<int, int>;  // (x label, pair index)
    std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
    for (int i = 0; i < h; ++i)
        if (indegree[i] == 0) ready.emplace(x(i), i);
    VWCLabeling lab;
    while (!ready.empty()) {
        int i = ready.top().second;
        ready.pop();
        lab.pairs.push_back(pairs[i]);
        for (int j : after[i])
            if (--indegree[j] == 0) ready.emplace(x(j), j);
    }
    if (static_cast<int>(lab.pairs.size()) != h) return std::nullopt;
    return lab;
}

} // namespace

std::optional<VWCLabeling> vwc_labeling(const Graph& g) {
    if (!is_very_well_covered(g)) throw NotVeryWellCovered("labeling requires a very well-covered graph");
    if (g.order() == 0) return VWCLabeling{};

    std::optional<VWCLabeling> found;
    for_each_maximal_independent_set(g, g.vertices(), [&](VertexSet y_set) {
        const std::vector<int> xs = (g.vertices() - y_set).to_vector();
        std::vector<Edge> pairs;
        VertexSet used;
        std::function<bool(std::size_t)> match = [&](std::size_t idx) -> bool {
            if (idx == xs.size()) {
                found = order_pairs(g, pairs);
                return found.has_value();
            }
            for (int yv : (g.neighbors(xs[idx]) & y_set) - used) {
                pairs.emplace_back(xs[idx], yv);
                used.insert(yv);
                if (match(idx + 1)) return true;
                used.erase(yv);
                pairs.pop_back();
            }
            return false;
        };
        match(0);
        return !found.has_value();
    });
    return found;
}

bool is_valid_vwc_labeling(const Graph& g, const VWCLabeling& lab) {
    const int h = static_cast<int>(lab.pairs.size());
    if (2 * h != g.order()) return false;
    VertexSet xs, ys;
    for (auto [xv, yv] : lab.pairs) {
        if (xv < 0 || yv < 0 || xv >= g.order() || yv >= g.order()) return false;
        if (xs.contains(xv) || ys.contains(yv) || xs.contains(yv) || ys.contains(xv) || xv == yv) return false;
        xs.insert(xv);
        ys.insert(yv);
    }
    // (a) Y maximal independent, X its complement.
    if (!is_independent(g, ys)) return false;
    for (int v : xs)
        if (!g.neighbors(v).intersects(ys)) return false;
    auto x = [&](int i) { return lab.pairs[i].first; };
    auto y = [&](int i) { return lab.pairs[i].second; };
    for (int i = 0; i < h; ++i) {
        if (!g.adjacent(x(i), y(i))) return false;  // (b)
        for (int j = 0; j < h; ++j) {
            if (!g.adjacent(x(i), y(j))) continue;
            if (i != j && g.adjacent(x(i), x(j))) return false;  // (d)
            if (i > j) return false;                             // (e)
        }
    }
    for (int i = 0; i < h; ++i)  // (c)
        for (int z : {x(i), y(i)})
            for (int j = 0; j < h; ++j)
                for (int k = 0; k < h; ++k) {
                    if (i == j || j == k || i == k) continue;
                    if (g.adjacent(z, x(j)) && g.adjacent(y(j), x(k)) && !g.adjacent(z, x(k))) return false;
                }
    return true;
}

std::string to_json_string(const SimplexPartition& p, const Graph& g) {
    json blocks = json::array();
    for (VertexSet b : p.blocks) blocks.push_back(names_of(g, b));
    return json{{"blocks", blocks}}.dump();
}

std::string to_json_string(const PCCertificate& c, const Graph& g) {
    json pendants = json::array();
    for (auto [u, v] : c.pendant_edges) pendants.push_back({g.name(u), g.name(v)});
    json cycles = json::array();
    for (const auto& cyc : c.cycles) {
        json one = json::array();
        for (int v : cyc) one.push_back(g.name(v));
        cycles.push_back(one);
    }
    return json{{"pendant_edges", pendants}, {"cycles", cycles}}.dump();
}

std::string to_json_string(const VWCLabeling& l, const Graph& g) {
    json pairs = json::array();
    for (auto [xv, yv] : l.pairs) pairs.push_back({g.name(xv), g.name(yv)});
    return json{{"pairs", pairs}}.dump();
}

} // namespace shedlab
