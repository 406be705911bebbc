#include "shedlab/independence.hpp"

#include <algorithm>

namespace shedlab {

namespace {

// Independent sets correspond to cliques of the complement; P holds the
// vertices that can still extend R, X those already excluded.
bool bron_kerbosch(const Graph& g, VertexSet within, VertexSet r, VertexSet p, VertexSet x,
                   const std::function<bool(VertexSet)>& visit) {
    if (p.empty()) return x.empty() ? visit(r) : true;

    // Every maximal set must contain the pivot or one of its neighbors in P.
    // Pick the pivot leaving the fewest branches.
    int pivot = -1;
    int fewest = kMaxVertices + 1;
    for (int u : p | x) {
        int branches = (p & g.closed_neighborhood(u) & within).size();
        if (branches < fewest) {
            fewest = branches;
            pivot = u;
        }
    }

    const VertexSet branch = p & g.closed_neighborhood(pivot);
    for (int v : branch) {
        const VertexSet blocked = g.closed_neighborhood(v);
        if (!bron_kerbosch(g, within, r.with(v), p - blocked, x - blocked, visit)) return false;
        p.erase(v);
        x.insert(v);
    }
    return true;
}

void count_independent(const Graph& g, VertexSet p, int depth, std::vector<std::int64_t>& counts) {
    if (static_cast<int>(counts.size()) <= depth) counts.resize(static_cast<std::size_t>(depth) + 1, 0);
    ++counts[depth];
    // Each set is counted once, at the recursion node where its largest
    // element was added: extend only with vertices above the last one.
    for (int v : p) {
        VertexSet rest = p - g.closed_neighborhood(v);
        rest = VertexSet(rest.bits() & ~((std::uint64_t{2} << v) - 1));
        count_independent(g, rest, depth + 1, counts);
    }
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

} // namespace

bool is_independent(const Graph& g, VertexSet w) {
    check_subset(g, w);
    for (int v : w)
        if (g.neighbors(v).intersects(w)) return false;
    return true;
}

void for_each_maximal_independent_set(const Graph& g, VertexSet within,
                                      const std::function<bool(VertexSet)>& visit) {
    check_subset(g, within);
    bron_kerbosch(g, within, VertexSet{}, within, VertexSet{}, visit);
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, g.vertices(), [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

int independence_number(const Graph& g, VertexSet within) {
    int best = 0;
    for_each_maximal_independent_set(g, within, [&](VertexSet s) {
        best = std::max(best, s.size());
        return true;
    });
    return best;
}

int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

bool is_well_covered(const Graph& g, VertexSet within) {
    int size = -1;
    bool uniform = true;
    for_each_maximal_independent_set(g, within, [&](VertexSet s) {
        if (size < 0) size = s.size();
        uniform = s.size() == size;
        return uniform;
    });
    return uniform;
}

bool is_well_covered(const Graph& g) { return is_well_covered(g, g.vertices()); }

bool is_very_well_covered(const Graph& g) {
    const int n = g.order();
    if (n % 2 != 0) return false;
    return is_well_covered(g) && independence_number(g) == n / 2;
}

std::vector<std::int64_t> independent_set_counts(const Graph& g) {
    if (g.order() > kMaxCountingOrder)
        throw TooLarge("independent set counting is limited to 32 vertices");
    std::vector<std::int64_t> counts;
    count_independent(g, g.vertices(), 0, counts);
    return counts;
}

HVector h_vector_from_counts(std::vector<std::int64_t> counts) {
    if (counts.empty() || counts[0] != 1) throw BadParameter("face counts must start with f_{-1} = 1");
    HVector hv;
    hv.alpha = static_cast<int>(counts.size()) - 1;
    hv.counts = std::move(counts);
    hv.h.assign(hv.counts.size(), 0);
    for (int k = 0; k <= hv.alpha; ++k) {
        std::int64_t hk = 0;
        for (int r = 0; r <= k; ++r) {
            std::int64_t term = binomial(hv.alpha - r, k - r) * hv.counts[r];
            hk += ((k - r) % 2 == 0) ? term : -term;
        }
        hv.h[k] = hk;
    }
    std::int64_t total = 0;
    for (std::int64_t hk : hv.h) total += hk;
    if (total != hv.counts.back()) throw Error("h-vector does not sum to i_alpha");
    return hv;
}

HVector h_vector(const Graph& g) { return h_vector_from_counts(independent_set_counts(g)); }

bool is_nonnegative(const HVector& hv) {
    return std::all_of(hv.h.begin(), hv.h.end(), [](std::int64_t x) { return x >= 0; });
}

bool is_dominating_set(const Graph& g, VertexSet d) {
    check_subset(g, d);
    for (int v : g.vertices() - d)
        if (!g.neighbors(v).intersects(d)) return false;
    return true;
}

} // namespace shedlab
