#include "shedlab/decomposability.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

#include <json.hpp>

#include "shedlab/independence.hpp"

namespace shedlab {

using nlohmann::json;

std::size_t VDCache::byte_limit_from_environment() {
    const char* raw = std::getenv("SHEDLAB_CACHE_BYTES");
    if (raw == nullptr || *raw == '\0') return kUnlimited;
    char* end = nullptr;
    unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') throw BadParameter("SHEDLAB_CACHE_BYTES must be a byte count");
    return static_cast<std::size_t>(value);
}

VDCache::Shard& VDCache::shard_for(const CanonicalKey& key) const {
    return shards_[std::hash<CanonicalKey>{}(key) % kShards];
}

std::optional<bool> VDCache::find(const CanonicalKey& key) const {
    Shard& shard = shard_for(key);
    std::shared_lock lock(shard.mutex);
    auto it = shard.verdicts.find(key.bytes);
    if (it == shard.verdicts.end()) return std::nullopt;
    return it->second;
}

void VDCache::insert(const CanonicalKey& key, bool verdict) {
    // Rough per-entry footprint: key bytes plus node and bucket overhead.
    const std::size_t cost = key.bytes.size() + 64;
    if (bytes_.load(std::memory_order_relaxed) + cost > limit_) return;
    Shard& shard = shard_for(key);
    std::unique_lock lock(shard.mutex);
    if (shard.verdicts.emplace(key.bytes, verdict).second) bytes_.fetch_add(cost, std::memory_order_relaxed);
}

std::size_t VDCache::size() const {
    std::size_t total = 0;
    for (const Shard& shard : shards_) {
        std::shared_lock lock(shard.mutex);
        total += shard.verdicts.size();
    }
    return total;
}

void VDCache::clear() {
    for (Shard& shard : shards_) {
        std::unique_lock lock(shard.mutex);
        shard.verdicts.clear();
    }
    bytes_.store(0);
}

namespace {

// Recursion over vertex subsets S of one root graph, standing for G[S].
class Decomposer {
public:
    Decomposer(const Graph& g, VDCache* cache) : g_(g), cache_(cache) {}

    bool decomposable(VertexSet s) {
        VertexSet core;
        for (int v : s)
            if (g_.neighbors(v).intersects(s)) core.insert(v);
        // Isolated vertices are base cases; a disjoint union is decomposable
        // iff each part is.
        for (VertexSet comp : connected_components(g_, core))
            if (!decomposable_connected(comp)) return false;
        return true;
    }

    // Candidates in trial order: neighbors of simplicial vertices (they are
    // always shedding vertices of a decomposable graph), then the rest by
    // descending degree.
    std::vector<int> candidate_order(VertexSet s) const {
        VertexSet preferred;
        for (int v : s) {
            VertexSet nbrs = g_.neighbors(v) & s;
            bool simplicial = true;
            for (int u : nbrs)
                if (!(nbrs.without(u)).subset_of(g_.neighbors(u))) {
                    simplicial = false;
                    break;
                }
            if (simplicial) preferred |= nbrs;
        }
        std::vector<int> order = preferred.to_vector();
        std::vector<int> rest = (s - preferred).to_vector();
        std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
            return (g_.neighbors(a) & s).size() > (g_.neighbors(b) & s).size();
        });
        order.insert(order.end(), rest.begin(), rest.end());
        return order;
    }

    const Graph& graph() const { return g_; }

private:
    bool decomposable_connected(VertexSet c) {
        if (!is_well_covered(g_, c)) return false;

        std::optional<CanonicalKey> key;
        if (cache_ != nullptr) {
            key = canonical_key(induced_subgraph(g_, c));
            if (auto hit = cache_->find(*key)) return *hit;
        }

        bool verdict = false;
        for (int x : candidate_order(c)) {
            if (decomposable(c.without(x)) && decomposable(c - g_.closed_neighborhood(x))) {
                verdict = true;
                break;
            }
        }
        if (cache_ != nullptr) cache_->insert(*key, verdict);
        return verdict;
    }

    const Graph& g_;
    VDCache* cache_;
};

int rank_in(VertexSet s, int v) {
    return VertexSet(s.bits() & ((std::uint64_t{1} << v) - 1)).size();
}

DecompositionWitness build_witness(Decomposer& d, VertexSet s) {
    if (s.empty()) return DecompositionWitness::empty();
    const Graph& g = d.graph();
    bool edgeless = std::none_of(s.begin(), s.end(), [&](int v) { return g.neighbors(v).intersects(s); });
    if (edgeless) return DecompositionWitness::isolated_vertices(s.size());

    for (int x : d.candidate_order(s)) {
        VertexSet deleted = s.without(x);
        VertexSet link = s - g.closed_neighborhood(x);
        if (d.decomposable(deleted) && d.decomposable(link))
            return DecompositionWitness::shed(rank_in(s, x), g.name(x), build_witness(d, deleted),
                                              build_witness(d, link));
    }
    throw NotVertexDecomposable("no shedding vertex found");
}

json witness_to_json(const DecompositionWitness& w) {
    switch (w.kind) {
    case DecompositionWitness::Kind::BaseEmpty:
        return {{"kind", "empty"}};
    case DecompositionWitness::Kind::BaseIsolated:
        return {{"kind", "isolated"}, {"vertices", w.isolated}};
    case DecompositionWitness::Kind::Shed:
        return {{"kind", "shed"},
                {"vertex", w.vertex},
                {"name", w.name},
                {"deleted", witness_to_json(w.children[0])},
                {"link", witness_to_json(w.children[1])}};
    }
    return {};
}

DecompositionWitness witness_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "empty") return DecompositionWitness::empty();
    if (kind == "isolated") return DecompositionWitness::isolated_vertices(j.at("vertices").get<int>());
    if (kind == "shed")
        return DecompositionWitness::shed(j.at("vertex").get<int>(), j.value("name", std::string{}),
                                          witness_from_json(j.at("deleted")), witness_from_json(j.at("link")));
    throw BadParameter("unknown witness kind '" + kind + "'");
}

} // namespace

bool is_vertex_decomposable(const Graph& g, VDCache& cache) {
    return Decomposer(g, &cache).decomposable(g.vertices());
}

bool is_vertex_decomposable(const Graph& g) {
    VDCache cache;
    return is_vertex_decomposable(g, cache);
}

bool is_vertex_decomposable_uncached(const Graph& g) {
    return Decomposer(g, nullptr).decomposable(g.vertices());
}

VertexSet shedding_set(const Graph& g, VDCache& cache) {
    Decomposer d(g, &cache);
    if (!d.decomposable(g.vertices())) throw NotVertexDecomposable("shedding set is defined only for vertex decomposable graphs");
    VertexSet shed;
    for (int x : g.vertices())
        if (d.decomposable(g.vertices().without(x))) shed.insert(x);
    return shed;
}

VertexSet shedding_set(const Graph& g) {
    VDCache cache;
    return shedding_set(g, cache);
}

bool shed_is_dominating(const Graph& g, VDCache& cache) {
    return is_dominating_set(g, shedding_set(g, cache));
}

bool shed_is_dominating(const Graph& g) {
    VDCache cache;
    return shed_is_dominating(g, cache);
}

int DecompositionWitness::depth() const {
    int deepest = 0;
    for (const auto& c : children) deepest = std::max(deepest, c.depth());
    return kind == Kind::Shed ? deepest + 1 : 0;
}

DecompositionWitness decomposition_witness(const Graph& g, VDCache& cache) {
    Graph named = g.with_default_names();
    Decomposer d(named, &cache);
    if (!d.decomposable(named.vertices()))
        throw NotVertexDecomposable("graph is not vertex decomposable; no witness exists");
    return build_witness(d, named.vertices());
}

DecompositionWitness decomposition_witness(const Graph& g) {
    VDCache cache;
    return decomposition_witness(g, cache);
}

bool verify_witness(const Graph& g, const DecompositionWitness& w) {
    switch (w.kind) {
    case DecompositionWitness::Kind::BaseEmpty:
        return g.order() == 0;
    case DecompositionWitness::Kind::BaseIsolated:
        return g.order() > 0 && g.order() == w.isolated && g.size() == 0;
    case DecompositionWitness::Kind::Shed:
        if (w.vertex < 0 || w.vertex >= g.order() || w.children.size() != 2) return false;
        if (!is_well_covered(g)) return false;
        return verify_witness(delete_vertex(g, w.vertex), w.children[0]) &&
               verify_witness(delete_closed_neighborhood(g, w.vertex), w.children[1]);
    }
    return false;
}

std::string to_text(const DecompositionWitness& w) {
    switch (w.kind) {
    case DecompositionWitness::Kind::BaseEmpty:
        return "Empty";
    case DecompositionWitness::Kind::BaseIsolated:
        return "Isolated(" + std::to_string(w.isolated) + ")";
    case DecompositionWitness::Kind::Shed:
        return "Shed(" + (w.name.empty() ? std::to_string(w.vertex) : w.name) + "; " + to_text(w.children[0]) +
               "; " + to_text(w.children[1]) + ")";
    }
    return {};
}

std::string to_json_string(const DecompositionWitness& w, int indent) {
    return witness_to_json(w).dump(indent);
}

DecompositionWitness witness_from_json_string(const std::string& text) {
    try {
        return witness_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw BadParameter(std::string("malformed witness JSON: ") + e.what());
    }
}

} // namespace shedlab
