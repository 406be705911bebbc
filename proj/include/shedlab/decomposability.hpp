#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "shedlab/canonical.hpp"
#include "shedlab/graph.hpp"

namespace shedlab {

// Verdict memo keyed by canonical key, shared by census workers. Inserts are
// insert-if-absent; two workers racing on one key store the same value.
// Once the byte budget is spent, further inserts are dropped.
class VDCache {
public:
    static constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

    explicit VDCache(std::size_t byte_limit = kUnlimited) : limit_(byte_limit) {}
    VDCache(const VDCache&) = delete;
    VDCache& operator=(const VDCache&) = delete;

    // Budget from SHEDLAB_CACHE_BYTES, unlimited when unset.
    static std::size_t byte_limit_from_environment();

    std::optional<bool> find(const CanonicalKey& key) const;
    void insert(const CanonicalKey& key, bool verdict);
    std::size_t size() const;
    std::size_t bytes() const { return bytes_.load(std::memory_order_relaxed); }
    void clear();

private:
    struct Shard {
        mutable std::shared_mutex mutex;
        std::unordered_map<std::string, bool> verdicts;
    };
    static constexpr std::size_t kShards = 32;

    Shard& shard_for(const CanonicalKey& key) const;

    mutable std::array<Shard, kShards> shards_;
    std::atomic<std::size_t> bytes_{0};
    std::size_t limit_;
};

bool is_vertex_decomposable(const Graph& g, VDCache& cache);
// Uses a private cache for the duration of the call.
bool is_vertex_decomposable(const Graph& g);
// No memoization at all; still splits components and orders candidates.
bool is_vertex_decomposable_uncached(const Graph& g);

// {x : G\x is vertex decomposable}. Throws NotVertexDecomposable when G is
// not vertex decomposable.
VertexSet shedding_set(const Graph& g, VDCache& cache);
VertexSet shedding_set(const Graph& g);

bool shed_is_dominating(const Graph& g, VDCache& cache);
bool shed_is_dominating(const Graph& g);

// Derivation tree of the recursive definition. `vertex` indexes the graph at
// that node (labels shift down after each deletion); `name` is the vertex's
// label in the root graph.
struct DecompositionWitness {
    enum class Kind { BaseEmpty, BaseIsolated, Shed };

    Kind kind = Kind::BaseEmpty;
    int vertex = -1;
    std::string name;
    int isolated = 0;  // vertex count at a BaseIsolated leaf
    std::vector<DecompositionWitness> children;  // Shed: {G\x, G\N[x]}

    static DecompositionWitness empty() { return {}; }
    static DecompositionWitness isolated_vertices(int count) {
        DecompositionWitness w;
        w.kind = Kind::BaseIsolated;
        w.isolated = count;
        return w;
    }
    static DecompositionWitness shed(int vertex, std::string name, DecompositionWitness deleted,
                                     DecompositionWitness link) {
        DecompositionWitness w;
        w.kind = Kind::Shed;
        w.vertex = vertex;
        w.name = std::move(name);
        w.children.push_back(std::move(deleted));
        w.children.push_back(std::move(link));
        return w;
    }

    int depth() const;
    bool operator==(const DecompositionWitness&) const = default;
};

DecompositionWitness decomposition_witness(const Graph& g, VDCache& cache);
DecompositionWitness decomposition_witness(const Graph& g);

// Replays the derivation with a well-covered check at every node. Shares no
// code with the search.
bool verify_witness(const Graph& g, const DecompositionWitness& w);

// "Empty", "Isolated(k)", "Shed(name; <G\x>; <G\N[x]>)".
std::string to_text(const DecompositionWitness& w);
std::string to_json_string(const DecompositionWitness& w, int indent = -1);
DecompositionWitness witness_from_json_string(const std::string& text);

} // namespace shedlab
