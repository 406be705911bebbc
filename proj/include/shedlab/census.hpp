#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shedlab/canonical.hpp"
#include "shedlab/decomposability.hpp"
#include "shedlab/graph.hpp"

namespace shedlab {

struct ClassifyOptions {
    // Edgeless graphs have Shed(G) = V under the deletion rule, so they always
    // dominate. Setting this treats their shedding set as empty instead, which
    // turns every nonempty edgeless graph into a failure.
    bool edgeless_shed_empty = false;
};

struct ClassificationRecord {
    CanonicalKey key;
    int n = 0;
    int m = 0;
    bool well_covered = false;
    bool vertex_decomposable = false;
    std::optional<VertexSet> shed;            // present iff VD; labels of the input graph
    std::optional<bool> shed_dominating;      // present iff vertex decomposable
    std::optional<int> girth;                 // nullopt: acyclic
    bool chordal = false;

    bool fails_q12() const { return vertex_decomposable && shed_dominating == false; }
};

ClassificationRecord classify(const Graph& g, VDCache& cache, const ClassifyOptions& opts = {});

// Pull-based stream of graphs.
class GraphSource {
public:
    virtual ~GraphSource() = default;
    virtual std::optional<Graph> next() = 0;
};

class VectorSource : public GraphSource {
public:
    explicit VectorSource(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
    std::optional<Graph> next() override;

private:
    std::vector<Graph> graphs_;
    std::size_t pos_ = 0;
};

// Reads graph6 lines lazily; blank lines and ">>graph6<<" headers are
// skipped. Malformed lines raise BadGraph6 carrying the line number.
class Graph6FileSource : public GraphSource {
public:
    explicit Graph6FileSource(const std::string& path);
    explicit Graph6FileSource(std::istream& in);
    std::optional<Graph> next() override;

private:
    std::unique_ptr<std::ifstream> owned_;
    std::istream* in_;
    long line_ = 0;
};

std::vector<Graph> ingest_graph6(const std::string& path);

// All connected graphs on n vertices up to isomorphism, in canonical form,
// sorted by canonical key. Built-in range 1 <= n <= 8.
inline constexpr int kMaxEnumerationOrder = 8;
std::vector<Graph> enumerate_connected(int n, int jobs = 0);
// One augmentation step: every connected graph on k+1 vertices, given every
// connected graph on k vertices. No size cap; cost grows with 2^k per parent.
std::vector<Graph> extend_connected(const std::vector<Graph>& parents, int jobs = 0);

struct CensusRow {
    int n = 0;
    std::int64_t connected = 0;
    std::int64_t well_covered = 0;
    std::int64_t vd = 0;
    std::int64_t fail_q12 = 0;

    bool operator==(const CensusRow&) const = default;
};

struct CensusReport {
    std::map<int, CensusRow> rows;
    std::vector<ClassificationRecord> failures;  // sorted by (n, m, key)
};

struct CensusOptions {
    int jobs = 0;  // 0: all available threads; 1: the serial reference loop
    std::size_t batch = 1 << 15;
    ClassifyOptions classify;
};

// Parallel fold over the source: graphs of each batch are dealt round-robin
// to workers, counts are summed. Output is independent of `jobs`.
CensusReport census_report(GraphSource& source, VDCache& cache, const CensusOptions& opts = {});
// Plain loop, kept as the reference for the parallel path.
CensusReport census_report_serial(GraphSource& source, VDCache& cache, const ClassifyOptions& opts = {});

std::vector<ClassificationRecord> find_q12_failures(GraphSource& source, VDCache& cache,
                                                    const CensusOptions& opts = {});

int available_threads();

std::string render_table(const CensusReport& report);
std::string render_json(const CensusReport& report, int indent = -1);
std::string render_csv(const CensusReport& report);
// `shed` labels refer to the classified input graph, not to the canonical
// form in `key`; pass the input to print its names and graph6 alongside.
std::string record_to_json(const ClassificationRecord& rec, const Graph* input = nullptr);

} // namespace shedlab
