#include "shedlab/census.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <sstream>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "shedlab/graph6.hpp"
#include "shedlab/independence.hpp"
#include "shedlab/structure.hpp"

namespace shedlab {

using nlohmann::json;

int available_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

int resolve_jobs(int jobs) { return jobs > 0 ? jobs : available_threads(); }

bool record_less(const ClassificationRecord& a, const ClassificationRecord& b) {
    return std::tie(a.n, a.m, a.key) < std::tie(b.n, b.m, b.key);
}

void tally(CensusReport& report, const ClassificationRecord& rec) {
    CensusRow& row = report.rows[rec.n];
    row.n = rec.n;
    ++row.connected;
    row.well_covered += rec.well_covered;
    row.vd += rec.vertex_decomposable;
    if (rec.fails_q12()) {
        ++row.fail_q12;
        report.failures.push_back(rec);
    }
}

std::vector<Graph> pull_batch(GraphSource& source, std::size_t batch) {
    std::vector<Graph> out;
    out.reserve(batch);
    while (out.size() < batch) {
        auto g = source.next();
        if (!g) break;
        out.push_back(std::move(*g));
    }
    return out;
}

} // namespace

ClassificationRecord classify(const Graph& g, VDCache& cache, const ClassifyOptions& opts) {
    ClassificationRecord rec;
    rec.key = canonical_key(g);
    rec.n = g.order();
    rec.m = g.size();
    rec.well_covered = is_well_covered(g);
    rec.vertex_decomposable = rec.well_covered && is_vertex_decomposable(g, cache);
    if (rec.vertex_decomposable) {
        VertexSet shed = (opts.edgeless_shed_empty && g.size() == 0) ? VertexSet{} : shedding_set(g, cache);
        rec.shed = shed;
        rec.shed_dominating = is_dominating_set(g, shed);
    }
    rec.girth = girth(g);
    rec.chordal = is_chordal(g);
    return rec;
}

std::optional<Graph> VectorSource::next() {
    if (pos_ >= graphs_.size()) return std::nullopt;
    return graphs_[pos_++];
}

Graph6FileSource::Graph6FileSource(const std::string& path)
    : owned_(std::make_unique<std::ifstream>(path)), in_(owned_.get()) {
    if (!*owned_) throw IOError("cannot open " + path);
}

Graph6FileSource::Graph6FileSource(std::istream& in) : in_(&in) {}

std::optional<Graph> Graph6FileSource::next() {
    std::string line;
    while (std::getline(*in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        try {
            return parse_graph6(line);
        } catch (const BadGraph6& e) {
            throw BadGraph6(e.what(), line_);
        }
    }
    if (in_->bad()) throw IOError("read error after line " + std::to_string(line_));
    return std::nullopt;
}

std::vector<Graph> ingest_graph6(const std::string& path) {
    Graph6FileSource source(path);
    std::vector<Graph> out;
    while (auto g = source.next()) out.push_back(std::move(*g));
    return out;
}

std::vector<Graph> extend_connected(const std::vector<Graph>& parents, int jobs) {
    const int threads = resolve_jobs(jobs);
    std::vector<std::unordered_set<std::string>> found(static_cast<std::size_t>(threads));
    const long count = static_cast<long>(parents.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (long p = 0; p < count; ++p) {
        try {
#ifdef _OPENMP
            auto& mine = found[static_cast<std::size_t>(omp_get_thread_num())];
#else
            auto& mine = found[0];
#endif
            const Graph& parent = parents[static_cast<std::size_t>(p)];
            const int k = parent.order();
            std::vector<VertexSet> rows = parent.rows();
            rows.emplace_back();
            const std::uint64_t limit = std::uint64_t{1} << k;
            // Any nonempty attachment keeps the graph connected; every
            // connected graph has a non-cut vertex, so each arises this way.
            for (std::uint64_t mask = 1; mask < limit; ++mask) {
                std::vector<VertexSet> child = rows;
                child[k] = VertexSet(mask);
                for (int v : VertexSet(mask)) child[v].insert(k);
                mine.insert(canonical_key(Graph::from_rows(std::move(child))).bytes);
            }
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<std::string> keys;
    for (auto& set : found) keys.insert(keys.end(), set.begin(), set.end());
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Graph> out;
    out.reserve(keys.size());
    for (const auto& key : keys) out.push_back(parse_graph6(key));
    return out;
}

std::vector<Graph> enumerate_connected(int n, int jobs) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw BadParameter("built-in enumeration covers 1..8 vertices; ingest graph6 for larger n");
    std::vector<Graph> level{Graph(1)};
    for (int k = 2; k <= n; ++k) level = extend_connected(level, jobs);
    return level;
}

CensusReport census_report_serial(GraphSource& source, VDCache& cache, const ClassifyOptions& opts) {
    CensusReport report;
    while (auto g = source.next()) tally(report, classify(*g, cache, opts));
    std::sort(report.failures.begin(), report.failures.end(), record_less);
    return report;
}

CensusReport census_report(GraphSource& source, VDCache& cache, const CensusOptions& opts) {
    const int threads = resolve_jobs(opts.jobs);
    if (threads == 1) return census_report_serial(source, cache, opts.classify);

    CensusReport report;
    for (;;) {
        std::vector<Graph> batch = pull_batch(source, std::max<std::size_t>(opts.batch, 1));
        if (batch.empty()) break;
        std::vector<ClassificationRecord> records(batch.size());
        const long count = static_cast<long>(batch.size());
        std::exception_ptr failure;

#pragma omp parallel for schedule(static, 1) num_threads(threads)
        for (long i = 0; i < count; ++i) {
            try {
                records[static_cast<std::size_t>(i)] = classify(batch[static_cast<std::size_t>(i)], cache, opts.classify);
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        for (const auto& rec : records) tally(report, rec);
    }
    std::sort(report.failures.begin(), report.failures.end(), record_less);
    return report;
}

std::vector<ClassificationRecord> find_q12_failures(GraphSource& source, VDCache& cache, const CensusOptions& opts) {
    return census_report(source, cache, opts).failures;
}

std::string render_table(const CensusReport& report) {
    std::ostringstream out;
    out << std::setw(3) << "n" << std::setw(12) << "connected" << std::setw(14) << "well-covered"
        << std::setw(10) << "vd" << std::setw(11) << "fail-q1.2" << '\n';
    for (const auto& [n, row] : report.rows)
        out << std::setw(3) << n << std::setw(12) << row.connected << std::setw(14) << row.well_covered
            << std::setw(10) << row.vd << std::setw(11) << row.fail_q12 << '\n';
    out << "cohen-macaulay: n/a — out of scope (the vd column stands in for it)\n";
    return out.str();
}

std::string render_json(const CensusReport& report, int indent) {
    json rows = json::array();
    for (const auto& [n, row] : report.rows)
        rows.push_back({{"n", n},
                        {"connected", row.connected},
                        {"well_covered", row.well_covered},
                        {"vd", row.vd},
                        {"fail_q12", row.fail_q12}});
    json failures = json::array();
    for (const auto& rec : report.failures) failures.push_back(rec.key.bytes);
    return json{{"rows", rows}, {"failures", failures}}.dump(indent);
}

std::string render_csv(const CensusReport& report) {
    std::ostringstream out;
    out << "n,connected,well_covered,vd,fail_q12\n";
    for (const auto& [n, row] : report.rows)
        out << n << ',' << row.connected << ',' << row.well_covered << ',' << row.vd << ',' << row.fail_q12 << '\n';
    return out.str();
}

std::string record_to_json(const ClassificationRecord& rec, const Graph* input) {
    json j{{"key", rec.key.bytes},
           {"n", rec.n},
           {"m", rec.m},
           {"well_covered", rec.well_covered},
           {"vertex_decomposable", rec.vertex_decomposable},
           {"chordal", rec.chordal}};
    if (input) j["graph6"] = to_graph6(*input);
    j["girth"] = rec.girth ? json(*rec.girth) : json("infinite");
    if (rec.shed) {
        json shed = json::array();
        for (int v : *rec.shed) shed.push_back(input ? json(input->name(v)) : json(v));
        j["shed"] = shed;
        j["shed_dominating"] = *rec.shed_dominating;
    }
    return j.dump();
}

} // namespace shedlab
