#include "shedlab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "shedlab/census.hpp"
#include "shedlab/constructions.hpp"
#include "shedlab/decomposability.hpp"
#include "shedlab/graph6.hpp"
#include "shedlab/independence.hpp"
#include "shedlab/structure.hpp"

namespace shedlab::cli {

using nlohmann::json;

namespace {

struct UsageError : Error {
    using Error::Error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

int parse_int(const std::string& raw) {
    int value = 0;
    const char* end = raw.data() + raw.size();
    auto [ptr, ec] = std::from_chars(raw.data(), end, value);
    if (raw.empty() || ec != std::errc{} || ptr != end) throw UsageError("not an integer: '" + raw + "'");
    return value;
}

std::vector<int> parse_int_list(const std::string& raw) {
    std::vector<int> out;
    if (raw.empty()) return out;
    for (const auto& part : split(raw, ',')) out.push_back(parse_int(part));
    return out;
}

// Accepts ["x1","x2",...] or {"0":"x1",...}.
std::vector<std::string> parse_name_map(const std::string& text, int n) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("name map is not valid JSON: ") + e.what());
    }
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) names[v] = std::to_string(v);
    if (j.is_array()) {
        if (static_cast<int>(j.size()) != n) throw UsageError("name map length does not match the graph order");
        for (int v = 0; v < n; ++v) {
            if (!j[v].is_string()) throw UsageError("name map entries must be strings");
            names[v] = j[v].get<std::string>();
        }
    } else if (j.is_object()) {
        for (auto& [key, value] : j.items()) {
            int v = parse_int(key);
            if (v < 0 || v >= n) throw UsageError("name map label out of range: " + key);
            if (!value.is_string()) throw UsageError("name map entries must be strings");
            names[v] = value.get<std::string>();
        }
    } else {
        throw UsageError("name map must be a JSON array or object");
    }
    return names;
}

std::string name_map_json(const Graph& g) {
    json j = json::object();
    for (int v : g.vertices()) j[std::to_string(v)] = g.name(v);
    return j.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IOError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// One graph6 line, optionally followed by a name-map line (as printed by
// `gen --names`).
Graph graph_from_text(const std::string& text) {
    std::optional<Graph> g;
    std::istringstream in(text);
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        if (line.empty()) continue;
        if (!g) {
            try {
                g = parse_graph6(line);
            } catch (const BadGraph6& e) {
                throw BadGraph6(e.what(), lineno);
            }
        } else if (line.front() == '{' || line.front() == '[') {
            g = g->with_names(parse_name_map(line, g->order()));
        } else {
            throw UsageError("expected a single graph, found more input at line " + std::to_string(lineno));
        }
    }
    if (!g) throw UsageError("no graph given");
    return *g;
}

struct GraphArgs {
    std::string graph;
    std::string file;
    std::string names_file;

    void attach(CLI::App* sub) {
        sub->add_option("graph", graph, "graph6 string, or - to read stdin");
        sub->add_option("--file", file, "read the graph from a file");
        sub->add_option("--names-file", names_file, "JSON name map (array or {label: name})");
    }

    Graph load(std::istream& in) const {
        if (!graph.empty() && !file.empty()) throw UsageError("give the graph inline or with --file, not both");
        Graph g;
        if (!file.empty()) {
            g = graph_from_text(read_file(file));
        } else if (graph == "-") {
            std::ostringstream ss;
            ss << in.rdbuf();
            g = graph_from_text(ss.str());
        } else if (!graph.empty()) {
            g = parse_graph6(graph);
        } else {
            throw UsageError("no graph given");
        }
        if (!names_file.empty()) g = g.with_names(parse_name_map(read_file(names_file), g.order()));
        return g;
    }
};

std::string format_set(const Graph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ',';
        out += g.name(v);
        first = false;
    }
    return out + "}";
}

json names_json(const Graph& g, VertexSet s) {
    json arr = json::array();
    for (int v : s) arr.push_back(g.name(v));
    return arr;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- check ----------------------------------------------------------------

const std::vector<std::string> kProperties{"wc", "vwc", "vd", "chordal", "girth", "pc", "simplicial"};

struct CheckArgs {
    GraphArgs input;
    std::vector<std::string> properties;
    bool as_json = false;
};

int do_check(const CheckArgs& a, std::istream& in, std::ostream& out, VDCache& cache) {
    const Graph g = a.input.load(in);
    std::vector<std::string> props;
    for (const auto& raw : a.properties)
        for (const auto& p : split(raw, ',')) {
            if (std::find(kProperties.begin(), kProperties.end(), p) == kProperties.end())
                throw UsageError("unknown property '" + p + "'");
            if (std::find(props.begin(), props.end(), p) == props.end()) props.push_back(p);
        }
    if (props.empty()) props = kProperties;

    json result = json::object();
    json certificates = json::object();
    std::ostringstream text;
    bool any_false = false;
    for (const auto& p : props) {
        if (p == "girth") {
            auto gi = girth(g);
            result["girth"] = gi ? json(*gi) : json(nullptr);
            text << "girth: " << (gi ? std::to_string(*gi) : "infinite") << '\n';
            continue;
        }
        bool verdict = false;
        if (p == "wc") {
            verdict = is_well_covered(g);
        } else if (p == "vwc") {
            verdict = is_very_well_covered(g);
            if (verdict)
                if (auto lab = vwc_labeling(g)) certificates["vwc"] = json::parse(to_json_string(*lab, g));
        } else if (p == "vd") {
            verdict = is_vertex_decomposable(g, cache);
        } else if (p == "chordal") {
            auto peo = perfect_elimination_order(g);
            verdict = peo.has_value();
            if (peo) {
                json order = json::array();
                for (int v : *peo) order.push_back(g.name(v));
                certificates["chordal"] = order;
            }
        } else if (p == "pc") {
            auto cert = pc_membership(g);
            verdict = cert.has_value();
            if (cert) certificates["pc"] = json::parse(to_json_string(*cert, g));
        } else if (p == "simplicial") {
            verdict = is_simplicial_graph(g);
            if (auto part = simplex_partition(g)) certificates["simplicial"] = json::parse(to_json_string(*part, g));
        }
        any_false |= !verdict;
        result[p] = verdict;
        text << p << ": " << yes_no(verdict) << '\n';
    }
    if (a.as_json) {
        json doc{{"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"properties", result}};
        if (!certificates.empty()) doc["certificates"] = certificates;
        out << doc.dump() << '\n';
    } else {
        out << text.str();
    }
    const bool single_boolean = props.size() == 1 && props[0] != "girth";
    return single_boolean && any_false ? kNegative : kOk;
}

// ---- shed / hvector / witness ---------------------------------------------

struct ShedArgs {
    GraphArgs input;
    bool as_json = false;
    bool edgeless_shed_empty = false;
};

int do_shed(const ShedArgs& a, std::istream& in, std::ostream& out, std::ostream& err, VDCache& cache) {
    const Graph g = a.input.load(in);
    if (!is_vertex_decomposable(g, cache)) {
        if (a.as_json) out << json{{"vertex_decomposable", false}}.dump() << '\n';
        err << "graph is not vertex decomposable\n";
        return kUsage;
    }
    VertexSet shed = (a.edgeless_shed_empty && g.size() == 0) ? VertexSet{} : shedding_set(g, cache);
    const bool dominating = is_dominating_set(g, shed);
    if (a.as_json)
        out << json{{"vertex_decomposable", true}, {"shed", names_json(g, shed)}, {"dominating", dominating}}.dump()
            << '\n';
    else
        out << "Shed = " << format_set(g, shed) << "; dominating: " << yes_no(dominating) << '\n';
    return dominating ? kOk : kNegative;
}

struct HVectorArgs {
    GraphArgs input;
    bool as_json = false;
};

int do_hvector(const HVectorArgs& a, std::istream& in, std::ostream& out) {
    const Graph g = a.input.load(in);
    const HVector hv = h_vector(g);
    const bool ok = is_nonnegative(hv);
    if (a.as_json) {
        out << json{{"alpha", hv.alpha}, {"counts", hv.counts}, {"h", hv.h}, {"nonnegative", ok}}.dump() << '\n';
    } else {
        auto line = [&](const char* label, const std::vector<std::int64_t>& xs) {
            out << label << ':';
            for (auto x : xs) out << ' ' << x;
            out << '\n';
        };
        out << "alpha: " << hv.alpha << '\n';
        line("counts", hv.counts);
        line("h", hv.h);
    }
    return ok ? kOk : kNegative;
}

struct WitnessArgs {
    GraphArgs input;
    bool as_json = false;
};

int do_witness(const WitnessArgs& a, std::istream& in, std::ostream& out, std::ostream& err, VDCache& cache) {
    const Graph g = a.input.load(in);
    DecompositionWitness w;
    try {
        w = decomposition_witness(g, cache);
    } catch (const NotVertexDecomposable&) {
        if (a.as_json) out << json{{"vertex_decomposable", false}}.dump() << '\n';
        err << "graph is not vertex decomposable\n";
        return kUsage;
    }
    const bool verified = verify_witness(g, w);
    if (a.as_json)
        out << json{{"vertex_decomposable", true},
                    {"witness", json::parse(to_json_string(w))},
                    {"verified", verified}}
                   .dump()
            << '\n';
    else
        out << to_text(w) << "\nverified: " << yes_no(verified) << '\n';
    if (!verified) {
        err << "witness failed independent verification\n";
        return kInternal;
    }
    return kOk;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
    bool names = false;
    std::string ks;      // dn, clique-append
    int m = 2;           // pm
    int n = 1;           // ln, circulant, connected
    std::string s;       // circulant offsets, expand multiplicities
    std::string set;     // whisker
    std::string blocks;  // clique-whisker
    int x = 0;           // duplicate
    GraphArgs input;
};

CliquePartition parse_blocks(const std::string& raw) {
    CliquePartition pi;
    for (const auto& part : split(raw, ';')) pi.blocks.push_back(VertexSet::from(parse_int_list(part)));
    return pi;
}

void emit_generated(const Graph& g, bool names, std::ostream& out) {
    out << to_graph6(g) << '\n';
    if (names) out << name_map_json(g) << '\n';
}

int do_gen(const std::string& which, const GenArgs& a, std::istream& in, std::ostream& out, int jobs) {
    if (which == "dn") {
        emit_generated(gen_dn(parse_int_list(a.ks)), a.names, out);
    } else if (which == "pm") {
        emit_generated(gen_pm(a.m), a.names, out);
    } else if (which == "ln") {
        emit_generated(gen_ln(a.n), a.names, out);
    } else if (which == "circulant") {
        emit_generated(circulant(a.n, parse_int_list(a.s)), a.names, out);
    } else if (which == "connected") {
        if (a.n < 1 || a.n > kMaxEnumerationOrder + 1)
            throw UsageError("gen connected supports 1.." + std::to_string(kMaxEnumerationOrder + 1) + " vertices");
        std::vector<Graph> graphs = a.n <= kMaxEnumerationOrder
                                        ? enumerate_connected(a.n, jobs)
                                        : extend_connected(enumerate_connected(kMaxEnumerationOrder, jobs), jobs);
        for (const auto& g : graphs) out << to_graph6(g) << '\n';
    } else {
        const Graph g = a.input.load(in);
        Graph result;
        if (which == "whisker")
            result = whisker(g, a.set.empty() ? g.vertices() : VertexSet::from(parse_int_list(a.set)));
        else if (which == "clique-append")
            result = clique_append(g, parse_int_list(a.ks));
        else if (which == "clique-whisker")
            result = clique_whisker(g, parse_blocks(a.blocks));
        else if (which == "expand")
            result = expand(g, parse_int_list(a.s));
        else if (which == "duplicate")
            result = duplicate_vertex(g, a.x);
        emit_generated(result, a.names, out);
    }
    return kOk;
}

// ---- census / failures ----------------------------------------------------

struct CensusArgs {
    int n = 0;
    std::string input;
    int jobs = 0;
    std::string format = "table";
    bool edgeless_shed_empty = false;
    bool as_json = false;  // failures only
};

// Rejects graphs whose order disagrees with --n.
class OrderCheckedSource : public GraphSource {
public:
    OrderCheckedSource(GraphSource& inner, int n) : inner_(inner), n_(n) {}
    std::optional<Graph> next() override {
        auto g = inner_.next();
        ++count_;
        if (g && g->order() != n_)
            throw UsageError("graph " + std::to_string(count_) + " of the input has " + std::to_string(g->order()) +
                             " vertices, expected " + std::to_string(n_));
        return g;
    }

private:
    GraphSource& inner_;
    int n_;
    long count_ = 0;
};

CensusReport run_census(const CensusArgs& a, VDCache& cache) {
    if (a.jobs < 0) throw UsageError("--jobs must be non-negative");
    CensusOptions opts;
    opts.jobs = a.jobs;
    opts.classify.edgeless_shed_empty = a.edgeless_shed_empty;
    if (!a.input.empty()) {
        Graph6FileSource file(a.input);
        if (a.n > 0) {
            OrderCheckedSource checked(file, a.n);
            return census_report(checked, cache, opts);
        }
        return census_report(file, cache, opts);
    }
    if (a.n <= 0) throw UsageError("give --n or --input");
    VectorSource source(enumerate_connected(a.n, a.jobs));
    return census_report(source, cache, opts);
}

int do_census(const CensusArgs& a, std::ostream& out, VDCache& cache) {
    const CensusReport report = run_census(a, cache);
    if (a.format == "json")
        out << render_json(report) << '\n';
    else if (a.format == "csv")
        out << render_csv(report);
    else
        out << render_table(report);
    return kOk;
}

int do_failures(const CensusArgs& a, std::ostream& out, std::ostream& err, VDCache& cache) {
    const CensusReport report = run_census(a, cache);
    json list = json::array();
    bool all_verified = true;
    for (const auto& rec : report.failures) {
        // Replay on the canonical graph: witness for VD, then non-domination.
        // rec.shed is in the input's labels, so recompute it here.
        const Graph g = parse_graph6(rec.key.bytes);
        const VertexSet shed = shedding_set(g, cache);
        const bool verified = verify_witness(g, decomposition_witness(g, cache)) &&
                              shed.size() == rec.shed->size() && !is_dominating_set(g, shed);
        all_verified &= verified;
        if (a.as_json) {
            list.push_back({{"key", rec.key.bytes},
                            {"n", rec.n},
                            {"m", rec.m},
                            {"shed", names_json(g, shed)},
                            {"verified", verified}});
        } else {
            out << rec.key.bytes << "  n=" << rec.n << " m=" << rec.m << " shed=" << format_set(g, shed)
                << " verified=" << yes_no(verified) << '\n';
        }
    }
    if (a.as_json) out << list.dump() << '\n';
    if (!all_verified) {
        err << "a failure record did not re-verify\n";
        return kInternal;
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vertex decomposability and shedding-set toolkit", "shedlab"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "decide graph properties");
    check.input.attach(check_cmd);
    check_cmd->add_option("--property", check.properties, "wc, vwc, vd, chordal, girth, pc, simplicial");
    check_cmd->add_flag("--json", check.as_json);

    ShedArgs shed;
    auto* shed_cmd = app.add_subcommand("shed", "shedding set and whether it dominates");
    shed.input.attach(shed_cmd);
    shed_cmd->add_flag("--json", shed.as_json);
    shed_cmd->add_flag("--edgeless-shed-empty", shed.edgeless_shed_empty, "treat Shed of an edgeless graph as empty");

    HVectorArgs hv;
    auto* hv_cmd = app.add_subcommand("hvector", "independent-set counts and h-vector");
    hv.input.attach(hv_cmd);
    hv_cmd->add_flag("--json", hv.as_json);

    WitnessArgs wit;
    auto* wit_cmd = app.add_subcommand("witness", "emit and verify a decomposition witness");
    wit.input.attach(wit_cmd);
    wit_cmd->add_flag("--json", wit.as_json);

    GenArgs gen;
    int gen_jobs = 0;
    auto* gen_cmd = app.add_subcommand("gen", "generate graphs");
    gen_cmd->require_subcommand(1);
    auto gen_sub = [&](const std::string& name, const std::string& help) {
        auto* sub = gen_cmd->add_subcommand(name, help);
        sub->add_flag("--names", gen.names, "also print the vertex name map");
        return sub;
    };
    gen_sub("dn", "D_n(k_1,...,k_m)")->add_option("--ks", gen.ks, "block sizes, e.g. 2,3")->required();
    gen_sub("pm", "P_m")->add_option("--m", gen.m)->required();
    gen_sub("ln", "L_n")->add_option("--n", gen.n)->required();
    {
        auto* sub = gen_sub("circulant", "C_n(S)");
        sub->add_option("--n", gen.n)->required();
        sub->add_option("--s", gen.s, "offsets, e.g. 1,2")->required();
    }
    {
        auto* sub = gen_sub("connected", "every connected graph on n vertices (n <= 9)");
        sub->add_option("--n", gen.n)->required();
        sub->add_option("--jobs", gen_jobs);
    }
    {
        auto* sub = gen_sub("whisker", "add a leaf at each vertex of a set");
        gen.input.attach(sub);
        sub->add_option("--set", gen.set, "vertex labels, default all");
    }
    {
        auto* sub = gen_sub("clique-append", "attach a clique at every vertex");
        gen.input.attach(sub);
        sub->add_option("--ks", gen.ks, "clique sizes, one per vertex")->required();
    }
    {
        auto* sub = gen_sub("clique-whisker", "add an apex per block of a clique partition");
        gen.input.attach(sub);
        sub->add_option("--blocks", gen.blocks, "blocks separated by ';', e.g. '0,1;2'")->required();
    }
    {
        auto* sub = gen_sub("expand", "replace vertices by cliques of copies");
        gen.input.attach(sub);
        sub->add_option("--s", gen.s, "multiplicities, one per vertex")->required();
    }
    {
        auto* sub = gen_sub("duplicate", "add a twin adjacent to N[x]");
        gen.input.attach(sub);
        sub->add_option("--x", gen.x)->required();
    }

    CensusArgs census;
    auto* census_cmd = app.add_subcommand("census", "classify all connected graphs on n vertices");
    CensusArgs failures;
    auto* failures_cmd = app.add_subcommand("failures", "VD graphs whose shedding set does not dominate");
    for (auto [cmd, a] : {std::pair{census_cmd, &census}, std::pair{failures_cmd, &failures}}) {
        cmd->add_option("--n", a->n, "number of vertices");
        cmd->add_option("--input", a->input, "graph6 file instead of built-in enumeration");
        cmd->add_option("--jobs", a->jobs, "worker threads; 0 = all, 1 = sequential reference");
        cmd->add_flag("--edgeless-shed-empty", a->edgeless_shed_empty, "treat Shed of an edgeless graph as empty");
    }
    census_cmd->add_option("--format", census.format)->check(CLI::IsMember({"table", "json", "csv"}));
    failures_cmd->add_flag("--json", failures.as_json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        VDCache cache(VDCache::byte_limit_from_environment());
        if (check_cmd->parsed()) return do_check(check, in, out, cache);
        if (shed_cmd->parsed()) return do_shed(shed, in, out, err, cache);
        if (hv_cmd->parsed()) return do_hvector(hv, in, out);
        if (wit_cmd->parsed()) return do_witness(wit, in, out, err, cache);
        if (census_cmd->parsed()) return do_census(census, out, cache);
        if (failures_cmd->parsed()) return do_failures(failures, out, err, cache);
        if (gen_cmd->parsed())
            for (auto* sub : gen_cmd->get_subcommands()) return do_gen(sub->get_name(), gen, in, out, gen_jobs);
        err << "no subcommand\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

} // namespace shedlab::cli
