#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "common.hpp"
#include "shedlab/constructions.hpp"
#include "shedlab/graph6.hpp"
#include "shedlab/independence.hpp"

using namespace shedlab;

namespace {

std::string temp_file(const std::string& stem, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("shedlab_" + stem + ".g6");
    std::ofstream(path) << content;
    return path.string();
}

CensusReport report_for(int n, int jobs) {
    VDCache cache;
    VectorSource source(testing_support::connected(n));
    CensusOptions opts;
    opts.jobs = jobs;
    opts.batch = 37;  // small batches exercise the refill loop
    return census_report(source, cache, opts);
}

} // namespace

TEST_SUITE("census") {

TEST_CASE("enumeration counts") {
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == expected[n - 1]);
    CHECK_THROWS_AS(enumerate_connected(0), BadParameter);
    CHECK_THROWS_AS(enumerate_connected(9), BadParameter);
}

TEST_CASE("enumeration is exhaustive and isomorph-free against brute force") {
    for (int n = 1; n <= 5; ++n) {
        const auto& classes = enumerate_connected(n);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            CHECK(is_connected(classes[i]));
            for (std::size_t j = i + 1; j < classes.size(); ++j) CHECK_FALSE(oracle::isomorphic(classes[i], classes[j]));
        }
        for (const auto& g : oracle::all_labeled_graphs(n)) {
            if (!is_connected(g)) continue;
            bool found = false;
            for (const auto& c : classes) found |= oracle::isomorphic(g, c);
            CHECK(found);
        }
    }
}

TEST_CASE("enumeration output is sorted canonical forms") {
    const auto& graphs = enumerate_connected(6);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        CHECK(to_graph6(graphs[i]) == canonical_key(graphs[i]).bytes);
        if (i > 0) CHECK(to_graph6(graphs[i - 1]) < to_graph6(graphs[i]));
    }
}

TEST_CASE("census rows up to 7") {
    const std::vector<CensusRow> expected{
        {1, 1, 1, 1, 0},  {2, 1, 1, 1, 0},   {3, 2, 1, 1, 0},     {4, 6, 3, 2, 0},
        {5, 21, 6, 5, 0}, {6, 112, 27, 20, 0}, {7, 853, 108, 82, 0},
    };
    for (const auto& row : expected) {
        CensusReport r = report_for(row.n, 0);
        REQUIRE(r.rows.size() == 1);
        CHECK(r.rows.at(row.n) == row);
        CHECK(r.failures.empty());
    }
}

TEST_CASE("column inequalities and parallel determinism") {
    for (int n = 4; n <= 7; ++n) {
        CensusReport serial = report_for(n, 1);
        const CensusRow& row = serial.rows.at(n);
        CHECK(row.fail_q12 <= row.vd);
        CHECK(row.vd <= row.well_covered);
        CHECK(row.well_covered <= row.connected);
        for (int jobs : {2, 3, 4}) {
            CensusReport par = report_for(n, jobs);
            CHECK(render_json(par) == render_json(serial));
            CHECK(render_csv(par) == render_csv(serial));
            CHECK(render_table(par) == render_table(serial));
        }
    }
}

TEST_CASE("classification records") {
    VDCache cache;
    ClassificationRecord p2 = classify(gen_pm(2), cache);
    CHECK(p2.well_covered);
    CHECK(p2.vertex_decomposable);
    REQUIRE(p2.shed.has_value());
    Graph g = gen_pm(2);
    CHECK(*p2.shed == VertexSet{*g.find("z1"), *g.find("z2")});
    CHECK(p2.shed_dominating == false);
    CHECK(p2.fails_q12());
    CHECK(p2.n == 9);
    CHECK(p2.m == 13);
    CHECK(p2.girth == 3);
    CHECK_FALSE(p2.chordal);

    ClassificationRecord c7 = classify(cycle_graph(7), cache);
    CHECK(c7.well_covered);
    CHECK_FALSE(c7.vertex_decomposable);
    CHECK_FALSE(c7.shed.has_value());
    CHECK_FALSE(c7.shed_dominating.has_value());
    CHECK(c7.girth == 7);

    ClassificationRecord k1 = classify(Graph(1), cache);
    CHECK(k1.vertex_decomposable);
    CHECK(*k1.shed == VertexSet{0});
    CHECK(k1.shed_dominating == true);
    CHECK_FALSE(k1.fails_q12());
    CHECK_FALSE(k1.girth.has_value());
    CHECK(k1.chordal);

    ClassifyOptions alt;
    alt.edgeless_shed_empty = true;
    ClassificationRecord k1_alt = classify(Graph(1), cache, alt);
    CHECK(k1_alt.shed->empty());
    CHECK(k1_alt.shed_dominating == false);
    CHECK(k1_alt.fails_q12());

    auto j = nlohmann::json::parse(record_to_json(p2, &g));
    CHECK(j["shed"] == nlohmann::json::array({"z1", "z2"}));
    CHECK(j["shed_dominating"] == false);
}

TEST_CASE("failure hunt on a family stream") {
    VDCache cache;
    VectorSource source({gen_ln(1), cycle_graph(5), gen_dn({2}), gen_pm(2), complete_graph(3)});
    auto failures = find_q12_failures(source, cache);
    REQUIRE(failures.size() == 3);
    CHECK(failures[0].key == canonical_key(gen_pm(2)));  // 9 vertices, 13 edges
    CHECK(failures[1].key == canonical_key(gen_ln(1)));  // 9 vertices, 14 edges
    CHECK(failures[2].key == canonical_key(gen_dn({2})));  // 10 vertices
    for (const auto& rec : failures) {
        Graph g = parse_graph6(rec.key.bytes);
        CHECK(verify_witness(g, decomposition_witness(g)));
        CHECK_FALSE(is_dominating_set(g, *rec.shed));
    }
}

TEST_CASE("no failures up to 7 vertices") {
    VDCache cache;
    VectorSource source(testing_support::connected_up_to(7));
    CHECK(find_q12_failures(source, cache).empty());
}

TEST_CASE("graph6 ingestion") {
    std::string five;
    for (const auto& g : testing_support::connected(5)) five += to_graph6(g) + "\n";
    auto graphs = ingest_graph6(temp_file("five", five));
    CHECK(graphs.size() == 21);

    CHECK(ingest_graph6(temp_file("empty", "")).empty());

    auto p2 = ingest_graph6(temp_file("p2", ">>graph6<<" + to_graph6(gen_pm(2)) + "\r\n\n"));
    REQUIRE(p2.size() == 1);
    CHECK(is_isomorphic(p2[0], gen_pm(2)));

    try {
        ingest_graph6(temp_file("bad", "Bw\nCl\nC!\n"));
        FAIL("expected BadGraph6");
    } catch (const BadGraph6& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(ingest_graph6("/nonexistent/shedlab.g6"), IOError);
}

TEST_CASE("ingestion feeds the census") {
    std::string six;
    for (const auto& g : testing_support::connected(6)) six += to_graph6(g) + "\n";
    Graph6FileSource source(temp_file("six", six));
    VDCache cache;
    CensusReport r = census_report(source, cache);
    CHECK(r.rows.at(6) == CensusRow{6, 112, 27, 20, 0});
}

TEST_CASE("streamed errors propagate out of the census") {
    std::istringstream in("Bw\nnot-a-graph\n");
    Graph6FileSource source(in);
    VDCache cache;
    CHECK_THROWS_AS(census_report(source, cache), BadGraph6);
}

TEST_CASE("report rendering") {
    CensusReport r = report_for(5, 1);
    std::string table = render_table(r);
    CHECK(table.find("n/a — out of scope") != std::string::npos);
    std::istringstream rows(table);
    std::string header, row;
    std::getline(rows, header);
    std::getline(rows, row);
    std::istringstream cells(row);
    std::vector<std::string> values{std::istream_iterator<std::string>(cells), {}};
    CHECK(values == std::vector<std::string>{"5", "21", "6", "5", "0"});
    auto j = nlohmann::json::parse(render_json(r));
    CHECK(j["rows"][0]["connected"] == 21);
    CHECK(j["failures"].empty());
    CHECK(render_csv(r) == "n,connected,well_covered,vd,fail_q12\n5,21,6,5,0\n");
}

TEST_CASE("one augmentation step reaches the next level") {
    CHECK(extend_connected(enumerate_connected(6)).size() == 853);
    CHECK(extend_connected({}).empty());
}

} // TEST_SUITE
