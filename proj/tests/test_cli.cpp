#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shedlab/cli.hpp"
#include "shedlab/canonical.hpp"
#include "shedlab/constructions.hpp"
#include "shedlab/graph6.hpp"

using namespace shedlab;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string squash(const std::string& s) {
    std::istringstream in(s);
    std::string word, out;
    while (in >> word) out += (out.empty() ? "" : " ") + word;
    return out;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("shedlab_cli_" + name)).string();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("shed on P2 via the name map pipeline") {
    Result gen = run({"gen", "pm", "--m", "2", "--names"});
    CHECK(gen.code == 0);
    Result shed = run({"shed", "-"}, gen.out);
    CHECK(shed.code == 3);
    CHECK(shed.out == "Shed = {z1,z2}; dominating: no\n");

    std::string names = temp_path("names.json");
    std::ofstream(names) << gen.out.substr(gen.out.find('\n') + 1);
    Result with_file = run({"shed", to_graph6(gen_pm(2)), "--names-file", names});
    CHECK(with_file.out == shed.out);
    Result plain = run({"shed", to_graph6(gen_pm(2))});
    CHECK(plain.out == "Shed = {6,7}; dominating: no\n");
}

TEST_CASE("shed exit codes") {
    CHECK(run({"shed", to_graph6(cycle_graph(5))}).code == 0);
    Result c7 = run({"shed", to_graph6(cycle_graph(7))});
    CHECK(c7.code == 2);
    CHECK(c7.err.find("not vertex decomposable") != std::string::npos);
    Result k1 = run({"shed", "@"});
    CHECK(k1.code == 0);
    CHECK(run({"shed", "@", "--edgeless-shed-empty"}).code == 3);
}

TEST_CASE("check") {
    Result vd = run({"check", to_graph6(cycle_graph(5)), "--property", "vd"});
    CHECK(vd.code == 0);
    CHECK(vd.out == "vd: yes\n");
    CHECK(run({"check", to_graph6(cycle_graph(7)), "--property", "vd"}).code == 3);
    Result all = run({"check", to_graph6(cycle_graph(5))});
    CHECK(all.code == 0);
    CHECK(all.out == "wc: yes\nvwc: no\nvd: yes\nchordal: no\ngirth: 5\npc: yes\nsimplicial: no\n");
    Result json = run({"check", to_graph6(cycle_graph(5)), "--json"});
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["properties"]["vd"] == true);
    CHECK(j["properties"]["girth"] == 5);
    CHECK(j["certificates"].contains("pc"));
    CHECK(run({"check", "Bw", "--property", "girth"}).out == "girth: 3\n");
    CHECK(run({"check", "Bg", "--property", "girth"}).out == "girth: infinite\n");
    CHECK(run({"check", "Bw", "--property", "bogus"}).code == 2);
    Result multi = run({"check", "Cl", "--property", "wc,vd"});
    CHECK(multi.out == "wc: yes\nvd: no\n");
}

TEST_CASE("text and json verdicts agree") {
    for (const Graph& g : {cycle_graph(5), cycle_graph(7), path_graph(4), gen_pm(2), complete_graph(4)}) {
        std::string g6 = to_graph6(g);
        Result text = run({"check", g6});
        auto j = nlohmann::json::parse(run({"check", g6, "--json"}).out);
        for (const char* p : {"wc", "vwc", "vd", "chordal", "pc", "simplicial"}) {
            std::string line = std::string(p) + ": " + (j["properties"][p].get<bool>() ? "yes" : "no") + "\n";
            CHECK(text.out.find(line) != std::string::npos);
        }
    }
}

TEST_CASE("graph input forms") {
    std::string file = temp_path("c5.g6");
    std::ofstream(file) << ">>graph6<<Dhc\n";
    CHECK(run({"check", "--file", file, "--property", "vd"}).out == "vd: yes\n");
    CHECK(run({"check", "-", "--property", "vd"}, "Dhc\n").out == "vd: yes\n");
    CHECK(run({"check", "-"}, "Dhc\nBw\n").code == 2);
    CHECK(run({"check", "-"}, "").code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"check", "B!"}).code == 2);
    CHECK(run({"check", "--file", "/nonexistent/x.g6"}).code == 2);
    CHECK(run({"check", "Dhc", "--file", file}).code == 2);
}

TEST_CASE("hvector") {
    Result c5 = run({"hvector", "Dhc"});
    CHECK(c5.code == 0);
    CHECK(c5.out == "alpha: 2\ncounts: 1 5 5\nh: 1 3 1\n");
    Graph p3 = delete_vertex(gen_pm(3), *gen_pm(3).find("y1"));
    Result neg = run({"hvector", to_graph6(p3), "--json"});
    CHECK(neg.code == 3);
    auto j = nlohmann::json::parse(neg.out);
    CHECK(j["h"][3] == -2);
    CHECK(j["nonnegative"] == false);
}

TEST_CASE("witness") {
    Result ok = run({"witness", "Dhc"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("verified: yes") != std::string::npos);
    Result js = run({"witness", "Dhc", "--json"});
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["verified"] == true);
    CHECK(j["witness"]["kind"] == "shed");
    CHECK(run({"witness", to_graph6(cycle_graph(7))}).code == 2);
}

TEST_CASE("gen") {
    CHECK(run({"gen", "pm", "--m", "2"}).out == to_graph6(gen_pm(2)) + "\n");
    CHECK(run({"gen", "dn", "--ks", "2,3"}).out == to_graph6(gen_dn({2, 3})) + "\n");
    CHECK(run({"gen", "ln", "--n", "1"}).out == to_graph6(gen_ln(1)) + "\n");
    CHECK(run({"gen", "circulant", "--n", "5", "--s", "1"}).out == "Dhc\n");
    CHECK(run({"gen", "whisker", "Dhc"}).out == to_graph6(whisker(cycle_graph(5), VertexSet::range(5))) + "\n");
    CHECK(run({"gen", "whisker", "Dhc", "--set", "0"}).out == to_graph6(whisker(cycle_graph(5), VertexSet{0})) + "\n");
    CHECK(run({"gen", "clique-append", "Bg", "--ks", "2,2,3"}).out ==
          to_graph6(clique_append(path_graph(3), {2, 2, 3})) + "\n");
    CHECK(run({"gen", "clique-whisker", "Bg", "--blocks", "0,1;2"}).out ==
          to_graph6(clique_whisker(path_graph(3), CliquePartition{{VertexSet{0, 1}, VertexSet{2}}})) + "\n");
    CHECK(run({"gen", "expand", "Bg", "--s", "1,2,1"}).out == to_graph6(expand(path_graph(3), {1, 2, 1})) + "\n");
    CHECK(run({"gen", "duplicate", "Bg", "--x", "1"}).out == to_graph6(duplicate_vertex(path_graph(3), 1)) + "\n");
    Result five = run({"gen", "connected", "--n", "5"});
    CHECK(std::count(five.out.begin(), five.out.end(), '\n') == 21);
    CHECK(run({"gen", "clique-whisker", "Bg", "--blocks", "0,2;1"}).code == 2);
    CHECK(run({"gen", "dn", "--ks", "1"}).code == 2);
    CHECK(run({"gen", "dn", "--ks", "2,x"}).code == 2);
    CHECK(run({"gen", "pm"}).code == 2);
    CHECK(run({"gen", "connected", "--n", "10"}).code == 2);
    auto names = nlohmann::json::parse(run({"gen", "ln", "--n", "1", "--names"}).out.substr(run({"gen", "ln", "--n", "1"}).out.size()));
    CHECK(names["8"] == "w");
}

TEST_CASE("census") {
    Result six = run({"census", "--n", "6"});
    CHECK(six.code == 0);
    CHECK(squash(six.out).find("6 112 27 20 0") != std::string::npos);
    Result js = run({"census", "--n", "5", "--format", "json", "--jobs", "1"});
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["rows"][0]["well_covered"] == 6);
    CHECK(run({"census", "--n", "4", "--format", "csv"}).out == "n,connected,well_covered,vd,fail_q12\n4,6,3,2,0\n");
    CHECK(run({"census", "--n", "4", "--format", "xml"}).code == 2);
    CHECK(run({"census", "--n", "9"}).code == 2);
    CHECK(run({"census"}).code == 2);
    CHECK(run({"census", "--n", "4", "--jobs", "-1"}).code == 2);

    std::string file = temp_path("mixed.g6");
    std::ofstream(file) << "Dhc\nBw\n";
    Result mixed = run({"census", "--input", file, "--format", "csv"});
    CHECK(mixed.out == "n,connected,well_covered,vd,fail_q12\n3,1,1,1,0\n5,1,1,1,0\n");
    CHECK(run({"census", "--input", file, "--n", "5"}).code == 2);
    std::string bad = temp_path("bad.g6");
    std::ofstream(bad) << "Dhc\n!!\n";
    Result err = run({"census", "--input", bad});
    CHECK(err.code == 2);
    CHECK(err.err.find("line 2") != std::string::npos);
}

TEST_CASE("failures") {
    std::string file = temp_path("fam.g6");
    std::ofstream(file) << to_graph6(gen_ln(1)) << '\n' << to_graph6(gen_pm(2)) << '\n' << "Dhc\n";
    Result text = run({"failures", "--input", file});
    CHECK(text.code == 0);
    CHECK(std::count(text.out.begin(), text.out.end(), '\n') == 2);
    CHECK(text.out.rfind(canonical_key(gen_pm(2)).bytes, 0) == 0);
    CHECK(text.out.find("verified=yes") != std::string::npos);
    auto j = nlohmann::json::parse(run({"failures", "--input", file, "--json"}).out);
    CHECK(j.size() == 2);
    CHECK(j[0]["m"] == 13);
    CHECK(j[0]["verified"] == true);
    CHECK(run({"failures", "--n", "6"}).out.empty());
}

TEST_CASE("usage") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    Result help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("census") != std::string::npos);
}

} // TEST_SUITE
