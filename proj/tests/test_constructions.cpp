#include <doctest.h>

#include "common.hpp"
#include "shedlab/canonical.hpp"
#include "shedlab/constructions.hpp"
#include "shedlab/decomposability.hpp"
#include "shedlab/independence.hpp"
#include "shedlab/structure.hpp"

using namespace shedlab;

namespace {

VertexSet by_names(const Graph& g, std::initializer_list<const char*> names) {
    VertexSet s;
    for (const char* n : names) s.insert(*g.find(n));
    return s;
}

// Tuples in {lo..hi}^n.
std::vector<std::vector<int>> tuples(int n, int lo, int hi) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int k = lo; k <= hi; ++k) {
                auto u = t;
                u.push_back(k);
                next.push_back(u);
            }
        out = next;
    }
    return out;
}

} // namespace

TEST_SUITE("constructions") {

TEST_CASE("whisker") {
    Graph w = whisker(path_graph(3), VertexSet{0, 2});
    CHECK(w.order() == 5);
    CHECK(w.size() == 4);
    CHECK(w.adjacent(0, 3));
    CHECK(w.adjacent(2, 4));
    Graph full = whisker(cycle_graph(5), VertexSet::range(5));
    CHECK(is_vertex_decomposable(full));
    CHECK(is_very_well_covered(full));
    CHECK_THROWS_AS(whisker(path_graph(3), VertexSet{4}), OutOfRange);
}

TEST_CASE("clique append") {
    Graph g = clique_append(path_graph(2), {2, 3});
    CHECK(g.order() == 5);
    CHECK(g.size() == 1 + 1 + 3);
    CHECK(g.name(0) == "x1.1");
    CHECK(g.name(4) == "x2.3");
    CHECK(g.adjacent(0, 2));
    CHECK_THROWS_AS(clique_append(path_graph(2), {2}), BadParameter);
    CHECK_THROWS_AS(clique_append(path_graph(2), {1, 2}), BadParameter);
    Graph k = clique_append(complete_graph(3), {2, 2, 2});
    CHECK(is_isomorphic(k, clique_whisker(complete_graph(3), CliquePartition{{VertexSet{0}, VertexSet{1}, VertexSet{2}}})));
}

TEST_CASE("clique whisker") {
    Graph g = clique_whisker(path_graph(3), CliquePartition{{VertexSet{0, 1}, VertexSet{2}}});
    CHECK(g.order() == 5);
    CHECK(g.adjacent(3, 0));
    CHECK(g.adjacent(3, 1));
    CHECK(g.adjacent(4, 2));
    CHECK_THROWS_AS(clique_whisker(path_graph(3), CliquePartition{{VertexSet{0, 2}, VertexSet{1}}}), InvalidPartition);
    CHECK_THROWS_AS(clique_whisker(path_graph(3), CliquePartition{{VertexSet{0, 1}}}), InvalidPartition);
    CHECK_THROWS_AS(clique_whisker(path_graph(3), CliquePartition{{VertexSet{0, 1}, VertexSet{1, 2}}}), InvalidPartition);
    CHECK(all_clique_partitions(path_graph(3)).size() == 3);
    CHECK(all_clique_partitions(complete_graph(3)).size() == 5);
}

TEST_CASE("expansion and duplication") {
    Graph e = expand(path_graph(2), {2, 1});
    CHECK(is_isomorphic(e, complete_graph(3)));
    CHECK(is_isomorphic(duplicate_vertex(path_graph(3), 1), expand(path_graph(3), {1, 2, 1})));
    CHECK_THROWS_AS(expand(path_graph(2), {0, 1}), BadParameter);
    CHECK_THROWS_AS(duplicate_vertex(path_graph(2), 2), OutOfRange);
}

TEST_CASE("circulants") {
    CHECK(circulant(5, {1}) == cycle_graph(5));
    CHECK(circulant(6, {1, 2, 3}) == complete_graph(6));
    CHECK(circulant(4, {}).size() == 0);
    CHECK_THROWS_AS(circulant(5, {3}), BadParameter);
    CHECK_THROWS_AS(circulant(5, {0}), BadParameter);
}

TEST_CASE("decomposable circulants have dominating shedding sets") {
    VDCache cache;
    for (int n = 1; n <= 11; ++n) {
        int half = n / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << half); ++mask) {
            std::vector<int> s;
            for (int i = 0; i < half; ++i)
                if ((mask >> i) & 1u) s.push_back(i + 1);
            Graph g = circulant(n, s);
            if (is_vertex_decomposable(g, cache)) {
                CHECK(shedding_set(g, cache) == g.vertices());
            }
        }
    }
}

TEST_CASE("D_n sizes, names and shape") {
    Graph d = gen_dn({2, 3});
    CHECK(d.order() == 25);
    CHECK(d.size() == 43);
    CHECK(d.name(0) == "x1");
    CHECK(d.name(10) == "y1");
    CHECK(d.name(20) == "z1");
    CHECK(d.adjacent(*d.find("x1"), *d.find("x2")));
    CHECK(d.adjacent(*d.find("x5"), *d.find("x10")));
    CHECK_FALSE(d.adjacent(*d.find("x1"), *d.find("x6")));
    CHECK_FALSE(d.adjacent(*d.find("x1"), *d.find("x3")));
    CHECK(d.adjacent(*d.find("z3"), *d.find("y5")));
    CHECK(d.adjacent(*d.find("z3"), *d.find("y6")));
    CHECK_THROWS_AS(gen_dn({1}), BadParameter);
    CHECK_THROWS_AS(gen_dn({}), BadParameter);
    CHECK_THROWS_AS(gen_dn({7, 7}), TooLarge);
}

TEST_CASE("D_n family: decomposable, shedding set Z, not dominating") {
    for (const auto& ks : std::vector<std::vector<int>>{{2}, {3}, {2, 2}}) {
        Graph d = gen_dn(ks);
        CHECK(is_well_covered(d));
        CHECK(is_vertex_decomposable(d));
        CHECK(shedding_set(d) == named_group(d, "z"));
        CHECK_FALSE(shed_is_dominating(d));
    }
}

TEST_CASE("P_m family") {
    Graph p2 = gen_pm(2);
    CHECK(p2.order() == 9);
    CHECK(p2.size() == 13);
    CHECK(gen_pm(3).order() == 11);
    CHECK_THROWS_AS(gen_pm(1), BadParameter);
    for (int m = 2; m <= 4; ++m) {
        Graph p = gen_pm(m);
        CHECK(is_vertex_decomposable(p));
        CHECK(shedding_set(p) == by_names(p, {"z1", "z2"}));
        CHECK_FALSE(shed_is_dominating(p));
        HVector hv = h_vector(delete_vertex(p, *p.find("y1")));
        REQUIRE(hv.h.size() > 3);
        CHECK(hv.h[3] == 1 - m);
    }
}

TEST_CASE("L_n family") {
    Graph l1 = gen_ln(1);
    CHECK(l1.order() == 9);
    CHECK(l1.size() == 14);
    CHECK(l1.name(8) == "w");
    CHECK(l1.adjacent(*l1.find("y1.3"), *l1.find("x1.2")));
    Graph l2 = gen_ln(2);
    CHECK(l2.order() == 17);
    for (const Graph& l : {l1, l2}) {
        CHECK(is_well_covered(l));
        CHECK(is_vertex_decomposable(l));
        CHECK_FALSE(shed_is_dominating(l));
    }
    CHECK_THROWS_AS(gen_ln(0), BadParameter);
}

TEST_CASE("generate dispatch") {
    CHECK(generate(PmFamily{2}) == gen_pm(2));
    CHECK(generate(DnFamily{{2}}) == gen_dn({2}));
    CHECK(generate(LnFamily{1}) == gen_ln(1));
    CHECK(generate(CirculantFamily{5, {1}}) == cycle_graph(5));
}

TEST_CASE("clique-append and clique-whisker outputs decompose with dominating shedding sets") {
    VDCache cache;
    for (const auto& g : testing_support::all_graphs_up_to(4)) {
        for (const auto& ks : tuples(g.order(), 2, 3)) {
            Graph h = clique_append(g, ks);
            CHECK(is_vertex_decomposable(h, cache));
            CHECK(shed_is_dominating(h, cache));
        }
        for (const auto& pi : all_clique_partitions(g)) {
            Graph h = clique_whisker(g, pi);
            CHECK(is_vertex_decomposable(h, cache));
            CHECK(shed_is_dominating(h, cache));
        }
    }
}

TEST_CASE("expansion preserves decomposability; full expansions dominate") {
    VDCache cache;
    for (const auto& g : testing_support::all_graphs_up_to(4)) {
        bool vd = is_vertex_decomposable(g, cache);
        for (const auto& s : tuples(g.order(), 1, 3)) {
            int total = 0;
            for (int k : s) total += k;
            if (total > 9) continue;
            Graph h = expand(g, s);
            CHECK(is_vertex_decomposable(h, cache) == vd);
            bool all_doubled = std::all_of(s.begin(), s.end(), [](int k) { return k >= 2; });
            if (vd && all_doubled) CHECK(shed_is_dominating(h, cache));
        }
    }
}

TEST_CASE("duplicating a shedding vertex keeps a non-dominating shedding set") {
    for (const Graph& g : {gen_pm(2), gen_dn({2}), gen_ln(1)}) {
        REQUIRE_FALSE(shed_is_dominating(g));
        for (int x : shedding_set(g)) {
            Graph h = duplicate_vertex(g, x);
            CHECK(is_vertex_decomposable(h));
            CHECK_FALSE(shed_is_dominating(h));
            VertexSet shed_h = shedding_set(h);
            CHECK(shed_h.contains(x));
            CHECK(shed_h.contains(g.order()));
        }
    }
}

} // TEST_SUITE
