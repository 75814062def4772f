#include "doctest.h"

#include "oracles.hpp"
#include "tubelat/error.hpp"
#include "tubelat/graph.hpp"

using namespace tubelat;

namespace {

Graph c4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

oracle::Set as_set(VertexSet s) {
    auto v = s.to_vector();
    return oracle::Set(v.begin(), v.end());
}

} // namespace

TEST_CASE("vertex sets") {
    VertexSet s{1, 3, 4};
    CHECK(s.size() == 3);
    CHECK(s.min() == 1);
    CHECK(s.max() == 4);
    CHECK(s.to_string() == "{1,3,4}");
    CHECK(compress(VertexSet{3, 5}, VertexSet{2, 3, 5}) == VertexSet{2, 3});
    CHECK(expand(VertexSet{2, 3}, VertexSet{2, 3, 5}) == VertexSet{3, 5});
    CHECK(canonical_less(VertexSet{3}, VertexSet{1, 2}));
    CHECK(canonical_less(VertexSet{1, 3}, VertexSet{2, 3}));
    CHECK_FALSE(canonical_less(VertexSet{2, 3}, VertexSet{1, 4}));
}

TEST_CASE("induced subgraph and deletion") {
    auto k3 = complete_graph(3);
    auto h = induced_subgraph(k3, VertexSet{1, 3});
    CHECK(h.labels() == std::vector<int>{1, 3});
    CHECK(h.edges() == std::vector<Edge>{{1, 3}});
    CHECK(induced_subgraph(path_graph(3), VertexSet{1, 3}).edges().empty());
    CHECK(induced_subgraph(c4(), VertexSet{1, 2, 4}).edges() == std::vector<Edge>{{1, 2}, {1, 4}});
    CHECK_THROWS_AS(induced_subgraph(k3, VertexSet{4}), InvalidVertex);

    CHECK(delete_vertices(k3, VertexSet{2}).edges() == std::vector<Edge>{{1, 3}});
    CHECK(delete_vertices(path_graph(3), VertexSet{2}).edges().empty());
    auto d = delete_vertices(c4(), VertexSet{1});
    CHECK(d.labels() == std::vector<int>{2, 3, 4});
    CHECK(d.edges() == std::vector<Edge>{{2, 3}, {3, 4}});
}

TEST_CASE("standardize") {
    auto [g, map] = standardize(LabeledGraph({2, 5}, {{2, 5}}));
    CHECK(g == complete_graph(2));
    CHECK(map == std::vector<int>{2, 5});
    CHECK(standardize(LabeledGraph({1, 3, 4}, {{1, 3}, {3, 4}})).first == path_graph(3));
    CHECK(standardize(LabeledGraph({7}, {})).first == Graph(1));
    CHECK_THROWS_AS(LabeledGraph({2, 2}, {}), InvalidVertex);
}

TEST_CASE("contraction") {
    auto t = contract(c4(), VertexSet{2});
    CHECK(t.labels() == std::vector<int>{1, 3, 4});
    CHECK(t.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {3, 4}});
    auto same = contract(c4(), VertexSet());
    CHECK(standardize(same).first == c4());
    auto p = contract(path_graph(3), VertexSet{1, 3});
    CHECK(p.labels() == std::vector<int>{2});
    CHECK(p.edges().empty());
    CHECK_THROWS_AS(contract(c4(), VertexSet{5}), InvalidVertex);
}

TEST_CASE("contraction and deletion agree with the tube oracle, n <= 5") {
    for (int n = 0; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            auto a = oracle::adjacency(n, g.edges());
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                VertexSet i = VertexSet::from_bits(bits);
                auto want = oracle::contraction_edges(a, n, as_set(i));
                auto got = contract(g, i).edges();
                REQUIRE(std::set<Edge>(got.begin(), got.end()) == want);
                for (auto e : delete_vertices(g, i).edges()) REQUIRE(want.count(e) == 1);
            }
        }
    }
}

TEST_CASE("tubes") {
    CHECK_FALSE(is_tube(path_graph(3), VertexSet{1, 3}));
    CHECK(is_tube(path_graph(3), VertexSet{1, 2}));
    CHECK_FALSE(is_tube(path_graph(3), VertexSet()));
    CHECK_THROWS_AS(is_tube(path_graph(3), VertexSet{4}), InvalidVertex);
    CHECK(tubes(complete_graph(3)).size() == 7);
    CHECK(tubes(Graph(3)) == std::vector<VertexSet>{{1}, {2}, {3}});
    CHECK(tubes(path_graph(3)) == std::vector<VertexSet>{{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}});
    for (int n = 0; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            auto want = oracle::tubes(oracle::adjacency(n, g.edges()), n);
            std::set<oracle::Set> ws(want.begin(), want.end());
            auto got = tubes(g);
            std::set<oracle::Set> gs;
            for (auto t : got) gs.insert(as_set(t));
            REQUIRE(got.size() == want.size());
            REQUIRE(gs == ws);
            REQUIRE(std::is_sorted(got.begin(), got.end(), canonical_less));
        }
    }
}

TEST_CASE("filledness") {
    for (int k = 0; k <= 3; ++k)
        for (int n = 0; n <= 6; ++n) CHECK(filled_status(h_graph(k, n)).filled);
    auto st = filled_status(c4());
    CHECK_FALSE(st.filled);
    REQUIRE(st.right_witness);
    CHECK(st.right_witness->first == Edge{1, 4});
    CHECK(st.right_witness->second == Edge{2, 4});
    auto star = filled_status(Graph(4, {{1, 2}, {1, 3}, {1, 4}}));
    CHECK(star.left_filled);
    CHECK_FALSE(star.right_filled);
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            auto s = filled_status(g);
            bool rf = true, lf = true;
            for (auto [i, k] : g.edges())
                for (int j = i + 1; j < k; ++j) {
                    rf = rf && g.has_edge(j, k);
                    lf = lf && g.has_edge(i, j);
                }
            REQUIRE(s.right_filled == rf);
            REQUIRE(s.left_filled == lf);
            REQUIRE(s.filled == (rf && lf));
        }
}

TEST_CASE("minimal non-edges") {
    for (int k = 0; k <= 3; ++k) {
        std::vector<Edge> want;
        for (int i = 1; i + k + 1 <= 7; ++i) want.emplace_back(i, i + k + 1);
        CHECK(minimal_non_edges(h_graph(k, 7)) == want);
    }
    CHECK(minimal_non_edges(complete_graph(5)).empty());
    CHECK(minimal_non_edges(path_graph(3)) == std::vector<Edge>{{1, 3}});
}

TEST_CASE("dual graph") {
    CHECK(dual_graph(path_graph(3)) == path_graph(3));
    CHECK(dual_graph(Graph(3, {{1, 3}, {2, 3}})) == Graph(3, {{1, 3}, {1, 2}}));
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            REQUIRE(dual_graph(dual_graph(g)) == g);
            REQUIRE(filled_status(g).right_filled == filled_status(dual_graph(g)).left_filled);
        }
}

TEST_CASE("minors") {
    auto m = minors(complete_graph(2));
    CHECK(m.size() == 3);
    CHECK(std::find(m.begin(), m.end(), complete_graph(2)) != m.end());
    CHECK(std::find(m.begin(), m.end(), Graph(1)) != m.end());
    CHECK(std::find(m.begin(), m.end(), Graph(0)) != m.end());
    auto p = minors(path_graph(3));
    CHECK(std::find(p.begin(), p.end(), complete_graph(2)) != p.end());
    CHECK(std::find(p.begin(), p.end(), Graph(2)) != p.end());
    CHECK(p.front() == path_graph(3));
}

TEST_CASE("families") {
    CHECK(cycle_graph(4) == c4());
    CHECK(cycle_graph(2) == complete_graph(2));
    CHECK(odd_bipartite_graph(4) == Graph(4, {{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
    CHECK(GraphFamily::from_A({1})(5) == path_graph(5));
    CHECK(GraphFamily::from_all()(4) == complete_graph(4));
    CHECK(parse_family("h:2")(5) == h_graph(2, 5));
    CHECK(parse_family("A:{1,3}")(4) == Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    CHECK(parse_graph_descriptor("path:4") == path_graph(4));
    CHECK(parse_graph_descriptor("h:1:4") == path_graph(4));
    CHECK(parse_graph_descriptor("A:{2}:3") == Graph(3, {{1, 3}}));
    CHECK(parse_graph_descriptor("edges:3:1-3,2-3") == Graph(3, {{1, 3}, {2, 3}}));
    CHECK_THROWS_AS(parse_graph_descriptor("bogus:3"), ParseError);
    CHECK_THROWS_AS(parse_graph_descriptor("path"), ParseError);
    for (auto a : {std::set<int>{1}, std::set<int>{2}, std::set<int>{1, 3}}) {
        auto f = GraphFamily::from_A(a);
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; m <= 4; ++m) {
                Graph big = f(n + m);
                VertexSet low = VertexSet::range(n);
                VertexSet high = VertexSet::range(n + m) - low;
                REQUIRE(std_restriction(big, low) == f(n));
                REQUIRE(std_restriction(big, high) == f(m));
            }
    }
}

TEST_CASE("graph text format") {
    auto g = Graph(3, {{2, 3}, {1, 3}});
    CHECK(graph_to_text(g) == "3\n1 3\n2 3\n");
    CHECK(graph_from_text("3\n1 3\n2 3\n") == g);
    CHECK_THROWS_AS(graph_from_text("3\n1"), ParseError);
    CHECK_THROWS_AS(graph_from_text("3\n1 4\n"), InvalidVertex);
}
