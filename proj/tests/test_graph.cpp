#include <doctest.h>

#include <algorithm>
#include <set>

#include "mbd/errors.hpp"
#include "mbd/graph.hpp"
#include "oracle.hpp"

using namespace mbd;

TEST_CASE("vertex set helpers") {
    CHECK(vs_full(0) == 0);
    CHECK(vs_full(1) == 1);
    CHECK(vs_full(3) == 0b111);
    CHECK(vs_full(62) == (VertexSet{1} << 62) - 1);
    CHECK(vs_size(0b1011) == 3);
    CHECK(vs_first(0b1000) == 3);
    CHECK(vs_to_string(0) == "{}");
    CHECK(vs_to_string(vbit(0) | vbit(3) | vbit(5)) == "{0,3,5}");
    CHECK(vs_to_vector(0b101) == std::vector<int>{0, 2});
}

TEST_CASE("graph construction and accessors") {
    Graph p4 = path_graph(4);
    CHECK(p4.order() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.has_edge(0, 1));
    CHECK(p4.has_edge(1, 0));
    CHECK_FALSE(p4.has_edge(0, 2));
    CHECK(p4.neighbors(1) == (vbit(0) | vbit(2)));
    CHECK(p4.closed_neighborhood(1) == (vbit(0) | vbit(1) | vbit(2)));
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.vertices() == vs_full(4));
    CHECK(p4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(p4.has_labels());
    CHECK(p4.label(2) == "2");
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(0), InvalidParameterError);
    CHECK_THROWS_AS(Graph(-3), InvalidParameterError);
    CHECK_THROWS_AS(Graph(63), SizeLimitError);
    CHECK_NOTHROW(Graph(62));
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidEdgeError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidEdgeError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidVertexError);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), InvalidVertexError);
    CHECK_THROWS_AS(Graph(2, {}, {"a"}), InvalidParameterError);
    Graph g(2, {{0, 1}}, {"x", "y"});
    CHECK(g.label(1) == "y");
    CHECK_THROWS_AS((void)g.degree(2), InvalidVertexError);
    CHECK_THROWS_AS((void)g.neighbors(-1), InvalidVertexError);
}

TEST_CASE("graph stats") {
    GraphStats s = graph_stats(star_graph(3));
    CHECK(s.order == 4);
    CHECK(s.edges == 3);
    CHECK(s.min_degree == 1);
    CHECK(s.max_degree == 3);
    CHECK(s.components == 1);
    CHECK(s.isolated_vertices == 0);
    CHECK(s.leaves == 3);
    CHECK(s.degree_sequence == std::vector<int>{3, 1, 1, 1});

    Graph mixed(5, {{1, 2}});  // K1 + K2 + 2 isolated
    GraphStats t = graph_stats(mixed);
    CHECK(t.components == 4);
    CHECK(t.isolated_vertices == 3);
    CHECK(t.leaves == 2);
}

TEST_CASE("connectivity and trees") {
    CHECK(is_connected(path_graph(5)));
    CHECK_FALSE(is_connected(empty_graph(2)));
    CHECK(is_connected(complete_graph(1)));
    CHECK(is_tree(path_graph(4)));
    CHECK(is_tree(star_graph(5)));
    CHECK_FALSE(is_tree(cycle_graph(4)));
    CHECK_FALSE(is_tree(Graph(3, {{0, 1}})));  // disconnected
}

TEST_CASE("induced subgraph and vertex deletion") {
    Graph c5 = cycle_graph(5);
    Graph sub = induced_subgraph(c5, vbit(0) | vbit(1) | vbit(3));
    CHECK(sub.order() == 3);
    CHECK(sub.edge_count() == 1);  // only 0-1 survives
    CHECK(sub.has_edge(0, 1));

    Graph del = delete_vertex(path_graph(4), 1);
    CHECK(del.order() == 3);
    CHECK(del.edge_count() == 1);
    CHECK(del.has_edge(1, 2));  // old 2-3
    CHECK_THROWS_AS(delete_vertex(path_graph(3), 5), InvalidVertexError);
}

TEST_CASE("corona product structure") {
    CoronaResult r = corona(path_graph(2), complete_graph(1));
    CHECK(r.product.order() == 4);
    CHECK(is_isomorphic(r.product, path_graph(4)));
    CHECK(r.labeling.g_order == 2);
    CHECK(r.labeling.h_order == 1);
    CHECK(r.labeling.base_vertex(1) == 1);
    CHECK(r.labeling.copy_vertex(0, 0) == 2);
    CHECK(r.labeling.copy_vertex(1, 0) == 3);
    CHECK(r.labeling.is_base(0));
    CHECK_FALSE(r.labeling.is_base(2));
    CHECK(r.labeling.owner(2) == 0);
    CHECK(r.labeling.owner(3) == 1);
    CHECK(r.labeling.copy_index(3) == 0);
    CHECK(r.labeling.copy_index(1) == -1);
    CHECK(r.product.label(0) == "g0");
    CHECK(r.product.label(2) == "g0:h0");

    CoronaResult big = corona(path_graph(3), fig1_h());
    CHECK(big.product.order() == 27);
    CHECK(big.product.label(3 + 2) == "g0:hh3");

    // Every copy vertex is adjacent to its base vertex and to nothing in
    // other copies.
    CoronaResult pc = corona(cycle_graph(3), path_graph(2));
    const Graph& p = pc.product;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) {
            int v = pc.labeling.copy_vertex(i, j);
            CHECK(p.has_edge(pc.labeling.base_vertex(i), v));
            for (int k = 0; k < 3; ++k)
                if (k != i)
                    for (int l = 0; l < 2; ++l)
                        CHECK_FALSE(p.has_edge(v, pc.labeling.copy_vertex(k, l)));
        }
    CHECK(p.edge_count() == 3 + 3 * (1 + 2));

    CHECK(corona(path_graph(2), empty_graph(30)).product.order() == 62);
    CHECK_THROWS_AS(corona(complete_graph(8), complete_graph(8)), SizeLimitError);
}

TEST_CASE("generators") {
    CHECK(path_graph(1).order() == 1);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(cycle_graph(3).edge_count() == 3);
    CHECK_THROWS_AS(cycle_graph(2), InvalidParameterError);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(star_graph(3).degree(0) == 3);
    CHECK(empty_graph(3).edge_count() == 0);

    Graph ds = double_star(2, 3);
    CHECK(ds.order() == 7);
    CHECK(ds.has_edge(0, 1));
    CHECK(ds.degree(0) == 3);
    CHECK(ds.degree(1) == 4);
    CHECK(is_tree(ds));

    Graph h3 = hm_gadget(3);
    CHECK(h3.order() == 10);
    CHECK(h3.degree(0) == 6);
    CHECK(h3.edge_count() == 12);
    CHECK(is_connected(h3));
    CHECK_NOTHROW(hm_gadget(2));
    CHECK_THROWS_AS(hm_gadget(1), InvalidParameterError);

    Graph f = fig1_h();
    CHECK(f.order() == 8);
    CHECK(f.edge_count() == 9);
    CHECK(is_connected(f));
    CHECK(f.degree(2) == 5);
    CHECK(f.label(2) == "h3");
    GraphStats fs = graph_stats(f);
    CHECK(fs.leaves == 2);
    CHECK(fs.degree_sequence == std::vector<int>{5, 3, 2, 2, 2, 2, 1, 1});
}

TEST_CASE("generator mini language") {
    CHECK(generate("path:5") == path_graph(5));
    CHECK(generate("cycle:4") == cycle_graph(4));
    CHECK(generate("complete:3") == complete_graph(3));
    CHECK(generate("star:3") == star_graph(3));
    CHECK(generate("empty:2") == empty_graph(2));
    CHECK(generate("double_star:2:3") == double_star(2, 3));
    CHECK(generate("Hm:3") == hm_gadget(3));
    CHECK(generate("fig1_H") == fig1_h());
    CHECK_THROWS_AS(generate("path"), ParseError);
    CHECK_THROWS_AS(generate("path:x"), ParseError);
    CHECK_THROWS_AS(generate("path:"), ParseError);
    CHECK_THROWS_AS(generate("nope:3"), ParseError);
    CHECK_THROWS_AS(generate("fig1_H:1"), ParseError);
    CHECK_THROWS_AS(generate("path:0"), InvalidParameterError);
}

TEST_CASE("graph6 round trip and known encodings") {
    CHECK(to_graph6(complete_graph(2)) == "A_");
    CHECK(graph_from_graph6("A_") == complete_graph(2));
    CHECK(graph_from_graph6("A?") == empty_graph(2));
    CHECK(to_graph6(complete_graph(1)) == "@");

    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : nonisomorphic_graphs(n))
            CHECK(graph_from_graph6(to_graph6(g)) == g);

    Graph big = corona(path_graph(3), fig1_h()).product;
    CHECK(graph_from_graph6(to_graph6(big)) == big);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(graph_from_graph6(""), ParseError);
    CHECK_THROWS_AS(graph_from_graph6("A"), ParseError);     // truncated
    CHECK_THROWS_AS(graph_from_graph6("A_?"), ParseError);   // trailing data
    CHECK_THROWS_AS(graph_from_graph6("A\x1f"), ParseError); // byte below range
    CHECK_THROWS_AS(graph_from_graph6("A\x7f"), ParseError); // byte above range
    CHECK_THROWS_AS(graph_from_graph6("~~~"), ParseError);   // order > 62 unsupported
    // Padding bits beyond the triangle must be zero: for n=2 the edge byte
    // has 1 data bit and 5 padding bits.
    CHECK_THROWS_AS(graph_from_graph6("A`"), ParseError);
}

TEST_CASE("edge list text round trip") {
    Graph g = double_star(1, 2);
    CHECK(graph_from_edge_list_text(to_edge_list_text(g)) == g);
    CHECK(graph_from_edge_list_text("2 1\n0 1") == complete_graph(2));
    CHECK(graph_from_edge_list_text("3 0\n") == empty_graph(3));
    CHECK_THROWS_AS(graph_from_edge_list_text(""), ParseError);
    CHECK_THROWS_AS(graph_from_edge_list_text("2"), ParseError);
    CHECK_THROWS_AS(graph_from_edge_list_text("2 2\n0 1"), ParseError);   // missing edge line
    CHECK_THROWS_AS(graph_from_edge_list_text("2 1\n0 1\n0 1"), ParseError);
    CHECK_THROWS_AS(graph_from_edge_list_text("2 1\n0 5"), ParseError);
    CHECK_THROWS_AS(graph_from_edge_list_text("x 1\n0 1"), ParseError);
}

TEST_CASE("isomorphism testing") {
    CHECK(is_isomorphic(path_graph(4), graph_from_edge_list_text("4 3\n3 1\n1 0\n0 2")));
    CHECK_FALSE(is_isomorphic(path_graph(4), star_graph(3)));
    CHECK_FALSE(is_isomorphic(path_graph(4), path_graph(5)));
    CHECK(is_isomorphic(cycle_graph(5), cycle_graph(5)));
    CHECK(is_isomorphic(empty_graph(3), empty_graph(3)));
}

TEST_CASE("automorphisms and orbits") {
    Graph p4 = path_graph(4);
    CHECK(has_automorphism_mapping(p4, 0, 3));
    CHECK(has_automorphism_mapping(p4, 1, 2));
    CHECK_FALSE(has_automorphism_mapping(p4, 0, 1));
    CHECK(automorphism_orbit_representatives(p4) == (vbit(0) | vbit(1)));
    CHECK(automorphism_orbit_representatives(complete_graph(4)) == vbit(0));
    CHECK(automorphism_orbit_representatives(star_graph(3)) == (vbit(0) | vbit(1)));
    // Caterpillar with a mirror swap 0<->4, 1<->3.
    Graph cat = graph_from_edge_list_text("6 5\n0 1\n1 2\n2 3\n3 4\n2 5");
    CHECK(automorphism_orbit_representatives(cat) == (vbit(0) | vbit(1) | vbit(2) | vbit(5)));
    // No symmetry: identity-only automorphism group.
    Graph asym = graph_from_edge_list_text("6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n1 3");
    CHECK(automorphism_orbit_representatives(asym) == vs_full(6));
}

TEST_CASE("nonisomorphic graph enumeration matches brute force") {
    const int expected[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        const auto& gs = nonisomorphic_graphs(n);
        CHECK(static_cast<int>(gs.size()) == expected[n - 1]);
        for (const Graph& g : gs) CHECK(g.order() == n);
    }
    // Independent classification by minimizing over all n! labelings.
    for (int n = 1; n <= 5; ++n) {
        CHECK(oracle::count_classes(n, [](const Graph&) { return true; }) ==
              static_cast<int>(nonisomorphic_graphs(n).size()));
        std::set<std::uint64_t> canon;
        for (const Graph& g : nonisomorphic_graphs(n))
            canon.insert(oracle::canonical_mask(n, oracle::graph_to_mask(g)));
        CHECK(canon.size() == nonisomorphic_graphs(n).size());
    }
}

TEST_CASE("nonisomorphic tree enumeration") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        const auto& ts = nonisomorphic_trees(n);
        CHECK(static_cast<int>(ts.size()) == expected[n - 1]);
        for (const Graph& t : ts) CHECK(is_tree(t));
    }
    for (int n = 2; n <= 6; ++n)
        CHECK(oracle::count_classes(n, [](const Graph& g) { return is_tree(g); }) ==
              static_cast<int>(nonisomorphic_trees(n).size()));
}

TEST_CASE("connected graph filtering") {
    CHECK(nonisomorphic_connected_graphs(4).size() == 6);
    for (const Graph& g : nonisomorphic_connected_graphs(4)) CHECK(is_connected(g));
    CHECK(nonisomorphic_connected_graphs(2).size() == 1);
}
