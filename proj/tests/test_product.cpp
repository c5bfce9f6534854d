#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "boxdom/domination.hpp"
#include "boxdom/generators.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/product.hpp"

using namespace boxdom;

TEST_CASE("K2 box K2 is the 4-cycle") {
    ProductGraph p = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(p.n() == 4);
    CHECK(p.n_g() == 2);
    CHECK(p.n_h() == 2);
    CHECK(p.graph().edge_count() == 4);
    // Edges under the encoding (g,h) -> g + 2h.
    CHECK(p.graph().edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(to_graph6(p.graph()) == "Cr");
}

TEST_CASE("encoding and decoding") {
    ProductGraph p = cartesian_product(path_graph(3), path_graph(2));
    CHECK(p.encode(0, 0) == 0);
    CHECK(p.encode(2, 0) == 2);
    CHECK(p.encode(0, 1) == 3);
    CHECK(p.encode(2, 1) == 5);
    for (int v = 0; v < p.n(); ++v) {
        auto [gv, hv] = p.decode(v);
        CHECK(p.encode(gv, hv) == v);
        CHECK(p.g_coord(v) == gv);
        CHECK(p.h_coord(v) == hv);
    }
    CHECK_THROWS_AS(p.encode(3, 0), IndexOutOfRange);
    CHECK_THROWS_AS(p.encode(0, 2), IndexOutOfRange);
    CHECK_THROWS_AS(p.encode(-1, 0), IndexOutOfRange);
    CHECK_THROWS_AS(p.decode(6), IndexOutOfRange);
    CHECK_THROWS_AS(p.decode(-1), IndexOutOfRange);
}

TEST_CASE("layers") {
    ProductGraph p = cartesian_product(path_graph(3), path_graph(2));
    CHECK(p.g_layer(0) == VertexSet(6, {0, 1, 2}));
    CHECK(p.g_layer(1) == VertexSet(6, {3, 4, 5}));
    CHECK(p.h_layer(0) == VertexSet(6, {0, 3}));
    CHECK(p.h_layer(2) == VertexSet(6, {2, 5}));
    CHECK_THROWS_AS(p.g_layer(2), IndexOutOfRange);
    CHECK_THROWS_AS(p.h_layer(3), IndexOutOfRange);

    // Layers partition the product vertex set.
    VertexSet all(p.n());
    for (int h = 0; h < p.n_h(); ++h) {
        CHECK_FALSE(all.intersects(p.g_layer(h)));
        all |= p.g_layer(h);
    }
    CHECK(all == VertexSet::full(p.n()));
}

TEST_CASE("projections") {
    ProductGraph p = cartesian_product(path_graph(3), path_graph(2));
    CHECK(p.project_g(p.g_layer(1)) == VertexSet::full(3));
    CHECK(p.project_h(p.h_layer(1)) == VertexSet::full(2));
    VertexSet one(p.n(), {p.encode(2, 1)});
    CHECK(p.project_g(one) == VertexSet(3, {2}));
    CHECK(p.project_h(one) == VertexSet(2, {1}));
    CHECK(p.project_g(VertexSet(p.n())) == VertexSet(3));
    CHECK_THROWS_AS(p.project_g(VertexSet(5)), UniverseMismatch);
    CHECK_THROWS_AS(p.project_h(VertexSet(5)), UniverseMismatch);
}

TEST_CASE("degrees and edge counts") {
    Graph g = path_graph(3);
    Graph h = cycle_graph(5);
    ProductGraph p = cartesian_product(g, h);
    CHECK(p.n() == 15);
    CHECK(p.graph().edge_count() == g.edge_count() * h.n() + h.edge_count() * g.n());
    for (int v = 0; v < p.n(); ++v) {
        auto [gv, hv] = p.decode(v);
        CHECK(p.graph().degree(v) == g.degree(gv) + h.degree(hv));
    }

    // Adjacency follows the product rule exactly.
    for (int u = 0; u < p.n(); ++u)
        for (int v = u + 1; v < p.n(); ++v) {
            auto [gu, hu] = p.decode(u);
            auto [gv, hv] = p.decode(v);
            const bool expected = (gu == gv && h.adjacent(hu, hv)) ||
                                  (hu == hv && g.adjacent(gu, gv));
            CHECK(p.graph().adjacent(u, v) == expected);
        }
}

TEST_CASE("identity-like factors") {
    ProductGraph unit = cartesian_product(complete_graph(1), complete_graph(1));
    CHECK(unit.n() == 1);
    CHECK(unit.graph().edge_count() == 0);

    // K1 box H is H itself under the encoding (0,h) -> h.
    Graph h = path_graph(3);
    ProductGraph p = cartesian_product(complete_graph(1), h);
    CHECK(p.graph() == h);
}

TEST_CASE("factor order symmetry") {
    Graph g = path_graph(3);
    Graph h = cycle_graph(4);
    ProductGraph gh = cartesian_product(g, h);
    ProductGraph hg = cartesian_product(h, g);
    CHECK(gh.n() == hg.n());
    CHECK(gh.graph().edge_count() == hg.graph().edge_count());

    std::vector<int> dg, dh;
    for (int v = 0; v < gh.n(); ++v) dg.push_back(gh.graph().degree(v));
    for (int v = 0; v < hg.n(); ++v) dh.push_back(hg.graph().degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    CHECK(dg == dh);
    CHECK(gamma_exact(gh.graph()).gamma == gamma_exact(hg.graph()).gamma);
}

TEST_CASE("size caps") {
    CHECK_THROWS_AS(cartesian_product(path_graph(8), path_graph(8), 63), Oversize);
    CHECK_NOTHROW(cartesian_product(path_graph(8), path_graph(8), 64));
    CHECK_THROWS_AS(cartesian_product(Graph(65), complete_graph(1)), Oversize);
    CHECK_THROWS_AS(cartesian_product(complete_graph(1), Graph(65)), Oversize);
}
