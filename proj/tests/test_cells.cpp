#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "boxdom/cells.hpp"
#include "boxdom/domination.hpp"
#include "boxdom/generators.hpp"
#include "boxdom/graph6.hpp"

using namespace boxdom;

TEST_CASE("canonical cell construction") {
    Graph c4 = cycle_graph(4);
    CellPartition cells = build_cells(c4, {0, 2});
    CHECK(cells.k() == 2);
    CHECK(cells.dominators == std::vector<int>{0, 2});
    // 1 is adjacent to both dominators and goes to the first.
    CHECK(cells.parts[0] == VertexSet(4, {0, 1, 3}));
    CHECK(cells.parts[1] == VertexSet(4, {2}));

    // Dominator order matters for the assignment.
    CellPartition swapped = build_cells(c4, {2, 0});
    CHECK(swapped.parts[0] == VertexSet(4, {1, 2, 3}));
    CHECK(swapped.parts[1] == VertexSet(4, {0}));

    Graph p4 = path_graph(4);
    CellPartition pc = build_cells(p4, {1, 3});
    CHECK(pc.parts[0] == VertexSet(4, {0, 1, 2}));
    CHECK(pc.parts[1] == VertexSet(4, {3}));
}

TEST_CASE("cell construction validation") {
    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(build_cells(c4, {0}), NotDominating);
    CHECK_THROWS_AS(build_cells(c4, {0, 1, 2}), NotMinimum);
    CHECK_THROWS_AS(build_cells(complete_graph(2), {0, 0}), NotMinimum);
    CHECK_THROWS_AS(build_cells(c4, {0, 7}), IndexOutOfRange);
}

TEST_CASE("explicit partitions") {
    Graph c4 = cycle_graph(4);
    // An alternate assignment of vertex 1, still within N[0] and N[2].
    CellPartition alt = cells_from_parts(c4, {0, 2},
                                         {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})});
    CHECK(alt.k() == 2);
    CHECK(alt.parts[1].contains(3));

    // Part count must match the dominator count.
    CHECK_THROWS_AS(cells_from_parts(c4, {0, 2}, {VertexSet::full(4)}), InvariantViolation);
    // 2 is not in N[0]: part escapes its closed neighborhood.
    CHECK_THROWS_AS(cells_from_parts(c4, {0, 2}, {VertexSet(4, {0, 2}), VertexSet(4, {1, 3})}),
                    InvariantViolation);
    // Overlapping parts.
    CHECK_THROWS_AS(
        cells_from_parts(c4, {0, 2}, {VertexSet(4, {0, 1, 3}), VertexSet(4, {1, 2})}),
        InvariantViolation);
    // Missing vertex.
    CHECK_THROWS_AS(cells_from_parts(c4, {0, 2}, {VertexSet(4, {0, 1}), VertexSet(4, {2})}),
                    InvariantViolation);
}

TEST_CASE("vertical and horizontal domination") {
    ProductGraph p = cartesian_product(complete_graph(2), complete_graph(2));
    VertexSet d(4, {0});  // only (0,0)
    CHECK(vertically_dominated(p, d, 0));
    CHECK(horizontally_dominated(p, d, 0));
    // (1,0): same layer as the dominator, different column.
    CHECK_FALSE(vertically_dominated(p, d, 1));
    CHECK(horizontally_dominated(p, d, 1));
    // (0,1): same column, different layer.
    CHECK(vertically_dominated(p, d, 2));
    CHECK_FALSE(horizontally_dominated(p, d, 2));
    // (1,1): out of reach both ways.
    CHECK_FALSE(vertically_dominated(p, d, 3));
    CHECK_FALSE(horizontally_dominated(p, d, 3));

    CHECK_THROWS_AS(vertically_dominated(p, VertexSet(3), 0), UniverseMismatch);
    CHECK_THROWS_AS(horizontally_dominated(p, VertexSet(3), 0), UniverseMismatch);
}

TEST_CASE("undominated cell counts on a trivial second factor") {
    // G = "Ck" is the path 3-0-1-2; H is the single vertex, so the product is
    // G itself and vertical domination means membership in d.
    Graph g = parse_graph6("Ck");
    ProductGraph p = cartesian_product(g, complete_graph(1));
    VertexSet d(4, {0, 1});
    REQUIRE(is_dominating(p.graph(), d));

    CellPartition cells = build_cells(g, {0, 1});
    CHECK(cells.parts[0] == VertexSet(4, {0, 1, 3}));
    CHECK(cells.parts[1] == VertexSet(4, {2}));

    CSCertificate cert = undominated_cell_counts(p, d, cells);
    // The cell {2} x {0} contains no member of d, so it counts once.
    CHECK(cert.n_per_i == std::vector<int>{0, 1});
    CHECK(cert.m_per_h == std::vector<int>{1});
    CHECK(cert.n_total() == 1);
    CHECK(cert.m_total() == 1);
    CHECK(cert.d_size == 2);
    CHECK(cert.gamma_g == 2);
    CHECK(cert.gamma_h == 1);

    CSOutcome out = verify_clark_suen(p, d, cells);
    // |d| + sum n_i = 3 against gamma gamma = 2; |d| = 2 against sum m_h = 1.
    CHECK(out.eq1_slack == 1);
    CHECK(out.eq2_slack == 1);
    CHECK_FALSE(out.half_bound_tight);
}

TEST_CASE("undominated cell counts on the cube") {
    // C4 box K2 with an antipodal minimum dominating set: every cell sees a
    // vertical dominator.
    ProductGraph p = cartesian_product(cycle_graph(4), complete_graph(2));
    VertexSet d(8, {0, 6});  // (0,0) and (2,1)
    REQUIRE(is_dominating(p.graph(), d));
    CellPartition cells = build_cells(p.g(), {0, 2});

    CSCertificate cert = undominated_cell_counts(p, d, cells);
    CHECK(cert.n_per_i == std::vector<int>{0, 0});
    CHECK(cert.m_per_h == std::vector<int>{0, 0});

    CSOutcome out = verify_clark_suen(p, d, cells);
    CHECK(out.eq1_slack == 0);  // 2 + 0 against 2*1
    CHECK(out.eq2_slack == 2);
    CHECK_FALSE(out.half_bound_tight);  // 2|d| = 4 > 2

    CHECK_THROWS_AS(undominated_cell_counts(p, VertexSet(8, {0}), cells), NotDominating);
    CHECK_THROWS_AS(undominated_cell_counts(p, VertexSet(3), cells), UniverseMismatch);
}

TEST_CASE("double counting verifies over a small exhaustive range") {
    std::vector<std::pair<Graph, Graph>> pairs = {
        {path_graph(3), path_graph(3)},
        {cycle_graph(4), complete_graph(2)},
        {star_graph(4), path_graph(3)},
        {cycle_graph(5), cycle_graph(4)},
    };
    for (const auto& [g, h] : pairs) {
        ProductGraph p = cartesian_product(g, h);
        const int gg = gamma_exact(g).gamma;
        const int gh = gamma_exact(h).gamma;
        for (const VertexSet& d : minimum_dominating_sets(p.graph())) {
            for (const VertexSet& base : minimum_dominating_sets(g)) {
                CellPartition cells = build_cells(g, base.indices());
                CSCertificate cert = undominated_cell_counts(p, d, cells);
                CHECK(cert.n_total() == cert.m_total());
                CSOutcome out = verify_clark_suen(p, d, cells);
                CHECK(out.eq1_slack >= 0);
                CHECK(out.eq2_slack >= 0);
                CHECK(out.half_bound_tight == (2 * cert.d_size == gg * gh));
                CHECK(std::accumulate(cert.n_per_i.begin(), cert.n_per_i.end(), 0) ==
                      cert.n_total());
            }
        }
    }
}
