#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "boxdom/domination.hpp"
#include "boxdom/generators.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/product.hpp"

using namespace boxdom;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

VertexSet random_subset(std::mt19937& rng, int n, double p) {
    VertexSet s(n);
    std::bernoulli_distribution in(p);
    for (int v = 0; v < n; ++v)
        if (in(rng)) s.insert(v);
    return s;
}

// Minimality over x checked by the definition: no proper subset of d that
// still contains x dominates.
bool minimal_by_subsets(const Graph& g, const VertexSet& d, const VertexSet& x) {
    if (!x.subset_of(d) || !is_dominating(g, d)) return false;
    const std::vector<int> free = (d - x).indices();
    const int f = static_cast<int>(free.size());
    for (unsigned mask = 0; mask + 1 < (1u << f); ++mask) {
        VertexSet t = x;
        for (int i = 0; i < f; ++i)
            if (mask & (1u << i)) t.insert(free[static_cast<std::size_t>(i)]);
        if (is_dominating(g, t)) return false;
    }
    return true;
}

std::vector<std::vector<int>> as_indices(const std::vector<VertexSet>& sets) {
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.indices());
    return out;
}

}  // namespace

TEST_CASE("is_dominating basics") {
    Graph p4 = path_graph(4);
    CHECK(is_dominating(p4, VertexSet(4, {0, 2})));
    CHECK(is_dominating(p4, VertexSet(4, {1, 3})));
    CHECK_FALSE(is_dominating(p4, VertexSet(4, {0, 1})));
    CHECK_FALSE(is_dominating(p4, VertexSet(4)));
    CHECK(is_dominating(p4, VertexSet::full(4)));

    // The empty graph is dominated by the empty set.
    CHECK(is_dominating(empty_graph(0), VertexSet(0)));
    CHECK_FALSE(is_dominating(empty_graph(1), VertexSet(1)));

    CHECK_THROWS_AS(is_dominating(p4, VertexSet(5)), UniverseMismatch);
}

TEST_CASE("gamma on parametric families") {
    for (int n = 1; n <= 12; ++n) {
        CAPTURE(n);
        Graph p = path_graph(n);
        const int expected = (n + 2) / 3;
        CHECK(gamma_bruteforce(p) == expected);
        CHECK(gamma_exact(p).gamma == expected);
    }
    for (int n = 3; n <= 12; ++n) {
        CAPTURE(n);
        Graph c = cycle_graph(n);
        const int expected = (n + 2) / 3;
        CHECK(gamma_bruteforce(c) == expected);
        CHECK(gamma_exact(c).gamma == expected);
    }
    for (int n = 1; n <= 8; ++n) CHECK(gamma_exact(complete_graph(n)).gamma == 1);
    for (int n = 2; n <= 8; ++n) CHECK(gamma_exact(star_graph(n)).gamma == 1);
    CHECK(gamma_exact(empty_graph(0)).gamma == 0);
    // With no edges every vertex must dominate itself.
    CHECK(gamma_exact(empty_graph(5)).gamma == 5);
}

TEST_CASE("solver agrees with brute force on corpus samples") {
    auto corpus = read_graph6_file(std::string(BOXDOM_DATA_DIR) + "/connected7.g6");
    REQUIRE(corpus.size() == 853);
    for (std::size_t i = 0; i < corpus.size(); i += 11) {
        CAPTURE(i);
        CHECK(gamma_exact(corpus[i]).gamma == gamma_bruteforce(corpus[i]));
    }
}

TEST_CASE("solver agrees with brute force on random graphs") {
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const double p = (trial % 4) * 0.25 + 0.1;
        Graph g = random_graph(rng, n, p);
        CAPTURE(trial);
        CHECK(gamma_exact(g).gamma == gamma_bruteforce(g));
    }
}

TEST_CASE("exact solver witness") {
    Graph c6 = cycle_graph(6);
    DominationResult r = gamma_exact(c6);
    CHECK(r.gamma == 2);
    CHECK(r.witness.size() == 2);
    CHECK(is_dominating(c6, r.witness));
    CHECK(r.nodes_explored > 0);

    // Deterministic: the same graph yields the same witness.
    DominationResult again = gamma_exact(c6);
    CHECK(again.witness == r.witness);
}

TEST_CASE("private neighbors") {
    Graph p4 = path_graph(4);  // 0-1-2-3
    VertexSet s(4, {0, 2});
    // 1 sees both members, so it is private to neither; 3 sees only 2.
    CHECK(private_neighbors(p4, s, 0) == VertexSet(4));
    CHECK(private_neighbors(p4, s, 2) == VertexSet(4, {3}));
    CHECK_THROWS_AS(private_neighbors(p4, s, 1), NotInSet);

    // Cross-check the definition on random graphs.
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(rng, n, 0.4);
        VertexSet s = random_subset(rng, n, 0.5);
        if (s.empty()) s.insert(0);
        for (int x : s.indices()) {
            VertexSet got = private_neighbors(g, s, x);
            for (int y = 0; y < n; ++y) {
                const bool expected =
                    !s.contains(y) && g.adjacent(x, y) && (g.neighbors(y) & s) == VertexSet(n, {x});
                CAPTURE(trial);
                CAPTURE(x);
                CAPTURE(y);
                CHECK(got.contains(y) == expected);
            }
        }
    }
}

TEST_CASE("minimality over a core: characterization vs subsets") {
    Graph p4 = path_graph(4);
    CHECK(is_minimal_dominating_containing(p4, VertexSet(4, {0, 2}), VertexSet(4, {0})));
    // 1 is removable once 0 and 2 are present.
    CHECK_FALSE(is_minimal_dominating_containing(p4, VertexSet(4, {0, 1, 2}), VertexSet(4, {0})));
    // Not a superset of the core, and not dominating: both plain false.
    CHECK_FALSE(is_minimal_dominating_containing(p4, VertexSet(4, {0, 2}), VertexSet(4, {1})));
    CHECK_FALSE(is_minimal_dominating_containing(p4, VertexSet(4, {0, 1}), VertexSet(4, {0})));
    // A minimum dominating set is minimal over any core inside it.
    CHECK(is_minimal_dominating_containing(p4, VertexSet(4, {0, 2}), VertexSet(4, {0, 2})));
    CHECK(is_minimal_dominating_containing(p4, VertexSet(4, {0, 2}), VertexSet(4)));

    std::mt19937 rng(16180);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        Graph g = random_graph(rng, n, 0.45);
        VertexSet d = random_subset(rng, n, 0.6);
        VertexSet x = random_subset(rng, n, 0.3) & d;
        CAPTURE(trial);
        CHECK(is_minimal_dominating_containing(g, d, x) == minimal_by_subsets(g, d, x));
    }
}

TEST_CASE("enumeration of minimal dominating supersets") {
    Graph p4 = path_graph(4);
    auto m = minimal_dominating_containing(p4, VertexSet(4, {0}));
    CHECK(as_indices(m) == std::vector<std::vector<int>>{{0, 2}, {0, 3}});

    // Over the empty core this is the family of all minimal dominating sets;
    // for the 4-cycle that is exactly the six pairs.
    Graph c4 = cycle_graph(4);
    auto all = minimal_dominating_containing(c4, VertexSet(4));
    CHECK(as_indices(all) ==
          std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

    auto truncated = minimal_dominating_containing(c4, VertexSet(4), 3);
    CHECK(as_indices(truncated) == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}});

    // A core that already dominates is its own sole extension.
    Graph k3 = complete_graph(3);
    auto self = minimal_dominating_containing(k3, VertexSet(3, {0, 1}));
    CHECK(as_indices(self) == std::vector<std::vector<int>>{{0, 1}});

    // Every enumerated set satisfies the membership predicate.
    std::mt19937 rng(14142);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n, 0.5);
        VertexSet x = random_subset(rng, n, 0.25);
        for (const VertexSet& d : minimal_dominating_containing(g, x)) {
            CAPTURE(trial);
            CHECK(is_minimal_dominating_containing(g, d, x));
        }
    }
}

TEST_CASE("minimum dominating set enumeration") {
    Graph c4 = cycle_graph(4);
    CHECK(as_indices(minimum_dominating_sets(c4)) ==
          std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});

    Graph p4 = path_graph(4);
    CHECK(as_indices(minimum_dominating_sets(p4)) ==
          std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

    // The triangular prism K3 box K2 has gamma 2 and nine minimum sets: one
    // vertex in each triangle, independently.
    ProductGraph prism = cartesian_product(complete_graph(3), complete_graph(2));
    CHECK(as_indices(minimum_dominating_sets(prism.graph())) ==
          std::vector<std::vector<int>>{{0, 3},
                                        {0, 4},
                                        {0, 5},
                                        {1, 3},
                                        {1, 4},
                                        {1, 5},
                                        {2, 3},
                                        {2, 4},
                                        {2, 5}});
}

TEST_CASE("bounded enumeration") {
    Graph c4 = cycle_graph(4);
    auto up3 = dominating_sets_up_to(c4, 3);
    CHECK(as_indices(up3) == std::vector<std::vector<int>>{{0, 1},
                                                           {0, 2},
                                                           {0, 3},
                                                           {1, 2},
                                                           {1, 3},
                                                           {2, 3},
                                                           {0, 1, 2},
                                                           {0, 1, 3},
                                                           {0, 2, 3},
                                                           {1, 2, 3}});
    CHECK(dominating_sets_up_to(c4, 1).empty());
    CHECK(dominating_sets_up_to(c4, 0).empty());
    CHECK(dominating_sets_up_to(c4, 2) == minimum_dominating_sets(c4));
    // Bound n admits the full vertex set.
    CHECK(dominating_sets_up_to(c4, 4).size() == 11);
}

TEST_CASE("size caps") {
    CHECK_THROWS_AS(gamma_bruteforce(path_graph(17)), Oversize);
    CHECK_NOTHROW(gamma_bruteforce(path_graph(16)));
    CHECK_THROWS_AS(minimal_dominating_containing(path_graph(21), VertexSet(21)), Oversize);
    CHECK_THROWS_AS(minimum_dominating_sets(path_graph(25)), Oversize);
    CHECK_THROWS_AS(dominating_sets_up_to(path_graph(25), 2), Oversize);
    CHECK(gamma_exact(path_graph(40)).gamma == 14);
}
