#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "boxdom/graph6.hpp"

using namespace boxdom;

namespace {

struct FixtureRow {
    std::string word;
    int n = 0;
    int m = 0;
    std::vector<int> degrees;
};

std::vector<FixtureRow> load_fixtures() {
    std::ifstream in(std::string(BOXDOM_DATA_DIR) + "/codec_fixtures.tsv");
    REQUIRE(in.good());
    std::vector<FixtureRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        FixtureRow row;
        std::string n_str, m_str, deg_str;
        std::getline(fields, row.word, '\t');
        std::getline(fields, n_str, '\t');
        std::getline(fields, m_str, '\t');
        std::getline(fields, deg_str, '\t');
        row.n = std::stoi(n_str);
        row.m = std::stoi(m_str);
        std::istringstream degs(deg_str);
        std::string tok;
        while (std::getline(degs, tok, ',')) row.degrees.push_back(std::stoi(tok));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/boxdom_test_") + name;
}

}  // namespace

TEST_CASE("hand-decoded words") {
    // "A_": the single edge on two vertices.
    Graph k2 = parse_graph6("A_");
    CHECK(k2.n() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.adjacent(0, 1));

    // "Bw": the triangle.
    Graph k3 = parse_graph6("Bw");
    CHECK(k3.n() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.adjacent(0, 1));
    CHECK(k3.adjacent(0, 2));
    CHECK(k3.adjacent(1, 2));

    // "Bg" = 101000 in the pair order (0,1),(0,2),(1,2): the path 0-1-2.
    Graph p3 = parse_graph6("Bg");
    CHECK(p3.n() == 3);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    // "Cl" = 101101 over (0,1),(0,2),(1,2),(0,3),(1,3),(2,3): the 4-cycle.
    Graph c4 = parse_graph6("Cl");
    CHECK(c4.n() == 4);
    CHECK(c4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    // "Cs" = 110100: the star with center 0.
    Graph star = parse_graph6("Cs");
    CHECK(star.n() == 4);
    CHECK(star.degree(0) == 3);
    CHECK(star.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});

    // "?" and "@": the empty graph and the single vertex.
    CHECK(parse_graph6("?").n() == 0);
    Graph k1 = parse_graph6("@");
    CHECK(k1.n() == 1);
    CHECK(k1.edge_count() == 0);
}

TEST_CASE("optional header prefix") {
    Graph g = parse_graph6(">>graph6<<A_");
    CHECK(g.n() == 2);
    CHECK(g.adjacent(0, 1));
}

TEST_CASE("codec fixtures: n, m, degree sequence, round trip") {
    const auto rows = load_fixtures();
    REQUIRE(rows.size() == 17);
    for (const auto& row : rows) {
        CAPTURE(row.word);
        Graph g = parse_graph6(row.word);
        CHECK(g.n() == row.n);
        CHECK(g.edge_count() == row.m);
        REQUIRE(static_cast<int>(row.degrees.size()) == row.n);
        for (int v = 0; v < row.n; ++v) CHECK(g.degree(v) == row.degrees[v]);
        // The fixture words are canonical, so encoding is an exact inverse.
        CHECK(to_graph6(g) == row.word);
    }
}

TEST_CASE("size encoding thresholds") {
    // n = 62 is the last single-byte size; 63 switches to the long form.
    Graph g62(62);
    CHECK(to_graph6(g62).front() == '}');
    Graph g63(63);
    std::string w63 = to_graph6(g63);
    CHECK(w63.substr(0, 4) == "~??~");
    CHECK(parse_graph6(w63).n() == 63);

    Graph g64(64);
    std::string w64 = to_graph6(g64);
    CHECK(w64.substr(0, 4) == "~?@?");
    Graph back = parse_graph6(w64);
    CHECK(back.n() == 64);
    CHECK(back.edge_count() == 0);
}

TEST_CASE("round trip through an edited graph") {
    Graph g(9);
    g.add_edge(0, 8);
    g.add_edge(3, 4);
    g.add_edge(2, 7);
    Graph back = parse_graph6(to_graph6(g));
    CHECK(back == g);
}

TEST_CASE("malformed words") {
    CHECK_THROWS_AS(parse_graph6(""), MalformedGraph6);
    // Too short: n = 2 needs one body byte.
    CHECK_THROWS_AS(parse_graph6("A"), MalformedGraph6);
    // Too long.
    CHECK_THROWS_AS(parse_graph6("A__"), MalformedGraph6);
    // Byte below the printable range.
    CHECK_THROWS_AS(parse_graph6("A!"), MalformedGraph6);
    // Byte above the printable range.
    CHECK_THROWS_AS(parse_graph6("A\x7f"), MalformedGraph6);
    // 'o' = 110000 sets a bit beyond the single pair of n = 2: bad padding.
    CHECK_THROWS_AS(parse_graph6("Ao"), MalformedGraph6);
    // Truncated three-byte size.
    CHECK_THROWS_AS(parse_graph6("~?"), MalformedGraph6);
}

TEST_CASE("size caps") {
    CHECK_THROWS_AS(parse_graph6("Cl", 3), Oversize);
    // 65 vertices: size bytes "?@@", then ceil(65*64/2 / 6) = 347 empty bytes.
    std::string big = "~?@@" + std::string(347, '?');
    CHECK_THROWS_AS(parse_graph6(big), Oversize);
    CHECK(parse_graph6(big, kMaxProductVertices).n() == 65);
}

TEST_CASE("file reading") {
    const std::string path = temp_path("words.g6");
    {
        std::ofstream out(path);
        out << "A_\n\nBw\n";
    }
    auto graphs = read_graph6_file(path);
    REQUIRE(graphs.size() == 2);  // blank line skipped
    CHECK(graphs[0].n() == 2);
    CHECK(graphs[1].n() == 3);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_graph6_file("/nonexistent/words.g6"), IoError);

    const std::string bad = temp_path("bad.g6");
    {
        std::ofstream out(bad);
        out << "A_\nA!\n";
    }
    CHECK_THROWS_WITH_AS(read_graph6_file(bad), doctest::Contains(":2:"), MalformedGraph6);
    std::remove(bad.c_str());
}

TEST_CASE("shipped corpora parse cleanly") {
    auto le4 = read_graph6_file(std::string(BOXDOM_DATA_DIR) + "/connected_le4.g6");
    CHECK(le4.size() == 10);
    for (const Graph& g : le4) CHECK(g.n() <= 4);

    auto c7 = read_graph6_file(std::string(BOXDOM_DATA_DIR) + "/connected7.g6");
    CHECK(c7.size() == 853);
    for (std::size_t i = 0; i < c7.size(); i += 97) CHECK(c7[i].n() == 7);

    auto all7 = read_graph6_file(std::string(BOXDOM_DATA_DIR) + "/graphs_le7.g6");
    CHECK(all7.size() == 1252);
}
