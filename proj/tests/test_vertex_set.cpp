#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "boxdom/vertex_set.hpp"

using namespace boxdom;

TEST_CASE("construction and membership") {
    VertexSet s(10);
    CHECK(s.universe() == 10);
    CHECK(s.size() == 0);
    CHECK(s.empty());
    CHECK_FALSE(s.contains(3));

    s.insert(3);
    s.insert(7);
    s.insert(3);  // idempotent
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK(s.contains(7));
    CHECK_FALSE(s.contains(0));

    s.erase(3);
    CHECK(s.size() == 1);
    CHECK_FALSE(s.contains(3));
    s.erase(3);  // idempotent
    CHECK(s.size() == 1);
}

TEST_CASE("initializer list and from_indices") {
    VertexSet a(5, {0, 2, 4});
    CHECK(a.size() == 3);
    CHECK(a.indices() == std::vector<int>{0, 2, 4});

    VertexSet b = VertexSet::from_indices(5, {4, 0, 2});
    CHECK(a == b);

    VertexSet f = VertexSet::full(4);
    CHECK(f.size() == 4);
    CHECK(f.indices() == std::vector<int>{0, 1, 2, 3});

    VertexSet z = VertexSet::full(0);
    CHECK(z.size() == 0);
    CHECK(z.universe() == 0);
}

TEST_CASE("sets larger than one word") {
    VertexSet s(130);
    s.insert(0);
    s.insert(63);
    s.insert(64);
    s.insert(129);
    CHECK(s.size() == 4);
    CHECK(s.indices() == std::vector<int>{0, 63, 64, 129});
    CHECK(s.word_count() >= 3);
    CHECK(s.word(0) == ((1ULL << 0) | (1ULL << 63)));
    CHECK(s.word(1) == 1ULL);
    CHECK(s.word(99) == 0ULL);  // out-of-range words read as zero

    VertexSet c = s.complement();
    CHECK(c.size() == 126);
    CHECK_FALSE(c.contains(64));
    CHECK(c.contains(1));
    CHECK((s & c).empty());
    CHECK((s | c) == VertexSet::full(130));
}

TEST_CASE("boolean algebra") {
    VertexSet a(6, {0, 1, 3});
    VertexSet b(6, {1, 3, 5});

    CHECK((a | b) == VertexSet(6, {0, 1, 3, 5}));
    CHECK((a & b) == VertexSet(6, {1, 3}));
    CHECK((a - b) == VertexSet(6, {0}));
    CHECK((b - a) == VertexSet(6, {5}));

    VertexSet c = a;
    c |= b;
    c &= a;
    CHECK(c == a);
    c -= a;
    CHECK(c.empty());

    CHECK(a != b);
    CHECK(a == VertexSet(6, {0, 1, 3}));
}

TEST_CASE("subset and intersection predicates") {
    VertexSet a(6, {1, 3});
    VertexSet b(6, {0, 1, 3});
    VertexSet c(6, {0, 2});

    CHECK(a.subset_of(b));
    CHECK_FALSE(b.subset_of(a));
    CHECK(a.subset_of(a));
    CHECK(VertexSet(6).subset_of(a));

    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(c));
    CHECK_FALSE(VertexSet(6).intersects(a));
}

TEST_CASE("first and traversal order") {
    VertexSet s(70, {65, 2, 40});
    CHECK(s.first() == 2);
    CHECK(VertexSet(5).first() == -1);

    std::vector<int> seen;
    s.for_each([&](int v) { seen.push_back(v); });
    CHECK(seen == std::vector<int>{2, 40, 65});
}

TEST_CASE("lex order on member sequences") {
    // {0,2} < {0,3} < {1}; a proper prefix sorts first.
    VertexSet a(4, {0, 2});
    VertexSet b(4, {0, 3});
    VertexSet c(4, {1});
    VertexSet p(4, {0});

    CHECK(lex_less(a, b));
    CHECK(lex_less(b, c));
    CHECK(lex_less(a, c));
    CHECK(lex_less(p, a));       // prefix first
    CHECK_FALSE(lex_less(a, p));
    CHECK_FALSE(lex_less(a, a));  // irreflexive
    CHECK(lex_less(VertexSet(4), p));  // empty set first of all
}

TEST_CASE("index and universe errors") {
    VertexSet s(4);
    CHECK_THROWS_AS(s.insert(4), IndexOutOfRange);
    CHECK_THROWS_AS(s.insert(-1), IndexOutOfRange);
    CHECK_THROWS_AS(s.contains(9), IndexOutOfRange);
    CHECK_THROWS_AS(s.erase(4), IndexOutOfRange);
    CHECK_THROWS_AS(VertexSet(-2), IndexOutOfRange);
    CHECK_THROWS_AS(VertexSet(3, {0, 3}), IndexOutOfRange);

    VertexSet t(5);
    CHECK_THROWS_AS(s |= t, UniverseMismatch);
    CHECK_THROWS_AS(s &= t, UniverseMismatch);
    CHECK_THROWS_AS(s -= t, UniverseMismatch);
    CHECK_THROWS_AS((void)s.subset_of(t), UniverseMismatch);
    CHECK_THROWS_AS((void)s.intersects(t), UniverseMismatch);
}
