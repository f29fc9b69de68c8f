#include <doctest.h>

#include <random>

#include "fuglab/group.hpp"

using namespace fuglab;

namespace {

PointSet mkset(const GroupPtr& g, const std::vector<std::vector<Coord>>& rows) {
    return PointSet::from_coords(g, rows);
}

} // namespace

TEST_CASE("group construction and invariants") {
    GroupPtr g = Group::make({24, 24, 24});
    CHECK(g->order() == 13824);
    CHECK(g->exponent() == 24);
    CHECK(g->dimension() == 3);

    GroupPtr mixed = Group::make({4, 6});
    CHECK(mixed->order() == 24);
    CHECK(mixed->exponent() == 12);

    CHECK_THROWS_AS(Group::make({}), std::invalid_argument);
    CHECK_THROWS_AS(Group::make({0}), std::invalid_argument);
    CHECK_THROWS_AS(Group::make({-3}), std::invalid_argument);
    CHECK_THROWS_AS(Group::make({10'000'001}), std::length_error);
    CHECK_THROWS_AS(Group::make({4000, 4000}), std::length_error);
    CHECK(Group::make({1, 1})->order() == 1);
}

TEST_CASE("index and coordinate round trip is lexicographic") {
    GroupPtr g = Group::make({3, 4, 5});
    Idx prev = -1;
    std::vector<Coord> prev_coords;
    for (Idx i = 0; i < g->order(); ++i) {
        std::vector<Coord> c = g->coords_of(i);
        CHECK(g->index_of(c) == i);
        if (prev >= 0) CHECK(prev_coords < c);  // index order == lex order
        prev = i;
        prev_coords = c;
    }
    // Reduction of out-of-range coordinates.
    CHECK(g->index_of(std::vector<Coord>{-1, 9, 12}) ==
          g->index_of(std::vector<Coord>{2, 1, 2}));
}

TEST_CASE("pairing exponent examples") {
    GroupPtr g = Group::make({24, 24, 24});
    CHECK(g->pairing_exponent(std::vector<Coord>{3, 0, 0}, std::vector<Coord>{1, 4, 2}) == 3);

    GroupPtr z64 = Group::make({6, 6, 6, 6});
    CHECK(z64->pairing_exponent(std::vector<Coord>{2, 2, 4, 4},
                                std::vector<Coord>{3, 4, 4, 4}) == 4);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Idx x = static_cast<Idx>(rng() % g->order());
        CHECK(g->pairing_exponent(0, x) == 0);  // trivial character
    }

    CHECK_THROWS_AS(g->pairing_exponent(std::vector<Coord>{1, 2}, std::vector<Coord>{0, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("pairing exponent is additive") {
    std::mt19937 rng(11);
    for (GroupPtr g : {Group::make({12}), Group::make({4, 6}), Group::make({2, 3, 8})}) {
        for (int trial = 0; trial < 200; ++trial) {
            Idx v = static_cast<Idx>(rng() % g->order());
            Idx x = static_cast<Idx>(rng() % g->order());
            Idx y = static_cast<Idx>(rng() % g->order());
            Coord lhs = g->pairing_exponent(v, g->add(x, y));
            Coord rhs = (g->pairing_exponent(v, x) + g->pairing_exponent(v, y)) % g->exponent();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("difference set examples") {
    GroupPtr z6 = Group::make({6});
    CHECK(difference_set(PointSet(z6, {0})).indices() == std::vector<Idx>{0});
    CHECK(difference_set(PointSet(z6, {0, 3})).indices() == std::vector<Idx>{0, 3});

    GroupPtr z24 = Group::make({24});
    PointSet c1(z24, {0, 3, 6, 9});
    CHECK(difference_set(c1).indices() == std::vector<Idx>{0, 3, 6, 9, 15, 18, 21});

    CHECK_THROWS_AS(difference_set(PointSet(z6, {})), std::invalid_argument);
}

TEST_CASE("difference set properties") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        GroupPtr g = trial % 2 ? Group::make({3, 6}) : Group::make({15});
        std::vector<Idx> pts;
        std::size_t size = 1 + rng() % 6;
        for (std::size_t i = 0; i < size; ++i) pts.push_back(static_cast<Idx>(rng() % g->order()));
        PointSet a(g, pts);
        PointSet d = difference_set(a);
        CHECK(d.contains(0));
        CHECK(d.negated() == d);
        CHECK(d.size() <= a.size() * a.size() - a.size() + 1);
    }
}

TEST_CASE("subgroup generation") {
    GroupPtr g = Group::make({24, 24, 24});
    PointSet gens = mkset(g, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
    Subgroup h = subgroup_generated(g, gens.indices());
    CHECK(h.order() == 512);
    CHECK(h.contains(g->index_of(std::vector<Coord>{21, 18, 3})));

    GroupPtr z64 = Group::make({6, 6, 6, 6});
    PointSet gens2 = mkset(z64, {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
    CHECK(subgroup_generated(z64, gens2.indices()).order() == 81);

    Subgroup trivial = subgroup_generated(g, {});
    CHECK(trivial.order() == 1);
    CHECK(trivial.contains(0));
}

TEST_CASE("subgroup order divides group order") {
    std::mt19937 rng(5);
    for (GroupPtr g : {Group::make({12}), Group::make({8, 6}), Group::make({2, 2, 9})}) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Idx> gens;
            for (std::size_t i = 0; i < 1 + rng() % 3; ++i)
                gens.push_back(static_cast<Idx>(rng() % g->order()));
            Subgroup h = subgroup_generated(g, gens);
            CHECK(g->order() % h.order() == 0);
            CHECK(h.elements().negated() == h.elements());
        }
    }
}

TEST_CASE("smallest containing subgroup") {
    GroupPtr g = Group::make({24, 24, 24});
    PointSet l = mkset(g, {{0, 0, 0}, {0, 3, 3}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {21, 3, 3}});
    CHECK(smallest_containing_subgroup(l).order() == 512);

    GroupPtr z64 = Group::make({6, 6, 6, 6});
    PointSet l2 = mkset(z64, {{0, 0, 0, 0},
                              {0, 2, 2, 4},
                              {2, 0, 4, 4},
                              {2, 4, 0, 2},
                              {4, 4, 2, 0},
                              {4, 2, 4, 2}});
    CHECK(smallest_containing_subgroup(l2).order() == 81);

    PointSet singleton = mkset(g, {{7, 11, 2}});
    CHECK(smallest_containing_subgroup(singleton).order() == 1);

    // A translate of the set lies inside the subgroup.
    Subgroup h = smallest_containing_subgroup(l2);
    for (Idx p : l2) CHECK(h.contains(z64->subtract(p, l2[0])));
}

TEST_CASE("point sets are canonical and validated") {
    GroupPtr g = Group::make({6});
    PointSet s(g, {4, 1, 4, 0});
    CHECK(s.indices() == std::vector<Idx>{0, 1, 4});
    CHECK(s.contains(4));
    CHECK(!s.contains(2));
    CHECK_THROWS_AS(PointSet(g, {6}), std::out_of_range);

    PointSet t = s.translated(2);
    CHECK(t.indices() == std::vector<Idx>{0, 2, 3});

    GroupPtr other = Group::make({7});
    CHECK_THROWS_AS(require_same_group(s, PointSet(other, {0}), "test"), std::invalid_argument);
}

TEST_CASE("matrix column constructor matches the display convention") {
    GroupPtr g = Group::make({6, 6, 6, 6});
    PointSet t = PointSet::from_matrix_columns(g, {{0, 1, 0, 0, 0, 2},
                                                   {0, 0, 1, 0, 0, 2},
                                                   {0, 0, 0, 1, 0, 2},
                                                   {0, 0, 0, 0, 1, 2}});
    CHECK(t.size() == 6);
    CHECK(t.contains(g->index_of(std::vector<Coord>{2, 2, 2, 2})));
    CHECK(t.contains(g->index_of(std::vector<Coord>{0, 0, 0, 1})));
    CHECK(!t.contains(g->index_of(std::vector<Coord>{1, 1, 0, 0})));
}
