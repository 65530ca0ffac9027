#include "doctest.h"

#include <set>

#include "arbor/forest.hpp"
#include "oracles.hpp"

using namespace arbor;

static Tree leaf(int a = 0) { return node(a); }

TEST_CASE("canonical form ignores sibling order") {
    Tree a = node(1, forest_of({node(2), node(3)}));
    Tree b = node(1, forest_of({node(3), node(2)}));
    CHECK(a == b);

    Tree four_a = parse_tree("[1:[1:[1:]][1:]]");
    Tree four_b = parse_tree("[1:[1:][1:[1:]]]");
    CHECK(four_a == four_b);
}

TEST_CASE("tree and forest counts by size") {
    const int tree_counts[] = {1, 1, 2, 4, 9, 20};
    for (int n = 1; n <= 6; ++n) {
        CHECK(trees_of_size(n).size() == static_cast<size_t>(tree_counts[n - 1]));
        std::set<Tree> distinct(trees_of_size(n).begin(), trees_of_size(n).end());
        CHECK(distinct.size() == trees_of_size(n).size());
        for (const auto& t : trees_of_size(n)) CHECK(tree_size(t) == n);
    }
    const int forest_counts[] = {1, 1, 2, 4, 9, 20, 48};
    for (int n = 0; n <= 6; ++n) {
        CHECK(forests_of_size(n).size() == static_cast<size_t>(forest_counts[n]));
        for (const auto& f : forests_of_size(n)) CHECK(forest_size(f) == n);
    }
}

TEST_CASE("two-letter counts scale the enumeration") {
    CHECK(trees_of_size(1, {0, 1}).size() == 2);
    CHECK(trees_of_size(2, {0, 1}).size() == 4);
    CHECK(trees_of_size(3, {0, 1}).size() == 14);
}

TEST_CASE("parse and format round-trip") {
    CHECK(format_tree(parse_tree("[1:]")) == "[1:]");
    CHECK(format_forest(parse_forest("[1:] * [1:]")) == "[1:]*[1:]");
    CHECK(format_forest(parse_forest("1")) == "1");
    CHECK(parse_forest("[1:[2:][2:]]") == forest_of(node(1, forest_of({node(2), node(2)}))));
    for (int n = 0; n <= 5; ++n)
        for (const auto& f : forests_of_size(n)) CHECK(parse_forest(format_forest(f)) == f);

    CHECK_THROWS_AS(parse_tree("[1:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_tree("[x:]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_forest("[1:] extra"), std::invalid_argument);
}

TEST_CASE("symmetry factors on the three worked examples") {
    CHECK(symmetry_factor(parse_tree("[0:[0:[0:]][0:]]")) == 1);

    Tree branch = parse_tree("[0:[0:][0:][0:]]");
    Tree two_branches = node(0, forest_of({branch, branch}));
    CHECK(symmetry_factor(two_branches) == 72);

    Forest two_cherries = parse_forest("[0:[0:][0:]]*[0:[0:][0:]]");
    CHECK(symmetry_factor(two_cherries) == 8);

    CHECK(symmetry_factor(leaf()) == 1);
    CHECK(symmetry_factor(parse_tree("[0:[0:][0:]]")) == 2);
    CHECK(symmetry_factor(parse_forest("[0:]*[0:]*[0:]")) == 6);
}

TEST_CASE("symmetry factor agrees with the plane-embedding oracle") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& f : forests_of_size(n))
            CHECK(symmetry_factor(f) == arbor_tests::oracle_forest_symmetry(f));
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : trees_of_size(n, {0, 1}))
            CHECK(symmetry_factor(t) == arbor_tests::oracle_tree_symmetry(t));
}

TEST_CASE("decorations distinguish otherwise equal shapes") {
    Tree mixed = node(1, forest_of({node(2), node(3)}));
    CHECK(symmetry_factor(mixed) == 1);
    Tree same = node(1, forest_of({node(2), node(2)}));
    CHECK(symmetry_factor(same) == 2);
}
