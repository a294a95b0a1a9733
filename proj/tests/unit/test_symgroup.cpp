#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "jmcentre/permutation.hpp"
#include "jmcentre/symmetric_group.hpp"

#include "helpers.hpp"

using namespace jmcentre;
using jmcentre::testing::pt;

TEST_CASE("composition convention and involutions") {
    const auto s1 = Permutation::simple(4, 1);
    const auto s2 = Permutation::simple(4, 2);
    CHECK((s1 * s1).is_identity());
    CHECK((s1 * s2).images() == std::vector<int>{2, 3, 1, 4});
}

TEST_CASE("composition is associative on random triples in S_5") {
    const auto perms = all_permutations(5);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int t = 0; t < 100; ++t) {
        const auto &p = perms[pick(rng)], &q = perms[pick(rng)], &r = perms[pick(rng)];
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("degree mismatch is an error") {
    CHECK_THROWS_AS(Permutation(3) * Permutation(4), std::invalid_argument);
}

TEST_CASE("length equals inversion count and word size") {
    CHECK(Permutation(4).length() == 0);
    const auto incr4 = Permutation::from_word(4, {1, 2, 3});
    CHECK(incr4.length() == 3);
    auto longest = Permutation::from_one_line({4, 3, 2, 1});
    CHECK(longest.length() == 6);
    for (const auto& p : all_permutations(5)) {
        const auto w = p.reduced_word();
        CHECK(static_cast<int>(w.size()) == p.length());
        CHECK(Permutation::from_word(5, w) == p);
    }
}

TEST_CASE("canonical reduced words") {
    CHECK(Permutation(4).reduced_word().empty());
    const auto t13 = Permutation::transposition(4, 1, 3);
    CHECK(t13.reduced_word() == std::vector<int>{1, 2, 1});
}

TEST_CASE("modified cycle type") {
    CHECK(Permutation(4).modified_cycle_type() == pt({}));
    const auto s1s3 = Permutation::simple(4, 1) * Permutation::simple(4, 3);
    CHECK(s1s3.modified_cycle_type() == pt({1, 1}));
    CHECK(Permutation::from_word(4, {1, 2, 3}).modified_cycle_type() == pt({3}));
}

TEST_CASE("modified cycle type is conjugation invariant") {
    const auto perms = all_permutations(5);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (int t = 0; t < 200; ++t) {
        const auto &p = perms[pick(rng)], &g = perms[pick(rng)];
        CHECK((g * p * g.inverse()).modified_cycle_type() == p.modified_cycle_type());
    }
}

TEST_CASE("conjugacy classes partition the group") {
    for (int n : {4, 5}) {
        std::size_t total = 0;
        std::set<Permutation> seen;
        for (const auto& lab : class_labels(n)) {
            const auto cls = conjugacy_class(n, lab);
            total += cls.size();
            for (const auto& p : cls) CHECK(seen.insert(p).second);
        }
        std::size_t fact = 1;
        for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
        CHECK(total == fact);
    }
}

TEST_CASE("class examples for S_4") {
    CHECK(conjugacy_class(4, pt({})).size() == 1);
    // oracle: count transpositions of S_4 directly
    std::size_t transpositions = 0;
    for (const auto& p : all_permutations(4))
        if (!p.is_identity() && (p * p).is_identity() && p.length() % 2 == 1) {
            int moved = 0;
            for (int i = 1; i <= 4; ++i) moved += p(i) != i;
            if (moved == 2) ++transpositions;
        }
    CHECK(transpositions == 6);
    CHECK(conjugacy_class(4, pt({1})).size() == transpositions);
    CHECK(conjugacy_class(4, pt({3})).size() == 6);
    CHECK_THROWS_AS(conjugacy_class(4, pt({2, 2})), std::invalid_argument);
}

TEST_CASE("increasing elements of shape (2,1) in S_6") {
    // all increasing products of generators whose class label is (2,1)
    std::set<std::vector<int>> expected = {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}, {2, 4, 5}};
    std::set<std::vector<int>> found;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b)
            for (int c = b + 1; c <= 5; ++c) {
                const auto w = Permutation::from_word(6, {a, b, c});
                if (w.modified_cycle_type() == pt({2, 1})) found.insert({a, b, c});
            }
    CHECK(found == expected);
}

TEST_CASE("minimal increasing elements") {
    CHECK(minimal_increasing_element(4, pt({2})) == Permutation::from_word(4, {1, 2}));
    CHECK(minimal_increasing_element(4, pt({1, 1})) == Permutation::from_word(4, {1, 3}));
    CHECK(minimal_increasing_element(4, pt({3})) == Permutation::from_word(4, {1, 2, 3}));
    CHECK(minimal_increasing_element(6, pt({2, 1})) == Permutation::from_word(6, {1, 2, 4}));
    CHECK_THROWS_AS(minimal_increasing_element(4, pt({4})), std::invalid_argument);
}

TEST_CASE("w_mu has minimal length in its class") {
    for (int n : {4, 5}) {
        for (const auto& lab : class_labels(n)) {
            const auto w = minimal_increasing_element(n, lab);
            CHECK(w.length() == lab.weight());
            CHECK(w.modified_cycle_type() == lab);
            for (const auto& p : conjugacy_class(n, lab)) CHECK(p.length() >= w.length());
        }
    }
}

TEST_CASE("text rendering") {
    CHECK(Permutation::from_one_line({2, 1, 3, 4}).one_line_string() == "(2,1,3,4)");
    CHECK(pt({2, 1}).to_string() == "2,1");
    CHECK(pt({}).to_string() == "[]");
    CHECK(Partition::from_string("2,1") == pt({2, 1}));
    CHECK(Partition::from_string("[]") == pt({}));
}
