#include <doctest.h>

#include "jmcentre/monomials.hpp"
#include "jmcentre/symmetric_group.hpp"

#include "helpers.hpp"

using namespace jmcentre;
using jmcentre::testing::pt;

namespace {

// independent oracle: count partitions of weight w with at most k parts
long count_partitions(int w, int k, int max_part) {
    if (w == 0) return 1;
    if (k == 0) return 0;
    long total = 0;
    for (int p = std::min(w, max_part); p >= 1; --p) total += count_partitions(w - p, k - 1, p);
    return total;
}

}  // namespace

TEST_CASE("partition enumeration order and contents") {
    const auto small = partitions(2, 3);
    REQUIRE(small.size() == 4);
    CHECK(small[0] == pt({}));
    CHECK(small[1] == pt({1}));
    CHECK(small[2] == pt({2}));
    CHECK(small[3] == pt({1, 1}));

    const auto next = partitions(3, 3);
    REQUIRE(next.size() == 7);
    CHECK(next[4] == pt({3}));
    CHECK(next[5] == pt({2, 1}));
    CHECK(next[6] == pt({1, 1, 1}));
}

TEST_CASE("partition counts match a brute-force oracle") {
    long weight10 = 0;
    for (const auto& mu : partitions(10, 4))
        if (mu.weight() == 10) ++weight10;
    CHECK(weight10 == count_partitions(10, 4, 10));
    CHECK(weight10 == 23);
}

TEST_CASE("monomial evaluation basics") {
    auto eval = make_group_evaluator(4);
    CHECK(eval.evaluate(pt({})) == GroupAlgebraElement::unit(4));
    CHECK(eval.evaluate(pt({1, 1})).inner_product(Permutation::from_word(4, {1, 2})) == 1);
    const auto& m33 = eval.evaluate(pt({3, 3}));
    CHECK(m33.inner_product(Permutation(4)) == 20);
    CHECK(m33.inner_product(Permutation::from_word(4, {1, 2})) == 21);
    CHECK(m33.inner_product(Permutation::from_word(4, {1, 3})) == 21);
}

TEST_CASE("partitions with four parts vanish in ZS_4") {
    auto eval = make_group_evaluator(4);
    CHECK(eval.evaluate(pt({1, 1, 1, 1})).is_zero());
    CHECK(eval.evaluate(pt({2, 1, 1, 1})).is_zero());
    CHECK_THROWS_AS(eval.evaluate(pt({1, 1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("jm elements commute pairwise") {
    for (int n : {4, 5}) {
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
                CHECK(jm_element(n, a) * jm_element(n, b) == jm_element(n, b) * jm_element(n, a));
                CHECK(jm_element_h(n, a) * jm_element_h(n, b) == jm_element_h(n, b) * jm_element_h(n, a));
            }
    }
}

TEST_CASE("evaluated monomials are central") {
    auto g4 = make_group_evaluator(4);
    for (const auto& mu : partitions(8, 3)) CHECK(g4.evaluate(mu).is_central());
    auto g5 = make_group_evaluator(5);
    for (const auto& mu : partitions(6, 4)) CHECK(g5.evaluate(mu).is_central());
}

TEST_CASE("three-variable relations") {
    const auto rep = verify_three_var_relations(6);
    CHECK(rep.ok());
    CHECK(rep.checks > 0);

    auto eval = make_group_evaluator(4);
    CHECK(eval.evaluate(pt({2, 2, 2})) == eval.evaluate(pt({1, 1, 1})) * eval.evaluate(pt({1, 1, 1})));
    CHECK(eval.evaluate(pt({2, 1})) ==
          eval.evaluate(pt({1, 1})) * eval.evaluate(pt({1})) - eval.evaluate(pt({1, 1, 1})).scaled(3));
}
