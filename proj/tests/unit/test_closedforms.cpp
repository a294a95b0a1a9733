#include <doctest.h>

#include "jmcentre/closed_forms.hpp"
#include "jmcentre/monomials.hpp"

#include "helpers.hpp"

using namespace jmcentre;
using jmcentre::testing::pt;

TEST_CASE("single-row closed forms") {
    CHECK(coeff_single(ClassLabel4::S1, 5) == 31);
    CHECK(coeff_single(ClassLabel4::S13, 6) == 50);
    CHECK(coeff_single(ClassLabel4::Identity, 3) == 0);
}

TEST_CASE("double-row closed forms") {
    CHECK(coeff_double(ClassLabel4::Identity, 5) == 670);
    CHECK(coeff_double(ClassLabel4::S12, 7) == 23521);
    for (long i = 1; i <= 20; ++i) {
        CHECK(coeff_double(ClassLabel4::S1, i) == 0);
        CHECK(coeff_double(ClassLabel4::S123, i) == 0);
    }
}

TEST_CASE("triple-row closed forms") {
    CHECK(coeff_triple(ClassLabel4::S123, 3) == 20);
    CHECK(coeff_triple(ClassLabel4::Identity, 4) == 120);
    CHECK(coeff_triple(ClassLabel4::S1, 2) == 0);
}

TEST_CASE("mixed closed forms against the evaluation oracle") {
    auto eval = make_group_evaluator(4);
    auto oracle = [&](ClassLabel4 lbl, const Partition& mu) {
        return eval.evaluate(mu).inner_product(label_element(lbl));
    };
    for (ClassLabel4 lbl : kClassLabels4) {
        CHECK(coeff_iij(lbl, 1, 2) == oracle(lbl, pt({2, 1, 1})));
        CHECK(coeff_iij(lbl, 2, 4) == oracle(lbl, pt({4, 2, 2})));
        CHECK(coeff_hook(lbl, 1, 1) == oracle(lbl, pt({2, 1})));
        CHECK(coeff_hook(lbl, 1, 2) == oracle(lbl, pt({3, 1})));
        CHECK(coeff_three_part(lbl, 1, 1, 1) == oracle(lbl, pt({3, 2, 1})));
        CHECK(coeff_three_part(lbl, 1, 2, 1) == oracle(lbl, pt({4, 2, 1})));
        // the row that needed correcting: odd i with j + k even
        CHECK(coeff_three_part(lbl, 1, 2, 2) == oracle(lbl, pt({5, 3, 2})));
        CHECK(coeff_three_part(lbl, 3, 2, 4) == oracle(lbl, pt({9, 7, 4})));
    }
    // parity factors
    CHECK(coeff_iij(ClassLabel4::S1, 3, 2) == 0);
    CHECK(coeff_hook(ClassLabel4::Identity, 2, 3) == 0);
    CHECK(coeff_three_part(ClassLabel4::Identity, 1, 1, 2) == 0);  // j + k odd
}

TEST_CASE("dispatcher routes by shape") {
    CHECK(coeff(ClassLabel4::Identity, pt({})) == 1);
    CHECK(coeff(ClassLabel4::S1, pt({})) == 0);
    for (ClassLabel4 lbl : kClassLabels4) {
        CHECK(coeff(lbl, pt({1, 1, 1, 1})) == 0);
        CHECK(coeff(lbl, pt({5, 3, 1, 1})) == 0);
    }
    auto eval = make_group_evaluator(4);
    for (ClassLabel4 lbl : kClassLabels4)
        CHECK(coeff(lbl, pt({5, 3, 1})) == eval.evaluate(pt({5, 3, 1})).inner_product(label_element(lbl)));
}

TEST_CASE("dispatcher equals brute force for all small partitions") {
    auto eval = make_group_evaluator(4);
    for (const auto& mu : partitions(10, 3))
        for (ClassLabel4 lbl : kClassLabels4)
            CHECK(coeff(lbl, mu) == eval.evaluate(mu).inner_product(label_element(lbl)));
}

TEST_CASE("recursions against brute force, with pinned values") {
    const auto rep = verify_recursions(12);
    CHECK(rep.ok());
    CHECK(rep.checks == 5 * (6 + 7 + 8));

    CHECK(coeff_single(ClassLabel4::S1, 7) == 14 * 31 - 49 * 5 + 36 * 1);
    CHECK(coeff_single(ClassLabel4::S1, 7) == 225);
    CHECK(coeff_single(ClassLabel4::S123, 9) == 1555);
    CHECK(coeff_triple(ClassLabel4::S1, 5) == 40 * 16 - 144 * 0);
    CHECK(coeff_triple(ClassLabel4::S1, 5) == 640);
}

TEST_CASE("characteristic polynomial of the m_i recursion") {
    // x^6 - 14 x^4 + 49 x^2 - 36 vanishes exactly at +-1, +-2, +-3
    auto chi = [](long x) { return x * x * x * x * x * x - 14 * x * x * x * x + 49 * x * x - 36; };
    for (long r : {1L, -1L, 2L, -2L, 3L, -3L}) CHECK(chi(r) == 0);
    for (long r : {0L, 4L, -4L, 5L}) CHECK(chi(r) != 0);
}

TEST_CASE("eigenbasis constants reproduce the identity-row closed form") {
    // 24<1,m_i> = 23 + 23(-1)^i + 10*2^i + 10(-2)^i + 3^i + (-3)^i
    for (long i = 1; i <= 12; ++i) {
        const Int lhs = 24 * coeff_single(ClassLabel4::Identity, i);
        const Int rhs = 23 + 23 * pow_int(-1, i) + 10 * pow_int(2, i) + 10 * pow_int(-2, i) +
                        pow_int(3, i) + pow_int(-3, i);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tables reproduce the published data") {
    using jmcentre::testing::kTableDouble;
    using jmcentre::testing::kTableSingle;
    using jmcentre::testing::kTableTriple;
    auto eval = make_group_evaluator(4);

    const auto t1 = make_table(TableFamily::Single, 9, eval);
    REQUIRE(t1.col_names.size() == 10);
    CHECK(t1.match);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 10; ++c) CHECK(t1.closed[r][c] == kTableSingle[r][c]);

    const auto t2 = make_table(TableFamily::Double, 9, eval);
    CHECK(t2.match);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 9; ++c) CHECK(t2.closed[r][c] == kTableDouble[r][c]);

    const auto t3 = make_table(TableFamily::Triple, 9, eval);
    CHECK(t3.match);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 9; ++c) CHECK(t3.closed[r][c] == kTableTriple[r][c]);

    CHECK(t1.to_csv().substr(0, 9) == "class,m_0");
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(coeff_single(ClassLabel4::S1, 0), std::invalid_argument);
    CHECK_THROWS_AS(coeff_iij(ClassLabel4::S1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_recursions(5), std::invalid_argument);
}
