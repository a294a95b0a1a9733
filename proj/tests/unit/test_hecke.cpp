#include <doctest.h>

#include <functional>
#include <random>

#include "jmcentre/hecke_algebra.hpp"
#include "jmcentre/monomials.hpp"
#include "jmcentre/symmetric_group.hpp"

#include "helpers.hpp"

using namespace jmcentre;
using jmcentre::testing::pt;

namespace {

// every reduced word of w, by descent recursion
void all_reduced_words(const Permutation& w, std::vector<int>& acc,
                       const std::function<void(const std::vector<int>&)>& fn) {
    if (w.is_identity()) {
        fn(acc);
        return;
    }
    for (int i = 1; i < w.degree(); ++i) {
        const auto ws = w * Permutation::simple(w.degree(), i);
        if (ws.length() < w.length()) {
            acc.push_back(i);
            all_reduced_words(ws, acc, fn);
            acc.pop_back();
        }
    }
}

HeckeElement evaluate_word(int n, const std::vector<int>& word) {
    auto h = HeckeElement::unit(n);
    for (int g : word) h = h * HeckeElement::t_of(Permutation::simple(n, g));
    return h;
}

}  // namespace

TEST_CASE("unit and quadratic relation") {
    const auto one = HeckeElement::unit(4);
    const auto ts1 = HeckeElement::t_of(Permutation::simple(4, 1));
    CHECK(one * ts1 == ts1);
    const auto sq = ts1 * ts1;
    CHECK(sq.coeff(Permutation(4)) == IntegerPolynomial{1});
    CHECK(sq.coeff(Permutation::simple(4, 1)) == IntegerPolynomial{0, 1});
    CHECK(sq.term_count() == 2);
}

TEST_CASE("braid relations in H_4 and H_5") {
    for (int n : {4, 5}) {
        for (int i = 1; i + 1 < n; ++i) {
            const auto a = HeckeElement::t_of(Permutation::simple(n, i));
            const auto b = HeckeElement::t_of(Permutation::simple(n, i + 1));
            CHECK(a * b * a == b * a * b);
        }
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                const auto a = HeckeElement::t_of(Permutation::simple(n, i));
                const auto b = HeckeElement::t_of(Permutation::simple(n, j));
                CHECK(a * b == b * a);
            }
    }
}

TEST_CASE("T_w is independent of the reduced word") {
    for (const auto& w : all_permutations(4)) {
        const auto ref = HeckeElement::t_of(w);
        std::vector<int> acc;
        // evaluating left-to-right needs the word reversed relative to the
        // descent recursion, which peels generators off the right
        all_reduced_words(w, acc, [&](const std::vector<int>& word) {
            std::vector<int> rev(word.rbegin(), word.rend());
            CHECK(evaluate_word(4, rev) == ref);
        });
    }
}

TEST_CASE("hecke jm elements") {
    CHECK(jm_element_h(4, 1).is_zero());
    const auto L3 = jm_element_h(4, 3);
    CHECK(L3.term_count() == 2);
    CHECK(L3.coeff(Permutation::transposition(4, 1, 3)) == IntegerPolynomial{1});
    CHECK(L3.coeff(Permutation::transposition(4, 2, 3)) == IntegerPolynomial{1});
    CHECK(jm_element_h(4, 4).specialize_zero() == jm_element(4, 4));
}

TEST_CASE("specialization at xi = 0 is a ring homomorphism") {
    const auto perms = all_permutations(4);
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    auto random_elem = [&] {
        HeckeElement h(4);
        for (int t = 0; t < 3; ++t)
            h.add_term(perms[pick(rng)], coin(rng) ? IntegerPolynomial{1, 1} : IntegerPolynomial{-1, 0, 2});
        return h;
    };
    for (int t = 0; t < 100; ++t) {
        const auto a = random_elem(), b = random_elem();
        CHECK((a * b).specialize_zero() == a.specialize_zero() * b.specialize_zero());
    }
}

TEST_CASE("specialization of T_w^2 and basis elements") {
    const auto ts1 = HeckeElement::t_of(Permutation::simple(4, 1));
    CHECK((ts1 * ts1).specialize_zero() == GroupAlgebraElement::unit(4));
    for (const auto& w : all_permutations(4))
        CHECK(HeckeElement::t_of(w).specialize_zero() == GroupAlgebraElement::of(w));
}

TEST_CASE("hecke monomials specialize to group monomials") {
    auto gh = make_hecke_evaluator(4);
    auto gg = make_group_evaluator(4);
    for (const auto& mu : partitions(4, 3))
        CHECK(gh.evaluate(mu).specialize_zero() == gg.evaluate(mu));
}

TEST_CASE("inner product") {
    const auto s1 = Permutation::simple(4, 1);
    CHECK(HeckeElement::t_of(s1).inner_product(s1) == IntegerPolynomial{1});
    auto gh = make_hecke_evaluator(4);
    CHECK(gh.evaluate(pt({})).inner_product(Permutation(4)) == IntegerPolynomial{1});
    // at xi = 0 the table values reappear
    using jmcentre::testing::kTableSingle;
    const Permutation reps[5] = {Permutation(4), Permutation::from_word(4, {1}),
                                 Permutation::from_word(4, {1, 2}), Permutation::from_word(4, {1, 3}),
                                 Permutation::from_word(4, {1, 2, 3})};
    for (int i = 1; i <= 5; ++i) {
        const auto& m = gh.evaluate(pt({i}));
        for (int r = 0; r < 5; ++r)
            CHECK(m.inner_product(reps[r]).constant_term() == kTableSingle[r][i]);
    }
}

TEST_CASE("centrality in H_4") {
    auto gh = make_hecke_evaluator(4);
    CHECK(gh.evaluate(pt({1, 1, 1})).is_central());
    CHECK_FALSE(HeckeElement::t_of(Permutation::simple(4, 1)).is_central());
    CHECK(HeckeElement::unit(4).is_central());
    for (const auto& mu : partitions(5, 3)) CHECK(gh.evaluate(mu).is_central());
}

TEST_CASE("json rendering") {
    const auto ts1 = HeckeElement::t_of(Permutation::simple(4, 1));
    const auto j = (ts1 * ts1).to_json();
    REQUIRE(j.size() == 2);
    CHECK(j[0]["permutation"] == "(1,2,3,4)");
    CHECK(j[0]["coeffs"] == nlohmann::json::array({"1"}));
    CHECK(j[1]["coeffs"] == nlohmann::json::array({"0", "1"}));
}
