#include "jmcentre/monomials.hpp"

#include <algorithm>
#include <stdexcept>

namespace jmcentre {

namespace {

void gen_partitions(int remaining, int max_part, int max_parts, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (static_cast<int>(acc.size()) == max_parts) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, max_parts, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int max_weight, int max_parts) {
    if (max_weight < 0) throw std::invalid_argument("partitions: max_weight must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    for (int w = 0; w <= max_weight; ++w) gen_partitions(w, w, max_parts, acc, out);
    return out;  // weight ascending; recursion emits lex-descending within a weight
}

template <class Elem>
MonomialEvaluator<Elem>::MonomialEvaluator(int n, std::vector<Elem> jm)
    : n_(n), jm_(std::move(jm)) {
    if (static_cast<int>(jm_.size()) != n) throw std::invalid_argument("MonomialEvaluator: need L_1..L_n");
#ifndef NDEBUG
    for (std::size_t a = 0; a < jm_.size(); ++a)
        for (std::size_t b = a + 1; b < jm_.size(); ++b)
            if (!(jm_[a] * jm_[b] == jm_[b] * jm_[a]))
                throw std::logic_error("MonomialEvaluator: variables do not commute");
#endif
    powers_.resize(jm_.size());
    for (std::size_t k = 0; k < jm_.size(); ++k) {
        powers_[k].push_back(Elem::unit(n_));
        powers_[k].push_back(jm_[k]);
    }
}

template <class Elem>
const Elem& MonomialEvaluator<Elem>::power(int var, int exp) {
    auto& chain = powers_[static_cast<std::size_t>(var - 1)];
    while (static_cast<int>(chain.size()) <= exp) chain.push_back(chain.back() * chain[1]);
    return chain[static_cast<std::size_t>(exp)];
}

template <class Elem>
const Elem& MonomialEvaluator<Elem>::evaluate(const Partition& mu) {
    std::scoped_lock guard(lock_);
    auto it = memo_.find(mu);
    if (it != memo_.end()) return it->second;

    if (mu.size() > n_)
        throw std::invalid_argument("evaluate: partition " + mu.to_string() + " has more than " +
                                    std::to_string(n_) + " parts");
    Elem result = Elem::zero(n_);
    if (mu.empty()) {
        result = Elem::unit(n_);
    } else {
        // distinct part values with multiplicities
        std::vector<int> values, counts;
        for (int p : mu.parts()) {
            if (!values.empty() && values.back() == p)
                ++counts.back();
            else {
                values.push_back(p);
                counts.push_back(1);
            }
        }
        // variables that can contribute (skip zero JM elements, e.g. L_1)
        std::vector<int> vars;
        for (int v = 1; v <= n_; ++v)
            if (!jm_[static_cast<std::size_t>(v - 1)].is_zero()) vars.push_back(v);

        if (static_cast<int>(mu.size()) <= static_cast<int>(vars.size())) {
            // choose a subset of variables for each distinct value, all disjoint
            std::vector<char> used(vars.size(), 0);
            auto rec = [&](auto&& self, std::size_t vi, Elem acc) -> void {
                if (vi == values.size()) {
                    result = result + acc;
                    return;
                }
                const int need = counts[vi];
                // ascending index combinations of unused variables
                auto pick = [&](auto&& pickself, int start, int left, const Elem& partial) -> void {
                    if (left == 0) {
                        self(self, vi + 1, partial);
                        return;
                    }
                    for (int t = start; t <= static_cast<int>(vars.size()) - left; ++t) {
                        if (used[static_cast<std::size_t>(t)]) continue;
                        used[static_cast<std::size_t>(t)] = 1;
                        pickself(pickself, t + 1, left - 1,
                                 partial * power(vars[static_cast<std::size_t>(t)], values[vi]));
                        used[static_cast<std::size_t>(t)] = 0;
                    }
                };
                pick(pick, 0, need, acc);
            };
            rec(rec, 0, Elem::unit(n_));
        }
    }
    auto [pos, _] = memo_.emplace(mu, std::move(result));
    return pos->second;
}

template class MonomialEvaluator<GroupAlgebraElement>;
template class MonomialEvaluator<HeckeElement>;

GroupMonomialEvaluator make_group_evaluator(int n) {
    std::vector<GroupAlgebraElement> jm;
    jm.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) jm.push_back(jm_element(n, i));
    return GroupMonomialEvaluator(n, std::move(jm));
}

HeckeMonomialEvaluator make_hecke_evaluator(int n) {
    std::vector<HeckeElement> jm;
    jm.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) jm.push_back(jm_element_h(n, i));
    return HeckeMonomialEvaluator(n, std::move(jm));
}

namespace {

Partition pt(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace

VerifyReport verify_three_var_relations(int i_max) {
    if (i_max < 4) throw std::invalid_argument("verify_three_var_relations: i_max must be >= 4");
    VerifyReport rep;
    auto ev = make_group_evaluator(4);
    auto m = [&](std::vector<int> parts) { return ev.evaluate(pt(std::move(parts))); };
    auto check = [&](bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok) rep.failures.push_back(what);
    };

    for (int i = 4; i <= i_max; ++i) {
        check(m({i}) == m({1}) * m({i - 1}) - m({1, 1}) * m({i - 2}) + m({1, 1, 1}) * m({i - 3}),
              "m_i peel at i=" + std::to_string(i));
        check(m({i, i}) == m({1, 1}) * m({i - 1, i - 1}) - m({1}) * m({1, 1, 1}) * m({i - 2, i - 2}) +
                               m({2, 2, 2}) * m({i - 3, i - 3}),
              "m_{i,i} peel at i=" + std::to_string(i));
    }
    for (int i = 2; i <= i_max; ++i)
        check(m({i, i, i}) == m({1, 1, 1}) * m({i - 1, i - 1, i - 1}),
              "m_{i,i,i} peel at i=" + std::to_string(i));

    // proof identities: m_{i+j,i} = m_{i,i} m_j - m_{i,i,j} (i != j),
    //                   m_{2i,i} = m_{i,i} m_i - 3 m_{i,i,i}
    for (int i = 1; i <= i_max; ++i) {
        for (int j = 1; j <= i_max; ++j) {
            if (2 * i + j > 2 * i_max) continue;
            if (i == j) continue;
            check(m({i + j, i}) == m({i, i}) * m({j}) - m({i, i, j}),
                  "hook split at i=" + std::to_string(i) + ", j=" + std::to_string(j));
        }
        if (3 * i <= 2 * i_max)
            check(m({2 * i, i}) == m({i, i}) * m({i}) - m({i, i, i}).scaled(3),
                  "m_{2i,i} split at i=" + std::to_string(i));
    }
    return rep;
}

}  // namespace jmcentre
