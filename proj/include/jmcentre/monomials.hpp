#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "jmcentre/group_algebra.hpp"
#include "jmcentre/hecke_algebra.hpp"
#include "jmcentre/partition.hpp"

namespace jmcentre {

/// All partitions of weight 0..max_weight with at most max_parts parts, in
/// the canonical order (weight ascending, lexicographically descending).
std::vector<Partition> partitions(int max_weight, int max_parts);

/// Evaluates monomial symmetric polynomials at the Jucys-Murphy elements of
/// an algebra (ZS_n or H_n).  Each distinct exponent assignment to distinct
/// variables is counted once; results are memoized per partition.
template <class Elem>
class MonomialEvaluator {
public:
    /// jm holds L_1..L_n; in debug builds the constructor asserts that they
    /// pairwise commute.
    MonomialEvaluator(int n, std::vector<Elem> jm);

    int degree() const { return n_; }

    /// m_mu(L_1..L_n).  Throws for partitions with more parts than there are
    /// variables; partitions with n parts evaluate to zero through L_1 = 0.
    const Elem& evaluate(const Partition& mu);

private:
    const Elem& power(int var, int exp);

    int n_;
    std::vector<Elem> jm_;                      // 1-based: jm_[i-1] = L_i
    std::vector<std::vector<Elem>> powers_;
    std::map<Partition, Elem> memo_;
    std::mutex lock_;
};

using GroupMonomialEvaluator = MonomialEvaluator<GroupAlgebraElement>;
using HeckeMonomialEvaluator = MonomialEvaluator<HeckeElement>;

GroupMonomialEvaluator make_group_evaluator(int n);
HeckeMonomialEvaluator make_hecke_evaluator(int n);

struct VerifyReport {
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Checks the three-variable monomial identities as element equalities in
/// ZS_4 for indices up to i_max, together with the product identities
/// m_{i+j,i} = m_{i,i} m_j - m_{i,i,j} and m_{2i,i} = m_{i,i} m_i - 3 m_{i,i,i}.
VerifyReport verify_three_var_relations(int i_max);

}  // namespace jmcentre
