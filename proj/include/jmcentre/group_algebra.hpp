#pragma once

#include <map>
#include <vector>

#include <json.hpp>

#include "jmcentre/bigint.hpp"
#include "jmcentre/partition.hpp"
#include "jmcentre/permutation.hpp"

namespace jmcentre {

/// Sparse element of the integral group algebra ZS_n.  Zero coefficients are
/// never stored, so equality is structural.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(int n) : degree_(n) {}

    static GroupAlgebraElement zero(int n) { return GroupAlgebraElement(n); }
    static GroupAlgebraElement unit(int n);
    static GroupAlgebraElement of(const Permutation& p, Int coeff = 1);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Permutation, Int>& terms() const { return terms_; }

    Int coeff(const Permutation& p) const;

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;
    GroupAlgebraElement scaled(const Int& c) const;

    bool operator==(const GroupAlgebraElement& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    /// <w, h> = coefficient of w^{-1} in h.  For central h this is the
    /// coefficient of the class sum indexed by the class of w.
    Int inner_product(const Permutation& w) const;

    /// True iff the element commutes with every simple generator.
    bool is_central() const;

    /// [{"permutation": "(..)", "coefficient": "<decimal>"}], sorted by
    /// one-line notation.
    nlohmann::json to_json() const;

    void add_term(const Permutation& p, const Int& c);

private:
    void check_degree(const GroupAlgebraElement& o) const;

    int degree_ = 0;
    std::map<Permutation, Int> terms_;
};

/// Jucys-Murphy element L_i: zero for i = 1, otherwise the sum of the
/// transpositions (k i) for k < i.
GroupAlgebraElement jm_element(int n, int i);

/// Sum of the conjugacy class labelled by mu, each member with coefficient 1.
GroupAlgebraElement class_sum(int n, const Partition& mu);

/// Structure constants k with C_mu * C_lambda = sum_nu k(mu,lambda,nu) C_nu,
/// computed by exhaustive pair counting.  Index order follows labels.
struct ClassStructure {
    std::vector<Partition> labels;
    std::vector<std::vector<std::vector<Int>>> k;  // [mu][lambda][nu]
};
ClassStructure class_structure_constants(int n);

}  // namespace jmcentre
