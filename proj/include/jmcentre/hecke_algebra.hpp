#pragma once

#include <map>

#include <json.hpp>

#include "jmcentre/group_algebra.hpp"
#include "jmcentre/integer_polynomial.hpp"
#include "jmcentre/permutation.hpp"

namespace jmcentre {

/// Element of the Iwahori-Hecke algebra H_n over Z[xi] in the T-tilde basis,
/// with relations T_i^2 = 1 + xi*T_i and the braid relations.  Sparse map
/// from basis permutations to coefficient polynomials; zero polynomials are
/// never stored.
class HeckeElement {
public:
    HeckeElement() = default;
    explicit HeckeElement(int n) : degree_(n) {}

    static HeckeElement zero(int n) { return HeckeElement(n); }
    static HeckeElement unit(int n);
    /// Basis element T_w with coefficient 1.
    static HeckeElement t_of(const Permutation& w);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Permutation, IntegerPolynomial>& terms() const { return terms_; }

    IntegerPolynomial coeff(const Permutation& w) const;

    HeckeElement operator+(const HeckeElement& o) const;
    HeckeElement operator-(const HeckeElement& o) const;
    /// Product; the right factor is expanded generator by generator along
    /// canonical reduced words.
    HeckeElement operator*(const HeckeElement& o) const;
    HeckeElement scaled(const IntegerPolynomial& c) const;

    /// Right multiplication by T_{s_i}: T_w T_s = T_{ws} when the length
    /// goes up, T_{ws} + xi T_w otherwise.
    HeckeElement times_generator(int i) const;

    bool operator==(const HeckeElement& o) const {
        return degree_ == o.degree_ && terms_ == o.terms_;
    }

    /// Coefficient polynomial of T_{w^{-1}}.
    IntegerPolynomial inner_product(const Permutation& w) const;

    bool is_central() const;

    /// Keep the constant terms of all coefficient polynomials.
    GroupAlgebraElement specialize_zero() const;

    /// [{"permutation": "(..)", "coeffs": ["c0", "c1", ...]}]
    nlohmann::json to_json() const;

    void add_term(const Permutation& w, const IntegerPolynomial& c);

private:
    void check_degree(const HeckeElement& o) const;

    int degree_ = 0;
    std::map<Permutation, IntegerPolynomial> terms_;
};

/// Hecke Jucys-Murphy element: L_1 = 0, otherwise the sum of T at the
/// transpositions (k i), k < i.
HeckeElement jm_element_h(int n, int i);

}  // namespace jmcentre
