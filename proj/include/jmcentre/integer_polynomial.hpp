#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jmcentre/bigint.hpp"

namespace jmcentre {

/// Dense polynomial in xi over Z, coefficients ascending by degree.  The zero
/// polynomial is the empty coefficient list; trailing zeros are trimmed.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    IntegerPolynomial(std::initializer_list<long> coeffs);
    explicit IntegerPolynomial(std::vector<Int> coeffs);

    static IntegerPolynomial constant(Int c);
    static IntegerPolynomial xi();  // the indeterminate

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // zero poly: -1
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int k) const;
    Int constant_term() const { return coeff(0); }

    bool is_constant() const { return c_.size() <= 1; }
    /// Unit of Z[xi]: the constant +1 or -1.
    bool is_unit() const { return c_.size() == 1 && jmcentre::is_unit(c_[0]); }

    IntegerPolynomial operator+(const IntegerPolynomial& o) const;
    IntegerPolynomial operator-(const IntegerPolynomial& o) const;
    IntegerPolynomial operator-() const;
    IntegerPolynomial operator*(const IntegerPolynomial& o) const;
    IntegerPolynomial scaled(const Int& c) const;
    /// Multiply by xi^k.
    IntegerPolynomial shifted(int k) const;

    bool operator==(const IntegerPolynomial& o) const { return c_ == o.c_; }

    Int evaluate(const Int& x) const;

    std::string to_string() const;             // e.g. "1 + 2*xi^2"
    nlohmann::json to_json() const;            // coefficient strings, ascending

private:
    void trim();
    std::vector<Int> c_;
};

}  // namespace jmcentre
