#include "jmcentre/hecke_algebra.hpp"

#include <stdexcept>

namespace jmcentre {

HeckeElement HeckeElement::unit(int n) {
    HeckeElement e(n);
    e.terms_.emplace(Permutation(n), IntegerPolynomial::constant(1));
    return e;
}

HeckeElement HeckeElement::t_of(const Permutation& w) {
    HeckeElement e(w.degree());
    e.terms_.emplace(w, IntegerPolynomial::constant(1));
    return e;
}

IntegerPolynomial HeckeElement::coeff(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? IntegerPolynomial{} : it->second;
}

void HeckeElement::check_degree(const HeckeElement& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("hecke: degree mismatch");
}

void HeckeElement::add_term(const Permutation& w, const IntegerPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    check_degree(o);
    HeckeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const {
    check_degree(o);
    HeckeElement r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

HeckeElement HeckeElement::times_generator(int i) const {
    const Permutation s = Permutation::simple(degree_, i);
    HeckeElement r(degree_);
    for (const auto& [w, c] : terms_) {
        const Permutation ws = w * s;
        if (ws.length() > w.length()) {
            r.add_term(ws, c);
        } else {
            r.add_term(ws, c);
            r.add_term(w, c.shifted(1));  // xi * c
        }
    }
    return r;
}

HeckeElement HeckeElement::operator*(const HeckeElement& o) const {
    check_degree(o);
    HeckeElement out(degree_);
    for (const auto& [w, c] : o.terms_) {
        HeckeElement acc = this->scaled(c);
        for (int g : w.reduced_word()) acc = acc.times_generator(g);
        for (const auto& [u, cu] : acc.terms_) out.add_term(u, cu);
    }
    return out;
}

HeckeElement HeckeElement::scaled(const IntegerPolynomial& c) const {
    HeckeElement r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [w, cw] : terms_) r.terms_.emplace(w, cw * c);
    return r;
}

IntegerPolynomial HeckeElement::inner_product(const Permutation& w) const {
    if (w.degree() != degree_) throw std::invalid_argument("inner_product: degree mismatch");
    return coeff(w.inverse());
}

bool HeckeElement::is_central() const {
    for (int i = 1; i < degree_; ++i) {
        auto t = HeckeElement::t_of(Permutation::simple(degree_, i));
        if (!((*this) * t == t * (*this))) return false;
    }
    return true;
}

GroupAlgebraElement HeckeElement::specialize_zero() const {
    GroupAlgebraElement g(degree_);
    for (const auto& [w, c] : terms_) g.add_term(w, c.constant_term());
    return g;
}

nlohmann::json HeckeElement::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [w, c] : terms_)
        arr.push_back({{"permutation", w.one_line_string()}, {"coeffs", c.to_json()}});
    return arr;
}

HeckeElement jm_element_h(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("jm_element_h: index out of range");
    HeckeElement e(n);
    for (int k = 1; k < i; ++k)
        e.add_term(Permutation::transposition(n, k, i), IntegerPolynomial::constant(1));
    return e;
}

}  // namespace jmcentre
