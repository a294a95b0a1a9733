#include "jmcentre/group_algebra.hpp"

#include <stdexcept>

#include "jmcentre/symmetric_group.hpp"

namespace jmcentre {

GroupAlgebraElement GroupAlgebraElement::unit(int n) {
    GroupAlgebraElement e(n);
    e.terms_.emplace(Permutation(n), Int(1));
    return e;
}

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& p, Int coeff) {
    GroupAlgebraElement e(p.degree());
    if (coeff != 0) e.terms_.emplace(p, std::move(coeff));
    return e;
}

Int GroupAlgebraElement::coeff(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Int(0) : it->second;
}

void GroupAlgebraElement::check_degree(const GroupAlgebraElement& o) const {
    if (degree_ != o.degree_)
        throw std::invalid_argument("group algebra: degree mismatch");
}

void GroupAlgebraElement::add_term(const Permutation& p, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    check_degree(o);
    GroupAlgebraElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    check_degree(o);
    GroupAlgebraElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    check_degree(o);
    GroupAlgebraElement r(degree_);
    for (const auto& [p, cp] : terms_)
        for (const auto& [q, cq] : o.terms_) r.add_term(p * q, cp * cq);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Int& c) const {
    GroupAlgebraElement r(degree_);
    if (c == 0) return r;
    for (const auto& [p, cp] : terms_) r.terms_.emplace(p, cp * c);
    return r;
}

Int GroupAlgebraElement::inner_product(const Permutation& w) const {
    if (w.degree() != degree_) throw std::invalid_argument("inner_product: degree mismatch");
    return coeff(w.inverse());
}

bool GroupAlgebraElement::is_central() const {
    for (int i = 1; i < degree_; ++i) {
        auto s = GroupAlgebraElement::of(Permutation::simple(degree_, i));
        if (!((*this) * s == s * (*this))) return false;
    }
    return true;
}

nlohmann::json GroupAlgebraElement::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, c] : terms_)
        arr.push_back({{"permutation", p.one_line_string()}, {"coefficient", c.get_str()}});
    return arr;
}

GroupAlgebraElement jm_element(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("jm_element: index out of range");
    GroupAlgebraElement e(n);
    for (int k = 1; k < i; ++k) e.add_term(Permutation::transposition(n, k, i), 1);
    return e;
}

GroupAlgebraElement class_sum(int n, const Partition& mu) {
    GroupAlgebraElement e(n);
    for (const auto& p : conjugacy_class(n, mu)) e.add_term(p, 1);
    return e;
}

ClassStructure class_structure_constants(int n) {
    ClassStructure cs;
    cs.labels = class_labels(n);
    const auto m = cs.labels.size();
    std::vector<std::vector<Permutation>> members;
    members.reserve(m);
    for (const auto& lab : cs.labels) members.push_back(conjugacy_class(n, lab));
    std::vector<Permutation> reps;
    reps.reserve(m);
    for (const auto& lab : cs.labels) reps.push_back(minimal_increasing_element(n, lab));

    cs.k.assign(m, std::vector<std::vector<Int>>(m, std::vector<Int>(m, Int(0))));
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            // k(a,b,c) = #{(x,y) in C_a x C_b : xy = fixed representative of C_c}
            for (const auto& x : members[a]) {
                const Permutation xinv = x.inverse();
                for (std::size_t c = 0; c < m; ++c) {
                    // xy = rep  <=>  y = x^{-1} rep
                    const Permutation y = xinv * reps[c];
                    if (y.modified_cycle_type() == cs.labels[b]) ++cs.k[a][b][c];
                }
            }
        }
    }
    return cs;
}

}  // namespace jmcentre
