#include "jmcentre/integer_polynomial.hpp"

namespace jmcentre {

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long x : coeffs) c_.emplace_back(x);
    trim();
}

IntegerPolynomial::IntegerPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntegerPolynomial IntegerPolynomial::constant(Int c) {
    IntegerPolynomial p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntegerPolynomial IntegerPolynomial::xi() { return IntegerPolynomial{0, 1}; }

Int IntegerPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

void IntegerPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
    IntegerPolynomial r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) r.c_[k] += o.c_[k];
    r.trim();
    return r;
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& o) const {
    return *this + (-o);
}

IntegerPolynomial IntegerPolynomial::operator-() const {
    IntegerPolynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
    IntegerPolynomial r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a] == 0) continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
    }
    r.trim();
    return r;
}

IntegerPolynomial IntegerPolynomial::scaled(const Int& c) const {
    if (c == 0) return {};
    IntegerPolynomial r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

IntegerPolynomial IntegerPolynomial::shifted(int k) const {
    if (is_zero()) return {};
    IntegerPolynomial r;
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), Int(0));
    for (std::size_t a = 0; a < c_.size(); ++a) r.c_[a + static_cast<std::size_t>(k)] = c_[a];
    return r;
}

Int IntegerPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntegerPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        std::string term;
        Int a = c_[k];
        if (!out.empty()) {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (k == 0) {
            term = a.get_str();
        } else {
            if (a != 1 && a != -1)
                term = a.get_str() + "*";
            else if (a == -1)
                term = "-";
            term += "xi";
            if (k > 1) term += "^" + std::to_string(k);
        }
        out += term;
    }
    return out;
}

nlohmann::json IntegerPolynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : c_) arr.push_back(c.get_str());
    return arr;
}

}  // namespace jmcentre
