#include "jmcentre/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace jmcentre {

Permutation::Permutation(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
    images_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images_[static_cast<std::size_t>(i)] = i + 1;
}

Permutation Permutation::from_one_line(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("Permutation: images must be a bijection of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Permutation p(n);
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::simple(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple: generator index out of range");
    return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n || a == b)
        throw std::invalid_argument("transposition: bad points");
    Permutation p(n);
    std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
    return p;
}

Permutation Permutation::from_word(int n, const std::vector<int>& word) {
    Permutation p(n);
    for (int g : word) p = p * simple(n, g);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::operator*(const Permutation& q) const {
    if (degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
    Permutation r(degree());
    for (int i = 1; i <= degree(); ++i)
        r.images_[static_cast<std::size_t>(i - 1)] = (*this)(q(i));
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r(degree());
    for (int i = 1; i <= degree(); ++i)
        r.images_[static_cast<std::size_t>((*this)(i)-1)] = i;
    return r;
}

int Permutation::length() const {
    int inv = 0;
    const int n = degree();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (images_[static_cast<std::size_t>(i)] > images_[static_cast<std::size_t>(j)]) ++inv;
    return inv;
}

std::vector<int> Permutation::reduced_word() const {
    std::vector<int> w = images_;
    const int n = degree();
    std::vector<int> swaps;
    for (int v = n; v >= 1; --v) {
        int pos = static_cast<int>(std::find(w.begin(), w.end(), v) - w.begin()) + 1;
        while (pos < v) {
            std::swap(w[static_cast<std::size_t>(pos - 1)], w[static_cast<std::size_t>(pos)]);
            swaps.push_back(pos);
            ++pos;
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

Partition Permutation::modified_cycle_type() const {
    const int n = degree();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> parts;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = (*this)(j);
            ++len;
        }
        if (len > 1) parts.push_back(len - 1);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::string Permutation::one_line_string() const {
    std::string out = "(";
    for (int i = 1; i <= degree(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string((*this)(i));
    }
    out += ')';
    return out;
}

}  // namespace jmcentre
