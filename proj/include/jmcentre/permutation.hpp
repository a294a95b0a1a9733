#pragma once

#include <string>
#include <vector>

#include "jmcentre/partition.hpp"

namespace jmcentre {

/// Element of S_n in one-line notation.  Values are 1-based; the degree n is
/// carried on every element and mixed-degree operations throw.
class Permutation {
public:
    /// Identity of S_n.
    explicit Permutation(int n);
    static Permutation from_one_line(std::vector<int> images);
    static Permutation simple(int n, int i);            // s_i = (i, i+1)
    static Permutation transposition(int n, int a, int b);
    /// Evaluate a generator word left to right: s_{w[0]} s_{w[1]} ...
    static Permutation from_word(int n, const std::vector<int>& word);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;

    /// Composition (p*q)(i) = p(q(i)); the same convention is used everywhere.
    Permutation operator*(const Permutation& q) const;
    Permutation inverse() const;

    /// Coxeter length = inversion count of the one-line word.
    int length() const;

    /// Canonical reduced word: repeatedly move the largest out-of-place value
    /// right with adjacent swaps, then reverse the swap record.
    std::vector<int> reduced_word() const;

    /// Partition of (cycle lengths - 1), zero parts omitted.
    Partition modified_cycle_type() const;

    /// "(2,1,3,4)"
    std::string one_line_string() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
    std::vector<int> images_;
};

}  // namespace jmcentre
