#pragma once

#include <compare>
#include <string>
#include <vector>

namespace jmcentre {

/// Weakly decreasing tuple of positive integers.  Doubles as a conjugacy
/// class label (modified cycle type) and as a monomial index.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition from_string(const std::string& s);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int size() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int k) const { return parts_[static_cast<std::size_t>(k)]; }

    /// Class labels of S_n satisfy weight + number of parts <= n.
    bool is_class_label(int n) const { return weight_ + size() <= n; }

    /// "2,1"; the empty partition renders as "[]".
    std::string to_string() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    /// Canonical enumeration order: weight ascending, then lexicographically
    /// descending on parts, so (2) precedes (1,1).
    bool operator<(const Partition& o) const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Class-label order: weight ascending, then lexicographically ascending,
/// so (1,1) precedes (2).  Used for transition-matrix rows.
struct ClassLabelLess {
    bool operator()(const Partition& a, const Partition& b) const;
};

}  // namespace jmcentre
