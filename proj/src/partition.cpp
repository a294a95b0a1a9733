#include "jmcentre/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jmcentre {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_string(const std::string& s) {
    if (s.empty() || s == "[]") return Partition{};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "[]";
    std::string out;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(parts_[k]);
    }
    return out;
}

bool Partition::operator<(const Partition& o) const {
    if (weight_ != o.weight_) return weight_ < o.weight_;
    return parts_ > o.parts_;  // lexicographically descending within a weight
}

bool ClassLabelLess::operator()(const Partition& a, const Partition& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.parts() < b.parts();
}

}  // namespace jmcentre
