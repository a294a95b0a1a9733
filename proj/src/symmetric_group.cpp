#include "jmcentre/symmetric_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jmcentre {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<Partition> class_labels(int n) {
    std::set<Partition, ClassLabelLess> labels;
    for (const auto& p : all_permutations(n)) labels.insert(p.modified_cycle_type());
    return {labels.begin(), labels.end()};
}

std::vector<Permutation> conjugacy_class(int n, const Partition& mu) {
    if (!mu.is_class_label(n))
        throw std::invalid_argument("conjugacy_class: " + mu.to_string() + " is not a class label for S_" +
                                    std::to_string(n));
    std::vector<Permutation> out;
    for (const auto& p : all_permutations(n))
        if (p.modified_cycle_type() == mu) out.push_back(p);
    return out;
}

Permutation minimal_increasing_element(int n, const Partition& mu) {
    if (!mu.is_class_label(n))
        throw std::invalid_argument("minimal_increasing_element: invalid label " + mu.to_string());
    Permutation w(n);
    int a = 1;
    for (int part : mu.parts()) {
        for (int g = a; g < a + part; ++g) w = w * Permutation::simple(n, g);
        a += part + 1;
    }
    return w;
}

}  // namespace jmcentre
