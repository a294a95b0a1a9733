#pragma once

#include <vector>

#include "jmcentre/partition.hpp"
#include "jmcentre/permutation.hpp"

namespace jmcentre {

std::vector<Permutation> all_permutations(int n);

/// Conjugacy class labels of S_n (modified cycle types), ordered by
/// (weight, lexicographic ascending).
std::vector<Partition> class_labels(int n);

/// All elements of the class with modified cycle type mu; throws on an
/// invalid label.
std::vector<Permutation> conjugacy_class(int n, const Partition& mu);

/// Canonical increasing element w_mu: blocks of consecutive generators,
/// largest part first, left-packed with one gap between blocks.
Permutation minimal_increasing_element(int n, const Partition& mu);

}  // namespace jmcentre
