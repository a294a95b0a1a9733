#pragma once

#include <algorithm>
#include <vector>

#include "jmcentre/partition.hpp"

namespace jmcentre::testing {

inline Partition pt(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

// Tables 1-3: coefficients of the class sums in m_i (i = 0..9), m_{i,i} and
// m_{i,i,i} (i = 1..9) in ZS_4, rows ordered (1, s1, s12, s13, s123).
inline constexpr long kTableSingle[5][10] = {
    {1, 0, 6, 0, 22, 0, 116, 0, 762, 0},
    {0, 1, 0, 5, 0, 31, 0, 225, 0, 1811},
    {0, 0, 1, 0, 8, 0, 66, 0, 568, 0},
    {0, 0, 0, 0, 4, 0, 50, 0, 504, 0},
    {0, 0, 0, 1, 0, 15, 0, 161, 0, 1555},
};
inline constexpr long kTableDouble[5][9] = {
    {0, 11, 20, 141, 670, 4051, 23520, 140921, 841490},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 4, 21, 116, 671, 3954, 23521, 140536, 841491},
    {1, 2, 21, 108, 671, 3922, 23521, 140408, 841491},
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
};
inline constexpr long kTableTriple[5][9] = {
    {0, 6, 0, 120, 0, 3936, 0, 140160, 0},
    {0, 0, 16, 0, 640, 0, 23296, 0, 839680},
    {0, 3, 0, 108, 0, 3888, 0, 139968, 0},
    {0, 2, 0, 104, 0, 3872, 0, 139904, 0},
    {1, 0, 20, 0, 656, 0, 23360, 0, 839936},
};

}  // namespace jmcentre::testing
