#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "jmcentre/bigint.hpp"
#include "jmcentre/monomials.hpp"
#include "jmcentre/partition.hpp"
#include "jmcentre/permutation.hpp"

namespace jmcentre {

/// The five conjugacy classes of S_4, named by their minimal increasing
/// elements 1, s_1, s_12, s_13, s_123.
enum class ClassLabel4 { Identity, S1, S12, S13, S123 };

constexpr std::array<ClassLabel4, 5> kClassLabels4 = {
    ClassLabel4::Identity, ClassLabel4::S1, ClassLabel4::S12, ClassLabel4::S13, ClassLabel4::S123};

const std::string& label_name(ClassLabel4 lbl);      // "1", "s1", ...
const Partition& label_partition(ClassLabel4 lbl);   // modified cycle type
const Permutation& label_element(ClassLabel4 lbl);   // minimal increasing element
int label_parity(ClassLabel4 lbl);                   // |mu| mod 2

/// Closed forms for the class-sum coefficients of monomial symmetric
/// polynomials in the Jucys-Murphy elements of ZS_4.  All evaluation is in
/// exact integers: the rational prefactors must divide exactly, and a
/// remainder throws.
Int coeff_single(ClassLabel4 lbl, long i);                       // m_i
Int coeff_double(ClassLabel4 lbl, long i);                       // m_{i,i}
Int coeff_triple(ClassLabel4 lbl, long i);                       // m_{i,i,i}
Int coeff_iij(ClassLabel4 lbl, long i, long j);                  // m_{i,i,j}, i != j
Int coeff_hook(ClassLabel4 lbl, long i, long j);                 // m_{i+j,i}
Int coeff_three_part(ClassLabel4 lbl, long i, long j, long k);   // m_{k+i+j,k+i,k}

/// Dispatcher over the closed forms by the shape of mu; partitions with four
/// or more parts give an explicit zero.
Int coeff(ClassLabel4 lbl, const Partition& mu);

/// Checks the coefficient recursions for m_i (i >= 7), m_{i,i} (i >= 6) and
/// m_{i,i,i} (i >= 5) against brute-force values, coefficient-wise over all
/// five classes, up to index i_max.
VerifyReport verify_recursions(int i_max);

enum class TableFamily { Single, Double, Triple };

TableFamily table_family_from_string(const std::string& s);
std::string table_family_name(TableFamily f);

/// A coefficient table with one row per class and one column per index,
/// computed both from brute force and from the closed forms.
struct CoeffTable {
    TableFamily family;
    std::vector<std::string> row_names;
    std::vector<std::string> col_names;
    std::vector<std::vector<Int>> brute;
    std::vector<std::vector<Int>> closed;
    bool match = false;

    nlohmann::json to_json() const;
    std::string to_csv() const;   // closed-form values
    std::string to_text() const;  // human-readable table
};

CoeffTable make_table(TableFamily family, int i_max, GroupMonomialEvaluator& eval);

}  // namespace jmcentre
