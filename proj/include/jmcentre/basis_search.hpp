#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jmcentre/bigint.hpp"
#include "jmcentre/closed_forms.hpp"
#include "jmcentre/integer_polynomial.hpp"
#include "jmcentre/monomials.hpp"
#include "jmcentre/partition.hpp"

namespace jmcentre {

enum class AlgebraKind { Group, Hecke };
AlgebraKind algebra_from_string(const std::string& s);
std::string algebra_name(AlgebraKind k);

/// Transition matrix from a candidate monomial set to the class basis.
/// Rows are class labels ordered by (weight, lex ascending); columns follow
/// the candidate order.  Entry(lambda, mu) = <w_lambda, m_mu>.
template <class T>
struct LabeledMatrix {
    std::vector<Partition> rows;
    std::vector<Partition> cols;
    std::vector<std::vector<T>> entries;  // entries[r][c]

    std::string to_csv() const;
};

LabeledMatrix<Int> transition_matrix(int n, const std::vector<Partition>& cands,
                                     GroupMonomialEvaluator& eval);
LabeledMatrix<IntegerPolynomial> transition_matrix_hecke(int n, const std::vector<Partition>& cands,
                                                         HeckeMonomialEvaluator& eval);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(std::vector<std::vector<Int>> m);
/// Exact determinant by Laplace expansion with minors memoized over column
/// subsets; intended for the polynomial case, size <= 7 at desk scale.
IntegerPolynomial determinant(const std::vector<std::vector<IntegerPolynomial>>& m);

Int determinant(const LabeledMatrix<Int>& m);
IntegerPolynomial determinant(const LabeledMatrix<IntegerPolynomial>& m);

bool is_monomial_basis(int n, const std::vector<Partition>& cands, GroupMonomialEvaluator& eval);
bool is_monomial_basis_hecke(int n, const std::vector<Partition>& cands, HeckeMonomialEvaluator& eval);

struct SearchOptions {
    long family_bound = 50;  // Hecke family scan bound on odd i in m_{i,i,2}
    int threads = 1;
};

struct SearchResult {
    int n = 0;
    AlgebraKind algebra = AlgebraKind::Group;
    int max_weight = 0;
    long family_bound = 0;
    std::vector<std::vector<Partition>> bases;
    long candidates = 0;
    long viable_candidates = 0;
    long even_candidates = 0;
    long odd_candidates = 0;
    long even_blocks = 0;
    long odd_blocks = 0;
    long sets_tested = 0;
    double elapsed_seconds = 0.0;

    nlohmann::json to_json() const;
};

/// Enumerates all candidate sets of monomials m_mu (|mu| <= max_weight, at
/// most n-1 parts) whose transition matrix is unimodular.  The group search
/// enumerates parity blocks independently; the Hecke search tests the group
/// bases (extended for n = 4 by the infinite-family members up to
/// family_bound) in H_n.
SearchResult enumerate_bases(int n, int max_weight, AlgebraKind algebra,
                             const SearchOptions& opts = {});

/// The S_4 classification reported by the search at weight 12: eight
/// sporadic bases plus the two (i,i,2) families for odd i < family_bound.
std::vector<std::vector<Partition>> s4_classification_bases(long family_bound);

/// Published expected lists for comparison, where available.
std::optional<std::vector<std::vector<Partition>>> expected_bases(int n, AlgebraKind algebra,
                                                                  int max_weight, long family_bound);

struct ParityEntry {
    Partition mu;
    std::vector<Int> coeffs;  // on the five classes, label order
    bool all_even = false;
};

struct ParityReport {
    int max_weight = 0;
    std::vector<ParityEntry> entries;
    nlohmann::json to_json() const;
};

/// Classifies the S_4 monomials by whether every class coefficient is even;
/// all-even monomials cannot take part in a unimodular transition matrix.
ParityReport candidate_parity_filter(int n, int max_weight);

/// Catalogued determinant formulas for the parameterized block families of
/// the S_4 analysis.
struct DetFamily {
    std::string id;
    std::string description;
    std::vector<std::string> params;
    bool odd_block = false;
    int sign_vs_block = 1;  // formula == sign * det(block in listed order)
    std::function<bool(const std::vector<long>&)> in_domain;
    std::function<Int(const std::vector<long>&)> value;
    std::function<std::vector<Partition>(const std::vector<long>&)> monomials;
};

const std::vector<DetFamily>& det_families();
Int family_determinant(const std::string& id, const std::vector<long>& params);

}  // namespace jmcentre
