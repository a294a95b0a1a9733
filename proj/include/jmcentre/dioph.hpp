#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jmcentre/bigint.hpp"

namespace jmcentre {

/// Integer affine form c_1*x_1 + ... + c_v*x_v + c over an equation's
/// variable list.
struct AffineForm {
    std::vector<long> coeffs;
    long constant = 0;
    long eval(const std::vector<long>& values) const;
};

/// base ^ affine-exponent; bases may be negative (sign-periodic factors).
struct DioFactor {
    long base = 1;
    AffineForm exponent;
};

struct DioTerm {
    Int coeff;
    std::vector<DioFactor> factors;
};

/// Lower-bounded integer variable, stepping by 1 or by 2 for a parity
/// constraint (e.g. "i >= 3 odd" is lower 3, step 2).
struct VarDomain {
    std::string name;
    long lower = 0;
    int step = 1;
};

/// Sum of exponential terms compared against an integer right-hand side.
struct ExpDioEquation {
    std::string id;
    std::string description;
    std::vector<VarDomain> vars;
    std::vector<DioTerm> terms;
    Int rhs;
    std::vector<long> witness_moduli;
    bool expect_impossible = true;
    std::vector<std::map<std::string, long>> known_solutions;
    std::string note;

    Int evaluate(const std::vector<long>& values) const;
    nlohmann::json to_json() const;
    static ExpDioEquation from_json(const nlohmann::json& j);
};

/// Eventually periodic residue sequence base^e mod modulus for
/// e = start, start+1, ...; preperiod and period found by state repetition.
struct ResidueProfile {
    long preperiod = 0;
    long period = 1;
    std::vector<long> residues;  // first preperiod + period values
};
ResidueProfile residue_profile(long base, long modulus, long start_exponent);

/// Modular impossibility certificate: every admissible assignment of
/// variable residues was enumerated over a preperiod + lcm-period window and
/// the right-hand side residue was never attained.
struct NoSolutionCertificate {
    std::string equation_id;
    long modulus = 0;
    bool impossible = false;
    long rhs_residue = 0;
    std::vector<long> attained;
    struct Window {
        std::string var;
        long start = 0;
        int step = 1;
        long count = 0;
    };
    std::vector<Window> windows;
    long assignments = 0;
    std::optional<std::map<std::string, long>> collision;

    nlohmann::json to_json() const;
};

/// Throws std::runtime_error if the combined enumeration would exceed cap.
NoSolutionCertificate verify_no_solution(const ExpDioEquation& eq, long modulus,
                                         long cap = 10000000);

/// Exhaustive exact search with every variable bounded above by bound.
std::vector<std::map<std::string, long>> search_solutions(const ExpDioEquation& eq, long bound);

/// The catalogued equations of the S_4 basis analysis with the witness
/// moduli and expected verdicts attached.
const std::vector<ExpDioEquation>& builtin_equations();
const ExpDioEquation& builtin_equation(const std::string& id);

}  // namespace jmcentre
