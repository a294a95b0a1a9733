#include "jmcentre/dioph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jmcentre {

long AffineForm::eval(const std::vector<long>& values) const {
    long e = constant;
    for (std::size_t k = 0; k < coeffs.size(); ++k) e += coeffs[k] * values[k];
    return e;
}

Int ExpDioEquation::evaluate(const std::vector<long>& values) const {
    Int total = 0;
    for (const auto& t : terms) {
        Int prod = t.coeff;
        for (const auto& f : t.factors) {
            const long e = f.exponent.eval(values);
            if (e < 0) throw std::invalid_argument("evaluate: negative exponent");
            prod *= pow_int(f.base, static_cast<unsigned long>(e));
        }
        total += prod;
    }
    return total;
}

ResidueProfile residue_profile(long base, long modulus, long start_exponent) {
    if (modulus < 2) throw std::invalid_argument("residue_profile: modulus must be >= 2");
    if (start_exponent < 0) throw std::invalid_argument("residue_profile: start must be >= 0");
    ResidueProfile rp;
    long b = ((base % modulus) + modulus) % modulus;
    long x = 1;
    for (long e = 0; e < start_exponent; ++e) x = (x * b) % modulus;
    std::map<long, long> seen;
    std::vector<long> vals;
    long step = 0;
    while (!seen.count(x)) {
        seen[x] = step++;
        vals.push_back(x);
        x = (x * b) % modulus;
    }
    rp.preperiod = seen[x];
    rp.period = step - rp.preperiod;
    rp.residues = std::move(vals);
    return rp;
}

namespace {

long modpow(long base, long exp, long m) {
    long b = ((base % m) + m) % m;
    long r = 1 % m;
    while (exp > 0) {
        if (exp & 1) r = (r * b) % m;
        b = (b * b) % m;
        exp >>= 1;
    }
    return r;
}

}  // namespace

NoSolutionCertificate verify_no_solution(const ExpDioEquation& eq, long modulus, long cap) {
    if (modulus < 2) throw std::invalid_argument("verify_no_solution: modulus must be >= 2");
    NoSolutionCertificate cert;
    cert.equation_id = eq.id;
    cert.modulus = modulus;
    cert.rhs_residue = static_cast<long>(mpz_class(eq.rhs % modulus).get_si());
    cert.rhs_residue = ((cert.rhs_residue % modulus) + modulus) % modulus;

    const std::size_t nv = eq.vars.size();
    // exponent lower bound over the whole domain (all affine coefficients
    // are nonnegative by construction)
    auto exp_lower = [&](const AffineForm& a) {
        long e = a.constant;
        for (std::size_t v = 0; v < nv; ++v) {
            if (a.coeffs[v] < 0) throw std::invalid_argument("verify_no_solution: negative affine coefficient");
            e += a.coeffs[v] * eq.vars[v].lower;
        }
        return e;
    };

    // per-variable window: enough steps to clear every base's preperiod,
    // plus the lcm of the periods of every base tied to the variable
    std::vector<long> window(nv, 1);
    for (std::size_t v = 0; v < nv; ++v) {
        long max_k0 = 0, lcm_period = 1;
        bool appears = false;
        for (const auto& t : eq.terms)
            for (const auto& f : t.factors) {
                const long a = f.exponent.coeffs[v];
                if (a == 0) continue;
                appears = true;
                const auto rp = residue_profile(f.base, modulus, 0);
                lcm_period = std::lcm(lcm_period, rp.period);
                const long need = rp.preperiod - exp_lower(f.exponent);
                if (need > 0) {
                    const long per_step = a * eq.vars[v].step;
                    max_k0 = std::max(max_k0, (need + per_step - 1) / per_step);
                }
            }
        window[v] = appears ? max_k0 + lcm_period : 1;
        cert.windows.push_back({eq.vars[v].name, eq.vars[v].lower, eq.vars[v].step, window[v]});
    }

    long total = 1;
    for (long w : window) {
        if (w > cap / std::max(total, 1L)) throw std::runtime_error("verify_no_solution: window overflow");
        total *= w;
    }
    cert.assignments = total;

    std::set<long> attained;
    std::vector<long> k(nv, 0), values(nv);
    while (true) {
        for (std::size_t v = 0; v < nv; ++v)
            values[v] = eq.vars[v].lower + k[v] * eq.vars[v].step;
        long lhs = 0;
        for (const auto& t : eq.terms) {
            long term = static_cast<long>(mpz_fdiv_ui(t.coeff.get_mpz_t(), static_cast<unsigned long>(modulus)));
            for (const auto& f : t.factors)
                term = (term * modpow(f.base, f.exponent.eval(values), modulus)) % modulus;
            lhs = (lhs + term) % modulus;
        }
        attained.insert(lhs);
        if (lhs == cert.rhs_residue && !cert.collision) {
            std::map<std::string, long> hit;
            for (std::size_t v = 0; v < nv; ++v) hit[eq.vars[v].name] = values[v];
            cert.collision = std::move(hit);
        }
        std::size_t v = 0;
        while (v < nv && ++k[v] == window[v]) k[v++] = 0;
        if (v == nv) break;
        if (nv == 0) break;
    }
    cert.attained.assign(attained.begin(), attained.end());
    cert.impossible = !attained.count(cert.rhs_residue);
    return cert;
}

std::vector<std::map<std::string, long>> search_solutions(const ExpDioEquation& eq, long bound) {
    if (bound < 1) throw std::invalid_argument("search_solutions: bound must be >= 1");
    std::vector<std::map<std::string, long>> sols;
    const std::size_t nv = eq.vars.size();
    std::vector<std::vector<long>> ranges(nv);
    for (std::size_t v = 0; v < nv; ++v)
        for (long x = eq.vars[v].lower; x <= bound; x += eq.vars[v].step) ranges[v].push_back(x);
    for (const auto& r : ranges)
        if (r.empty()) return sols;

    std::vector<std::size_t> idx(nv, 0);
    std::vector<long> values(nv);
    while (true) {
        for (std::size_t v = 0; v < nv; ++v) values[v] = ranges[v][idx[v]];
        if (eq.evaluate(values) == eq.rhs) {
            std::map<std::string, long> s;
            for (std::size_t v = 0; v < nv; ++v) s[eq.vars[v].name] = values[v];
            sols.push_back(std::move(s));
        }
        std::size_t v = 0;
        while (v < nv && ++idx[v] == ranges[v].size()) idx[v++] = 0;
        if (v == nv) break;
        if (nv == 0) break;
    }
    return sols;
}

nlohmann::json ExpDioEquation::to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : vars) vs.push_back({{"name", v.name}, {"lower", v.lower}, {"step", v.step}});
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : terms) {
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : t.factors)
            fs.push_back({{"base", f.base},
                          {"exponent", {{"coeffs", f.exponent.coeffs}, {"constant", f.exponent.constant}}}});
        ts.push_back({{"coeff", t.coeff.get_str()}, {"factors", fs}});
    }
    nlohmann::json ks = nlohmann::json::array();
    for (const auto& s : known_solutions) ks.push_back(s);
    return {{"id", id},          {"description", description},
            {"vars", vs},        {"terms", ts},
            {"rhs", rhs.get_str()}, {"witness_moduli", witness_moduli},
            {"expect_impossible", expect_impossible}, {"known_solutions", ks},
            {"note", note}};
}

ExpDioEquation ExpDioEquation::from_json(const nlohmann::json& j) {
    ExpDioEquation eq;
    eq.id = j.value("id", "custom");
    eq.description = j.value("description", "");
    for (const auto& v : j.at("vars"))
        eq.vars.push_back({v.at("name").get<std::string>(), v.at("lower").get<long>(), v.value("step", 1)});
    for (const auto& t : j.at("terms")) {
        DioTerm term;
        term.coeff = Int(t.at("coeff").get<std::string>());
        for (const auto& f : t.value("factors", nlohmann::json::array())) {
            DioFactor fac;
            fac.base = f.at("base").get<long>();
            fac.exponent.coeffs = f.at("exponent").at("coeffs").get<std::vector<long>>();
            fac.exponent.constant = f.at("exponent").at("constant").get<long>();
            if (fac.exponent.coeffs.size() != eq.vars.size())
                throw std::invalid_argument("equation json: affine coefficient count != variable count");
            term.factors.push_back(std::move(fac));
        }
        eq.terms.push_back(std::move(term));
    }
    eq.rhs = Int(j.at("rhs").get<std::string>());
    eq.witness_moduli = j.value("witness_moduli", std::vector<long>{});
    eq.expect_impossible = j.value("expect_impossible", true);
    for (const auto& s : j.value("known_solutions", nlohmann::json::array()))
        eq.known_solutions.push_back(s.get<std::map<std::string, long>>());
    eq.note = j.value("note", "");
    return eq;
}

nlohmann::json NoSolutionCertificate::to_json() const {
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : windows)
        ws.push_back({{"var", w.var}, {"start", w.start}, {"step", w.step}, {"count", w.count}});
    nlohmann::json out = {{"equation", equation_id}, {"modulus", modulus},
                          {"impossible", impossible}, {"rhs_residue", rhs_residue},
                          {"attained", attained},     {"windows", ws},
                          {"assignments", assignments}};
    if (collision) out["collision"] = *collision;
    return out;
}

namespace {

ExpDioEquation make_eq(std::string id, std::string description, std::vector<VarDomain> vars,
                       std::vector<DioTerm> terms, long rhs, std::vector<long> moduli,
                       bool expect_impossible, std::vector<std::map<std::string, long>> known,
                       std::string note) {
    ExpDioEquation eq;
    eq.id = std::move(id);
    eq.description = std::move(description);
    eq.vars = std::move(vars);
    eq.terms = std::move(terms);
    eq.rhs = rhs;
    eq.witness_moduli = std::move(moduli);
    eq.expect_impossible = expect_impossible;
    eq.known_solutions = std::move(known);
    eq.note = std::move(note);
    // pad missing affine coefficients (constant factors)
    for (auto& t : eq.terms)
        for (auto& f : t.factors) f.exponent.coeffs.resize(eq.vars.size(), 0);
    return eq;
}

std::vector<ExpDioEquation> build_catalogue() {
    std::vector<ExpDioEquation> eqs;

    eqs.push_back(make_eq("dio1-neg",
        "{m_{2i+1,2i+1}, m_{2j,2j}, m_2} even-block determinant, 2j rewritten as w+3",
        {{"i", 1, 1}, {"w", 0, 1}},
        {
          {1, {{2, {{0, 1}, 3}}, {3, {{1, 0}, 0}}}},
          {1, {{2, {{0, 1}, 3}}, {6, {{1, 0}, 0}}}},
          {6, {{2, {{0, 1}, 3}}}},
          {-1, {{2, {{1, 0}, 0}}}},
          {1, {{2, {{1, 1}, 3}}}},
          {-1, {{3, {{0, 1}, 3}}}},
          {-1, {{3, {{1, 0}, 0}}}},
          {-1, {{6, {{0, 1}, 3}}}},
          {-1, {{6, {{1, 0}, 0}}}},
        },
        -12, {28}, true, {},
        "w+3 stands in for 2j (j>=2); j=1 is handled by direct determinant evaluation"));
    eqs.push_back(make_eq("dio1-pos",
        "{m_{2i+1,2i+1}, m_{2j,2j}, m_2} even-block determinant, 2j rewritten as w+3",
        {{"i", 1, 1}, {"w", 0, 1}},
        {
          {1, {{2, {{0, 1}, 3}}, {3, {{1, 0}, 0}}}},
          {1, {{2, {{0, 1}, 3}}, {6, {{1, 0}, 0}}}},
          {6, {{2, {{0, 1}, 3}}}},
          {-1, {{2, {{1, 0}, 0}}}},
          {1, {{2, {{1, 1}, 3}}}},
          {-1, {{3, {{0, 1}, 3}}}},
          {-1, {{3, {{1, 0}, 0}}}},
          {-1, {{6, {{0, 1}, 3}}}},
          {-1, {{6, {{1, 0}, 0}}}},
        },
        12, {1971}, true, {},
        "w+3 stands in for 2j (j>=2); j=1 is handled by direct determinant evaluation"));

    auto dio2_terms = [] {
        return std::vector<DioTerm>{
          {-1, {{-1, {{0, 0, 1}, 0}}, {2, {{0, 0, 1}, 0}}, {3, {{0, 2, 0}, 0}}}},
          {-1, {{-1, {{0, 0, 1}, 0}}, {2, {{0, 0, 1}, 0}}, {3, {{2, 0, 0}, 1}}}},
          {-1, {{-1, {{0, 0, 1}, 0}}, {2, {{0, 0, 1}, 0}}, {6, {{0, 2, 0}, 0}}}},
          {-1, {{-1, {{0, 0, 1}, 0}}, {2, {{0, 0, 1}, 0}}, {6, {{2, 0, 0}, 1}}}},
          {-4, {{-1, {{0, 0, 1}, 0}}, {2, {{0, 2, 0}, 0}}}},
          {-1, {{-1, {{0, 0, 1}, 0}}, {2, {{0, 2, 1}, 0}}}},
          {-4, {{-1, {{0, 0, 1}, 0}}, {2, {{2, 0, 0}, 1}}}},
          {-1, {{-1, {{0, 0, 1}, 0}}, {2, {{2, 0, 1}, 1}}}},
          {-4, {{-1, {{0, 0, 1}, 0}}, {3, {{0, 2, 0}, 0}}}},
          {-4, {{-1, {{0, 0, 1}, 0}}, {3, {{2, 0, 0}, 1}}}},
          {-4, {{-1, {{0, 0, 1}, 0}}, {6, {{0, 2, 0}, 0}}}},
          {-4, {{-1, {{0, 0, 1}, 0}}, {6, {{2, 0, 0}, 1}}}},
          {-1, {{2, {{0, 0, 1}, 0}}, {3, {{0, 2, 0}, 0}}}},
          {-1, {{2, {{0, 0, 1}, 0}}, {3, {{2, 0, 0}, 1}}}},
          {-1, {{2, {{0, 0, 1}, 0}}, {6, {{0, 2, 0}, 0}}}},
          {-1, {{2, {{0, 0, 1}, 0}}, {6, {{2, 0, 0}, 1}}}},
          {1, {{2, {{0, 2, 0}, 1}}, {6, {{0, 0, 1}, 0}}}},
          {1, {{2, {{0, 2, 0}, 3}}, {3, {{0, 0, 1}, 0}}}},
          {17, {{2, {{0, 2, 1}, 0}}}},
          {-1, {{2, {{2, 0, 1}, 1}}}},
        };
    };
    eqs.push_back(make_eq("dio2-neg", "{m_{2i+1,2i+1}, m_{2j,2j}, m_{k,k,2}} even-block determinant",
        {{"i", 0, 1}, {"j", 1, 1}, {"k", 1, 1}}, dio2_terms(), -48, {45}, true, {},
        "family exponents kept as 2i+1 and 2j inside the terms"));
    eqs.push_back(make_eq("dio2-pos", "{m_{2i+1,2i+1}, m_{2j,2j}, m_{k,k,2}} even-block determinant",
        {{"i", 0, 1}, {"j", 1, 1}, {"k", 1, 1}}, dio2_terms(), 48, {1197}, true, {},
        "family exponents kept as 2i+1 and 2j inside the terms"));

    auto mi_m111_terms = [] {
        return std::vector<DioTerm>{
          {4, {{2, {{1}, 0}}}},
          {1, {{3, {{1}, 0}}}},
          {1, {}},
        };
    };
    eqs.push_back(make_eq("mi-m111-neg", "{m_i, m_{1,1,1}} odd-block determinant, i odd >= 3",
        {{"i", 3, 2}}, mi_m111_terms(), -12, {}, true, {},
        "left side exceeds 12 for every admissible i; no witness modulus needed"));
    eqs.push_back(make_eq("mi-m111-pos", "{m_i, m_{1,1,1}} odd-block determinant, i odd >= 3",
        {{"i", 3, 2}}, mi_m111_terms(), 12, {}, true, {},
        "left side exceeds 12 for every admissible i; no witness modulus needed"));

    auto miij_m111_terms = [] {
        return std::vector<DioTerm>{
          {-3, {{-1, {{1, 0}, 0}}, {2, {{1, 0}, 0}}}},
          {3, {{-1, {{1, 0}, 0}}, {2, {{1, 1}, 0}}}},
          {1, {{2, {{0, 1}, 0}}, {6, {{1, 0}, 0}}}},
          {4, {{2, {{1, 0}, 0}}}},
          {4, {{2, {{1, 1}, 0}}}},
          {1, {{3, {{0, 1}, 0}}, {6, {{1, 0}, 0}}}},
          {1, {{3, {{1, 0}, 0}}}},
          {1, {{3, {{1, 1}, 0}}}},
        };
    };
    eqs.push_back(make_eq("miij-m111-neg", "{m_{i+j,i}, m_{1,1,1}} odd-block determinant, j odd",
        {{"i", 1, 1}, {"j", 1, 2}}, miij_m111_terms(), -12, {}, true, {},
        "left side exceeds 12 on the whole domain; no witness modulus needed"));
    eqs.push_back(make_eq("miij-m111-pos", "{m_{i+j,i}, m_{1,1,1}} odd-block determinant, j odd",
        {{"i", 1, 1}, {"j", 1, 2}}, miij_m111_terms(), 12, {}, true, {},
        "left side exceeds 12 on the whole domain; no witness modulus needed"));

    auto m1_mii1_terms = [] {
        return std::vector<DioTerm>{
          {-3, {{-1, {{1}, 0}}, {2, {{1}, 0}}}},
          {-6, {{-1, {{1}, 0}}}},
          {6, {{2, {{1}, 0}}}},
          {2, {{3, {{1}, 0}}}},
          {1, {{6, {{1}, 0}}}},
        };
    };
    eqs.push_back(make_eq("m1-mii1-neg", "{m_1, m_{i,i,1}} odd-block determinant",
        {{"i", 2, 1}}, m1_mii1_terms(), -12, {}, true, {},
        "left side exceeds 12 on the whole domain; no witness modulus needed"));
    eqs.push_back(make_eq("m1-mii1-pos", "{m_1, m_{i,i,1}} odd-block determinant",
        {{"i", 2, 1}}, m1_mii1_terms(), 12, {}, true, {},
        "left side exceeds 12 on the whole domain; no witness modulus needed"));

    auto m1_mi_terms = [] {
        return std::vector<DioTerm>{
          {-2, {{2, {{1}, 0}}}},
          {1, {{3, {{1}, 0}}}},
          {1, {}},
        };
    };
    eqs.push_back(make_eq("m1-mi-neg", "{m_1, m_i} odd-block determinant, i odd >= 3",
        {{"i", 3, 2}}, m1_mi_terms(), -12, {}, true, {},
        "i = 3 solves the +12 equation and yields the basis {m_1, m_3}"));
    eqs.push_back(make_eq("m1-mi-pos", "{m_1, m_i} odd-block determinant, i odd >= 3",
        {{"i", 3, 2}}, m1_mi_terms(), 12, {}, false, {{{"i", 3}}},
        "i = 3 solves the +12 equation and yields the basis {m_1, m_3}"));

    auto m1_miij_terms = [] {
        return std::vector<DioTerm>{
          {3, {{-1, {{1, 0}, 0}}, {2, {{1, 0}, 0}}}},
          {-3, {{-1, {{1, 0}, 0}}, {2, {{1, 1}, 0}}}},
          {1, {{2, {{0, 1}, 0}}, {6, {{1, 0}, 0}}}},
          {-2, {{2, {{1, 0}, 0}}}},
          {-2, {{2, {{1, 1}, 0}}}},
          {1, {{3, {{0, 1}, 0}}, {6, {{1, 0}, 0}}}},
          {1, {{3, {{1, 0}, 0}}}},
          {1, {{3, {{1, 1}, 0}}}},
        };
    };
    eqs.push_back(make_eq("m1-miij-neg", "{m_1, m_{i+j,i}} odd-block determinant, j odd",
        {{"i", 1, 1}, {"j", 1, 2}}, m1_miij_terms(), -12, {5}, true, {},
        "mod 5 the left side lands in {0,1,4} while +-12 land in {2,3}"));
    eqs.push_back(make_eq("m1-miij-pos", "{m_1, m_{i+j,i}} odd-block determinant, j odd",
        {{"i", 1, 1}, {"j", 1, 2}}, m1_miij_terms(), 12, {5}, true, {},
        "mod 5 the left side lands in {0,1,4} while +-12 land in {2,3}"));

    auto mi_mjj1_terms = [] {
        return std::vector<DioTerm>{
          {-2, {{-1, {{0, 1}, 0}}, {2, {{0, 1}, 0}}}},
          {-2, {{-1, {{0, 1}, 0}}, {2, {{0, 1}, 0}}, {3, {{1, 0}, 0}}}},
          {-4, {{-1, {{0, 1}, 0}}, {2, {{1, 0}, 0}}}},
          {-2, {{-1, {{0, 1}, 0}}, {2, {{1, 1}, 0}}}},
          {-4, {{-1, {{0, 1}, 0}}, {3, {{1, 0}, 0}}}},
          {-4, {{-1, {{0, 1}, 0}}}},
          {2, {{2, {{0, 1}, 0}}, {3, {{1, 0}, 0}}}},
          {2, {{2, {{0, 1}, 0}}}},
          {4, {{2, {{1, 0}, 0}}, {3, {{0, 1}, 0}}}},
          {2, {{2, {{1, 0}, 0}}, {6, {{0, 1}, 0}}}},
          {8, {{2, {{1, 1}, 0}}}},
        };
    };
    eqs.push_back(make_eq("mi-mjj1-neg", "{m_i, m_{j,j,1}} odd-block determinant times 48, i odd >= 3",
        {{"i", 3, 2}, {"j", 2, 1}}, mi_mjj1_terms(), -48, {819}, true, {},
        "reconstructed: 144*det divided by the common factor 3"));
    eqs.push_back(make_eq("mi-mjj1-pos", "{m_i, m_{j,j,1}} odd-block determinant times 48, i odd >= 3",
        {{"i", 3, 2}, {"j", 2, 1}}, mi_mjj1_terms(), 48, {5}, true, {},
        "reconstructed: 144*det divided by the common factor 3"));

    auto mjjk_mii1_terms = [] {
        return std::vector<DioTerm>{
          {-4, {{-1, {{0, 1, 0}, 0}}, {2, {{0, 1, 0}, 0}}, {3, {{1, 0, 0}, 0}}}},
          {-2, {{-1, {{0, 1, 0}, 0}}, {2, {{0, 1, 0}, 0}}, {6, {{1, 0, 0}, 0}}}},
          {4, {{-1, {{0, 1, 0}, 0}}, {2, {{0, 1, 1}, 0}}, {3, {{1, 0, 0}, 0}}}},
          {2, {{-1, {{0, 1, 0}, 0}}, {2, {{0, 1, 1}, 0}}, {6, {{1, 0, 0}, 0}}}},
          {-6, {{-1, {{0, 1, 0}, 0}}, {2, {{1, 1, 0}, 0}}}},
          {6, {{-1, {{0, 1, 0}, 0}}, {2, {{1, 1, 1}, 0}}}},
          {-4, {{-1, {{1, 0, 0}, 0}}, {2, {{0, 0, 1}, 0}}, {6, {{0, 1, 0}, 0}}}},
          {-4, {{-1, {{1, 0, 0}, 0}}, {2, {{0, 1, 0}, 0}}}},
          {-4, {{-1, {{1, 0, 0}, 0}}, {2, {{0, 1, 1}, 0}}}},
          {-2, {{-1, {{1, 0, 0}, 0}}, {2, {{1, 0, 0}, 0}}, {3, {{0, 0, 1}, 0}}, {6, {{0, 1, 0}, 0}}}},
          {-2, {{-1, {{1, 0, 0}, 0}}, {2, {{1, 0, 0}, 0}}, {3, {{0, 1, 0}, 0}}}},
          {-2, {{-1, {{1, 0, 0}, 0}}, {2, {{1, 0, 0}, 0}}, {3, {{0, 1, 1}, 0}}}},
          {-2, {{-1, {{1, 0, 0}, 0}}, {2, {{1, 0, 1}, 0}}, {6, {{0, 1, 0}, 0}}}},
          {-2, {{-1, {{1, 0, 0}, 0}}, {2, {{1, 1, 0}, 0}}}},
          {-2, {{-1, {{1, 0, 0}, 0}}, {2, {{1, 1, 1}, 0}}}},
          {-4, {{-1, {{1, 0, 0}, 0}}, {3, {{0, 0, 1}, 0}}, {6, {{0, 1, 0}, 0}}}},
          {-4, {{-1, {{1, 0, 0}, 0}}, {3, {{0, 1, 0}, 0}}}},
          {-4, {{-1, {{1, 0, 0}, 0}}, {3, {{0, 1, 1}, 0}}}},
          {4, {{2, {{0, 1, 0}, 0}}, {3, {{1, 0, 0}, 0}}}},
          {2, {{2, {{0, 1, 0}, 0}}, {6, {{1, 0, 0}, 0}}}},
          {4, {{2, {{0, 1, 1}, 0}}, {3, {{1, 0, 0}, 0}}}},
          {2, {{2, {{0, 1, 1}, 0}}, {6, {{1, 0, 0}, 0}}}},
          {2, {{2, {{1, 0, 0}, 0}}, {3, {{0, 0, 1}, 0}}, {6, {{0, 1, 0}, 0}}}},
          {2, {{2, {{1, 0, 0}, 0}}, {3, {{0, 1, 0}, 0}}}},
          {2, {{2, {{1, 0, 0}, 0}}, {3, {{0, 1, 1}, 0}}}},
          {2, {{2, {{1, 0, 1}, 0}}, {6, {{0, 1, 0}, 0}}}},
          {8, {{2, {{1, 1, 0}, 0}}}},
          {8, {{2, {{1, 1, 1}, 0}}}},
        };
    };
    eqs.push_back(make_eq("mjjk-mii1-neg", "{m_{j+k,j}, m_{i,i,1}} odd-block determinant times 48, k odd",
        {{"i", 2, 1}, {"j", 1, 1}, {"k", 1, 2}}, mjjk_mii1_terms(), -48, {45}, true, {},
        "reconstructed: 144*det divided by the common factor 3"));
    eqs.push_back(make_eq("mjjk-mii1-pos", "{m_{j+k,j}, m_{i,i,1}} odd-block determinant times 48, k odd",
        {{"i", 2, 1}, {"j", 1, 1}, {"k", 1, 2}}, mjjk_mii1_terms(), 48, {85}, true, {},
        "reconstructed: 144*det divided by the common factor 3"));

    auto mii1_mjj1_terms = [] {
        return std::vector<DioTerm>{
          {-12, {{-1, {{0, 1}, 0}}, {2, {{0, 1}, 0}}, {3, {{1, 0}, 0}}}},
          {-6, {{-1, {{0, 1}, 0}}, {2, {{0, 1}, 0}}, {6, {{1, 0}, 0}}}},
          {-36, {{-1, {{0, 1}, 0}}, {2, {{1, 0}, 0}}}},
          {-18, {{-1, {{0, 1}, 0}}, {2, {{1, 1}, 0}}}},
          {-24, {{-1, {{0, 1}, 0}}, {3, {{1, 0}, 0}}}},
          {-12, {{-1, {{0, 1}, 0}}, {6, {{1, 0}, 0}}}},
          {36, {{-1, {{1, 0}, 0}}, {2, {{0, 1}, 0}}}},
          {12, {{-1, {{1, 0}, 0}}, {2, {{1, 0}, 0}}, {3, {{0, 1}, 0}}}},
          {6, {{-1, {{1, 0}, 0}}, {2, {{1, 0}, 0}}, {6, {{0, 1}, 0}}}},
          {18, {{-1, {{1, 0}, 0}}, {2, {{1, 1}, 0}}}},
          {24, {{-1, {{1, 0}, 0}}, {3, {{0, 1}, 0}}}},
          {12, {{-1, {{1, 0}, 0}}, {6, {{0, 1}, 0}}}},
          {12, {{2, {{0, 1}, 0}}, {3, {{1, 0}, 0}}}},
          {6, {{2, {{0, 1}, 0}}, {6, {{1, 0}, 0}}}},
          {-12, {{2, {{1, 0}, 0}}, {3, {{0, 1}, 0}}}},
          {-6, {{2, {{1, 0}, 0}}, {6, {{0, 1}, 0}}}},
        };
    };
    eqs.push_back(make_eq("mii1-mjj1-neg", "{m_{i,i,1}, m_{j,j,1}} odd-block determinant times 144",
        {{"i", 3, 1}, {"j", 3, 1}}, mii1_mjj1_terms(), -144, {91}, true, {},
        "reconstructed as the raw 2x2 determinant of the 12-scaled columns"));
    eqs.push_back(make_eq("mii1-mjj1-pos", "{m_{i,i,1}, m_{j,j,1}} odd-block determinant times 144",
        {{"i", 3, 1}, {"j", 3, 1}}, mii1_mjj1_terms(), 144, {91}, true, {},
        "reconstructed as the raw 2x2 determinant of the 12-scaled columns"));

    return eqs;
}

}  // namespace

const std::vector<ExpDioEquation>& builtin_equations() {
    static const std::vector<ExpDioEquation> eqs = build_catalogue();
    return eqs;
}

const ExpDioEquation& builtin_equation(const std::string& id) {
    for (const auto& eq : builtin_equations())
        if (eq.id == id) return eq;
    throw std::invalid_argument("unknown equation id: " + id);
}

}  // namespace jmcentre
