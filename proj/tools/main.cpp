#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "jmcentre/basis_search.hpp"
#include "jmcentre/closed_forms.hpp"
#include "jmcentre/dioph.hpp"
#include "jmcentre/monomials.hpp"
#include "jmcentre/symmetric_group.hpp"

using namespace jmcentre;
using nlohmann::json;

namespace {

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string command;
    json parameters = json::object();
    std::vector<Verdict> verdicts;
    json artifacts = json::object();
    double elapsed_ms = 0.0;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }

    json to_json() const {
        json vs = json::array();
        for (const auto& v : verdicts) vs.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
        return {{"command", command}, {"parameters", parameters}, {"verdicts", vs},
                {"artifacts", artifacts}, {"elapsed_ms", elapsed_ms}};
    }
};

int finish(const RunReport& rep, bool as_json, const std::string& out_path) {
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << rep.to_json().dump(2) << "\n";
    }
    if (as_json && out_path.empty()) {
        std::cout << rep.to_json().dump(2) << "\n";
    } else if (!as_json) {
        for (const auto& v : rep.verdicts)
            std::cout << (v.pass ? "[pass] " : "[FAIL] ") << v.name
                      << (v.detail.empty() ? "" : " - " + v.detail) << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

std::string set_to_string(const std::vector<Partition>& set) {
    std::string s = "{";
    for (std::size_t k = 0; k < set.size(); ++k) {
        if (k) s += "; ";
        s += set[k].to_string();
    }
    return s + "}";
}

int cmd_tables(const std::string& family, int i_max, bool as_csv, bool as_json,
               const std::string& out_path) {
    RunReport rep;
    rep.command = "tables";
    rep.parameters = {{"family", family}, {"i_max", i_max}};
    const auto t0 = std::chrono::steady_clock::now();

    auto eval = make_group_evaluator(4);
    std::vector<TableFamily> fams;
    if (family == "all")
        fams = {TableFamily::Single, TableFamily::Double, TableFamily::Triple};
    else
        fams = {table_family_from_string(family)};

    for (auto f : fams) {
        auto t = make_table(f, i_max, eval);
        rep.artifacts[table_family_name(f)] = t.to_json();
        rep.verdicts.push_back({"table-" + table_family_name(f) + "-closed-vs-brute", t.match,
                                t.match ? "all entries agree" : "closed forms disagree with brute force"});
        if (!as_json && as_csv)
            std::cout << t.to_csv();
        else if (!as_json)
            std::cout << "coefficients, " << table_family_name(f) << " family:\n" << t.to_text() << "\n";
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish(rep, as_json, out_path);
}

int cmd_verify(const std::string& scope, int i_max, int max_weight, bool as_json,
               const std::string& out_path) {
    RunReport rep;
    rep.command = "verify";
    rep.parameters = {{"scope", scope}, {"i_max", i_max}, {"max_weight", max_weight}};
    const auto t0 = std::chrono::steady_clock::now();

    auto push_report = [&](const std::string& name, const VerifyReport& vr) {
        std::string detail = std::to_string(vr.checks) + " checks";
        if (!vr.ok()) detail += "; first failure: " + vr.failures.front();
        rep.verdicts.push_back({name, vr.ok(), detail});
    };

    const bool all = scope == "all";
    if (all || scope == "relations") push_report("three-variable-relations", verify_three_var_relations(std::max(i_max, 6)));
    if (all || scope == "recursions") push_report("coefficient-recursions", verify_recursions(std::max(i_max, 9)));
    if (all || scope == "closed-forms") {
        auto eval = make_group_evaluator(4);
        VerifyReport vr;
        for (const auto& mu : partitions(max_weight, 3)) {
            const auto& m = eval.evaluate(mu);
            for (ClassLabel4 lbl : kClassLabels4) {
                ++vr.checks;
                if (m.inner_product(label_element(lbl)) != coeff(lbl, mu))
                    vr.failures.push_back("coeff mismatch at mu=" + mu.to_string() + ", <" + label_name(lbl) + ">");
            }
        }
        push_report("closed-forms-vs-brute-force", vr);
    }
    if (all || scope == "parity") {
        auto eval = make_group_evaluator(4);
        VerifyReport vr;
        for (const auto& mu : partitions(max_weight, 3)) {
            const auto& m = eval.evaluate(mu);
            for (ClassLabel4 lbl : kClassLabels4) {
                if ((label_partition(lbl).weight() - mu.weight()) % 2 == 0) continue;
                ++vr.checks;
                if (m.inner_product(label_element(lbl)) != 0)
                    vr.failures.push_back("nonzero cross-parity inner product at mu=" + mu.to_string());
            }
        }
        push_report("parity-vanishing", vr);
    }
    if (rep.verdicts.empty()) {
        std::cerr << "unknown scope: " << scope << "\n";
        return 2;
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish(rep, as_json, out_path);
}

int cmd_search(int n, const std::string& algebra, int max_weight, long family_bound,
               const std::string& dump_dir, bool as_json, const std::string& out_path) {
    RunReport rep;
    rep.command = "search";
    const auto kind = algebra_from_string(algebra);
    if (max_weight == 0) max_weight = (n == 5) ? 10 : (n == 4 ? 12 : 4);
    rep.parameters = {{"n", n}, {"algebra", algebra}, {"max_weight", max_weight}, {"family_bound", family_bound}};
    const auto t0 = std::chrono::steady_clock::now();

    SearchOptions opts;
    opts.family_bound = family_bound;
    auto res = enumerate_bases(n, max_weight, kind, opts);
    rep.artifacts["search"] = res.to_json();
    if (!dump_dir.empty()) {
        // transition-matrix CSV audit dump, one file per basis
        auto geval = make_group_evaluator(n);
        auto heval = make_hecke_evaluator(n);
        for (std::size_t b = 0; b < res.bases.size(); ++b) {
            const std::string path = dump_dir + "/basis_" + std::to_string(b) + ".csv";
            std::ofstream f(path);
            if (!f) {
                std::cerr << "cannot write " << path << "\n";
                return 2;
            }
            if (kind == AlgebraKind::Group)
                f << transition_matrix(n, res.bases[b], geval).to_csv();
            else
                f << transition_matrix_hecke(n, res.bases[b], heval).to_csv();
        }
    }
    if (!as_json) {
        std::cout << res.bases.size() << " monomial bases found (n=" << n << ", " << algebra
                  << ", weight <= " << max_weight << "):\n";
        for (const auto& b : res.bases) std::cout << "  " << set_to_string(b) << "\n";
    }

    const auto expected = expected_bases(n, kind, max_weight, family_bound);
    if (expected) {
        const bool match = *expected == res.bases;
        std::string detail = "computed " + std::to_string(res.bases.size()) + ", published list has " +
                             std::to_string(expected->size());
        if (!match && res.bases.size() != expected->size()) {
            for (const auto& b : res.bases)
                if (std::find(expected->begin(), expected->end(), b) == expected->end())
                    detail += "; extra: " + set_to_string(b);
            for (const auto& b : *expected)
                if (std::find(res.bases.begin(), res.bases.end(), b) == res.bases.end())
                    detail += "; missing: " + set_to_string(b);
        }
        rep.verdicts.push_back({"matches-published-list", match, detail});
    } else {
        rep.verdicts.push_back({"search-completed", true,
                                std::to_string(res.bases.size()) + " bases (no published list for this configuration)"});
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish(rep, as_json, out_path);
}

int cmd_dioph(const std::string& id, const std::string& eq_file, long modulus, long search_bound,
              bool list_only, bool as_json, const std::string& out_path) {
    RunReport rep;
    rep.command = "dioph";
    rep.parameters = {{"id", id}, {"modulus", modulus}, {"search_bound", search_bound}};
    const auto t0 = std::chrono::steady_clock::now();

    if (list_only) {
        json arr = json::array();
        for (const auto& eq : builtin_equations())
            arr.push_back({{"id", eq.id}, {"description", eq.description},
                           {"rhs", eq.rhs.get_str()}, {"witness_moduli", eq.witness_moduli}});
        rep.artifacts["catalogue"] = arr;
        rep.verdicts.push_back({"catalogue-listed", true, std::to_string(arr.size()) + " equations"});
        if (!as_json)
            for (const auto& e : arr)
                std::cout << e["id"].get<std::string>() << "  rhs=" << e["rhs"].get<std::string>() << "  "
                          << e["description"].get<std::string>() << "\n";
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return finish(rep, as_json, out_path);
    }

    std::vector<ExpDioEquation> eqs;
    if (!eq_file.empty()) {
        std::ifstream f(eq_file);
        if (!f) {
            std::cerr << "cannot read " << eq_file << "\n";
            return 2;
        }
        json j;
        try {
            f >> j;
            eqs.push_back(ExpDioEquation::from_json(j));
        } catch (const std::exception& e) {
            std::cerr << "malformed equation json: " << e.what() << "\n";
            return 2;
        }
    } else if (id == "all") {
        eqs = builtin_equations();
    } else {
        try {
            eqs.push_back(builtin_equation(id));
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }

    json certs = json::array();
    for (const auto& eq : eqs) {
        std::vector<long> moduli = eq.witness_moduli;
        if (modulus > 0) moduli = {modulus};
        for (long m : moduli) {
            const auto cert = verify_no_solution(eq, m);
            certs.push_back(cert.to_json());
            rep.verdicts.push_back({eq.id + "-mod-" + std::to_string(m),
                                    cert.impossible == eq.expect_impossible,
                                    cert.impossible ? "impossible" : "residue collision"});
        }
        const auto sols = search_solutions(eq, search_bound);
        json found = json::array();
        for (const auto& s : sols) found.push_back(s);
        certs.push_back({{"equation", eq.id}, {"search_bound", search_bound}, {"solutions", found}});
        std::vector<std::map<std::string, long>> expected = eq.known_solutions;
        const bool match = sols == expected;
        rep.verdicts.push_back({eq.id + "-search-" + std::to_string(search_bound), match,
                                std::to_string(sols.size()) + " solutions found, " +
                                    std::to_string(expected.size()) + " expected"});
    }
    rep.artifacts["certificates"] = certs;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return finish(rep, as_json, out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in Z(ZS_n) and Z(H_n): coefficient tables, identity "
                 "verification, monomial-basis classification and Diophantine certificates"};
    app.require_subcommand(1);

    bool as_json = false;
    std::string out_path;
    app.add_flag("--json", as_json, "emit a machine-readable report");
    app.add_option("--out", out_path, "write the JSON report to a file");

    auto* tables = app.add_subcommand("tables", "coefficient tables for m_i, m_{i,i}, m_{i,i,i} in ZS_4");
    std::string family = "all";
    int t_imax = 9, t_n = 4;
    bool t_csv = false;
    tables->add_option("--family", family, "single, double, triple or all")->default_val("all");
    tables->add_option("--i-max", t_imax, "largest index")->default_val(9);
    tables->add_option("--n", t_n, "group degree (tables are for n = 4)")->default_val(4);
    tables->add_flag("--csv", t_csv, "print CSV instead of the aligned table");

    auto* verify = app.add_subcommand("verify", "check relations, recursions, closed forms or parity");
    std::string scope = "all";
    int v_imax = 12, v_weight = 12;
    verify->add_option("--scope", scope, "relations, recursions, closed-forms, parity or all")->default_val("all");
    verify->add_option("--i-max", v_imax)->default_val(12);
    verify->add_option("--max-weight", v_weight)->default_val(12);

    auto* search = app.add_subcommand("search", "enumerate monomial bases of the centre");
    int s_n = 4, s_weight = 0;
    std::string algebra = "group";
    long family_bound = 50;
    search->add_option("--n", s_n, "group degree (3, 4 or 5)")->required();
    search->add_option("--algebra", algebra, "group or hecke")->default_val("group");
    search->add_option("--max-weight", s_weight, "partition weight bound (defaults: 4/12/10 for n=3/4/5)");
    search->add_option("--family-bound", family_bound, "odd-i bound for the (i,i,2) families in the Hecke test")
        ->default_val(50);
    std::string dump_dir;
    search->add_option("--dump-matrices", dump_dir, "write each basis's transition matrix CSV into this directory");

    auto* dioph = app.add_subcommand("dioph", "verify exponential Diophantine (non-)solvability");
    std::string eq_id = "all", eq_file;
    long modulus = 0, bound = 25;
    bool list_only = false;
    dioph->add_option("--id", eq_id, "catalogue equation id, or 'all'")->default_val("all");
    dioph->add_option("--equation", eq_file, "custom equation JSON file");
    dioph->add_option("--modulus", modulus, "override the witness modulus");
    dioph->add_option("--search-bound", bound, "exact search bound")->default_val(25);
    dioph->add_flag("--list", list_only, "list the catalogued equations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tables->parsed()) {
            if (t_n != 4) {
                std::cerr << "tables: closed forms exist for n = 4 only\n";
                return 2;
            }
            return cmd_tables(family, t_imax, t_csv, as_json, out_path);
        }
        if (verify->parsed()) return cmd_verify(scope, v_imax, v_weight, as_json, out_path);
        if (search->parsed())
            return cmd_search(s_n, algebra, s_weight, family_bound, dump_dir, as_json, out_path);
        if (dioph->parsed()) return cmd_dioph(eq_id, eq_file, modulus, bound, list_only, as_json, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
