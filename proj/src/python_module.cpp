#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jmcentre/basis_search.hpp"
#include "jmcentre/closed_forms.hpp"
#include "jmcentre/dioph.hpp"
#include "jmcentre/group_algebra.hpp"
#include "jmcentre/hecke_algebra.hpp"
#include "jmcentre/monomials.hpp"
#include "jmcentre/symmetric_group.hpp"

namespace py = pybind11;
using namespace jmcentre;

namespace {

py::int_ to_py(const Int& z) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Permutation perm_of(const std::vector<int>& images) { return Permutation::from_one_line(images); }

Partition part_of(const std::vector<int>& parts) {
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return Partition(std::move(sorted));
}

std::vector<int> part_out(const Partition& mu) { return mu.parts(); }

ClassLabel4 label_of(const std::string& name) {
    for (ClassLabel4 l : kClassLabels4)
        if (label_name(l) == name) return l;
    throw std::invalid_argument("unknown class label: " + name);
}

py::dict group_monomial_coeffs(int n, const std::vector<int>& mu) {
    auto eval = make_group_evaluator(n);
    const auto& m = eval.evaluate(part_of(mu));
    py::dict out;
    for (const auto& lab : class_labels(n)) {
        const auto w = minimal_increasing_element(n, lab);
        out[py::str(lab.to_string())] = to_py(m.inner_product(w));
    }
    return out;
}

py::dict hecke_monomial_coeffs(int n, const std::vector<int>& mu) {
    auto eval = make_hecke_evaluator(n);
    const auto& m = eval.evaluate(part_of(mu));
    py::dict out;
    for (const auto& lab : class_labels(n)) {
        const auto w = minimal_increasing_element(n, lab);
        const IntegerPolynomial poly = m.inner_product(w);
        py::list cs;
        for (const auto& c : poly.coeffs()) cs.append(to_py(c));
        out[py::str(lab.to_string())] = cs;
    }
    return out;
}

std::vector<std::vector<Partition>> to_sets(const std::vector<std::vector<std::vector<int>>>& raw) {
    std::vector<std::vector<Partition>> sets;
    sets.reserve(raw.size());
    for (const auto& s : raw) {
        std::vector<Partition> set;
        set.reserve(s.size());
        for (const auto& mu : s) set.push_back(part_of(mu));
        sets.push_back(std::move(set));
    }
    return sets;
}

}  // namespace

PYBIND11_MODULE(jmcentre, m) {
    m.doc() = "Exact computations in the centres of ZS_n and the Iwahori-Hecke algebra H_n "
              "via monomial symmetric polynomials in Jucys-Murphy elements";

    // symmetric group basics
    m.def("compose", [](const std::vector<int>& p, const std::vector<int>& q) {
        return (perm_of(p) * perm_of(q)).images();
    }, py::arg("p"), py::arg("q"), "one-line composition (p*q)(i) = p(q(i))");
    m.def("inverse", [](const std::vector<int>& p) { return perm_of(p).inverse().images(); });
    m.def("length", [](const std::vector<int>& p) { return perm_of(p).length(); });
    m.def("reduced_word", [](const std::vector<int>& p) { return perm_of(p).reduced_word(); });
    m.def("modified_cycle_type",
          [](const std::vector<int>& p) { return part_out(perm_of(p).modified_cycle_type()); });
    m.def("class_labels", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& lab : class_labels(n)) out.push_back(part_out(lab));
        return out;
    });
    m.def("conjugacy_class_size", [](int n, const std::vector<int>& mu) {
        return conjugacy_class(n, part_of(mu)).size();
    });
    m.def("minimal_increasing_element", [](int n, const std::vector<int>& mu) {
        return minimal_increasing_element(n, part_of(mu)).images();
    });

    // partitions and monomials
    m.def("partitions", [](int max_weight, int max_parts) {
        std::vector<std::vector<int>> out;
        for (const auto& mu : partitions(max_weight, max_parts)) out.push_back(part_out(mu));
        return out;
    });
    m.def("monomial_coeffs", &group_monomial_coeffs, py::arg("n"), py::arg("mu"),
          "class-sum coefficients of m_mu(L_1..L_n) in ZS_n, keyed by class label");
    m.def("hecke_monomial_coeffs", &hecke_monomial_coeffs, py::arg("n"), py::arg("mu"),
          "class-element coefficient polynomials of m_mu in H_n (lists of xi-coefficients)");

    // closed forms for n = 4
    m.def("coeff", [](const std::string& label, const std::vector<int>& mu) {
        return to_py(coeff(label_of(label), part_of(mu)));
    }, py::arg("label"), py::arg("mu"),
          "closed-form coefficient of the class sum at the label in m_mu(L_1..L_4)");

    // basis search
    m.def("is_monomial_basis", [](int n, const std::vector<std::vector<int>>& cands, const std::string& algebra) {
        std::vector<Partition> set;
        for (const auto& mu : cands) set.push_back(part_of(mu));
        if (algebra_from_string(algebra) == AlgebraKind::Group) {
            auto eval = make_group_evaluator(n);
            return is_monomial_basis(n, set, eval);
        }
        auto eval = make_hecke_evaluator(n);
        return is_monomial_basis_hecke(n, set, eval);
    }, py::arg("n"), py::arg("candidates"), py::arg("algebra") = "group");
    m.def("enumerate_bases", [](int n, int max_weight, const std::string& algebra, long family_bound) {
        SearchOptions opts;
        opts.family_bound = family_bound;
        auto res = enumerate_bases(n, max_weight, algebra_from_string(algebra), opts);
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& b : res.bases) {
            std::vector<std::vector<int>> set;
            for (const auto& mu : b) set.push_back(part_out(mu));
            out.push_back(std::move(set));
        }
        return out;
    }, py::arg("n"), py::arg("max_weight"), py::arg("algebra") = "group", py::arg("family_bound") = 50);
    m.def("family_determinant", [](const std::string& id, const std::vector<long>& params) {
        return to_py(family_determinant(id, params));
    });

    // diophantine certificates
    m.def("dioph_ids", [] {
        std::vector<std::string> ids;
        for (const auto& eq : builtin_equations()) ids.push_back(eq.id);
        return ids;
    });
    m.def("verify_no_solution", [](const std::string& id, long modulus) {
        const auto cert = verify_no_solution(builtin_equation(id), modulus);
        py::dict out;
        out["impossible"] = cert.impossible;
        out["modulus"] = cert.modulus;
        out["rhs_residue"] = cert.rhs_residue;
        out["attained"] = cert.attained;
        return out;
    }, py::arg("id"), py::arg("modulus"));
    m.def("search_solutions", [](const std::string& id, long bound) {
        return search_solutions(builtin_equation(id), bound);
    }, py::arg("id"), py::arg("bound") = 25);

    // verification sweeps
    m.def("verify_three_var_relations", [](int i_max) {
        auto rep = verify_three_var_relations(i_max);
        return py::make_tuple(rep.checks, rep.failures);
    }, py::arg("i_max") = 6);
    m.def("verify_recursions", [](int i_max) {
        auto rep = verify_recursions(i_max);
        return py::make_tuple(rep.checks, rep.failures);
    }, py::arg("i_max") = 12);
}
