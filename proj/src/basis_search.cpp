#include "jmcentre/basis_search.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "jmcentre/symmetric_group.hpp"

namespace jmcentre {

AlgebraKind algebra_from_string(const std::string& s) {
    if (s == "group") return AlgebraKind::Group;
    if (s == "hecke") return AlgebraKind::Hecke;
    throw std::invalid_argument("unknown algebra: " + s);
}

std::string algebra_name(AlgebraKind k) { return k == AlgebraKind::Group ? "group" : "hecke"; }

namespace {

std::string entry_str(const Int& v) { return v.get_str(); }
std::string entry_str(const IntegerPolynomial& v) { return v.to_string(); }

}  // namespace

template <class T>
std::string LabeledMatrix<T>::to_csv() const {
    std::ostringstream os;
    os << "class";
    for (const auto& c : cols) os << ",\"" << c.to_string() << "\"";
    os << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        os << '"' << rows[r].to_string() << '"';
        for (const auto& e : entries[r]) os << ",\"" << entry_str(e) << "\"";
        os << '\n';
    }
    return os.str();
}

template struct LabeledMatrix<Int>;
template struct LabeledMatrix<IntegerPolynomial>;

LabeledMatrix<Int> transition_matrix(int n, const std::vector<Partition>& cands,
                                     GroupMonomialEvaluator& eval) {
    LabeledMatrix<Int> m;
    m.rows = class_labels(n);
    m.cols = cands;
    std::vector<Permutation> reps;
    reps.reserve(m.rows.size());
    for (const auto& lab : m.rows) reps.push_back(minimal_increasing_element(n, lab));
    m.entries.assign(m.rows.size(), {});
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        m.entries[r].reserve(cands.size());
        for (const auto& mu : cands) m.entries[r].push_back(eval.evaluate(mu).inner_product(reps[r]));
    }
    if (n == 4) {
        // cross-check against the closed forms
        for (std::size_t r = 0; r < m.rows.size(); ++r) {
            ClassLabel4 lbl{};
            for (ClassLabel4 l : kClassLabels4)
                if (label_partition(l) == m.rows[r]) lbl = l;
            for (std::size_t c = 0; c < cands.size(); ++c)
                if (m.entries[r][c] != coeff(lbl, cands[c]))
                    throw std::logic_error("transition_matrix: closed form disagrees with evaluation at " +
                                           cands[c].to_string());
        }
    }
    return m;
}

LabeledMatrix<IntegerPolynomial> transition_matrix_hecke(int n, const std::vector<Partition>& cands,
                                                         HeckeMonomialEvaluator& eval) {
    LabeledMatrix<IntegerPolynomial> m;
    m.rows = class_labels(n);
    m.cols = cands;
    std::vector<Permutation> reps;
    reps.reserve(m.rows.size());
    for (const auto& lab : m.rows) reps.push_back(minimal_increasing_element(n, lab));
    m.entries.assign(m.rows.size(), {});
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        m.entries[r].reserve(cands.size());
        for (const auto& mu : cands) m.entries[r].push_back(eval.evaluate(mu).inner_product(reps[r]));
    }
    return m;
}

Int determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix must be square");
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntegerPolynomial determinant(const std::vector<std::vector<IntegerPolynomial>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix must be square");
    if (n == 0) return IntegerPolynomial::constant(1);
    if (n > 20) throw std::invalid_argument("determinant: polynomial case limited to small matrices");
    // Laplace expansion down the rows, minors memoized over used-column masks
    std::map<unsigned, IntegerPolynomial> memo;
    auto rec = [&](auto&& self, unsigned mask) -> IntegerPolynomial {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const std::size_t r = static_cast<std::size_t>(__builtin_popcount(mask));
        IntegerPolynomial acc;
        if (r == n) {
            acc = IntegerPolynomial::constant(1);
        } else {
            int sign = 1;
            for (std::size_t c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                if (!m[r][c].is_zero()) {
                    IntegerPolynomial t = m[r][c] * self(self, mask | (1u << c));
                    acc = (sign > 0) ? acc + t : acc - t;
                }
                sign = -sign;
            }
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, 0u);
}

Int determinant(const LabeledMatrix<Int>& m) {
    if (m.rows.size() != m.cols.size()) throw std::invalid_argument("determinant: non-square");
    return determinant(m.entries);
}

IntegerPolynomial determinant(const LabeledMatrix<IntegerPolynomial>& m) {
    if (m.rows.size() != m.cols.size()) throw std::invalid_argument("determinant: non-square");
    return determinant(m.entries);
}

bool is_monomial_basis(int n, const std::vector<Partition>& cands, GroupMonomialEvaluator& eval) {
    if (cands.size() != class_labels(n).size()) return false;
    return is_unit(determinant(transition_matrix(n, cands, eval)));
}

bool is_monomial_basis_hecke(int n, const std::vector<Partition>& cands, HeckeMonomialEvaluator& eval) {
    if (cands.size() != class_labels(n).size()) return false;
    return determinant(transition_matrix_hecke(n, cands, eval)).is_unit();
}

namespace {

std::vector<Partition> sorted_set(std::vector<Partition> v) {
    std::sort(v.begin(), v.end());
    return v;
}

bool set_less(const std::vector<Partition>& a, const std::vector<Partition>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// All size-k index combinations of 0..m-1, lexicographic.
void for_each_combination(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > m) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t t = 0; t < k; ++t) idx[t] = t;
    while (true) {
        fn(idx);
        std::size_t t = k;
        while (t > 0) {
            --t;
            if (idx[t] != t + m - k) break;
            if (t == 0) return;
        }
        ++idx[t];
        for (std::size_t u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
    }
}

int env_threads() {
    if (const char* v = std::getenv("JMCENTRE_THREADS")) {
        int t = std::atoi(v);
        if (t >= 1) return t;
    }
    return 1;
}

}  // namespace

SearchResult enumerate_bases(int n, int max_weight, AlgebraKind algebra, const SearchOptions& opts) {
    if (n < 3 || n > 5) throw std::invalid_argument("enumerate_bases: n must be 3, 4 or 5");
    if (max_weight < n) throw std::invalid_argument("enumerate_bases: max_weight must be >= n");
    const auto t0 = std::chrono::steady_clock::now();

    SearchResult res;
    res.n = n;
    res.algebra = algebra;
    res.max_weight = max_weight;

    if (algebra == AlgebraKind::Hecke) {
        // test the group-algebra bases in H_n; for n = 4 extend the two
        // infinite families up to the configured bound
        res.family_bound = opts.family_bound;
        SearchResult group = enumerate_bases(n, max_weight, AlgebraKind::Group, opts);
        std::set<std::vector<Partition>, decltype(&set_less)> cands(&set_less);
        for (auto& b : group.bases) cands.insert(b);
        if (n == 4)
            for (auto& b : s4_classification_bases(opts.family_bound)) cands.insert(b);
        auto eval = make_hecke_evaluator(n);
        for (const auto& cs : cands) {
            ++res.sets_tested;
            if (is_monomial_basis_hecke(n, cs, eval)) res.bases.push_back(cs);
        }
        res.candidates = group.candidates;
        res.viable_candidates = group.viable_candidates;
        res.even_candidates = group.even_candidates;
        res.odd_candidates = group.odd_candidates;
        std::sort(res.bases.begin(), res.bases.end(), set_less);
        res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }

    auto eval = make_group_evaluator(n);
    const auto labels = class_labels(n);
    std::vector<Permutation> reps;
    reps.reserve(labels.size());
    for (const auto& lab : labels) reps.push_back(minimal_increasing_element(n, lab));

    const auto cands = partitions(max_weight, n - 1);
    res.candidates = static_cast<long>(cands.size());

    // class-coefficient vectors; monomials whose coefficients are all even
    // cannot appear in a unimodular column
    std::vector<std::vector<Int>> vec(cands.size());
    std::vector<Partition> even_cands, odd_cands;
    std::vector<std::vector<Int>> even_vecs, odd_vecs;
    std::vector<std::size_t> even_rows, odd_rows;
    for (std::size_t r = 0; r < labels.size(); ++r)
        (labels[r].weight() % 2 == 0 ? even_rows : odd_rows).push_back(r);

    for (std::size_t c = 0; c < cands.size(); ++c) {
        const auto& m = eval.evaluate(cands[c]);
        auto& v = vec[c];
        v.reserve(labels.size());
        for (const auto& rep : reps) v.push_back(m.inner_product(rep));
        const bool all_even = std::all_of(v.begin(), v.end(), [](const Int& x) { return x % 2 == 0; });
        if (all_even) continue;
        ++res.viable_candidates;
        const bool even = cands[c].weight() % 2 == 0;
        auto& rows = even ? even_rows : odd_rows;
        std::vector<Int> block;
        block.reserve(rows.size());
        for (auto r : rows) block.push_back(v[r]);
        if (even) {
            even_cands.push_back(cands[c]);
            even_vecs.push_back(std::move(block));
        } else {
            odd_cands.push_back(cands[c]);
            odd_vecs.push_back(std::move(block));
        }
    }
    res.even_candidates = static_cast<long>(even_cands.size());
    res.odd_candidates = static_cast<long>(odd_cands.size());

    auto block_pass = [&](const std::vector<Partition>& cs, const std::vector<std::vector<Int>>& vs,
                          std::size_t k) {
        std::vector<std::vector<std::size_t>> combos;
        for_each_combination(cs.size(), k, [&](const std::vector<std::size_t>& idx) { combos.push_back(idx); });
        res.sets_tested += static_cast<long>(combos.size());
        const int threads = std::max(opts.threads, env_threads());
        std::vector<std::vector<Partition>> good;
        auto run = [&](std::size_t lo, std::size_t hi) {
            std::vector<std::vector<Partition>> local;
            std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
            for (std::size_t t = lo; t < hi; ++t) {
                const auto& idx = combos[t];
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < k; ++c) m[r][c] = vs[idx[c]][r];
                if (is_unit(determinant(m))) {
                    std::vector<Partition> set;
                    set.reserve(k);
                    for (auto i : idx) set.push_back(cs[i]);
                    local.push_back(std::move(set));
                }
            }
            return local;
        };
        if (threads <= 1 || combos.size() < 64) {
            good = run(0, combos.size());
        } else {
            const std::size_t chunk = (combos.size() + static_cast<std::size_t>(threads) - 1) /
                                      static_cast<std::size_t>(threads);
            std::vector<std::future<std::vector<std::vector<Partition>>>> futs;
            for (std::size_t lo = 0; lo < combos.size(); lo += chunk)
                futs.push_back(std::async(std::launch::async, run, lo, std::min(lo + chunk, combos.size())));
            for (auto& f : futs) {
                auto part = f.get();
                good.insert(good.end(), part.begin(), part.end());
            }
        }
        return good;
    };

    const auto even_good = block_pass(even_cands, even_vecs, even_rows.size());
    const auto odd_good = block_pass(odd_cands, odd_vecs, odd_rows.size());
    res.even_blocks = static_cast<long>(even_good.size());
    res.odd_blocks = static_cast<long>(odd_good.size());

    for (const auto& e : even_good)
        for (const auto& o : odd_good) {
            std::vector<Partition> set = e;
            set.insert(set.end(), o.begin(), o.end());
            res.bases.push_back(sorted_set(std::move(set)));
        }
    std::sort(res.bases.begin(), res.bases.end(), set_less);
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

nlohmann::json SearchResult::to_json() const {
    nlohmann::json sets = nlohmann::json::array();
    for (const auto& b : bases) {
        nlohmann::json s = nlohmann::json::array();
        for (const auto& mu : b) s.push_back(mu.to_string());
        sets.push_back(std::move(s));
    }
    return {{"n", n},
            {"algebra", algebra_name(algebra)},
            {"max_weight", max_weight},
            {"family_bound", family_bound},
            {"bases", sets},
            {"counts",
             {{"bases", bases.size()},
              {"candidates", candidates},
              {"viable_candidates", viable_candidates},
              {"even_candidates", even_candidates},
              {"odd_candidates", odd_candidates},
              {"even_blocks", even_blocks},
              {"odd_blocks", odd_blocks},
              {"sets_tested", sets_tested}}},
            {"elapsed_seconds", elapsed_seconds}};
}

namespace {

Partition pt(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

std::vector<Partition> named_set(const std::vector<std::vector<int>>& mus) {
    std::vector<Partition> out;
    out.reserve(mus.size());
    for (const auto& m : mus) out.push_back(pt(m));
    return sorted_set(std::move(out));
}

}  // namespace

std::vector<std::vector<Partition>> s4_classification_bases(long family_bound) {
    std::vector<std::vector<Partition>> out = {
        named_set({{}, {1}, {2}, {1, 1}, {1, 1, 1}}),
        named_set({{}, {1}, {1, 1}, {1, 1, 1}, {2, 2, 2}}),
        named_set({{1}, {2}, {1, 1}, {1, 1, 1}, {2, 2}}),
        named_set({{1}, {1, 1}, {1, 1, 1}, {2, 2}, {2, 2, 2}}),
        named_set({{}, {1}, {2}, {1, 1}, {3}}),
        named_set({{}, {1}, {1, 1}, {2, 2, 2}, {3}}),
        named_set({{1}, {2}, {1, 1}, {3}, {2, 2}}),
        named_set({{1}, {1, 1}, {3}, {2, 2}, {2, 2, 2}}),
    };
    for (long i = 1; i < family_bound; i += 2) {
        const int ii = static_cast<int>(i);
        out.push_back(named_set({{}, {1}, {1, 1}, {1, 1, 1}, {ii, ii, 2}}));
        out.push_back(named_set({{}, {1}, {1, 1}, {3}, {ii, ii, 2}}));
    }
    std::sort(out.begin(), out.end(), set_less);
    return out;
}

std::optional<std::vector<std::vector<Partition>>> expected_bases(int n, AlgebraKind algebra,
                                                                  int max_weight, long family_bound) {
    auto max_member_weight = [](const std::vector<Partition>& set) {
        int w = 0;
        for (const auto& mu : set) w = std::max(w, mu.weight());
        return w;
    };
    if (n == 3 && algebra == AlgebraKind::Group) {
        if (max_weight < 4) return std::nullopt;
        auto all = std::vector<std::vector<Partition>>{
            named_set({{}, {1}, {2}}),
            named_set({{}, {1}, {1, 1}}),
            named_set({{}, {1}, {2, 2}}),
            named_set({{1}, {2}, {2, 2}}),
        };
        std::sort(all.begin(), all.end(), set_less);
        return all;
    }
    if (n == 3 && algebra == AlgebraKind::Hecke) {
        if (max_weight < 4) return std::nullopt;
        return std::vector<std::vector<Partition>>{named_set({{}, {1}, {1, 1}})};
    }
    if (n == 4 && algebra == AlgebraKind::Group) {
        auto all = s4_classification_bases(static_cast<long>(max_weight) / 2);  // member (i,i,2): 2i+2 <= w
        std::vector<std::vector<Partition>> out;
        for (auto& b : all)
            if (max_member_weight(b) <= max_weight) out.push_back(b);
        std::sort(out.begin(), out.end(), set_less);
        return out;
    }
    if (n == 4 && algebra == AlgebraKind::Hecke) {
        if (family_bound < 2) return std::nullopt;
        auto all = std::vector<std::vector<Partition>>{
            named_set({{}, {1}, {2}, {1, 1}, {1, 1, 1}}),
            named_set({{}, {1}, {1, 1}, {1, 1, 1}, {2, 1, 1}}),
            named_set({{}, {1}, {1, 1}, {1, 1, 1}, {2, 2, 2}}),
        };
        std::sort(all.begin(), all.end(), set_less);
        return all;
    }
    if (n == 5 && algebra == AlgebraKind::Group) {
        if (max_weight != 10) return std::nullopt;
        // the twelve sets of the reference classification
        auto all = std::vector<std::vector<Partition>>{
            named_set({{}, {1}, {2}, {1, 1}, {3}, {2, 1}, {4}}),
            named_set({{}, {1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1, 1}}),
            named_set({{}, {1}, {2}, {1, 1}, {3}, {1, 1, 1}, {4}}),
            named_set({{}, {1}, {2}, {1, 1}, {3}, {1, 1, 1}, {1, 1, 1, 1}}),
            named_set({{}, {1}, {2}, {1, 1}, {2, 1}, {4}, {5}}),
            named_set({{}, {1}, {2}, {1, 1}, {2, 1}, {1, 1, 1, 1}, {5}}),
            named_set({{}, {1}, {2}, {1, 1}, {1, 1, 1}, {4}, {3, 1, 1}}),
            named_set({{}, {1}, {2}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1}, {3, 1, 1}}),
            named_set({{}, {1}, {1, 1}, {3}, {2, 1}, {2, 1, 1}, {1, 1, 1, 1}}),
            named_set({{}, {1}, {1, 1}, {3}, {1, 1, 1}, {2, 1, 1}, {1, 1, 1, 1}}),
            named_set({{}, {1}, {1, 1}, {2, 1}, {2, 1, 1}, {1, 1, 1, 1}, {5}}),
            named_set({{}, {1}, {1, 1}, {1, 1, 1}, {2, 1, 1}, {1, 1, 1, 1}, {3, 1, 1}}),
        };
        std::sort(all.begin(), all.end(), set_less);
        return all;
    }
    if (n == 5 && algebra == AlgebraKind::Hecke) {
        if (max_weight != 10) return std::nullopt;
        return std::vector<std::vector<Partition>>{};
    }
    return std::nullopt;
}

ParityReport candidate_parity_filter(int n, int max_weight) {
    if (n != 4) throw std::invalid_argument("candidate_parity_filter: implemented for n = 4");
    ParityReport rep;
    rep.max_weight = max_weight;
    for (const auto& mu : partitions(max_weight, 3)) {
        ParityEntry e;
        e.mu = mu;
        e.all_even = true;
        for (ClassLabel4 lbl : kClassLabels4) {
            e.coeffs.push_back(coeff(lbl, mu));
            if (e.coeffs.back() % 2 != 0) e.all_even = false;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

nlohmann::json ParityReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : e.coeffs) cs.push_back(c.get_str());
        arr.push_back({{"mu", e.mu.to_string()}, {"coeffs", cs}, {"all_even", e.all_even}});
    }
    return {{"max_weight", max_weight}, {"entries", arr}};
}

namespace {

int par_sgn(long e) { return e % 2 == 0 ? 1 : -1; }

Int blockdet_odd_from_closed_forms(const Partition& a, const Partition& b) {
    // rows (s1, s123), columns (a, b)
    return coeff(ClassLabel4::S1, a) * coeff(ClassLabel4::S123, b) -
           coeff(ClassLabel4::S1, b) * coeff(ClassLabel4::S123, a);
}

std::vector<DetFamily> build_det_families() {
    std::vector<DetFamily> fams;
    auto add = [&](DetFamily f) { fams.push_back(std::move(f)); };

    // Even families: rows (1, s12, s13), columns as listed.
    add({"E1", "{m_{2i+1,2i+1}, m_empty, m_2}", {"i"}, false, 1,
         [](const std::vector<long>& p) { return p[0] >= 0; },
         [](const std::vector<long>& p) {
             const long I = 2 * p[0] + 1;
             return exact_div(pow_int(6, I) + pow_int(3, I) - (2 + 3 * par_sgn(I)) * pow_int(2, I) - par_sgn(I), 12);
         },
         [](const std::vector<long>& p) {
             const int I = static_cast<int>(2 * p[0] + 1);
             return std::vector<Partition>{pt({I, I}), pt({}), pt({2})};
         }});
    add({"E2", "{m_{2i+1,2i+1}, m_empty, m_{2,2,2}}", {"i"}, false, 1,
         [](const std::vector<long>& p) { return p[0] >= 0; },
         [](const std::vector<long>& p) {
             const long I = 2 * p[0] + 1;
             return exact_div(pow_int(6, I) + pow_int(3, I) - (8 + 9 * par_sgn(I)) * pow_int(2, I) - par_sgn(I), 12);
         },
         [](const std::vector<long>& p) {
             const int I = static_cast<int>(2 * p[0] + 1);
             return std::vector<Partition>{pt({I, I}), pt({}), pt({2, 2, 2})};
         }});
    add({"E3", "{m_{2i+1,2i+1}, m_empty, m_{j,j,2}}", {"i", "j"}, false, -1,
         [](const std::vector<long>& p) { return p[0] >= 0 && p[1] >= 1 && p[1] != 2; },
         [](const std::vector<long>& p) {
             const long I = 2 * p[0] + 1, j = p[1];
             const Int left = pow_int(6, I) + pow_int(3, I) + pow_int(2, I) + 1;
             const Int right = (1 + par_sgn(j)) * pow_int(2, j) + 4 * par_sgn(j);
             return exact_div(-left * right, 48);
         },
         [](const std::vector<long>& p) {
             const int I = static_cast<int>(2 * p[0] + 1), j = static_cast<int>(p[1]);
             return std::vector<Partition>{pt({I, I}), pt({}), pt({j, j, 2})};
         }});
    add({"E4", "{m_{2i+1,2i+1}, m_{2j,2j}, m_2}", {"i", "j"}, false, -1,
         [](const std::vector<long>& p) { return p[0] >= 0 && p[1] >= 1; },
         [](const std::vector<long>& p) {
             const long I = 2 * p[0] + 1, J = 2 * p[1];
             return exact_div((pow_int(2, J) - 1) * (pow_int(6, I) + pow_int(3, I) + pow_int(2, I)) +
                                  6 * pow_int(2, J) - pow_int(6, J) - pow_int(3, J),
                              12);
         },
         [](const std::vector<long>& p) {
             const int I = static_cast<int>(2 * p[0] + 1), J = static_cast<int>(2 * p[1]);
             return std::vector<Partition>{pt({I, I}), pt({J, J}), pt({2})};
         }});
    add({"E5", "{m_{2i+1,2i+1}, m_{2j,2j}, m_{2,2,2}}", {"i", "j"}, false, -1,
         [](const std::vector<long>& p) { return p[0] >= 0 && p[1] >= 1; },
         [](const std::vector<long>& p) {
             const long I = 2 * p[0] + 1, J = 2 * p[1];
             return exact_div(17 * pow_int(2, J) - pow_int(6, I) - pow_int(6, J) - pow_int(3, I) -
                                  pow_int(3, J) - pow_int(2, I),
                              12);
         },
         [](const std::vector<long>& p) {
             const int I = static_cast<int>(2 * p[0] + 1), J = static_cast<int>(2 * p[1]);
             return std::vector<Partition>{pt({I, I}), pt({J, J}), pt({2, 2, 2})};
         }});
    add({"E6", "{m_{2i+1,2i+1}, m_{2j,2j}, m_{k,k,2}}", {"i", "j", "k"}, false, -1,
         [](const std::vector<long>& p) { return p[0] >= 0 && p[1] >= 1 && p[2] >= 1 && p[2] != 2; },
         [](const std::vector<long>& p) {
             const long I = 2 * p[0] + 1, J = 2 * p[1], k = p[2];
             const int ek = par_sgn(k);
             const Int v = pow_int(2, 2 * p[1] + 3) * pow_int(3, k) + pow_int(2, 2 * p[1] + 1) * pow_int(6, k) -
                           (1 + ek) * (pow_int(2, 2 * p[0] + k + 1) + pow_int(2, k) * pow_int(6, I) +
                                       pow_int(2, k) * pow_int(3, J) + pow_int(2, k) * pow_int(3, I) +
                                       pow_int(2, k) * pow_int(6, J)) -
                           4 * ek *
                               (pow_int(6, I) + pow_int(3, I) + pow_int(2, I) + pow_int(6, J) +
                                pow_int(3, J) + pow_int(2, J)) +
                           (17 - ek) * pow_int(2, J + k);
             return exact_div(v, 48);
         },
         [](const std::vector<long>& p) {
             const int I = static_cast<int>(2 * p[0] + 1), J = static_cast<int>(2 * p[1]),
                       k = static_cast<int>(p[2]);
             return std::vector<Partition>{pt({I, I}), pt({J, J}), pt({k, k, 2})};
         }});

    // Odd families: rows (s1, s123), columns as listed.
    add({"O1", "{m_1, m_{1,1,1}}", {}, true, 1,
         [](const std::vector<long>&) { return true; },
         [](const std::vector<long>&) { return Int(1); },
         [](const std::vector<long>&) {
             return std::vector<Partition>{pt({1}), pt({1, 1, 1})};
         }});
    add({"O2", "{m_i, m_{1,1,1}}, i odd >= 3", {"i"}, true, 1,
         [](const std::vector<long>& p) { return p[0] >= 3 && p[0] % 2 == 1; },
         [](const std::vector<long>& p) {
             return exact_div(pow_int(3, p[0]) + 4 * pow_int(2, p[0]) + 1, 12);
         },
         [](const std::vector<long>& p) {
             return std::vector<Partition>{pt({static_cast<int>(p[0])}), pt({1, 1, 1})};
         }});
    add({"O3", "{m_{i+j,i}, m_{1,1,1}}, j odd", {"i", "j"}, true, 1,
         [](const std::vector<long>& p) { return p[0] >= 1 && p[1] >= 1 && p[1] % 2 == 1; },
         [](const std::vector<long>& p) {
             const long i = p[0], j = p[1];
             const int ei = par_sgn(i);
             return exact_div(pow_int(3, j) * pow_int(6, i) + pow_int(2, j) * pow_int(6, i) +
                                  pow_int(3, i + j) + pow_int(3, i) + (4 + 3 * ei) * pow_int(2, i + j) +
                                  (4 - 3 * ei) * pow_int(2, i),
                              12);
         },
         [](const std::vector<long>& p) {
             const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]);
             return std::vector<Partition>{pt({i + j, i}), pt({1, 1, 1})};
         }});
    add({"O4", "{m_1, m_{i,i,1}}, i odd >= 3", {"i"}, true, 1,
         [](const std::vector<long>& p) { return p[0] >= 3 && p[0] % 2 == 1; },
         [](const std::vector<long>& p) {
             const long i = p[0];
             return exact_div(pow_int(6, i) + 3 * pow_int(2, i) + 2 * pow_int(3, i) +
                                  3 * (pow_int(2, i) + 2) + 3 * pow_int(2, i),
                              12);
         },
         [](const std::vector<long>& p) {
             const int i = static_cast<int>(p[0]);
             return std::vector<Partition>{pt({1}), pt({i, i, 1})};
         }});
    add({"O5", "{m_1, m_i}, i odd >= 3", {"i"}, true, 1,
         [](const std::vector<long>& p) { return p[0] >= 3 && p[0] % 2 == 1; },
         [](const std::vector<long>& p) {
             return exact_div(pow_int(3, p[0]) - 2 * pow_int(2, p[0]) + 1, 12);
         },
         [](const std::vector<long>& p) {
             return std::vector<Partition>{pt({1}), pt({static_cast<int>(p[0])})};
         }});
    add({"O6", "{m_1, m_{i+j,i}}, j odd", {"i", "j"}, true, 1,
         [](const std::vector<long>& p) { return p[0] >= 1 && p[1] >= 1 && p[1] % 2 == 1; },
         [](const std::vector<long>& p) {
             const long i = p[0], j = p[1];
             const int ei = par_sgn(i);
             return exact_div(pow_int(3, j) * pow_int(6, i) + pow_int(2, j) * pow_int(6, i) + pow_int(3, i) +
                                  pow_int(3, i + j) + 3 * ei * (pow_int(2, i) - pow_int(2, i + j)) -
                                  2 * (pow_int(2, i) + pow_int(2, i + j)),
                              12);
         },
         [](const std::vector<long>& p) {
             const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]);
             return std::vector<Partition>{pt({1}), pt({i + j, i})};
         }});
    add({"O7", "{m_i, m_{j,j,1}}, i odd >= 3", {"i", "j"}, true, 1,
         [](const std::vector<long>& p) { return p[0] >= 3 && p[0] % 2 == 1 && p[1] >= 2; },
         [](const std::vector<long>& p) {
             return blockdet_odd_from_closed_forms(pt({static_cast<int>(p[0])}),
                                                   pt({static_cast<int>(p[1]), static_cast<int>(p[1]), 1}));
         },
         [](const std::vector<long>& p) {
             const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]);
             return std::vector<Partition>{pt({i}), pt({j, j, 1})};
         }});
    add({"O8", "{m_{j+k,j}, m_{i,i,1}}, k odd", {"i", "j", "k"}, true, 1,
         [](const std::vector<long>& p) { return p[0] >= 2 && p[1] >= 1 && p[2] >= 1 && p[2] % 2 == 1; },
         [](const std::vector<long>& p) {
             const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]), k = static_cast<int>(p[2]);
             return blockdet_odd_from_closed_forms(pt({j + k, j}), pt({i, i, 1}));
         },
         [](const std::vector<long>& p) {
             const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]), k = static_cast<int>(p[2]);
             return std::vector<Partition>{pt({j + k, j}), pt({i, i, 1})};
         }});
    add({"O9", "{m_{i,i,1}, m_{j,j,1}}, i,j >= 3", {"i", "j"}, true, 1,
         [](const std::vector<long>& p) { return p[0] >= 3 && p[1] >= 3; },
         [](const std::vector<long>& p) {
             const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]);
             return blockdet_odd_from_closed_forms(pt({i, i, 1}), pt({j, j, 1}));
         },
         [](const std::vector<long>& p) {
             const int i = static_cast<int>(p[0]), j = static_cast<int>(p[1]);
             return std::vector<Partition>{pt({i, i, 1}), pt({j, j, 1})};
         }});
    return fams;
}

}  // namespace

const std::vector<DetFamily>& det_families() {
    static const std::vector<DetFamily> fams = build_det_families();
    return fams;
}

Int family_determinant(const std::string& id, const std::vector<long>& params) {
    for (const auto& f : det_families()) {
        if (f.id != id) continue;
        if (params.size() != f.params.size())
            throw std::invalid_argument("family_determinant: " + id + " expects " +
                                        std::to_string(f.params.size()) + " parameters");
        if (!f.in_domain(params)) throw std::invalid_argument("family_determinant: parameters out of domain");
        return f.value(params);
    }
    throw std::invalid_argument("family_determinant: unknown family " + id);
}

}  // namespace jmcentre
