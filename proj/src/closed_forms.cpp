#include "jmcentre/closed_forms.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "jmcentre/symmetric_group.hpp"

namespace jmcentre {

namespace {

int sgn(long e) { return e % 2 == 0 ? 1 : -1; }

struct LabelData {
    std::string name;
    Partition mu;
    Permutation w;
};

const std::array<LabelData, 5>& label_data() {
    static const std::array<LabelData, 5> data = [] {
        auto mk = [](const char* name, std::vector<int> parts) {
            Partition mu(std::move(parts));
            return LabelData{name, mu, minimal_increasing_element(4, mu)};
        };
        return std::array<LabelData, 5>{mk("1", {}), mk("s1", {1}), mk("s12", {2}),
                                        mk("s13", {1, 1}), mk("s123", {3})};
    }();
    return data;
}

std::size_t idx(ClassLabel4 lbl) { return static_cast<std::size_t>(lbl); }

}  // namespace

const std::string& label_name(ClassLabel4 lbl) { return label_data()[idx(lbl)].name; }
const Partition& label_partition(ClassLabel4 lbl) { return label_data()[idx(lbl)].mu; }
const Permutation& label_element(ClassLabel4 lbl) { return label_data()[idx(lbl)].w; }
int label_parity(ClassLabel4 lbl) { return label_partition(lbl).weight() % 2; }

Int coeff_single(ClassLabel4 lbl, long i) {
    if (i < 1) throw std::invalid_argument("coeff_single: i >= 1 required");
    const auto ul = static_cast<unsigned long>(i);
    const Int p3 = pow_int(3, ul), p2 = pow_int(2, ul);
    const int e = sgn(i);
    switch (lbl) {
        case ClassLabel4::Identity: return exact_div((1 + e) * (p3 + 10 * p2 + 23), 24);
        case ClassLabel4::S1:       return exact_div((1 - e) * (p3 + 4 * p2 + 1), 24);
        case ClassLabel4::S12:      return exact_div((1 + e) * (p3 + p2 - 1), 24);
        case ClassLabel4::S13:      return exact_div((1 + e) * (p3 - 2 * p2 - 1), 24);
        case ClassLabel4::S123:     return exact_div((1 - e) * (p3 - 2 * p2 + 1), 24);
    }
    throw std::logic_error("bad label");
}

Int coeff_double(ClassLabel4 lbl, long i) {
    if (i < 1) throw std::invalid_argument("coeff_double: i >= 1 required");
    const auto ul = static_cast<unsigned long>(i);
    const Int p6 = pow_int(6, ul), p3 = pow_int(3, ul), p2 = pow_int(2, ul);
    const Int pm2 = pow_int(-2, ul);
    const int e = sgn(i);
    switch (lbl) {
        case ClassLabel4::Identity: return exact_div(p6 + p3 + 10 * p2 + 9 * pm2 + 11 * e, 12);
        case ClassLabel4::S1:       return 0;
        case ClassLabel4::S12:      return exact_div(p6 + p3 + p2 - e, 12);
        case ClassLabel4::S13:      return exact_div(p6 + p3 - 2 * p2 - e - 3 * pm2, 12);
        case ClassLabel4::S123:     return 0;
    }
    throw std::logic_error("bad label");
}

Int coeff_triple(ClassLabel4 lbl, long i) {
    if (i < 1) throw std::invalid_argument("coeff_triple: i >= 1 required");
    const auto ul = static_cast<unsigned long>(i - 1);
    const Int p6 = pow_int(6, ul), p2 = pow_int(2, ul);
    const int e = sgn(i);
    switch (lbl) {
        case ClassLabel4::Identity: return exact_div((1 + e) * (p6 + 3 * p2), 4);
        case ClassLabel4::S1:       return exact_div((1 - e) * (p6 - p2), 4);
        case ClassLabel4::S12:      return exact_div((1 + e) * p6, 4);
        case ClassLabel4::S13:      return exact_div((1 + e) * (p6 - p2), 4);
        case ClassLabel4::S123:     return exact_div((1 - e) * (p6 + p2), 4);
    }
    throw std::logic_error("bad label");
}

Int coeff_iij(ClassLabel4 lbl, long i, long j) {
    if (i < 1 || j < 1 || i == j) throw std::invalid_argument("coeff_iij: need i,j >= 1, i != j");
    const Int core = pow_int(6, static_cast<unsigned long>(i)) +
                     pow_int(2, static_cast<unsigned long>(i)) * pow_int(3, static_cast<unsigned long>(j)) +
                     pow_int(2, static_cast<unsigned long>(j)) * pow_int(3, static_cast<unsigned long>(i));
    const Int p2i = pow_int(2, static_cast<unsigned long>(i)), p2j = pow_int(2, static_cast<unsigned long>(j));
    const int ei = sgn(i), ej = sgn(j);
    switch (lbl) {
        case ClassLabel4::Identity:
            return exact_div((1 + ej) * (core + 9 * ei * (p2i + p2j) + 9 * p2i), 24);
        case ClassLabel4::S1:
            return exact_div((1 - ej) * (core + 3 * ei * (p2i + p2j) - 3 * p2i), 24);
        case ClassLabel4::S12:
            return exact_div((1 + ej) * core, 24);
        case ClassLabel4::S13:
            return exact_div((1 + ej) * (core - 3 * ei * (p2i + p2j) - 3 * p2i), 24);
        case ClassLabel4::S123:
            return exact_div((1 - ej) * (core - 3 * ei * (p2i + p2j) + 3 * p2i), 24);
    }
    throw std::logic_error("bad label");
}

Int coeff_hook(ClassLabel4 lbl, long i, long j) {
    if (i < 1 || j < 1) throw std::invalid_argument("coeff_hook: need i,j >= 1");
    const Int p6i = pow_int(6, static_cast<unsigned long>(i));
    const Int p3i = pow_int(3, static_cast<unsigned long>(i)), p3ij = pow_int(3, static_cast<unsigned long>(i + j));
    const Int p2i = pow_int(2, static_cast<unsigned long>(i)), p2ij = pow_int(2, static_cast<unsigned long>(i + j));
    const Int core = pow_int(3, static_cast<unsigned long>(j)) * p6i +
                     pow_int(2, static_cast<unsigned long>(j)) * p6i + p3ij + p3i;
    const int ei = sgn(i), ej = sgn(j);
    switch (lbl) {
        case ClassLabel4::Identity:
            return exact_div((1 + ej) * (core + (10 + 9 * ei) * (p2ij + p2i) + 22 * ei), 24);
        case ClassLabel4::S1:
            return exact_div((1 - ej) * (core + (4 + 3 * ei) * p2ij + (4 - 3 * ei) * p2i), 24);
        case ClassLabel4::S12:
            return exact_div((1 + ej) * (core + p2ij + p2i - 2 * ei), 24);
        case ClassLabel4::S13:
            return exact_div((1 + ej) * (core - (2 + 3 * ei) * (p2i + p2ij) - 2 * ei), 24);
        case ClassLabel4::S123:
            return exact_div((1 - ej) * (core + 3 * ei * (p2i - p2ij) - 2 * (p2i + p2ij)), 24);
    }
    throw std::logic_error("bad label");
}

Int coeff_three_part(ClassLabel4 lbl, long i, long j, long k) {
    if (i < 1 || j < 1 || k < 1) throw std::invalid_argument("coeff_three_part: need i,j,k >= 1");
    const Int p6i = pow_int(6, static_cast<unsigned long>(i));
    const Int A = pow_int(3, static_cast<unsigned long>(j)) * p6i +
                  pow_int(2, static_cast<unsigned long>(j)) * p6i +
                  pow_int(3, static_cast<unsigned long>(i + j)) + pow_int(3, static_cast<unsigned long>(i)) +
                  pow_int(2, static_cast<unsigned long>(i + j)) + pow_int(2, static_cast<unsigned long>(i));
    const Int p6k = pow_int(6, static_cast<unsigned long>(k));
    const Int p2ijk = pow_int(2, static_cast<unsigned long>(i + j + k));
    const Int p2ik = pow_int(2, static_cast<unsigned long>(i + k));
    const Int p2k = pow_int(2, static_cast<unsigned long>(k));
    const int ei = sgn(i), ej = sgn(j), ek = sgn(k);
    const int ejk = sgn(j + k), eik = sgn(i + k), eij = sgn(i + j), eijk = sgn(i + j + k);
    switch (lbl) {
        case ClassLabel4::Identity:
            // the 2^k term carries a (-1)^i factor; the published form omits
            // it and disagrees with the direct expansion for odd i, even j+k
            return exact_div((1 + ejk) * (p6k * A + 9 * (ek + eik) * p2ijk + 9 * (ei + ej) * p2ik +
                                          9 * ei * (ej + ejk) * p2k),
                             24);
        case ClassLabel4::S1:
            return exact_div((1 - ejk) * (p6k * A + 3 * (ek + eik) * p2ijk + 3 * (ek - ei) * p2ik +
                                          3 * (eik - ei) * p2k),
                             24);
        case ClassLabel4::S12:
            return exact_div((1 + ejk) * p6k * A, 24);
        case ClassLabel4::S13:
            return exact_div((1 + ejk) * p6k * A - 3 * (ej + ek + eij + eik) * p2ijk -
                                 3 * (ei + ej + ek + eijk) * p2ik - 3 * ei * (1 + ej + ek + ejk) * p2k,
                             24);
        case ClassLabel4::S123:
            return exact_div((1 - ejk) * p6k * A + 3 * (ej - ek + eij - eik) * p2ijk +
                                 3 * (ei + ej - ek - eijk) * p2ik + 3 * ei * (1 + ej - ek - ejk) * p2k,
                             24);
    }
    throw std::logic_error("bad label");
}

Int coeff(ClassLabel4 lbl, const Partition& mu) {
    switch (mu.size()) {
        case 0:
            return lbl == ClassLabel4::Identity ? 1 : 0;
        case 1:
            return coeff_single(lbl, mu.part(0));
        case 2: {
            const long a = mu.part(0), b = mu.part(1);
            if (a == b) return coeff_double(lbl, a);
            return coeff_hook(lbl, b, a - b);  // m_{i+j,i} with i = b, j = a - b
        }
        case 3: {
            const long a = mu.part(0), b = mu.part(1), c = mu.part(2);
            if (a == b && b == c) return coeff_triple(lbl, a);
            if (a == b) return coeff_iij(lbl, a, c);
            if (b == c) return coeff_iij(lbl, b, a);
            return coeff_three_part(lbl, b - c, a - b, c);  // m_{k+i+j,k+i,k}
        }
        default:
            return 0;  // m_mu vanishes in ZS_4 when mu has four or more parts
    }
}

VerifyReport verify_recursions(int i_max) {
    if (i_max < 9) throw std::invalid_argument("verify_recursions: i_max must be >= 9");
    VerifyReport rep;
    auto ev = make_group_evaluator(4);
    auto val = [&](ClassLabel4 lbl, std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        return ev.evaluate(Partition(parts)).inner_product(label_element(lbl));
    };
    auto check = [&](bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok) rep.failures.push_back(what);
    };
    for (ClassLabel4 lbl : kClassLabels4) {
        const auto& name = label_name(lbl);
        for (int i = 7; i <= i_max; ++i)
            check(val(lbl, {i}) == 14 * val(lbl, {i - 2}) - 49 * val(lbl, {i - 4}) + 36 * val(lbl, {i - 6}),
                  "m_i recursion at <" + name + ">, i=" + std::to_string(i));
        for (int i = 6; i <= i_max; ++i)
            check(val(lbl, {i, i}) == 8 * val(lbl, {i - 1, i - 1}) - 5 * val(lbl, {i - 2, i - 2}) -
                                          50 * val(lbl, {i - 3, i - 3}) + 36 * val(lbl, {i - 4, i - 4}) +
                                          72 * val(lbl, {i - 5, i - 5}),
                  "m_{i,i} recursion at <" + name + ">, i=" + std::to_string(i));
        for (int i = 5; i <= i_max; ++i)
            check(val(lbl, {i, i, i}) ==
                      40 * val(lbl, {i - 2, i - 2, i - 2}) - 144 * val(lbl, {i - 4, i - 4, i - 4}),
                  "m_{i,i,i} recursion at <" + name + ">, i=" + std::to_string(i));
    }
    return rep;
}

TableFamily table_family_from_string(const std::string& s) {
    if (s == "single") return TableFamily::Single;
    if (s == "double") return TableFamily::Double;
    if (s == "triple") return TableFamily::Triple;
    throw std::invalid_argument("unknown table family: " + s);
}

std::string table_family_name(TableFamily f) {
    switch (f) {
        case TableFamily::Single: return "single";
        case TableFamily::Double: return "double";
        case TableFamily::Triple: return "triple";
    }
    throw std::logic_error("bad family");
}

CoeffTable make_table(TableFamily family, int i_max, GroupMonomialEvaluator& eval) {
    if (i_max < 1) throw std::invalid_argument("make_table: i_max must be >= 1");
    CoeffTable t;
    t.family = family;
    for (ClassLabel4 lbl : kClassLabels4) t.row_names.push_back(label_name(lbl));

    std::vector<Partition> cols;
    const int lo = family == TableFamily::Single ? 0 : 1;
    for (int i = lo; i <= i_max; ++i) {
        std::vector<int> parts;
        const int reps = family == TableFamily::Single ? 1 : family == TableFamily::Double ? 2 : 3;
        for (int r = 0; r < reps && i > 0; ++r) parts.push_back(i);
        cols.emplace_back(parts);
        std::string name = "m_";
        for (int r = 0; r < reps; ++r) name += (r ? "," : "") + std::to_string(i);
        t.col_names.push_back(name);
    }

    for (ClassLabel4 lbl : kClassLabels4) {
        std::vector<Int> brow, crow;
        for (const auto& mu : cols) {
            brow.push_back(eval.evaluate(mu).inner_product(label_element(lbl)));
            crow.push_back(coeff(lbl, mu));
        }
        t.brute.push_back(std::move(brow));
        t.closed.push_back(std::move(crow));
    }
    t.match = t.brute == t.closed;
    return t;
}

nlohmann::json CoeffTable::to_json() const {
    auto rows_json = [](const std::vector<std::vector<Int>>& rows) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row) r.push_back(v.get_str());
            out.push_back(std::move(r));
        }
        return out;
    };
    return {{"family", table_family_name(family)},
            {"rows", row_names},
            {"cols", col_names},
            {"closed", rows_json(closed)},
            {"brute", rows_json(brute)},
            {"match", match}};
}

std::string CoeffTable::to_csv() const {
    std::ostringstream os;
    os << "class";
    for (const auto& c : col_names) os << ',' << c;
    os << '\n';
    for (std::size_t r = 0; r < row_names.size(); ++r) {
        os << row_names[r];
        for (const auto& v : closed[r]) os << ',' << v.get_str();
        os << '\n';
    }
    return os.str();
}

std::string CoeffTable::to_text() const {
    std::vector<std::size_t> width(col_names.size() + 1, 0);
    width[0] = 5;
    for (std::size_t c = 0; c < col_names.size(); ++c) {
        width[c + 1] = col_names[c].size();
        for (std::size_t r = 0; r < row_names.size(); ++r)
            width[c + 1] = std::max(width[c + 1], closed[r][c].get_str().size());
    }
    std::ostringstream os;
    auto pad = [&](const std::string& s, std::size_t w) {
        os << s;
        for (std::size_t k = s.size(); k < w + 2; ++k) os << ' ';
    };
    pad("", width[0]);
    for (std::size_t c = 0; c < col_names.size(); ++c) pad(col_names[c], width[c + 1]);
    os << '\n';
    for (std::size_t r = 0; r < row_names.size(); ++r) {
        pad(row_names[r], width[0]);
        for (std::size_t c = 0; c < col_names.size(); ++c) pad(closed[r][c].get_str(), width[c + 1]);
        os << '\n';
    }
    return os.str();
}

}  // namespace jmcentre
