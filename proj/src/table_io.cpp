#include "grasscoh/table_io.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "grasscoh/errors.hpp"

namespace grasscoh {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "latex") return OutputFormat::Latex;
    throw range_error("unknown format '" + name + "' (text|json|csv|latex)");
}

unsigned worker_threads(size_t tasks) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GRASSCOH_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return std::max(1u, std::min<unsigned>(hw, static_cast<unsigned>(tasks ? tasks : 1)));
}

namespace {

template <typename Fn>
void parallel_rows(size_t rows, Fn&& fn) {
    unsigned workers = worker_threads(rows);
    if (workers <= 1) {
        for (size_t i = 0; i < rows; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < rows; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

json rationals_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

json descriptor_json_impl(const RingDescriptorPtr& d) {
    json j;
    j["family"] = d->has_e ? "hpq+e" : "hpq";
    j["p"] = d->p;
    j["q"] = d->q;
    j["weight"] = d->weight;
    j["c"] = rationals_json(d->c);
    if (d->has_e) {
        j["e_degree"] = d->e_degree;
        j["e_square"] = d->e_square.str();
    }
    return j;
}

json descriptor_json_impl(const SquarefreeDescriptorPtr& d) {
    json j;
    j["family"] = d->variant == SquarefreeVariant::COverA ? "squarefree-C" : "squarefree-D";
    j["n"] = d->n;
    j["weight"] = 2;
    j["t"] = rationals_json(d->t);
    if (d->variant == SquarefreeVariant::DOverA) j["tbar_n"] = d->tbar_n.str();
    return j;
}

json descriptor_json_impl(const ExteriorDescriptorPtr& d) {
    json j;
    j["family"] = "exterior";
    j["label"] = d->case_label;
    j["degrees"] = d->degrees;
    if (d->clifford) {
        j["clifford"] = true;
        j["square"] = d->square.str();
    }
    return j;
}

struct HpqAdapter {
    RingDescriptorPtr d;
    std::vector<RingElement> elems;

    explicit HpqAdapter(RingDescriptorPtr desc) : d(std::move(desc)) {
        for (const auto& m : d->basis) elems.push_back(RingElement::monomial(d, m));
        if (d->has_e) {
            RingElement e = RingElement::e(d);
            size_t n = elems.size();
            for (size_t i = 0; i < n; ++i) elems.push_back(elems[i] * e);
        }
    }
    size_t dim() const { return elems.size(); }
    std::vector<std::string> labels() const { return d->basis_labels(); }
    std::pair<std::vector<std::string>, std::string> cell(size_t i, size_t j) const {
        RingElement prod = elems[i] * elems[j];
        std::vector<std::string> coords;
        coords.reserve(dim());
        for (const auto& m : d->basis) coords.push_back(prod.coefficient(m).str());
        if (d->has_e)
            for (const auto& m : d->basis) coords.push_back(prod.coefficient(m, true).str());
        return {std::move(coords), prod.str()};
    }
};

struct SquarefreeAdapter {
    SquarefreeDescriptorPtr d;
    std::vector<MultiIndex> basis;

    explicit SquarefreeAdapter(SquarefreeDescriptorPtr desc)
        : d(std::move(desc)), basis(d->basis()) {}
    size_t dim() const { return basis.size(); }
    std::vector<std::string> labels() const { return d->basis_labels(); }
    std::pair<std::vector<std::string>, std::string> cell(size_t i, size_t j) const {
        SquarefreeCoords ci, cj;
        ci.emplace(basis[i], Rational(1));
        cj.emplace(basis[j], Rational(1));
        SquarefreeElement prod = SquarefreeElement(d, ci) * SquarefreeElement(d, cj);
        std::vector<std::string> coords;
        coords.reserve(dim());
        for (const auto& m : basis) coords.push_back(prod.coefficient(m).str());
        return {std::move(coords), prod.str()};
    }
};

struct ExteriorAdapter {
    ExteriorDescriptorPtr d;
    std::vector<std::vector<int>> basis;

    explicit ExteriorAdapter(ExteriorDescriptorPtr desc)
        : d(std::move(desc)), basis(d->basis()) {}
    size_t dim() const { return basis.size(); }
    std::vector<std::string> labels() const { return d->basis_labels(); }
    std::pair<std::vector<std::string>, std::string> cell(size_t i, size_t j) const {
        ExteriorElement::Coords ci, cj;
        ci.emplace(basis[i], Rational(1));
        cj.emplace(basis[j], Rational(1));
        ExteriorElement prod = ExteriorElement(d, ci) * ExteriorElement(d, cj);
        std::vector<std::string> coords;
        coords.reserve(dim());
        for (const auto& s : basis) coords.push_back(prod.coefficient(s).str());
        return {std::move(coords), prod.str()};
    }
};

template <typename Adapter>
TableModel build_table(const Adapter& a, std::string desc_json) {
    TableModel t;
    t.descriptor_json = std::move(desc_json);
    t.basis = a.labels();
    const size_t n = a.dim();
    t.coords.assign(n, {});
    t.entries.assign(n, {});
    parallel_rows(n, [&](size_t i) {
        t.coords[i].resize(n);
        t.entries[i].resize(n);
        for (size_t j = 0; j < n; ++j) {
            auto [coords, entry] = a.cell(i, j);
            t.coords[i][j] = std::move(coords);
            t.entries[i][j] = std::move(entry);
        }
    });
    return t;
}

}  // namespace

std::string descriptor_json(const BuiltRing& ring) {
    return std::visit([](const auto& d) { return descriptor_json_impl(d).dump(); }, ring);
}

TableModel multiplication_table(const BuiltRing& ring) {
    return std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, RingDescriptorPtr>)
                return build_table(HpqAdapter(d), descriptor_json(ring));
            else if constexpr (std::is_same_v<T, SquarefreeDescriptorPtr>)
                return build_table(SquarefreeAdapter(d), descriptor_json(ring));
            else
                return build_table(ExteriorAdapter(d), descriptor_json(ring));
        },
        ring);
}

std::string emit_text(const TableModel& t) {
    const size_t n = t.basis.size();
    if (n <= 1) return "(trivial algebra: basis {1})\n";
    // Drop the unit row/column (index 0); those products are trivial.
    std::vector<size_t> idx;
    for (size_t i = 1; i < n; ++i) idx.push_back(i);
    const size_t m = idx.size();
    std::vector<std::vector<std::string>> grid(m + 1, std::vector<std::string>(m + 1));
    grid[0][0] = "*";
    for (size_t a = 0; a < m; ++a) {
        grid[0][a + 1] = t.basis[idx[a]];
        grid[a + 1][0] = t.basis[idx[a]];
        for (size_t b = 0; b < m; ++b) grid[a + 1][b + 1] = t.entries[idx[a]][idx[b]];
    }
    std::vector<size_t> width(m + 1, 0);
    for (const auto& row : grid)
        for (size_t c = 0; c <= m; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : grid) {
        for (size_t c = 0; c <= m; ++c) {
            if (c) os << " | ";
            os << row[c];
            if (c + 1 <= m)
                for (size_t pad = row[c].size(); pad < width[c]; ++pad) os << ' ';
        }
        os << '\n';
    }
    return os.str();
}

std::string emit_json(const TableModel& t) {
    json j;
    j["descriptor"] = json::parse(t.descriptor_json);
    j["basis"] = t.basis;
    json table = json::array();
    for (const auto& row : t.coords) {
        json jrow = json::array();
        for (const auto& cell : row) jrow.push_back(cell);
        table.push_back(std::move(jrow));
    }
    j["table"] = std::move(table);
    return j.dump(2) + "\n";
}

std::string emit_csv(const TableModel& t) {
    std::ostringstream os;
    os << "*";
    for (const auto& b : t.basis) os << ',' << b;
    os << '\n';
    for (size_t i = 0; i < t.basis.size(); ++i) {
        os << t.basis[i];
        for (size_t j = 0; j < t.basis.size(); ++j) os << ',' << t.entries[i][j];
        os << '\n';
    }
    return os.str();
}

namespace {

std::string latex_label(const std::string& label) {
    // r1^2*r2 -> $r_1^2r_2$, g1^g3 -> $g_1{\wedge}g_3$
    std::string out = "$";
    for (size_t i = 0; i < label.size(); ++i) {
        char ch = label[i];
        if (std::isalpha(static_cast<unsigned char>(ch)) && i + 1 < label.size() &&
            std::isdigit(static_cast<unsigned char>(label[i + 1]))) {
            out += ch;
            out += '_';
        } else if (ch == '*') {
            // juxtaposition
        } else if (ch == '^' && i + 1 < label.size() && label[i + 1] == 'g') {
            out += "{\\wedge}";
        } else {
            out += ch;
        }
    }
    out += "$";
    return out;
}

}  // namespace

std::string emit_latex(const TableModel& t) {
    const size_t n = t.basis.size();
    std::ostringstream os;
    os << "\\begin{tabular}{|c||";
    for (size_t i = 1; i < n; ++i) os << "c|";
    os << "}\n\\hline\n";
    for (size_t j = 1; j < n; ++j) os << " & " << latex_label(t.basis[j]);
    os << " \\\\\n\\hline\n\\hline\n";
    for (size_t i = 1; i < n; ++i) {
        os << latex_label(t.basis[i]);
        for (size_t j = 1; j < n; ++j) {
            os << " & ";
            if (j >= i) os << latex_label(t.entries[i][j]);
        }
        os << " \\\\\n\\hline\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

std::string emit(const TableModel& t, OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return emit_text(t);
        case OutputFormat::Json: return emit_json(t);
        case OutputFormat::Csv: return emit_csv(t);
        case OutputFormat::Latex: return emit_latex(t);
    }
    throw range_error("emit: unknown format");
}

TableModel table_from_json(const std::string& text) {
    json j = json::parse(text);
    TableModel t;
    t.descriptor_json = j.at("descriptor").dump();
    t.basis = j.at("basis").get<std::vector<std::string>>();
    const size_t n = t.basis.size();
    t.coords.assign(n, {});
    const json& table = j.at("table");
    if (table.size() != n) throw parse_error("table JSON: row count mismatch");
    for (size_t i = 0; i < n; ++i) {
        t.coords[i].resize(n);
        if (table[i].size() != n) throw parse_error("table JSON: column count mismatch");
        for (size_t jx = 0; jx < n; ++jx) {
            t.coords[i][jx] = table[i][jx].get<std::vector<std::string>>();
            for (const auto& s : t.coords[i][jx]) Rational::parse(s);  // validate
        }
    }
    // entries are derived data; leave them empty on parse
    return t;
}

}  // namespace grasscoh
