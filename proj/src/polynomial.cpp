#include "grasscoh/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "grasscoh/errors.hpp"

namespace grasscoh {

Polynomial Polynomial::constant(size_t nvars, Rational c) {
    Polynomial p(nvars);
    p.add_term(MultiIndex(), c);
    return p;
}

Polynomial Polynomial::variable(size_t nvars, size_t i) {
    if (i >= nvars) throw range_error("Polynomial::variable: index out of range");
    Polynomial p(nvars);
    p.add_term(MultiIndex::variable(i), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(size_t nvars, MultiIndex m, Rational c) {
    if (m.width() > nvars) throw range_error("Polynomial::monomial: too many variables");
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

uint32_t Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.total_degree();
}

void Polynomial::add_term(const MultiIndex& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw shape_error("Polynomial: variable counts differ (" + std::to_string(nvars_) +
                          " vs " + std::to_string(o.nvars_) + ")");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() < nvars_)
        throw shape_error("Polynomial::evaluate: point has too few coordinates");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < m.width(); ++i)
            if (m.exponent(i) > 0) t *= point[i].pow(m.exponent(i));
        acc += t;
    }
    return acc;
}

Polynomial Polynomial::substitute(size_t i, const Polynomial& g) const {
    size_t out_vars = std::max(nvars_, g.nvars());
    Polynomial r(out_vars);
    for (const auto& [m, c] : terms_) {
        uint32_t e = m.exponent(i);
        std::vector<uint32_t> rest(m.exponents());
        if (i < rest.size()) rest[i] = 0;
        Polynomial term = Polynomial::monomial(out_vars, MultiIndex(std::move(rest)), c);
        for (uint32_t k = 0; k < e; ++k) {
            Polynomial gg(out_vars);
            for (const auto& [mg, cg] : g.terms()) gg.add_term(mg, cg);
            term = term * gg;
        }
        for (const auto& [mt, ct] : term.terms()) r.add_term(mt, ct);
    }
    return r;
}

std::string Polynomial::str(std::string_view prefix) const {
    if (terms_.empty()) return "0";
    // Display order: degree descending, x1-dominant first within a degree.
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        uint32_t da = a->first.total_degree(), db = b->first.total_degree();
        if (da != db) return da > db;
        return MultiIndex::cmp(a->first, b->first) > 0;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [m, c] = *t;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_unit()) {
            os << a.str();
        } else if (a.is_one()) {
            os << m.str(prefix);
        } else {
            os << a.str() << '*' << m.str(prefix);
        }
    }
    return os.str();
}

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;
    size_t nvars;
    std::string_view prefix;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char ch) {
        if (peek() == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw parse_error("Polynomial: " + why + " at position " + std::to_string(pos) +
                          " in '" + std::string(text) + "'");
    }

    unsigned long parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoul(std::string(text.substr(start, pos - start)));
    }

    // coefficient | variable[^k] ('*' ...)*
    void parse_term(Polynomial& out, int sign) {
        Rational coeff(sign);
        MultiIndex mono;
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                unsigned long num = parse_uint();
                std::string lit = std::to_string(num);
                if (consume('/')) lit += "/" + std::to_string(parse_uint());
                coeff *= Rational::parse(lit);
                saw_factor = true;
            } else if (text.substr(pos, prefix.size()) == prefix) {
                pos += prefix.size();
                unsigned long idx = parse_uint();
                if (idx == 0 || idx > nvars) fail("variable index out of range");
                uint32_t e = 1;
                if (consume('^')) e = static_cast<uint32_t>(parse_uint());
                mono = mono.times(MultiIndex::variable(idx - 1, e));
                saw_factor = true;
            } else {
                fail("expected coefficient or variable");
            }
            if (!consume('*')) break;
        }
        if (!saw_factor) fail("empty term");
        out.add_term(mono, coeff);
    }

    Polynomial parse() {
        Polynomial out(nvars);
        int sign = 1;
        if (consume('-'))
            sign = -1;
        else
            consume('+');
        parse_term(out, sign);
        while (!eof()) {
            if (consume('+'))
                sign = 1;
            else if (consume('-'))
                sign = -1;
            else
                fail("expected '+' or '-'");
            parse_term(out, sign);
        }
        return out;
    }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, size_t nvars, std::string_view prefix) {
    Parser p{text, 0, nvars, prefix};
    return p.parse();
}

std::string univariate_str(const Polynomial& f, std::string_view var) {
    if (f.nvars() > 1) throw shape_error("univariate_str: polynomial has several variables");
    std::string s = f.str("@");
    std::string out;
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '@') {
            out += var;
            ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;  // index
        } else {
            out += s[i++];
        }
    }
    return out;
}

Polynomial elementary_symmetric(size_t k, size_t nvars) {
    if (k > nvars) throw range_error("elementary_symmetric: k out of range");
    // Coefficient of z^k in prod_i (1 + x_i z), computed by the obvious DP.
    std::vector<Polynomial> coef;
    coef.reserve(k + 1);
    for (size_t j = 0; j <= k; ++j) coef.push_back(Polynomial::zero(nvars));
    coef[0] = Polynomial::constant(nvars, Rational(1));
    for (size_t i = 0; i < nvars; ++i) {
        Polynomial xi = Polynomial::variable(nvars, i);
        for (size_t j = std::min(k, i + 1); j >= 1; --j) coef[j] = coef[j] + coef[j - 1] * xi;
    }
    return coef[k];
}

Rational elementary_symmetric(size_t k, std::span<const Rational> point) {
    if (k > point.size()) throw range_error("elementary_symmetric: k out of range");
    std::vector<Rational> coef(k + 1, Rational(0));
    coef[0] = Rational(1);
    for (size_t i = 0; i < point.size(); ++i)
        for (size_t j = std::min(k, i + 1); j >= 1; --j) coef[j] += coef[j - 1] * point[i];
    return coef[k];
}

Rational elementary_symmetric_squares(size_t k, std::span<const Rational> point) {
    std::vector<Rational> squares;
    squares.reserve(point.size());
    for (const Rational& x : point) squares.push_back(x * x);
    return elementary_symmetric(k, squares);
}

}  // namespace grasscoh
