#include "grasscoh/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "grasscoh/errors.hpp"

namespace grasscoh {

std::string field_name(BaseField f) {
    switch (f) {
        case BaseField::R: return "R";
        case BaseField::C: return "C";
        case BaseField::H: return "H";
    }
    return "?";
}

namespace {

std::string gk_unitary(const std::string& u, int a, int b) {
    return u + "(" + std::to_string(a + b) + ")/" + u + "(" + std::to_string(a) + ")x" + u +
           "(" + std::to_string(b) + ")";
}

}  // namespace

SpaceSpec ordinary_grassmannian(BaseField f, int k, int m) {
    if (k < 1 || m < 1)
        throw range_error("ordinary_grassmannian: need k, m >= 1");
    SpaceSpec s;
    s.field = f;
    s.name = "Gr_" + std::to_string(k) + "(" + field_name(f) + "^" + std::to_string(k + m) + ")";
    switch (f) {
        case BaseField::C: {
            int p = std::min(k, m), q = std::max(k, m);
            s.symmetric_space = gk_unitary("U", k, m);
            s.family = RingFamily::Hpq;
            s.p = p;
            s.q = q;
            s.weight = 2;
            s.supports_clifford = true;
            s.deformation = DeformationCase::ComplexGrassmannian;
            break;
        }
        case BaseField::H: {
            int p = std::min(k, m), q = std::max(k, m);
            s.symmetric_space = gk_unitary("Sp", k, m);
            s.family = RingFamily::Hpq;
            s.p = p;
            s.q = q;
            s.weight = 4;
            s.supports_clifford = true;
            s.deformation = DeformationCase::QuaternionGrassmannian;
            break;
        }
        case BaseField::R: {
            s.symmetric_space = "SO(" + std::to_string(k + m) + ")/S(O(" + std::to_string(k) +
                                ")xO(" + std::to_string(m) + "))";
            s.weight = 4;
            const bool k_even = k % 2 == 0, m_even = m % 2 == 0;
            int a = k / 2, b = m / 2;  // floor halves
            if (k_even && m_even) {
                s.family = RingFamily::Hpq;
                s.p = std::min(a, b);
                s.q = std::max(a, b);
                s.supports_clifford = true;
                s.deformation = DeformationCase::RealGrassmannianEvenEven;
            } else if (k_even != m_even) {
                // one even, one odd: (2p, 2q+1) after swapping if needed
                int pe = k_even ? a : b;  // half of the even one
                int qo = k_even ? b : a;  // floor-half of the odd one
                if (pe < 1 || qo < 1)
                    throw range_error("ordinary_grassmannian: parity case needs k, m >= 2");
                s.family = RingFamily::Hpq;
                s.p = std::min(pe, qo);
                s.q = std::max(pe, qo);
                s.supports_clifford = true;
                s.deformation = DeformationCase::RealGrassmannianEvenOdd;
            } else {
                // both odd: almost equal rank, extra generator e
                if (a < 1 || b < 1)
                    throw range_error(
                        "ordinary_grassmannian: odd-odd case needs k, m >= 3");
                s.family = RingFamily::HpqE;
                s.p = std::min(a, b);
                s.q = std::max(a, b);
                s.supports_clifford = true;
                s.deformation = DeformationCase::RealGrassmannianOddOdd;
            }
            break;
        }
    }
    return s;
}

SpaceSpec symplectic_lagrangian(BaseField f, int n) {
    if (n < 1) throw range_error("symplectic_lagrangian: need n >= 1");
    SpaceSpec s;
    s.field = f;
    s.n = n;
    s.name = "LGr(" + field_name(f) + "^" + std::to_string(2 * n) + ")";
    switch (f) {
        case BaseField::C:
            s.symmetric_space = "Sp(" + std::to_string(n) + ")/U(" + std::to_string(n) + ")";
            s.family = RingFamily::SquarefreeC;
            s.weight = 2;
            s.supports_clifford = true;
            s.deformation = DeformationCase::LagrangianC;
            break;
        case BaseField::R:
            s.symmetric_space = "U(" + std::to_string(n) + ")/O(" + std::to_string(n) + ")";
            s.family = RingFamily::Exterior;
            s.exterior_case = ExteriorCase::UnitaryOverOrthogonal;
            s.exterior_degrees = exterior_degrees(*s.exterior_case, n);
            break;
        case BaseField::H:
            throw unsupported_case_error("symplectic_lagrangian: F must be R or C");
    }
    return s;
}

SpaceSpec orthogonal_lagrangian(int n) {
    if (n < 2) throw range_error("orthogonal_lagrangian: need n >= 2");
    SpaceSpec s;
    s.field = BaseField::C;
    s.n = n;
    s.name = "OLGr+(C^" + std::to_string(2 * n) + ")";
    s.symmetric_space = "SO(" + std::to_string(2 * n) + ")/U(" + std::to_string(n) + ")";
    s.family = RingFamily::SquarefreeD;
    s.weight = 2;
    s.supports_clifford = true;
    s.deformation = DeformationCase::LagrangianD;
    return s;
}

SpaceSpec hermitian_lagrangian(BaseField f, int n) {
    if (n < 1) throw range_error("hermitian_lagrangian: need n >= 1");
    SpaceSpec s;
    s.field = f;
    s.n = n;
    s.family = RingFamily::Exterior;
    switch (f) {
        case BaseField::R:
            // connected-component model: SO(n) x SO(n) / diagonal
            s.name = "HLGr+(R^" + std::to_string(2 * n) + ")";
            s.symmetric_space = "SO(" + std::to_string(n) + ")^2/SO(" + std::to_string(n) + ")";
            if (n % 2 == 0) {
                s.exterior_case = ExteriorCase::GroupOrthogonalEven;
                s.n = n / 2;
            } else {
                s.n = (n - 1) / 2;
                if (s.n == 0) {
                    // SO(1) is trivial: empty generator list
                    s.exterior_degrees.clear();
                    return s;
                }
                s.exterior_case = ExteriorCase::GroupOrthogonalOdd;
            }
            break;
        case BaseField::C:
            s.name = "HLGr(C^" + std::to_string(2 * n) + ")";
            s.symmetric_space = "U(" + std::to_string(n) + ")^2/U(" + std::to_string(n) + ")";
            s.exterior_case = ExteriorCase::GroupUnitary;
            break;
        case BaseField::H:
            s.name = "HLGr(H^" + std::to_string(2 * n) + ")";
            s.symmetric_space = "Sp(" + std::to_string(n) + ")^2/Sp(" + std::to_string(n) + ")";
            s.exterior_case = ExteriorCase::GroupSymplectic;
            break;
    }
    s.exterior_degrees = exterior_degrees(*s.exterior_case, s.n);
    return s;
}

SpaceSpec quaternion_skew_lagrangian(int n) {
    if (n < 1) throw range_error("quaternion_skew_lagrangian: need n >= 1");
    SpaceSpec s;
    s.field = BaseField::H;
    s.n = n;
    s.name = "LGr*(H^" + std::to_string(2 * n) + ")";
    s.symmetric_space = "U(" + std::to_string(2 * n) + ")/Sp(" + std::to_string(n) + ")";
    s.family = RingFamily::Exterior;
    s.exterior_case = ExteriorCase::UnitaryOverSymplectic;
    s.exterior_degrees = exterior_degrees(*s.exterior_case, n);
    return s;
}

namespace {

struct NameParser {
    const std::string& s;
    size_t pos = 0;

    bool eat(const std::string& lit) {
        if (s.compare(pos, lit.size(), lit) == 0) {
            pos += lit.size();
            return true;
        }
        return false;
    }
    std::optional<int> number() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        return std::stoi(s.substr(start, pos - start));
    }
    std::optional<BaseField> field() {
        if (eat("R")) return BaseField::R;
        if (eat("C")) return BaseField::C;
        if (eat("H")) return BaseField::H;
        return std::nullopt;
    }
    bool done() const { return pos == s.size(); }
};

std::optional<SpaceSpec> parse_grassmannian_name(const std::string& text) {
    NameParser p{text};
    if (p.eat("Gr_")) {
        auto k = p.number();
        if (!k || !p.eat("(")) return std::nullopt;
        auto f = p.field();
        if (!f || !p.eat("^")) return std::nullopt;
        auto n = p.number();
        if (!n || !p.eat(")") || !p.done() || *n <= *k) return std::nullopt;
        return ordinary_grassmannian(*f, *k, *n - *k);
    }
    if (p.eat("LGr*(H^")) {
        auto n = p.number();
        if (!n || !p.eat(")") || !p.done() || *n % 2) return std::nullopt;
        return quaternion_skew_lagrangian(*n / 2);
    }
    if (p.eat("LGr(")) {
        auto f = p.field();
        if (!f || !p.eat("^")) return std::nullopt;
        auto n = p.number();
        if (!n || !p.eat(")") || !p.done() || *n % 2) return std::nullopt;
        return symplectic_lagrangian(*f, *n / 2);
    }
    if (p.eat("OLGr+(C^") || p.eat("OLGr(C^")) {
        auto n = p.number();
        if (!n || !p.eat(")") || !p.done() || *n % 2) return std::nullopt;
        return orthogonal_lagrangian(*n / 2);
    }
    if (p.eat("HLGr+(") || p.eat("HLGr(")) {
        auto f = p.field();
        if (!f || !p.eat("^")) return std::nullopt;
        auto n = p.number();
        if (!n || !p.eat(")") || !p.done() || *n % 2) return std::nullopt;
        return hermitian_lagrangian(*f, *n / 2);
    }
    return std::nullopt;
}

std::optional<SpaceSpec> parse_symmetric_space_name(const std::string& text) {
    NameParser p{text};
    auto group = [&](const std::string& u) -> std::optional<int> {
        size_t save = p.pos;
        if (!p.eat(u + "(")) return std::nullopt;
        auto n = p.number();
        if (!n || !p.eat(")")) {
            p.pos = save;
            return std::nullopt;
        }
        return n;
    };

    // Leading group: SO before Sp before U to avoid prefix clashes... note
    // "SO" and "Sp" and "U" are mutually prefix-free, so order is free.
    std::string head;
    std::optional<int> n;
    for (const char* g : {"SO", "Sp", "U"}) {
        if ((n = group(g))) {
            head = g;
            break;
        }
    }
    if (!n) return std::nullopt;

    if (p.eat("^2/")) {  // group cases G^2 / G
        auto m = group(head);
        if (!m || !p.done() || *m != *n) return std::nullopt;
        if (head == "U") return hermitian_lagrangian(BaseField::C, *n);
        if (head == "Sp") return hermitian_lagrangian(BaseField::H, *n);
        return hermitian_lagrangian(BaseField::R, *n);
    }
    if (!p.eat("/")) return std::nullopt;

    if (head == "U") {
        size_t save = p.pos;
        if (auto a = group("U")) {
            if (p.eat("x")) {
                if (auto b = group("U"); b && p.done() && *a + *b == *n)
                    return ordinary_grassmannian(BaseField::C, *a, *b);
            }
            p.pos = save;
        }
        if (auto m = group("O"); m && p.done() && *m == *n)
            return symplectic_lagrangian(BaseField::R, *n);
        p.pos = save;
        if (auto m = group("Sp"); m && p.done() && 2 * *m == *n)
            return quaternion_skew_lagrangian(*m);
        return std::nullopt;
    }
    if (head == "Sp") {
        size_t save = p.pos;
        if (auto a = group("Sp")) {
            if (p.eat("x")) {
                if (auto b = group("Sp"); b && p.done() && *a + *b == *n)
                    return ordinary_grassmannian(BaseField::H, *a, *b);
            }
            p.pos = save;
        }
        if (auto m = group("U"); m && p.done() && *m == *n)
            return symplectic_lagrangian(BaseField::C, *n);
        return std::nullopt;
    }
    // head == "SO"
    size_t save = p.pos;
    if (p.eat("S(O(")) {
        auto k = p.number();
        if (k && p.eat(")xO(")) {
            auto m = p.number();
            if (m && p.eat("))") && p.done() && *k + *m == *n)
                return ordinary_grassmannian(BaseField::R, *k, *m);
        }
        p.pos = save;
    }
    if (auto m = group("U"); m && p.done() && 2 * *m == *n)
        return orthogonal_lagrangian(*m);
    return std::nullopt;
}

size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= b.size(); ++j) {
            size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

}  // namespace

SpaceSpec lookup(const std::string& name) {
    if (auto s = parse_grassmannian_name(name)) return *s;
    if (auto s = parse_symmetric_space_name(name)) return *s;
    // Nearest-name suggestion among small instantiations of every family.
    std::vector<std::string> candidates;
    for (const auto& row : catalog_rows()) candidates.push_back(row.example);
    for (int k = 1; k <= 3; ++k)
        for (int m = k; m <= 5; ++m)
            for (BaseField f : {BaseField::R, BaseField::C, BaseField::H})
                try {
                    candidates.push_back(ordinary_grassmannian(f, k, m).name);
                } catch (const error&) {
                }
    for (int n = 1; n <= 4; ++n) {
        candidates.push_back(symplectic_lagrangian(BaseField::C, n).name);
        candidates.push_back(symplectic_lagrangian(BaseField::R, n).name);
        candidates.push_back(quaternion_skew_lagrangian(n).name);
        candidates.push_back(hermitian_lagrangian(BaseField::C, n).name);
        candidates.push_back(hermitian_lagrangian(BaseField::H, n).name);
        if (n >= 2) candidates.push_back(orthogonal_lagrangian(n).name);
    }
    std::string best;
    size_t best_d = SIZE_MAX;
    for (const auto& c : candidates) {
        size_t d = edit_distance(name, c);
        if (d < best_d) {
            best_d = d;
            best = c;
        }
    }
    throw lookup_error("unknown space '" + name + "'; nearest known name: " + best, best);
}

BuiltRing build_ring(const SpaceSpec& spec, RingMode mode) {
    const bool clifford = mode == RingMode::Clifford;
    if (clifford && !spec.supports_clifford)
        throw unsupported_case_error("build_ring: " + spec.name +
                                     " has no Clifford deformation implemented");
    switch (spec.family) {
        case RingFamily::Hpq:
        case RingFamily::HpqE: {
            std::vector<Rational> c(spec.p + spec.q, Rational(0));
            if (clifford) c = deformation_parameters(*spec.deformation, spec.p, spec.q);
            bool with_e = spec.family == RingFamily::HpqE;
            return RingDescriptor::make(spec.p, spec.q, std::move(c), spec.weight, with_e,
                                        with_e ? Rational(clifford ? 1 : 0) : Rational(0));
        }
        case RingFamily::SquarefreeC: {
            std::vector<Rational> t(spec.n, Rational(0));
            if (clifford) t = deformation_parameters(DeformationCase::LagrangianC, spec.n, 0);
            return SquarefreeDescriptor::make(SquarefreeVariant::COverA, spec.n, std::move(t));
        }
        case RingFamily::SquarefreeD: {
            std::vector<Rational> t(spec.n, Rational(0));
            Rational tbar(0);
            if (clifford) {
                t = deformation_parameters(DeformationCase::LagrangianD, spec.n, 0);
                // tbar_n is the product of the coordinates of rho, which ends
                // with a zero.
                tbar = Rational(0);
            }
            return SquarefreeDescriptor::make(SquarefreeVariant::DOverA, spec.n, std::move(t),
                                              tbar);
        }
        case RingFamily::Exterior: {
            if (clifford)
                throw unsupported_case_error(
                    "build_ring: Clifford mode on an exterior-only case");
            if (spec.exterior_case)
                return ExteriorDescriptor::make(*spec.exterior_case, spec.n);
            return ExteriorDescriptor::make_raw(spec.symmetric_space, spec.exterior_degrees);
        }
    }
    throw unsupported_case_error("build_ring: unhandled family");
}

std::vector<CatalogRow> catalog_rows() {
    return {
        {"Gr_k(R^{k+m})", "R", "SO(k+m)/S(O(k)xO(m))", "hpq / hpq+e by parity", "4", true,
         "Gr_2(R^5)"},
        {"Gr_p(C^{p+q})", "C", "U(p+q)/U(p)xU(q)", "hpq", "2", true, "Gr_2(C^5)"},
        {"Gr_p(H^{p+q})", "H", "Sp(p+q)/Sp(p)xSp(q)", "hpq", "4", true, "Gr_2(H^5)"},
        {"LGr(R^{2n})", "R", "U(n)/O(n)", "exterior", "-", false, "LGr(R^6)"},
        {"LGr(C^{2n})", "C", "Sp(n)/U(n)", "squarefree-C", "2", true, "LGr(C^6)"},
        {"OLGr+(C^{2n})", "C", "SO(2n)/U(n)", "squarefree-D", "2", true, "OLGr+(C^6)"},
        {"HLGr+(R^{2n})", "R", "SO(n)^2/SO(n)", "exterior", "-", false, "HLGr+(R^8)"},
        {"HLGr(C^{2n})", "C", "U(n)^2/U(n)", "exterior", "-", false, "HLGr(C^6)"},
        {"HLGr(H^{2n})", "H", "Sp(n)^2/Sp(n)", "exterior", "-", false, "HLGr(H^6)"},
        {"LGr*(H^{2n})", "H", "U(2n)/Sp(n)", "exterior", "-", false, "LGr*(H^4)"},
    };
}

Polynomial gaussian_binomial(int p, int q, int w) {
    if (p < 1 || q < 1 || w < 1) throw range_error("gaussian_binomial: need p, q, w >= 1");
    // prod (1 - t^{w(q+i)}) / (1 - t^{w i}), via exact univariate division.
    auto one_minus = [&](int e) {
        Polynomial f = Polynomial::constant(1, Rational(1));
        f.add_term(MultiIndex::variable(0, static_cast<uint32_t>(e)), Rational(-1));
        return f;
    };
    Polynomial num = Polynomial::constant(1, Rational(1));
    for (int i = 1; i <= p; ++i) num = num * one_minus(w * (q + i));
    for (int i = 1; i <= p; ++i) {
        Polynomial den = one_minus(w * i);
        // long division, exact by construction
        Polynomial quot(1);
        Polynomial rem = num;
        while (!rem.is_zero() && rem.total_degree() >= den.total_degree()) {
            auto lead_rem = std::prev(rem.terms().end());
            auto lead_den = std::prev(den.terms().end());
            uint32_t shift = lead_rem->first.exponent(0) - lead_den->first.exponent(0);
            Rational coef = lead_rem->second / lead_den->second;
            Polynomial t = Polynomial::monomial(1, MultiIndex::variable(0, shift), coef);
            quot = quot + t;
            rem = rem - den * t;
        }
        if (!rem.is_zero())
            throw invariant_violation("gaussian_binomial: division is not exact");
        num = quot;
    }
    return num;
}

long euler_characteristic(const SpaceSpec& spec) {
    switch (spec.family) {
        case RingFamily::Hpq: {
            Rational b = binomial(spec.p + spec.q, spec.p);
            return std::stol(b.str());
        }
        case RingFamily::HpqE:
            return 0;
        case RingFamily::SquarefreeC:
            return 1L << spec.n;
        case RingFamily::SquarefreeD:
            return 1L << (spec.n - 1);
        case RingFamily::Exterior:
            return spec.exterior_degrees.empty() ? 1 : 0;
    }
    return 0;
}

}  // namespace grasscoh
