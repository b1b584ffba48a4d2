#include "grasscoh/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "grasscoh/errors.hpp"

namespace grasscoh {

std::string Shuffle::str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < positions.size(); ++i) {
        if (i) os << ',';
        os << positions[i];
    }
    os << '}';
    return os.str();
}

std::vector<Shuffle> enumerate_shuffles(int p, int q) {
    if (p < 1 || q < 1) throw range_error("enumerate_shuffles: p, q must be >= 1");
    std::vector<Shuffle> out;
    std::vector<int> cur(p);
    for (int i = 0; i < p; ++i) cur[i] = i + 1;
    const int n = p + q;
    while (true) {
        out.push_back(Shuffle{cur});
        // next lexicographic p-subset of {1..n}
        int i = p - 1;
        while (i >= 0 && cur[i] == n - (p - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Rational> shuffle_apply(const Shuffle& sh, std::span<const Rational> v) {
    const size_t n = v.size();
    std::vector<bool> in_first(n + 1, false);
    for (int pos : sh.positions) {
        if (pos < 1 || static_cast<size_t>(pos) > n)
            throw range_error("shuffle_apply: position out of range");
        in_first[pos] = true;
    }
    std::vector<Rational> out;
    out.reserve(n);
    for (int pos : sh.positions) out.push_back(v[pos - 1]);
    for (size_t i = 1; i <= n; ++i)
        if (!in_first[i]) out.push_back(v[i - 1]);
    return out;
}

WeylCase::WeylCase(WeylFamily family_, int p_, int q_) : family(family_), p(p_), q(q_) {
    if (p < 1 || q < 0) throw range_error("WeylCase: bad rank data");
    if (q == 0 && family != WeylFamily::B && family != WeylFamily::D)
        throw unsupported_case_error("WeylCase: single-block case must be family B or D");
    if (q > 0 && family == WeylFamily::D)
        throw unsupported_case_error("WeylCase: two-block D pairs with S(BxB); use SBxB");
}

std::vector<Rational> rho_vector(DeformationCase c, int p, int q) {
    const int n = p + q;
    std::vector<Rational> rho;
    rho.reserve(n);
    switch (c) {
        case DeformationCase::ComplexGrassmannian:
            // ((n-1)/2, (n-3)/2, ..., -(n-1)/2)
            for (int i = 0; i < n; ++i) rho.emplace_back(n - 1 - 2 * i, 2);
            break;
        case DeformationCase::QuaternionGrassmannian:
        case DeformationCase::RealGrassmannianOddOdd:
            // (n, n-1, ..., 1)
            for (int i = 0; i < n; ++i) rho.emplace_back(n - i);
            break;
        case DeformationCase::RealGrassmannianEvenEven:
            // (n-1, ..., 1, 0)
            for (int i = 0; i < n; ++i) rho.emplace_back(n - 1 - i);
            break;
        case DeformationCase::RealGrassmannianEvenOdd:
            // (n - 1/2, ..., 3/2, 1/2)
            for (int i = 0; i < n; ++i) rho.emplace_back(2 * (n - i) - 1, 2);
            break;
        case DeformationCase::LagrangianC:
            if (q != 0) throw range_error("rho_vector: LagrangianC takes (n, 0)");
            for (int i = 0; i < p; ++i) rho.emplace_back(p - i);
            break;
        case DeformationCase::LagrangianD:
            if (q != 0) throw range_error("rho_vector: LagrangianD takes (n, 0)");
            for (int i = 0; i < p; ++i) rho.emplace_back(p - 1 - i);
            break;
    }
    return rho;
}

WeylCase weyl_case_for(DeformationCase c, int p, int q) {
    switch (c) {
        case DeformationCase::ComplexGrassmannian:
            return WeylCase(WeylFamily::A, p, q);
        case DeformationCase::QuaternionGrassmannian:
        case DeformationCase::RealGrassmannianEvenOdd:
        case DeformationCase::RealGrassmannianOddOdd:
            return WeylCase(WeylFamily::B, p, q);
        case DeformationCase::RealGrassmannianEvenEven:
            return WeylCase(WeylFamily::SBxB, p, q);
        case DeformationCase::LagrangianC:
            return WeylCase(WeylFamily::B, p, 0);
        case DeformationCase::LagrangianD:
            return WeylCase(WeylFamily::D, p, 0);
    }
    throw unsupported_case_error("weyl_case_for: unknown case");
}

std::vector<Rational> deformation_parameters(DeformationCase c, int p, int q) {
    auto rho = rho_vector(c, p, q);
    const bool squares = (c != DeformationCase::ComplexGrassmannian);
    const size_t n = rho.size();
    std::vector<Rational> t;
    t.reserve(n);
    for (size_t k = 1; k <= n; ++k)
        t.push_back(squares ? elementary_symmetric_squares(k, rho)
                            : elementary_symmetric(k, rho));
    return t;
}

namespace {

Polynomial swap_vars(const Polynomial& f, size_t i, size_t j) {
    Polynomial out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        std::vector<uint32_t> e(std::max({m.width(), i + 1, j + 1}), 0);
        for (size_t k = 0; k < e.size(); ++k) e[k] = m.exponent(k);
        std::swap(e[i], e[j]);
        out.add_term(MultiIndex(std::move(e)), c);
    }
    return out;
}

Polynomial flip_sign(const Polynomial& f, std::span<const size_t> vars) {
    Polynomial out(f.nvars());
    for (const auto& [m, c] : f.terms()) {
        uint32_t parity = 0;
        for (size_t v : vars) parity += m.exponent(v);
        out.add_term(m, (parity % 2) ? -c : c);
    }
    return out;
}

}  // namespace

bool is_w_k_invariant(const Polynomial& f, const WeylCase& wc) {
    const size_t p = static_cast<size_t>(wc.p);
    const size_t n = static_cast<size_t>(wc.rank());
    if (f.nvars() > n) return false;
    Polynomial g(n);
    for (const auto& [m, c] : f.terms()) g.add_term(m, c);
    // Adjacent transpositions within each block.
    for (size_t i = 0; i + 1 < p; ++i)
        if (swap_vars(g, i, i + 1) != g) return false;
    for (size_t i = p; i + 1 < n; ++i)
        if (swap_vars(g, i, i + 1) != g) return false;
    // Sign-change generators.
    switch (wc.family) {
        case WeylFamily::A:
        case WeylFamily::D:  // single-block S_n
            break;
        case WeylFamily::B:
            if (wc.two_block()) {
                size_t first[] = {p - 1};
                size_t second[] = {n - 1};
                if (flip_sign(g, first) != g) return false;
                if (flip_sign(g, second) != g) return false;
            }
            // single-block B pairs with W_K = S_n: no flips.
            break;
        case WeylFamily::SBxB: {
            size_t paired[] = {p - 1, n - 1};
            if (flip_sign(g, paired) != g) return false;
            break;
        }
    }
    return true;
}

std::vector<Rational> ev_map(const Polynomial& f, std::span<const Rational> nu,
                             const WeylCase& wc) {
    if (!wc.two_block()) throw unsupported_case_error("ev_map: needs a two-block case");
    if (nu.size() != static_cast<size_t>(wc.rank()))
        throw shape_error("ev_map: point dimension mismatch");
    if (!is_w_k_invariant(f, wc))
        throw precondition_error("ev_map: polynomial is not W_K-invariant");
    std::vector<Rational> values;
    for (const Shuffle& sh : enumerate_shuffles(wc.p, wc.q)) {
        auto pt = shuffle_apply(sh, nu);
        values.push_back(f.evaluate(pt));
    }
    return values;
}

std::vector<std::vector<Rational>> shuffle_generator_values(const WeylCase& wc,
                                                            std::span<const Rational> nu) {
    if (!wc.two_block())
        throw unsupported_case_error("shuffle_generator_values: needs a two-block case");
    if (nu.size() != static_cast<size_t>(wc.rank()))
        throw shape_error("shuffle_generator_values: point dimension mismatch");
    std::vector<std::vector<Rational>> out;
    for (const Shuffle& sh : enumerate_shuffles(wc.p, wc.q)) {
        auto pt = shuffle_apply(sh, nu);
        std::span<const Rational> block(pt.data(), static_cast<size_t>(wc.p));
        std::vector<Rational> vals;
        vals.reserve(wc.p);
        for (int k = 1; k <= wc.p; ++k)
            vals.push_back(wc.squares() ? elementary_symmetric_squares(k, block)
                                        : elementary_symmetric(k, block));
        out.push_back(std::move(vals));
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (out[i] == out[j])
                throw invariant_violation(
                    "shuffle_generator_values: orbit points collide; the chosen point has a "
                    "nontrivial stabilizer");
    return out;
}

std::string eval_vector_to_json(std::span<const Rational> values) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& v : values) arr.push_back(v.str());
    return arr.dump();
}

std::vector<Rational> eval_vector_from_json(const std::string& text) {
    nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw parse_error("eval vector JSON: expected an array");
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(Rational::parse(v.get<std::string>()));
    return out;
}

}  // namespace grasscoh
