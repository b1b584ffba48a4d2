#include <algorithm>
#include <vector>

#include "grasscoh/errors.hpp"
#include "grasscoh/hpq.hpp"

// Independent construction of the rewrite table through the determinant
// identities: for each degree-(q+1) monomial, q of the defining relations are
// read as a linear system for s_1..s_q whose determinant has the monomial
// divided by its lowest generator as leading term; clearing denominators with
// Cramer's rule yields a relation led by the monomial itself. Costs grow with
// the determinant size, so this path is meant for small instances.

namespace grasscoh {

namespace {

// r_j as a polynomial in p variables; r_0 = 1, out of range = 0.
Polynomial r_poly(int j, int p) {
    if (j == 0) return Polynomial::constant(p, Rational(1));
    if (j < 0 || j > p) return Polynomial::zero(p);
    return Polynomial::variable(p, j - 1);
}

Polynomial det(const std::vector<std::vector<Polynomial>>& a) {
    const size_t n = a.size();
    if (n == 0) return Polynomial::constant(0, Rational(1));
    const size_t nv = a[0][0].nvars();
    // Expansion over column subsets, one row at a time. Picking column c for
    // the current row adds an inversion for every already-used column above c.
    const size_t full = (size_t{1} << n);
    std::vector<Polynomial> cur(full, Polynomial::zero(nv));
    cur[0] = Polynomial::constant(nv, Rational(1));
    for (size_t row = 0; row < n; ++row) {
        std::vector<Polynomial> next(full, Polynomial::zero(nv));
        for (size_t mask = 0; mask < full; ++mask) {
            if (static_cast<size_t>(__builtin_popcountll(mask)) != row) continue;
            if (cur[mask].is_zero()) continue;
            for (size_t col = 0; col < n; ++col) {
                if (mask & (size_t{1} << col)) continue;
                if (a[row][col].is_zero()) continue;
                int above = __builtin_popcountll(mask >> (col + 1));
                Polynomial contrib = cur[mask] * a[row][col];
                if (above & 1) contrib = -contrib;
                next[mask | (size_t{1} << col)] = next[mask | (size_t{1} << col)] + contrib;
            }
        }
        cur = std::move(next);
    }
    return cur[full - 1];
}

}  // namespace

RewriteTable cramer_rewrite_table(int p, int q, std::span<const Rational> c) {
    if (p < 1 || q < p) throw range_error("cramer_rewrite_table: need 1 <= p <= q");
    if (c.size() != static_cast<size_t>(p + q))
        throw shape_error("cramer_rewrite_table: c must have length p+q");
    auto c_at = [&](int k) { return (k >= 1 && k <= p + q) ? c[k - 1] : Rational(0); };

    auto targets = monomials_of_degree(p, q + 1);
    // The determinant identities resolve a monomial through same-degree
    // monomials that are lexicographically larger (more weight on low
    // indices), so targets are processed in lex-descending order.
    auto lex_cmp = [](const MultiIndex& a, const MultiIndex& b) {
        size_t w = std::max(a.width(), b.width());
        for (size_t i = 0; i < w; ++i) {
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
        }
        return 0;
    };
    std::sort(targets.begin(), targets.end(),
              [&](const MultiIndex& a, const MultiIndex& b) { return lex_cmp(a, b) > 0; });

    RewriteTable table;
    for (const MultiIndex& target : targets) {
        // target = r_{i_1}^{m_1} ... r_{i_a}^{m_a}, i_1 < ... < i_a.
        std::vector<std::pair<int, uint32_t>> factors;  // (generator index, multiplicity)
        for (size_t i = 0; i < target.width(); ++i)
            if (target.exponent(i) > 0) factors.emplace_back(static_cast<int>(i + 1),
                                                             target.exponent(i));
        const int i1 = factors.front().first;

        // Owner of slot t = 1..q: the first block has m_1 - 1 slots, later
        // blocks m_b slots each.
        std::vector<int> owner(q + 1, 0);
        {
            uint32_t filled = 0;
            for (size_t b = 0; b < factors.size(); ++b) {
                uint32_t size = factors[b].second - (b == 0 ? 1 : 0);
                for (uint32_t s = 0; s < size; ++s) owner[++filled] = factors[b].first;
            }
            if (filled != static_cast<uint32_t>(q))
                throw invariant_violation("cramer: slot bookkeeping failed");
        }

        // Equation for slot t is relation k = owner[t] + t, viewed as
        // sum_j r_{k-j} s_j = c_k - r_k.
        std::vector<std::vector<Polynomial>> a(q, std::vector<Polynomial>(q, Polynomial::zero(p)));
        std::vector<Polynomial> rhs;
        rhs.reserve(q);
        for (int t = 1; t <= q; ++t) {
            int k = owner[t] + t;
            for (int j = 1; j <= q; ++j) a[t - 1][j - 1] = r_poly(k - j, p);
            rhs.push_back(Polynomial::constant(p, c_at(k)) - r_poly(k, p));
        }

        Polynomial d = det(a);
        std::vector<Polynomial> d_col;
        d_col.reserve(q);
        for (int j = 0; j < q; ++j) {
            auto aj = a;
            for (int t = 0; t < q; ++t) aj[t][j] = rhs[t];
            d_col.push_back(det(aj));
        }

        // Relation k = i_1 multiplied by D:
        //   r_{i1} D + r_{i1-1} D_1 + ... + r_1 D_{i1-1} + D_{i1} = c_{i1} D.
        Polynomial g = r_poly(i1, p) * d;
        for (int j = 1; j < i1; ++j) g = g + r_poly(i1 - j, p) * d_col[j - 1];
        g = g + d_col[i1 - 1];
        g = g - d.scaled(c_at(i1));

        if (g.coefficient(target) != Rational(1))
            throw invariant_violation("cramer: leading coefficient is not 1 at " +
                                      target.str("r"));

        RingCoords entry;
        for (const auto& [m, cf] : g.terms()) {
            if (m == target) continue;
            if (m.total_degree() <= static_cast<uint32_t>(q)) {
                auto [it, fresh] = entry.emplace(m, -cf);
                if (!fresh) {
                    it->second -= cf;
                    if (it->second.is_zero()) entry.erase(it);
                }
            } else if (m.total_degree() == static_cast<uint32_t>(q + 1) &&
                       lex_cmp(m, target) > 0) {
                const RingCoords& sub = table.at(m);
                for (const auto& [ms, cs] : sub) {
                    auto [it, fresh] = entry.emplace(ms, -(cf * cs));
                    if (!fresh) {
                        it->second -= cf * cs;
                        if (it->second.is_zero()) entry.erase(it);
                    }
                }
            } else {
                throw invariant_violation("cramer: unexpected term " + m.str("r") +
                                          " in the relation for " + target.str("r"));
            }
        }
        table.emplace(target, std::move(entry));
    }
    return table;
}

}  // namespace grasscoh
