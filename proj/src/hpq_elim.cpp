#include <algorithm>
#include <unordered_map>
#include <mutex>
#include <vector>

#include "grasscoh/errors.hpp"
#include "grasscoh/hpq.hpp"

namespace grasscoh {

EliminationOutput eliminate_s(int p, int q, std::span<const Rational> c) {
    if (p < 1 || q < p) throw range_error("eliminate_s: need 1 <= p <= q");
    if (c.size() != static_cast<size_t>(p + q))
        throw shape_error("eliminate_s: c must have length p+q");
    const size_t nv = static_cast<size_t>(p);
    // s_j = c_j - sum_{i=1..min(j,p)} r_i s_{j-i}, with s_0 = 1.
    std::vector<Polynomial> s;
    s.push_back(Polynomial::constant(nv, Rational(1)));
    for (int j = 1; j <= q; ++j) {
        Polynomial sj = Polynomial::constant(nv, c[j - 1]);
        for (int i = 1; i <= std::min(j, p); ++i) {
            Polynomial ri = Polynomial::variable(nv, i - 1);
            sj = sj - ri * s[j - i];
        }
        s.push_back(sj);
    }
    // R_k = c_k - sum_{i+j=k, 1<=i<=p, 0<=j<=q} r_i s_j  for k = q+1..p+q.
    std::vector<Polynomial> residuals;
    for (int k = q + 1; k <= p + q; ++k) {
        Polynomial rk = Polynomial::constant(nv, c[k - 1]);
        for (int i = std::max(1, k - q); i <= std::min(p, k); ++i) {
            Polynomial ri = Polynomial::variable(nv, i - 1);
            rk = rk - ri * s[k - i];
        }
        residuals.push_back(rk);
    }
    EliminationOutput out;
    out.s_polys.assign(s.begin() + 1, s.end());
    out.residuals = std::move(residuals);
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Graded case: the residual relations are homogeneous for the intrinsic
// weights (r_i has weight i), so the ideal splits into weighted slices and
// each slice is eliminated independently.
// ---------------------------------------------------------------------------

void coords_axpy(RingCoords& into, const Rational& k, const RingCoords& src) {
    if (k.is_zero()) return;
    for (const auto& [m, c] : src) {
        auto [it, fresh] = into.emplace(m, k * c);
        if (!fresh) {
            it->second += k * c;
            if (it->second.is_zero()) into.erase(it);
        }
    }
}

struct MonoHash {
    size_t operator()(const MultiIndex& m) const {
        size_t h = 1469598103934665603ull;
        for (uint32_t e : m.exponents()) {
            h ^= e + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

class SliceEliminator {
public:
    SliceEliminator(int p, int q, const std::vector<Polynomial>& residuals)
        : p_(p), q_(q), residuals_(residuals) {}

    RewriteTable run() {
        const uint64_t dmax = static_cast<uint64_t>(p_) * (q_ + 1);
        for (uint64_t d = q_ + 1; d <= dmax; ++d) run_slice(d);
        return std::move(table_);
    }

private:
    // Inside a slice everything is homogeneous of one weighted degree, so all
    // reductions live in the span of that slice's degree-(q+1) monomials
    // ("unknowns", ids 0..nu-1, ascending in the fixed order) and its basis
    // monomials (ids nu..nu+nb-1). Rows and normal forms are dense vectors.
    using Vec = std::vector<Rational>;

    void axpy(Vec& into, const Rational& k, const Vec& src) const {
        for (size_t i = 0; i < src.size(); ++i)
            if (!src[i].is_zero()) into[i] += k * src[i];
    }

    const Vec& nf(const MultiIndex& m) {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
        Vec out(width_, Rational(0));
        const uint32_t deg = m.total_degree();
        if (deg <= static_cast<uint32_t>(q_) + 1) {
            // Homogeneity puts every degree-(q+1) monomial of this slice in
            // the unknown list; lower degrees are basis columns.
            auto cit = col_of_.find(m);
            if (cit == col_of_.end())
                throw invariant_violation("slice elimination: monomial escapes its slice");
            out[cit->second] = Rational(1);
        } else {
            // Rewrite any degree-(q+1) divisor; it is proper, so its weighted
            // degree is strictly below the slice and it is already tabled.
            std::vector<uint32_t> take(m.width(), 0);
            uint32_t rest = q_ + 1;
            for (size_t i = 0; i < m.width() && rest > 0; ++i) {
                uint32_t t = std::min(m.exponent(i), rest);
                take[i] = t;
                rest -= t;
            }
            MultiIndex div{std::move(take)};
            MultiIndex cof = *div.divide_into(m);
            auto tit = table_.find(div);
            if (tit == table_.end())
                throw invariant_violation("slice elimination: table entry missing for " +
                                          div.str("r"));
            for (const auto& [b, cf] : tit->second) axpy(out, cf, nf(cof.times(b)));
        }
        return memo_.emplace(m, std::move(out)).first->second;
    }

    void run_slice(uint64_t d) {
        unknowns_ = monomials_of_weighted_degree(p_, d);
        std::erase_if(unknowns_, [&](const MultiIndex& m) {
            return m.total_degree() != static_cast<uint32_t>(q_ + 1);
        });
        std::sort(unknowns_.begin(), unknowns_.end(), MonoLess{});
        basis_ = monomials_of_weighted_degree(p_, d);
        std::erase_if(basis_, [&](const MultiIndex& m) {
            return m.total_degree() > static_cast<uint32_t>(q_);
        });
        std::sort(basis_.begin(), basis_.end(), MonoLess{});
        const size_t nu = unknowns_.size(), nb = basis_.size();
        width_ = nu + nb;
        col_of_.clear();
        memo_.clear();
        for (size_t i = 0; i < nu; ++i) col_of_.emplace(unknowns_[i], i);
        for (size_t i = 0; i < nb; ++i) col_of_.emplace(basis_[i], nu + i);

        std::vector<Vec> pivots(nu);  // indexed by leading unknown id
        size_t found = 0;

        auto insert_row = [&](Vec row) {
            for (size_t lead = nu; lead-- > 0;) {
                if (row[lead].is_zero()) continue;
                if (pivots[lead].empty()) {
                    Rational inv = Rational(1) / row[lead];
                    for (auto& x : row)
                        if (!x.is_zero()) x *= inv;
                    pivots[lead] = std::move(row);
                    ++found;
                    return;
                }
                axpy(row, -row[lead], pivots[lead]);
            }
            for (size_t i = nu; i < nu + nb; ++i)
                if (!row[i].is_zero())
                    throw invariant_violation(
                        "rewrite table: a relation hits the expected basis (dimension too "
                        "small)");
        };

        // Feed rows until every unknown has a pivot; correctness of the
        // resulting table is certified afterwards by the confluence check,
        // so the remaining (dependent) rows need not be reduced.
        bool complete = nu == 0;
        for (int k = q_ + 1; k <= p_ + q_ && !complete; ++k) {
            if (static_cast<uint64_t>(k) > d) continue;
            const Polynomial& rk = residuals_[k - q_ - 1];
            for (const MultiIndex& shift : monomials_of_weighted_degree(p_, d - k)) {
                Vec row(width_, Rational(0));
                for (const auto& [mt, cf] : rk.terms()) axpy(row, cf, nf(mt.times(shift)));
                insert_row(std::move(row));
                if (found == nu) {
                    complete = true;
                    break;
                }
            }
        }

        for (size_t i = 0; i < nu; ++i)
            if (pivots[i].empty())
                throw invariant_violation("rewrite table: monomial " + unknowns_[i].str("r") +
                                          " cannot be reduced");

        // Resolve pivot tails smallest first, then emit table entries.
        for (size_t i = 0; i < nu; ++i) {
            const Vec& row = pivots[i];
            RingCoords entry;
            for (size_t b = 0; b < nb; ++b)
                if (!row[nu + b].is_zero()) entry.emplace(basis_[b], -row[nu + b]);
            for (size_t u = 0; u < i; ++u)
                if (!row[u].is_zero()) coords_axpy(entry, -row[u], table_.at(unknowns_[u]));
            table_.emplace(unknowns_[i], std::move(entry));
        }
    }

    int p_, q_;
    const std::vector<Polynomial>& residuals_;
    RewriteTable table_;
    std::vector<MultiIndex> unknowns_, basis_;
    size_t width_ = 0;
    std::unordered_map<MultiIndex, size_t, MonoHash> col_of_;
    std::unordered_map<MultiIndex, Vec, MonoHash> memo_;
};

RewriteTable rewrite_by_slices(int p, int q, const std::vector<Polynomial>& residuals) {
    return SliceEliminator(p, q, residuals).run();
}

// Full reduction of x_var * b where deg(b) <= q: at most one table lookup.
const RingCoords& var_times_basis(size_t var, const MultiIndex& b, int q,
                                  const RewriteTable& table,
                                  std::map<MultiIndex, RingCoords, MonoLess>& memo) {
    MultiIndex m = b.times(MultiIndex::variable(var));
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    RingCoords out;
    if (m.total_degree() <= static_cast<uint32_t>(q))
        out.emplace(m, Rational(1));
    else
        out = table.at(m);
    return memo.emplace(std::move(m), std::move(out)).first->second;
}

}  // namespace

void verify_rewrite_table(int p, int q, const RewriteTable& table) {
    if (table.size() != monomials_of_degree(p, q + 1).size())
        throw invariant_violation("rewrite table: wrong number of entries");
    std::map<MultiIndex, RingCoords, MonoLess> memo;
    // Every degree-(q+2) monomial must reduce identically through each of its
    // degree-(q+1) divisors: together with termination this makes the
    // rewriting confluent, so the basis monomials are independent and the
    // quotient has the expected dimension.
    for (const MultiIndex& mu : monomials_of_degree(p, q + 2)) {
        bool have_ref = false;
        RingCoords ref;
        for (size_t var = 0; var < mu.width(); ++var) {
            if (mu.exponent(var) == 0) continue;
            MultiIndex t = *MultiIndex::variable(var).divide_into(mu);
            RingCoords acc;
            for (const auto& [b, cf] : table.at(t))
                coords_axpy(acc, cf, var_times_basis(var, b, q, table, memo));
            if (!have_ref) {
                ref = std::move(acc);
                have_ref = true;
            } else if (acc != ref) {
                throw invariant_violation("rewrite table: reductions of " + mu.str("r") +
                                          " disagree between divisors");
            }
        }
    }
}

namespace {

// ---------------------------------------------------------------------------
// Deformed case: the relations are inhomogeneous, so multiples of the
// residuals are accumulated by multiplier degree until every degree-(q+1)
// monomial appears as a leading term.
// ---------------------------------------------------------------------------

RewriteTable rewrite_mixed(int p, int q, const std::vector<Polynomial>& residuals) {
    const size_t nv = static_cast<size_t>(p);
    std::map<MultiIndex, Polynomial, MonoLess> pivots;  // lead -> monic row

    auto insert_row = [&](Polynomial row) {
        while (!row.is_zero()) {
            const auto& [lead, cf] = *row.terms().rbegin();
            if (lead.total_degree() <= static_cast<uint32_t>(q))
                throw invariant_violation(
                    "rewrite table: a relation hits the expected basis (dimension too small)");
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                pivots.emplace(lead, row.scaled(Rational(1) / cf));
                return;
            }
            row = row - it->second.scaled(cf);
        }
    };

    auto targets = monomials_of_degree(nv, q + 1);
    auto complete = [&] {
        for (const MultiIndex& m : targets)
            if (!pivots.count(m)) return false;
        return true;
    };

    const uint32_t cap = static_cast<uint32_t>(p * q + 2);
    bool done = complete();
    for (uint32_t delta = 0; delta <= cap && !done; ++delta) {
        size_t pivots_before = pivots.size();
        for (const Polynomial& rk : residuals) {
            for (const MultiIndex& shift : monomials_of_degree(nv, delta)) {
                Polynomial row(nv);
                for (const auto& [m, cf] : rk.terms()) row.add_term(m.times(shift), cf);
                insert_row(std::move(row));
                if (pivots.size() != pivots_before) {
                    pivots_before = pivots.size();
                    if ((done = complete())) break;
                }
            }
            if (done) break;
        }
    }
    if (!complete())
        throw invariant_violation("rewrite table: elimination did not complete within bound");

    // Extract entries smallest lead first, so same-degree tails are resolved.
    RewriteTable table;
    std::vector<MultiIndex> order = targets;
    std::sort(order.begin(), order.end(), MonoLess{});
    for (const MultiIndex& m : order) {
        const Polynomial& row = pivots.at(m);
        RingCoords entry;
        for (const auto& [mt, cf] : row.terms()) {
            if (mt == m) continue;
            if (mt.total_degree() <= static_cast<uint32_t>(q)) {
                auto [it, fresh] = entry.emplace(mt, -cf);
                if (!fresh) {
                    it->second -= cf;
                    if (it->second.is_zero()) entry.erase(it);
                }
            } else {
                const RingCoords& sub = table.at(mt);
                for (const auto& [ms, cs] : sub) {
                    auto [it, fresh] = entry.emplace(ms, -(cf * cs));
                    if (!fresh) {
                        it->second -= cf * cs;
                        if (it->second.is_zero()) entry.erase(it);
                    }
                }
            }
        }
        table.emplace(m, std::move(entry));
    }
    return table;
}

}  // namespace

RewriteTable build_rewrite_table(int p, int q, std::span<const Rational> c) {
    // Presentations recur (graded/deformed pairs, e-extensions), so completed
    // tables are cached. The cache is invisible: construction is a pure
    // function of (p, q, c).
    static std::mutex cache_mutex;
    static std::map<std::string, RewriteTable> cache;
    std::string key = std::to_string(p) + "|" + std::to_string(q);
    for (const Rational& x : c) key += "|" + x.str();
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    EliminationOutput elim = eliminate_s(p, q, c);
    bool graded = std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_zero(); });
    RewriteTable table = graded ? rewrite_by_slices(p, q, elim.residuals)
                                : rewrite_mixed(p, q, elim.residuals);
    verify_rewrite_table(p, q, table);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::move(key), std::move(table)).first->second;
}

}  // namespace grasscoh
