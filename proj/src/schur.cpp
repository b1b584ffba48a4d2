#include "grasscoh/schur.hpp"

#include <algorithm>
#include <sstream>

#include "grasscoh/errors.hpp"

namespace grasscoh {

Partition::Partition(std::vector<uint32_t> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] < parts_[i + 1])
            throw range_error("Partition: parts must be weakly decreasing");
}

Partition Partition::parse(const std::string& text) {
    std::vector<uint32_t> parts;
    std::string digits;
    for (char ch : text) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
        } else if (ch == ',' || ch == ')' || ch == ' ') {
            if (!digits.empty()) {
                parts.push_back(static_cast<uint32_t>(std::stoul(digits)));
                digits.clear();
            }
        } else if (ch != '(') {
            throw parse_error("Partition: cannot parse '" + text + "'");
        }
    }
    if (!digits.empty()) parts.push_back(static_cast<uint32_t>(std::stoul(digits)));
    return Partition(std::move(parts));
}

uint32_t Partition::size() const {
    uint32_t s = 0;
    for (uint32_t p : parts_) s += p;
    return s;
}

Partition Partition::transpose() const {
    if (parts_.empty()) return Partition();
    std::vector<uint32_t> t(parts_[0], 0);
    for (uint32_t col = 0; col < parts_[0]; ++col)
        for (uint32_t row = 0; row < parts_.size(); ++row)
            if (parts_[row] > col) ++t[col];
    return Partition(std::move(t));
}

bool Partition::fits_in_box(int p, int q) const {
    return parts_.size() <= static_cast<size_t>(p) &&
           (parts_.empty() || parts_[0] <= static_cast<uint32_t>(q));
}

MultiIndex Partition::diagonal_monomial(int p) const {
    Partition t = transpose();
    std::vector<uint32_t> e(p, 0);
    for (uint32_t part : t.parts()) {
        if (part == 0 || part > static_cast<uint32_t>(p))
            throw range_error("Partition: transpose part exceeds generator count");
        ++e[part - 1];
    }
    return MultiIndex(std::move(e));
}

Partition Partition::from_diagonal_monomial(const MultiIndex& m) {
    std::vector<uint32_t> tparts;
    for (size_t i = m.width(); i-- > 0;)
        for (uint32_t k = 0; k < m.exponent(i); ++k)
            tparts.push_back(static_cast<uint32_t>(i + 1));
    return Partition(std::move(tparts)).transpose();
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::vector<Partition> box_partitions(int p, int q) {
    std::vector<Partition> out;
    for (const MultiIndex& m : monomials_up_to_degree(p, q))
        out.push_back(Partition::from_diagonal_monomial(m));
    return out;
}

namespace {

Polynomial r_entry(int j, int p) {
    if (j == 0) return Polynomial::constant(p, Rational(1));
    if (j < 0 || j > p) return Polynomial::zero(p);
    return Polynomial::variable(p, j - 1);
}

Polynomial det(const std::vector<std::vector<Polynomial>>& a, size_t nv) {
    const size_t n = a.size();
    const size_t full = size_t{1} << n;
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

Polynomial jacobi_trudi(const Partition& lambda, int p, int q) {
    if (!lambda.fits_in_box(p, q))
        throw range_error("jacobi_trudi: partition " + lambda.str() + " outside the " +
                          std::to_string(p) + "x" + std::to_string(q) + " box");
    Partition t = lambda.transpose();
    const size_t l = t.length();
    if (l == 0) return Polynomial::constant(p, Rational(1));
    std::vector<std::vector<Polynomial>> a(l, std::vector<Polynomial>(l, Polynomial::zero(p)));
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j)
            a[i][j] = r_entry(static_cast<int>(t.part(i)) - static_cast<int>(i) +
                                  static_cast<int>(j),
                              p);
    return det(a, p);
}

TransitionMatrices transition_matrices(int p, int q) {
    TransitionMatrices tm;
    tm.monomials = monomials_up_to_degree(p, q);
    for (const MultiIndex& m : tm.monomials)
        tm.partitions.push_back(Partition::from_diagonal_monomial(m));
    const size_t n = tm.monomials.size();
    std::map<MultiIndex, size_t, MonoLess> index;
    for (size_t i = 0; i < n; ++i) index.emplace(tm.monomials[i], i);

    tm.to_monomials.assign(n, std::vector<Rational>(n, Rational(0)));
    for (size_t j = 0; j < n; ++j) {
        Polynomial s = jacobi_trudi(tm.partitions[j], p, q);
        for (const auto& [m, c] : s.terms()) {
            auto it = index.find(m);
            if (it == index.end())
                throw invariant_violation("transition: Schur expansion leaves the basis");
            tm.to_monomials[it->second][j] = c;
        }
        if (tm.to_monomials[j][j] != Rational(1))
            throw invariant_violation("transition: diagonal coefficient is not 1");
    }

    // Invert by back-substitution in the fixed monomial order: the matrix is
    // unitriangular once rows/columns are sorted by that order, which the
    // listing refines degree-block by degree-block.
    tm.to_schur.assign(n, std::vector<Rational>(n, Rational(0)));
    // order[i] = position of monomial i in the fixed order
    std::vector<size_t> by_order(n);
    for (size_t i = 0; i < n; ++i) by_order[i] = i;
    std::sort(by_order.begin(), by_order.end(), [&](size_t a, size_t b) {
        return MultiIndex::cmp(tm.monomials[a], tm.monomials[b]) < 0;
    });
    // Solve M x_i = delta_i for each monomial i, exploiting triangularity:
    // a column only involves strictly smaller monomials below its diagonal,
    // so unknowns resolve from the largest monomial downward.
    for (size_t i = 0; i < n; ++i) {
        std::vector<Rational> rhs(n, Rational(0));
        rhs[i] = Rational(1);
        std::vector<Rational> x(n, Rational(0));
        for (size_t oi_pos = n; oi_pos-- > 0;) {
            size_t oi = by_order[oi_pos];
            Rational v = rhs[oi];
            if (v.is_zero()) continue;
            x[oi] = v;  // diagonal is 1
            rhs[oi] = Rational(0);
            for (size_t r = 0; r < n; ++r)
                if (r != oi && !tm.to_monomials[r][oi].is_zero())
                    rhs[r] -= v * tm.to_monomials[r][oi];
        }
        for (size_t j = 0; j < n; ++j) tm.to_schur[j][i] = x[j];
    }
    return tm;
}

SchurCoords to_schur_basis(const RingElement& x) {
    const RingDescriptor& d = *x.descriptor();
    if (!x.e_part().empty()) throw precondition_error("to_schur_basis: element has an e-part");
    TransitionMatrices tm = transition_matrices(d.p, d.q);
    const size_t n = tm.monomials.size();
    SchurCoords out;
    for (size_t i = 0; i < n; ++i) {
        Rational ci = x.coefficient(tm.monomials[i]);
        if (ci.is_zero()) continue;
        for (size_t j = 0; j < n; ++j) {
            if (tm.to_schur[j][i].is_zero()) continue;
            Rational& acc = out.try_emplace(tm.partitions[j], Rational(0)).first->second;
            acc += ci * tm.to_schur[j][i];
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

SchurCoords schur_multiply(const Partition& lambda, const Partition& mu,
                           const RingDescriptorPtr& graded_desc) {
    const RingDescriptor& d = *graded_desc;
    if (!d.graded) throw precondition_error("schur_multiply: descriptor must be graded");
    if (!lambda.fits_in_box(d.p, d.q) || !mu.fits_in_box(d.p, d.q))
        throw range_error("schur_multiply: partition outside the box");
    RingElement a = normal_form(graded_desc, jacobi_trudi(lambda, d.p, d.q));
    RingElement b = normal_form(graded_desc, jacobi_trudi(mu, d.p, d.q));
    return to_schur_basis(a * b);
}

SchurCoords pieri_oracle(const Partition& lambda, int k, int p, int q) {
    if (k < 1 || k > p) throw range_error("pieri_oracle: need 1 <= k <= p");
    if (!lambda.fits_in_box(p, q)) throw range_error("pieri_oracle: partition outside the box");
    SchurCoords out;
    // Choose k rows (indices 0..p-1) whose part grows by one box, no two in
    // the same row; keep the result weakly decreasing and inside the box.
    std::vector<int> rows;
    auto emit = [&]() {
        std::vector<uint32_t> parts;
        for (int i = 0; i < p; ++i) parts.push_back(lambda.part(i));
        for (int r : rows) ++parts[r];
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) return;
        if (parts[0] > static_cast<uint32_t>(q)) return;
        Partition mu{std::move(parts)};
        out.try_emplace(mu, Rational(0)).first->second += Rational(1);
    };
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            emit();
            return;
        }
        for (int r = start; r <= p - need; ++r) {
            rows.push_back(r);
            rec(r + 1, need - 1);
            rows.pop_back();
        }
    };
    rec(0, k);
    return out;
}

std::string schur_coords_str(const SchurCoords& coords) {
    if (coords.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : coords) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (!a.is_one()) os << a.str() << '*';
        os << "s" << lam.str();
    }
    return os.str();
}

}  // namespace grasscoh
