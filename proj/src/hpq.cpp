#include "grasscoh/hpq.hpp"

#include <algorithm>
#include <sstream>

#include "grasscoh/errors.hpp"

namespace grasscoh {

RingDescriptorPtr RingDescriptor::make(int p, int q, std::vector<Rational> c, int weight,
                                       bool with_e, Rational e_square) {
    if (p < 1 || q < p) throw range_error("RingDescriptor: need 1 <= p <= q");
    if (c.size() != static_cast<size_t>(p + q))
        throw shape_error("RingDescriptor: c must have length p+q");
    if (weight != 2 && weight != 4) throw range_error("RingDescriptor: weight must be 2 or 4");
    if (with_e && !(e_square == Rational(0) || e_square == Rational(1)))
        throw range_error("RingDescriptor: e^2 must be 0 or 1");

    auto d = std::make_shared<RingDescriptor>();
    d->p = p;
    d->q = q;
    d->weight = weight;
    d->c = std::move(c);
    d->has_e = with_e;
    d->e_degree = with_e ? 2 * p + 2 * q + 1 : 0;
    d->e_square = with_e ? e_square : Rational(0);
    d->graded = std::all_of(d->c.begin(), d->c.end(),
                            [](const Rational& x) { return x.is_zero(); });
    d->basis = monomials_up_to_degree(p, q);
    d->rewrite = build_rewrite_table(p, q, d->c);

    // Each residual relation must reduce to zero under the table.
    RingDescriptorPtr dp = d;
    for (const Polynomial& rk : eliminate_s(p, q, d->c).residuals) {
        if (!normal_form(dp, rk).is_zero())
            throw invariant_violation("RingDescriptor: residual relation does not reduce to 0");
    }
    return dp;
}

bool RingDescriptor::same_presentation(const RingDescriptor& o) const {
    return p == o.p && q == o.q && weight == o.weight && c == o.c && has_e == o.has_e &&
           e_square == o.e_square;
}

std::vector<std::string> RingDescriptor::basis_labels() const {
    std::vector<std::string> out;
    out.reserve(dim());
    for (const auto& m : basis) out.push_back(m.str("r"));
    if (has_e)
        for (const auto& m : basis) out.push_back(m.is_unit() ? "e" : m.str("r") + "*e");
    return out;
}

namespace {

void coords_add(RingCoords& into, const MultiIndex& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = into.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

MultiIndex default_divisor(const MultiIndex& m, uint32_t degree) {
    std::vector<uint32_t> e(m.width(), 0);
    uint32_t rest = degree;
    for (size_t i = 0; i < m.width() && rest > 0; ++i) {
        uint32_t take = std::min(m.exponent(i), rest);
        e[i] = take;
        rest -= take;
    }
    if (rest != 0) throw range_error("default_divisor: monomial degree too small");
    return MultiIndex(std::move(e));
}

/// Reduces a term map in place to basis support.
RingCoords reduce_terms(const RingDescriptor& d, RingCoords work, const DivisorChooser* chooser) {
    RingCoords result;
    const uint32_t qq = static_cast<uint32_t>(d.q);
    while (!work.empty()) {
        auto last = std::prev(work.end());
        MultiIndex m = last->first;
        Rational c = last->second;
        work.erase(last);
        if (m.total_degree() <= qq) {
            coords_add(result, m, c);
            continue;
        }
        MultiIndex div = chooser ? (*chooser)(m, qq + 1) : default_divisor(m, qq + 1);
        if (div.total_degree() != qq + 1 || !div.divides(m))
            throw precondition_error("normal_form: divisor strategy returned a bad divisor");
        MultiIndex rest = *div.divide_into(m);
        const RingCoords& entry = d.rewrite.at(div);
        for (const auto& [mt, ct] : entry) coords_add(work, mt.times(rest), c * ct);
    }
    return result;
}

RingCoords convolve(const RingDescriptor& d, const RingCoords& x, const RingCoords& y,
                    const Rational& scale) {
    RingCoords prod;
    if (scale.is_zero()) return prod;
    for (const auto& [ma, ca] : x)
        for (const auto& [mb, cb] : y) coords_add(prod, ma.times(mb), ca * cb * scale);
    return reduce_terms(d, std::move(prod), nullptr);
}

}  // namespace

RingElement::RingElement(RingDescriptorPtr desc) : desc_(std::move(desc)) {
    if (!desc_) throw shape_error("RingElement: null descriptor");
}

RingElement::RingElement(RingDescriptorPtr desc, RingCoords a, RingCoords b)
    : desc_(std::move(desc)), a_(std::move(a)), b_(std::move(b)) {
    if (!desc_) throw shape_error("RingElement: null descriptor");
    if (!b_.empty() && !desc_->has_e)
        throw shape_error("RingElement: e-part in a descriptor without e");
    for (const auto* part : {&a_, &b_})
        for (const auto& [m, c] : *part)
            if (m.total_degree() > static_cast<uint32_t>(desc_->q) ||
                m.width() > static_cast<size_t>(desc_->p))
                throw shape_error("RingElement: coordinates outside the basis");
}

RingElement RingElement::one(RingDescriptorPtr desc) {
    RingCoords a;
    a.emplace(MultiIndex(), Rational(1));
    return RingElement(std::move(desc), std::move(a));
}

RingElement RingElement::monomial(RingDescriptorPtr desc, const MultiIndex& m) {
    if (m.width() > static_cast<size_t>(desc->p))
        throw range_error("RingElement::monomial: too many variables");
    RingCoords work;
    work.emplace(m, Rational(1));
    const RingDescriptor& d = *desc;
    return RingElement(std::move(desc), reduce_terms(d, std::move(work), nullptr));
}

RingElement RingElement::e(RingDescriptorPtr desc) {
    if (!desc->has_e) throw shape_error("RingElement::e: descriptor has no e generator");
    RingCoords b;
    b.emplace(MultiIndex(), Rational(1));
    return RingElement(std::move(desc), {}, std::move(b));
}

RingElement RingElement::operator-() const {
    RingElement r(desc_);
    for (const auto& [m, c] : a_) r.a_.emplace(m, -c);
    for (const auto& [m, c] : b_) r.b_.emplace(m, -c);
    return r;
}

RingElement RingElement::operator+(const RingElement& o) const {
    if (!desc_->same_presentation(*o.desc_))
        throw shape_error("RingElement: descriptor mismatch");
    RingElement r = *this;
    for (const auto& [m, c] : o.a_) coords_add(r.a_, m, c);
    for (const auto& [m, c] : o.b_) coords_add(r.b_, m, c);
    return r;
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator*(const RingElement& o) const {
    if (!desc_->same_presentation(*o.desc_))
        throw shape_error("RingElement: descriptor mismatch");
    const RingDescriptor& d = *desc_;
    // (a1 + b1 e)(a2 + b2 e) = a1 a2 + e^2 b1 b2 + (a1 b2 + b1 a2) e
    RingCoords a = convolve(d, a_, o.a_, Rational(1));
    if (d.has_e) {
        for (const auto& [m, c] : convolve(d, b_, o.b_, d.e_square)) coords_add(a, m, c);
        RingCoords b = convolve(d, a_, o.b_, Rational(1));
        for (const auto& [m, c] : convolve(d, b_, o.a_, Rational(1))) coords_add(b, m, c);
        return RingElement(desc_, std::move(a), std::move(b));
    }
    return RingElement(desc_, std::move(a));
}

RingElement RingElement::scaled(const Rational& k) const {
    RingElement r(desc_);
    if (k.is_zero()) return r;
    for (const auto& [m, c] : a_) r.a_.emplace(m, c * k);
    for (const auto& [m, c] : b_) r.b_.emplace(m, c * k);
    return r;
}

RingElement RingElement::pow(unsigned e) const {
    RingElement acc = RingElement::one(desc_);
    RingElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool RingElement::operator==(const RingElement& o) const {
    return desc_->same_presentation(*o.desc_) && a_ == o.a_ && b_ == o.b_;
}

Rational RingElement::coefficient(const MultiIndex& m, bool e_part) const {
    const RingCoords& part = e_part ? b_ : a_;
    auto it = part.find(m);
    return it == part.end() ? Rational(0) : it->second;
}

namespace {

std::string coords_str(const RingCoords& coords) {
    size_t w = 0;
    for (const auto& [m, c] : coords) w = std::max(w, m.width());
    Polynomial poly(w);
    for (const auto& [m, c] : coords) poly.add_term(m, c);
    return poly.str("r");
}

}  // namespace

std::string RingElement::str() const {
    if (is_zero()) return "0";
    std::string sa = coords_str(a_);
    if (b_.empty()) return sa;
    std::string sb;
    if (b_.size() == 1 && b_.begin()->second.is_one()) {
        const MultiIndex& m = b_.begin()->first;
        sb = m.is_unit() ? "e" : m.str("r") + "*e";
    } else {
        sb = "(" + coords_str(b_) + ")*e";
    }
    if (a_.empty()) return sb;
    return sa + " + " + sb;
}

RingElement normal_form(RingDescriptorPtr desc, const Polynomial& x,
                        const DivisorChooser* chooser) {
    if (x.nvars() > static_cast<size_t>(desc->p))
        throw shape_error("normal_form: polynomial has more variables than generators");
    RingCoords work;
    for (const auto& [m, c] : x.terms()) work.emplace(m, c);
    const RingDescriptor& d = *desc;
    return RingElement(std::move(desc), reduce_terms(d, std::move(work), chooser));
}

Polynomial poincare_polynomial(const RingDescriptor& desc) {
    if (!desc.graded)
        throw precondition_error(
            "poincare_polynomial: deformed algebras carry no canonical grading");
    Polynomial out(1);
    for (const auto& m : desc.basis) {
        out.add_term(MultiIndex::variable(0, static_cast<uint32_t>(desc.graded_degree(m))),
                     Rational(1));
        if (desc.has_e)
            out.add_term(MultiIndex::variable(
                             0, static_cast<uint32_t>(desc.graded_degree(m) + desc.e_degree)),
                         Rational(1));
    }
    return out;
}

namespace {

std::vector<std::vector<Rational>> shuffle_tuples_for(const RingDescriptor& d,
                                                      DeformationCase dc) {
    auto wc = weyl_case_for(dc, d.p, d.q);
    if (!wc.two_block())
        throw unsupported_case_error("evaluation model: case is not a two-block family");
    auto expected = deformation_parameters(dc, d.p, d.q);
    if (d.c != expected)
        throw precondition_error("evaluation model: descriptor parameters are not t(rho)");
    auto rho = rho_vector(dc, d.p, d.q);
    return shuffle_generator_values(wc, rho);
}

Rational eval_monomial(const MultiIndex& m, const std::vector<Rational>& rvals) {
    Rational v(1);
    for (size_t i = 0; i < m.width(); ++i)
        if (m.exponent(i) > 0) v *= rvals[i].pow(m.exponent(i));
    return v;
}

}  // namespace

std::vector<RingElement> idempotents(RingDescriptorPtr desc, DeformationCase dc) {
    const RingDescriptor& d = *desc;
    auto tuples = shuffle_tuples_for(d, dc);
    const size_t n = d.basis.size();
    if (tuples.size() != n)
        throw invariant_violation("idempotents: orbit size does not match the basis");

    // Augmented system [E | I], Gauss-Jordan; column j of the inverse gives
    // the coordinates of the idempotent supported at shuffle j.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i) aug[j][i] = eval_monomial(d.basis[i], tuples[j]);
        aug[j][n + j] = Rational(1);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && aug[piv][col].is_zero()) ++piv;
        if (piv == n)
            throw invariant_violation("idempotents: evaluation matrix is singular");
        std::swap(aug[piv], aug[col]);
        Rational inv = Rational(1) / aug[col][col];
        for (auto& x : aug[col]) x *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            Rational f = aug[r][col];
            for (size_t cc = col; cc < 2 * n; ++cc) aug[r][cc] -= f * aug[col][cc];
        }
    }
    std::vector<RingElement> out;
    out.reserve(n);
    for (size_t j = 0; j < n; ++j) {
        RingCoords coords;
        for (size_t i = 0; i < n; ++i)
            if (!aug[i][n + j].is_zero()) coords.emplace(d.basis[i], aug[i][n + j]);
        out.emplace_back(desc, std::move(coords));
    }
    return out;
}

std::vector<Rational> evaluate_at_shuffles(const RingElement& x, DeformationCase dc) {
    if (!x.e_part().empty())
        throw precondition_error("evaluate_at_shuffles: element has an e-part");
    const RingDescriptor& d = *x.descriptor();
    auto tuples = shuffle_tuples_for(d, dc);
    std::vector<Rational> out;
    out.reserve(tuples.size());
    for (const auto& rvals : tuples) {
        Rational acc(0);
        for (const auto& [m, c] : x.part()) acc += c * eval_monomial(m, rvals);
        out.push_back(acc);
    }
    return out;
}

GradedCheckReport associated_graded_check(const RingDescriptorPtr& deformed,
                                          const RingDescriptorPtr& graded) {
    const RingDescriptor& dc = *deformed;
    const RingDescriptor& d0 = *graded;
    if (dc.p != d0.p || dc.q != d0.q || dc.weight != d0.weight || dc.has_e != d0.has_e)
        throw precondition_error("associated_graded_check: descriptors do not match");
    if (!d0.graded)
        throw precondition_error("associated_graded_check: second descriptor must be graded");

    GradedCheckReport rep;
    const size_t n = dc.basis.size();
    auto check_pair = [&](const RingElement& xc, const RingElement& x0, uint64_t top) {
        // Split the deformed product by intrinsic weighted degree.
        for (const auto& [m, cf] : xc.part()) {
            uint64_t w = m.weighted_degree();
            if (w < top) {
                ++rep.tail_terms;
            } else if (x0.coefficient(m) != cf) {
                rep.ok = false;
                if (rep.mismatches.size() < 8)
                    rep.mismatches.push_back("top component differs at " + m.str("r"));
            }
        }
        for (const auto& [m, cf] : x0.part()) {
            if (xc.coefficient(m) != cf && m.weighted_degree() == top) {
                rep.ok = false;
                if (rep.mismatches.size() < 8)
                    rep.mismatches.push_back("graded term missing at " + m.str("r"));
            }
        }
        ++rep.pairs;
    };

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i; j < n; ++j) {
            uint64_t top = dc.basis[i].weighted_degree() + dc.basis[j].weighted_degree();
            RingElement pc = RingElement::monomial(deformed, dc.basis[i]) *
                             RingElement::monomial(deformed, dc.basis[j]);
            RingElement p0 = RingElement::monomial(graded, d0.basis[i]) *
                             RingElement::monomial(graded, d0.basis[j]);
            check_pair(pc, p0, top);
        }
    }
    return rep;
}

}  // namespace grasscoh
