#include "grasscoh/squarefree.hpp"

#include <algorithm>
#include <sstream>

#include "grasscoh/errors.hpp"

namespace grasscoh {

SquarefreeDescriptorPtr SquarefreeDescriptor::make(SquarefreeVariant variant, int n,
                                                   std::vector<Rational> t, Rational tbar_n) {
    if (n < 1) throw range_error("SquarefreeDescriptor: n must be >= 1");
    if (variant == SquarefreeVariant::DOverA && n < 2)
        throw range_error("SquarefreeDescriptor: D variant needs n >= 2");
    if (t.size() != static_cast<size_t>(n))
        throw shape_error("SquarefreeDescriptor: t must have length n");
    auto d = std::make_shared<SquarefreeDescriptor>();
    d->variant = variant;
    d->n = n;
    d->t = std::move(t);
    d->tbar_n = tbar_n;
    d->graded = tbar_n.is_zero() &&
                std::all_of(d->t.begin(), d->t.end(),
                            [](const Rational& x) { return x.is_zero(); });
    if (variant == SquarefreeVariant::DOverA && !(d->tbar_n * d->tbar_n == d->t[n - 1]))
        throw precondition_error("SquarefreeDescriptor: tbar_n^2 must equal t_n");
    return d;
}

std::vector<MultiIndex> SquarefreeDescriptor::basis() const {
    const int m = generator_count();
    std::vector<MultiIndex> out;
    out.reserve(dim());
    for (size_t mask = 0; mask < dim(); ++mask) {
        std::vector<uint32_t> e(m, 0);
        for (int i = 0; i < m; ++i)
            if (mask & (size_t{1} << i)) e[i] = 1;
        out.emplace_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), ListingLess{});
    return out;
}

std::vector<std::string> SquarefreeDescriptor::basis_labels() const {
    std::vector<std::string> out;
    for (const auto& m : basis()) out.push_back(m.str("r"));
    return out;
}

bool SquarefreeDescriptor::same_presentation(const SquarefreeDescriptor& o) const {
    return variant == o.variant && n == o.n && t == o.t && tbar_n == o.tbar_n;
}

namespace {

void coords_add(SquarefreeCoords& into, const MultiIndex& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = into.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) into.erase(it);
    }
}

bool is_squarefree(const MultiIndex& m) {
    for (uint32_t e : m.exponents())
        if (e > 1) return false;
    return true;
}

}  // namespace

SquarefreeElement::SquarefreeElement(SquarefreeDescriptorPtr desc) : desc_(std::move(desc)) {
    if (!desc_) throw shape_error("SquarefreeElement: null descriptor");
}

SquarefreeElement::SquarefreeElement(SquarefreeDescriptorPtr desc, SquarefreeCoords coords)
    : desc_(std::move(desc)), coords_(std::move(coords)) {
    if (!desc_) throw shape_error("SquarefreeElement: null descriptor");
    for (const auto& [m, c] : coords_) {
        if (!is_squarefree(m) || m.width() > static_cast<size_t>(desc_->generator_count()))
            throw shape_error("SquarefreeElement: coordinates outside the basis");
    }
}

SquarefreeElement SquarefreeElement::zero(SquarefreeDescriptorPtr d) {
    return SquarefreeElement(std::move(d));
}

SquarefreeElement SquarefreeElement::one(SquarefreeDescriptorPtr d) {
    SquarefreeCoords c;
    c.emplace(MultiIndex(), Rational(1));
    return SquarefreeElement(std::move(d), std::move(c));
}

SquarefreeElement SquarefreeElement::generator(SquarefreeDescriptorPtr d, int k) {
    if (k < 1 || k > d->generator_count())
        throw range_error("SquarefreeElement: generator index out of range");
    SquarefreeCoords c;
    c.emplace(MultiIndex::variable(k - 1), Rational(1));
    return SquarefreeElement(std::move(d), std::move(c));
}

Rational SquarefreeElement::coefficient(const MultiIndex& m) const {
    auto it = coords_.find(m);
    return it == coords_.end() ? Rational(0) : it->second;
}

SquarefreeElement SquarefreeElement::operator-() const {
    SquarefreeElement r(desc_);
    for (const auto& [m, c] : coords_) r.coords_.emplace(m, -c);
    return r;
}

SquarefreeElement SquarefreeElement::operator+(const SquarefreeElement& o) const {
    if (!desc_->same_presentation(*o.desc_))
        throw shape_error("SquarefreeElement: descriptor mismatch");
    SquarefreeElement r = *this;
    for (const auto& [m, c] : o.coords_) coords_add(r.coords_, m, c);
    return r;
}

SquarefreeElement SquarefreeElement::operator-(const SquarefreeElement& o) const {
    return *this + (-o);
}

SquarefreeElement SquarefreeElement::scaled(const Rational& k) const {
    SquarefreeElement r(desc_);
    if (k.is_zero()) return r;
    for (const auto& [m, c] : coords_) r.coords_.emplace(m, c * k);
    return r;
}

bool SquarefreeElement::operator==(const SquarefreeElement& o) const {
    return desc_->same_presentation(*o.desc_) && coords_ == o.coords_;
}

std::string SquarefreeElement::str() const {
    size_t w = 0;
    for (const auto& [m, c] : coords_) w = std::max(w, m.width());
    Polynomial poly(w);
    for (const auto& [m, c] : coords_) poly.add_term(m, c);
    return poly.str("r");
}

SquarefreeElement rewrite_square(int k, SquarefreeDescriptorPtr desc) {
    const int m = desc->generator_count();
    if (k < 1 || k > m) throw range_error("rewrite_square: k out of range");
    const int n = desc->n;
    SquarefreeCoords out;
    coords_add(out, MultiIndex(), desc->t[k - 1]);
    // 2 r_{k-i} r_{k+i} with alternating signs; r_0 = 1, out of range = 0.
    // In the D variant r_n stands for the constant tbar_n.
    for (int i = 1; k - i >= 0 && k + i <= n; ++i) {
        Rational coef = (i % 2) ? Rational(2) : Rational(-2);
        int lo = k - i, hi = k + i;
        if (desc->variant == SquarefreeVariant::DOverA && hi == n) {
            if (desc->tbar_n.is_zero()) continue;
            coef *= desc->tbar_n;
            if (lo == 0)
                coords_add(out, MultiIndex(), coef);
            else
                coords_add(out, MultiIndex::variable(lo - 1), coef);
            continue;
        }
        if (hi > m) continue;  // r_{>generators} = 0 (C variant handled by hi <= n)
        if (lo == 0) {
            coords_add(out, MultiIndex::variable(hi - 1), coef);
        } else {
            coords_add(out, MultiIndex::variable(lo - 1).times(MultiIndex::variable(hi - 1)),
                       coef);
        }
    }
    return SquarefreeElement(std::move(desc), std::move(out));
}

namespace {

uint64_t potential(const MultiIndex& m, int n) {
    // f(k) = k (n + 1 - k), summed with multiplicities
    uint64_t f = 0;
    for (size_t i = 0; i < m.width(); ++i)
        f += static_cast<uint64_t>(i + 1) * (n - i) * m.exponent(i);
    return f;
}

}  // namespace

SquarefreeElement normal_form_sf(SquarefreeDescriptorPtr desc, const Polynomial& x,
                                 const SquareChooser* chooser,
                                 const PotentialObserver* observer) {
    if (x.nvars() > static_cast<size_t>(desc->generator_count()))
        throw shape_error("normal_form_sf: polynomial has more variables than generators");
    const int n = desc->n;
    SquarefreeCoords work, result;
    for (const auto& [m, c] : x.terms()) coords_add(work, m, c);
    while (!work.empty()) {
        auto last = std::prev(work.end());
        MultiIndex m = last->first;
        Rational c = last->second;
        work.erase(last);
        if (is_squarefree(m)) {
            coords_add(result, m, c);
            continue;
        }
        size_t var;
        if (chooser) {
            var = (*chooser)(m);
            if (var >= m.width() || m.exponent(var) < 2)
                throw precondition_error("normal_form_sf: chooser picked a non-square");
        } else {
            var = 0;
            while (m.exponent(var) < 2) ++var;
        }
        // divide out r_var^2 and substitute its rewriting
        std::vector<uint32_t> rest(m.exponents());
        rest[var] -= 2;
        MultiIndex cof{std::move(rest)};
        const uint64_t before = potential(m, n);
        SquarefreeElement rhs = rewrite_square(static_cast<int>(var) + 1, desc);
        for (const auto& [mr, cr] : rhs.coords()) {
            MultiIndex prod = cof.times(mr);
            const uint64_t after = potential(prod, n);
            if (after >= before)
                throw invariant_violation("normal_form_sf: potential failed to decrease");
            if (observer) (*observer)(before, after);
            coords_add(work, prod, c * cr);
        }
    }
    return SquarefreeElement(std::move(desc), std::move(result));
}

SquarefreeElement SquarefreeElement::operator*(const SquarefreeElement& o) const {
    if (!desc_->same_presentation(*o.desc_))
        throw shape_error("SquarefreeElement: descriptor mismatch");
    Polynomial prod(desc_->generator_count());
    for (const auto& [ma, ca] : coords_)
        for (const auto& [mb, cb] : o.coords_) prod.add_term(ma.times(mb), ca * cb);
    return normal_form_sf(desc_, prod);
}

Polynomial poincare_sf(const SquarefreeDescriptor& desc) {
    if (!desc.graded)
        throw precondition_error("poincare_sf: deformed algebras carry no canonical grading");
    Polynomial out(1);
    for (const MultiIndex& m : desc.basis())
        out.add_term(MultiIndex::variable(0, static_cast<uint32_t>(desc.graded_degree(m))),
                     Rational(1));
    return out;
}

}  // namespace grasscoh
