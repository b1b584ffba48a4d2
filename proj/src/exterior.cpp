#include "grasscoh/exterior.hpp"

#include <algorithm>
#include <sstream>

#include "grasscoh/errors.hpp"

namespace grasscoh {

std::vector<int> exterior_degrees(ExteriorCase c, int n) {
    if (n < 1) throw range_error("exterior_degrees: parameter must be >= 1");
    std::vector<int> d;
    switch (c) {
        case ExteriorCase::GroupOrthogonalOdd:  // SO(2n+1): 4p-1, p <= n
            for (int p = 1; p <= n; ++p) d.push_back(4 * p - 1);
            break;
        case ExteriorCase::GroupOrthogonalEven:  // SO(2n): 4p-1 for p <= n-1, and 2n-1
            for (int p = 1; p <= n - 1; ++p) d.push_back(4 * p - 1);
            d.push_back(2 * n - 1);
            break;
        case ExteriorCase::GroupUnitary:  // U(n): 2p-1, p <= n
            for (int p = 1; p <= n; ++p) d.push_back(2 * p - 1);
            break;
        case ExteriorCase::GroupSymplectic:  // Sp(n): 4p-1, p <= n
            for (int p = 1; p <= n; ++p) d.push_back(4 * p - 1);
            break;
        case ExteriorCase::UnitaryOverOrthogonal:  // U(m)/O(m): 4p-3, p <= ceil(m/2)
            for (int p = 1; p <= (n + 1) / 2; ++p) d.push_back(4 * p - 3);
            break;
        case ExteriorCase::UnitaryOverSymplectic:  // U(2n)/Sp(n): 4p-3, p <= n
            for (int p = 1; p <= n; ++p) d.push_back(4 * p - 3);
            break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

std::string make_case_label(ExteriorCase c, int n) {
    switch (c) {
        case ExteriorCase::GroupOrthogonalOdd:
            return "group SO(" + std::to_string(2 * n + 1) + ")";
        case ExteriorCase::GroupOrthogonalEven:
            return "group SO(" + std::to_string(2 * n) + ")";
        case ExteriorCase::GroupUnitary:
            return "group U(" + std::to_string(n) + ")";
        case ExteriorCase::GroupSymplectic:
            return "group Sp(" + std::to_string(n) + ")";
        case ExteriorCase::UnitaryOverOrthogonal:
            return "U(" + std::to_string(n) + ")/O(" + std::to_string(n) + ")";
        case ExteriorCase::UnitaryOverSymplectic:
            return "U(" + std::to_string(2 * n) + ")/Sp(" + std::to_string(n) + ")";
    }
    return "?";
}

}  // namespace

ExteriorDescriptorPtr ExteriorDescriptor::make(ExteriorCase c, int n, bool clifford,
                                               Rational square) {
    return make_raw(make_case_label(c, n), exterior_degrees(c, n), clifford, square);
}

ExteriorDescriptorPtr ExteriorDescriptor::make_raw(std::string label, std::vector<int> degrees,
                                                   bool clifford, Rational square) {
    for (int d : degrees)
        if (d < 1 || d % 2 == 0)
            throw range_error("ExteriorDescriptor: generator degrees must be odd");
    auto d = std::make_shared<ExteriorDescriptor>();
    d->case_label = std::move(label);
    d->degrees = std::move(degrees);
    d->clifford = clifford;
    d->square = clifford ? square : Rational(0);
    if (clifford && d->square.is_zero())
        throw range_error("ExteriorDescriptor: Clifford mode needs a unit square");
    return d;
}

std::vector<std::vector<int>> ExteriorDescriptor::basis() const {
    std::vector<std::vector<int>> out;
    const size_t m = degrees.size();
    for (size_t mask = 0; mask < (size_t{1} << m); ++mask) {
        std::vector<int> subset;
        for (size_t i = 0; i < m; ++i)
            if (mask & (size_t{1} << i)) subset.push_back(static_cast<int>(i));
        out.push_back(std::move(subset));
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        int da = subset_degree(a), db = subset_degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

int ExteriorDescriptor::subset_degree(const std::vector<int>& subset) const {
    int d = 0;
    for (int i : subset) d += degrees.at(i);
    return d;
}

std::vector<std::string> ExteriorDescriptor::basis_labels() const {
    std::vector<std::string> out;
    for (const auto& subset : basis()) {
        if (subset.empty()) {
            out.push_back("1");
            continue;
        }
        std::ostringstream os;
        for (size_t i = 0; i < subset.size(); ++i) {
            if (i) os << '^';
            os << 'g' << (subset[i] + 1);
        }
        out.push_back(os.str());
    }
    return out;
}

bool ExteriorDescriptor::same_presentation(const ExteriorDescriptor& o) const {
    return degrees == o.degrees && clifford == o.clifford && square == o.square;
}

ExteriorElement::ExteriorElement(ExteriorDescriptorPtr desc) : desc_(std::move(desc)) {
    if (!desc_) throw shape_error("ExteriorElement: null descriptor");
}

ExteriorElement::ExteriorElement(ExteriorDescriptorPtr desc, Coords coords)
    : desc_(std::move(desc)), coords_(std::move(coords)) {
    if (!desc_) throw shape_error("ExteriorElement: null descriptor");
    for (const auto& [s, c] : coords_) {
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] >= s[i + 1]) throw shape_error("ExteriorElement: subsets must be sorted");
        if (!s.empty() && (s.front() < 0 ||
                           s.back() >= static_cast<int>(desc_->generator_count())))
            throw shape_error("ExteriorElement: generator index out of range");
    }
}

ExteriorElement ExteriorElement::zero(ExteriorDescriptorPtr d) {
    return ExteriorElement(std::move(d));
}

ExteriorElement ExteriorElement::one(ExteriorDescriptorPtr d) {
    Coords c;
    c.emplace(std::vector<int>{}, Rational(1));
    return ExteriorElement(std::move(d), std::move(c));
}

ExteriorElement ExteriorElement::generator(ExteriorDescriptorPtr d, int i) {
    if (i < 0 || static_cast<size_t>(i) >= d->generator_count())
        throw range_error("ExteriorElement: generator index out of range");
    Coords c;
    c.emplace(std::vector<int>{i}, Rational(1));
    return ExteriorElement(std::move(d), std::move(c));
}

Rational ExteriorElement::coefficient(const std::vector<int>& subset) const {
    auto it = coords_.find(subset);
    return it == coords_.end() ? Rational(0) : it->second;
}

ExteriorElement ExteriorElement::operator-() const {
    ExteriorElement r(desc_);
    for (const auto& [s, c] : coords_) r.coords_.emplace(s, -c);
    return r;
}

ExteriorElement ExteriorElement::operator+(const ExteriorElement& o) const {
    if (!desc_->same_presentation(*o.desc_))
        throw shape_error("ExteriorElement: descriptor mismatch");
    ExteriorElement r = *this;
    for (const auto& [s, c] : o.coords_) {
        auto [it, fresh] = r.coords_.emplace(s, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r.coords_.erase(it);
        }
    }
    return r;
}

ExteriorElement ExteriorElement::operator-(const ExteriorElement& o) const {
    return *this + (-o);
}

ExteriorElement ExteriorElement::scaled(const Rational& k) const {
    ExteriorElement r(desc_);
    if (k.is_zero()) return r;
    for (const auto& [s, c] : coords_) r.coords_.emplace(s, c * k);
    return r;
}

bool ExteriorElement::operator==(const ExteriorElement& o) const {
    return desc_->same_presentation(*o.desc_) && coords_ == o.coords_;
}

ExteriorElement ExteriorElement::operator*(const ExteriorElement& o) const {
    if (!desc_->same_presentation(*o.desc_))
        throw shape_error("ExteriorElement: descriptor mismatch");
    ExteriorElement r(desc_);
    for (const auto& [sa, ca] : coords_) {
        for (const auto& [sb, cb] : o.coords_) {
            // Merge sb into sa counting inversions; repeated generators kill
            // the term (exterior) or peel off a square factor (Clifford).
            std::vector<int> merged = sa;
            Rational coef = ca * cb;
            bool dead = false;
            for (int g : sb) {
                // insertion position from the right
                size_t pos = merged.size();
                while (pos > 0 && merged[pos - 1] > g) --pos;
                size_t jumps = merged.size() - pos;
                if (jumps % 2) coef = -coef;
                if (pos > 0 && merged[pos - 1] == g) {
                    if (!desc_->clifford) {
                        dead = true;
                        break;
                    }
                    // g^2 = square; removing the pair costs no extra sign
                    // beyond the jumps already counted.
                    coef *= desc_->square;
                    merged.erase(merged.begin() + static_cast<long>(pos) - 1);
                } else {
                    merged.insert(merged.begin() + static_cast<long>(pos), g);
                }
            }
            if (dead || coef.is_zero()) continue;
            auto [it, fresh] = r.coords_.emplace(std::move(merged), coef);
            if (!fresh) {
                it->second += coef;
                if (it->second.is_zero()) r.coords_.erase(it);
            }
        }
    }
    return r;
}

std::string ExteriorElement::str() const {
    if (coords_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : coords_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (s.empty()) {
            os << a.str();
            continue;
        }
        if (!a.is_one()) os << a.str() << '*';
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) os << '^';
            os << 'g' << (s[i] + 1);
        }
    }
    return os.str();
}

Polynomial poincare_ext(const ExteriorDescriptor& desc) {
    Polynomial out = Polynomial::constant(1, Rational(1));
    for (int d : desc.degrees) {
        Polynomial factor = Polynomial::constant(1, Rational(1));
        factor.add_term(MultiIndex::variable(0, static_cast<uint32_t>(d)), Rational(1));
        out = out * factor;
    }
    return out;
}

}  // namespace grasscoh
