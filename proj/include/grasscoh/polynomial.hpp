#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grasscoh/multi_index.hpp"
#include "grasscoh/rational.hpp"

namespace grasscoh {

/// Sparse multivariate polynomial over exact rationals. Immutable in spirit:
/// all operations return new values. Zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, MonoLess>;

    explicit Polynomial(size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial zero(size_t nvars) { return Polynomial(nvars); }
    static Polynomial constant(size_t nvars, Rational c);
    static Polynomial variable(size_t nvars, size_t i);
    static Polynomial monomial(size_t nvars, MultiIndex m, Rational c);

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const MultiIndex& m) const;
    uint32_t total_degree() const;  // 0 for the zero polynomial

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Exact evaluation; point.size() must be >= nvars().
    Rational evaluate(std::span<const Rational> point) const;

    /// Substitutes polynomial g for variable i (0-based).
    Polynomial substitute(size_t i, const Polynomial& g) const;

    /// Canonical text form, e.g. "3*r1^2*r2 - r2^2": terms sorted by the
    /// fixed monomial order, highest first; round-trips through parse().
    std::string str(std::string_view prefix = "x") const;

    /// Exact round-trip parser for the canonical text form.
    static Polynomial parse(std::string_view text, size_t nvars, std::string_view prefix = "x");

    /// Adds c * m in place; drops the term when the sum vanishes.
    void add_term(const MultiIndex& m, const Rational& c);

private:
    void check_compatible(const Polynomial& o) const;

    TermMap terms_;
    size_t nvars_;
};

/// Prints a polynomial in at most one variable with a bare variable name
/// ("t^2 + 1" rather than "t1^2 + 1").
std::string univariate_str(const Polynomial& f, std::string_view var = "t");

/// Elementary symmetric polynomial e_k in n variables (e_0 = 1).
Polynomial elementary_symmetric(size_t k, size_t nvars);

/// Exact value of e_k at a rational point.
Rational elementary_symmetric(size_t k, std::span<const Rational> point);

/// Exact value of e_k(x_1^2, ..., x_n^2) at a rational point.
Rational elementary_symmetric_squares(size_t k, std::span<const Rational> point);

}  // namespace grasscoh
