#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grasscoh/polynomial.hpp"

namespace grasscoh {

enum class SquarefreeVariant { COverA, DOverA };

/// Presentation of the square-free algebras: generators r_1..r_m with
/// r_k^2 rewritten to t_k + 2 r_{k-1} r_{k+1} - 2 r_{k-2} r_{k+2} + ...
/// The D variant eliminates r_n, substituting the constant tbar_n.
struct SquarefreeDescriptor;
using SquarefreeDescriptorPtr = std::shared_ptr<const SquarefreeDescriptor>;

struct SquarefreeDescriptor {
    SquarefreeVariant variant = SquarefreeVariant::COverA;
    int n = 1;  ///< rank of the case; generator count is n (C) or n-1 (D)
    std::vector<Rational> t;  ///< t_1..t_n (t_n unused by D)
    Rational tbar_n = Rational(0);  ///< D variant: the constant replacing r_n
    bool graded = true;

    static SquarefreeDescriptorPtr make(SquarefreeVariant variant, int n,
                                        std::vector<Rational> t,
                                        Rational tbar_n = Rational(0));

    int generator_count() const {
        return variant == SquarefreeVariant::COverA ? n : n - 1;
    }
    size_t dim() const { return size_t{1} << generator_count(); }
    /// Basis of 0/1 exponent vectors in listing order.
    std::vector<MultiIndex> basis() const;
    std::vector<std::string> basis_labels() const;
    uint64_t graded_degree(const MultiIndex& m) const { return 2 * m.weighted_degree(); }
    bool same_presentation(const SquarefreeDescriptor& o) const;
};

/// Coordinates over the square-free monomials.
using SquarefreeCoords = std::map<MultiIndex, Rational, MonoLess>;

class SquarefreeElement {
public:
    explicit SquarefreeElement(SquarefreeDescriptorPtr desc);
    SquarefreeElement(SquarefreeDescriptorPtr desc, SquarefreeCoords coords);

    static SquarefreeElement zero(SquarefreeDescriptorPtr d);
    static SquarefreeElement one(SquarefreeDescriptorPtr d);
    static SquarefreeElement generator(SquarefreeDescriptorPtr d, int k);  // r_k, 1-based

    const SquarefreeDescriptorPtr& descriptor() const { return desc_; }
    const SquarefreeCoords& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    Rational coefficient(const MultiIndex& m) const;

    SquarefreeElement operator-() const;
    SquarefreeElement operator+(const SquarefreeElement& o) const;
    SquarefreeElement operator-(const SquarefreeElement& o) const;
    SquarefreeElement operator*(const SquarefreeElement& o) const;
    SquarefreeElement scaled(const Rational& k) const;
    bool operator==(const SquarefreeElement& o) const;
    bool operator!=(const SquarefreeElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    SquarefreeDescriptorPtr desc_;
    SquarefreeCoords coords_;
};

/// The right-hand side of the square rewriting for r_k, as an element
/// (square-free by construction).
SquarefreeElement rewrite_square(int k, SquarefreeDescriptorPtr desc);

/// Observer for the termination potential: called once per rewrite step with
/// the potential before and after (strict decrease is asserted regardless).
using PotentialObserver = std::function<void(uint64_t before, uint64_t after)>;

/// Strategy hook: given the exponent vector, returns the (0-based) index of a
/// variable with exponent >= 2 to rewrite next.
using SquareChooser = std::function<size_t(const MultiIndex&)>;

/// Reduces a formal polynomial in the generators to the square-free basis,
/// repeatedly rewriting the chosen squared generator (smallest index by
/// default). The potential F(d) = sum_k k(n+1-k) d_k strictly decreases at
/// every step; violation raises invariant_violation.
SquarefreeElement normal_form_sf(SquarefreeDescriptorPtr desc, const Polynomial& x,
                                 const SquareChooser* chooser = nullptr,
                                 const PotentialObserver* observer = nullptr);

/// Poincare polynomial prod (1 + t^{2i}) of a graded descriptor.
Polynomial poincare_sf(const SquarefreeDescriptor& desc);

}  // namespace grasscoh
